#pragma once

#include <string>

#include "fidland/runner.hpp"

namespace fidland {

// Text timeline of one run: a state strip plus sparklines for altitude,
// horizontal offset, zoom, marker size and detection. Purely a rendering
// of the record; deterministic.
std::string render_timeline(const RunRecord& rec, int width = 100);

// Single letter used for a state in the strip.
char state_letter(StateId s);

} // namespace fidland
