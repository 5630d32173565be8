#include <doctest.h>

#include <stdexcept>

#include "fidland/config.hpp"
#include "fidland/geometry.hpp"

using namespace fidland;

namespace {
const CameraRig& rig() {
    static const CameraRig r = default_config().rig;
    return r;
}
} // namespace

TEST_CASE("field of view at frozen reference points") {
    // wide: 36x24 mm behind 18 mm
    CHECK(fov_deg(rig().wide, 1.0, Axis::Horizontal) ==
          doctest::Approx(90.0).epsilon(1e-9));
    CHECK(fov_deg(rig().wide, 1.0, Axis::Vertical) ==
          doctest::Approx(67.380135051959574).epsilon(1e-9));
    // zoom: 8x6 mm behind 6 mm, factor 2..6
    CHECK(fov_deg(rig().zoom, 2.0, Axis::Horizontal) ==
          doctest::Approx(36.869897645844021).epsilon(1e-9));
    CHECK(fov_deg(rig().zoom, 2.0, Axis::Vertical) ==
          doctest::Approx(28.072486935852957).epsilon(1e-9));
    CHECK(fov_deg(rig().zoom, 6.0, Axis::Horizontal) ==
          doctest::Approx(12.680383491819819).epsilon(1e-9));
    CHECK(fov_deg(rig().zoom, 6.0, Axis::Vertical) ==
          doctest::Approx(9.5272833814523552).epsilon(1e-9));
    CHECK(fov_deg(rig().zoom, 3.0, Axis::Horizontal) ==
          doctest::Approx(25.057615418303022).epsilon(1e-9));
    // ir: 8x6.4 mm behind 24 mm
    CHECK(fov_deg(rig().ir, 1.0, Axis::Horizontal) ==
          doctest::Approx(18.924644416051235).epsilon(1e-9));
    CHECK(fov_deg(rig().ir, 1.0, Axis::Vertical) ==
          doctest::Approx(15.189286737182891).epsilon(1e-9));
}

TEST_CASE("fov shrinks monotonically with zoom") {
    double prev = 1e9;
    for (double z = 2.0; z <= 6.0; z += 0.25) {
        const double f = fov_deg(rig().zoom, z, Axis::Horizontal);
        CHECK(f < prev);
        prev = f;
    }
}

TEST_CASE("zoom outside the camera range throws") {
    CHECK_THROWS_AS(fov_deg(rig().zoom, 1.99, Axis::Horizontal), std::out_of_range);
    CHECK_THROWS_AS(fov_deg(rig().zoom, 6.01, Axis::Horizontal), std::out_of_range);
    CHECK_THROWS_AS(fov_deg(rig().wide, 1.5, Axis::Horizontal), std::out_of_range);
    CHECK_NOTHROW(fov_deg(rig().zoom, 2.0, Axis::Horizontal));
    CHECK_NOTHROW(fov_deg(rig().zoom, 6.0, Axis::Horizontal));
}

TEST_CASE("camera validation rejects degenerate models") {
    CameraModel bad = rig().wide;
    bad.sensor_width_mm = 0.0;
    CHECK_THROWS_AS(validate_camera(bad), std::invalid_argument);
    bad = rig().wide;
    bad.base_focal_length_mm = -1.0;
    CHECK_THROWS_AS(validate_camera(bad), std::invalid_argument);
    bad = rig().wide;
    bad.zoom_min = 0.5;
    CHECK_THROWS_AS(validate_camera(bad), std::invalid_argument);
    bad = rig().zoom;
    bad.zoom_max = 1.5; // below zoom_min 2
    CHECK_THROWS_AS(validate_camera(bad), std::invalid_argument);
    bad = rig().ir;
    bad.stream_height_px = 0;
    CHECK_THROWS_AS(validate_camera(bad), std::invalid_argument);
    CHECK_NOTHROW(validate_camera(rig().wide));
}

TEST_CASE("pixel offsets map linearly across the frame") {
    // 1920 wide, principal point at 960; fov 40 x 30
    PixelObservation obs{0.0, 540.0, 960.0, 540.0, 0.1};
    auto [pu, tv] = pixel_offset_angles(obs, 40.0, 30.0);
    CHECK(pu == doctest::Approx(-20.0));
    CHECK(tv == doctest::Approx(0.0));

    obs.u = 1440.0; // three quarters across
    std::tie(pu, tv) = pixel_offset_angles(obs, 40.0, 30.0);
    CHECK(pu == doctest::Approx(10.0));

    obs.u = 960.0;
    obs.v = 810.0; // lower half of the image -> below the axis
    std::tie(pu, tv) = pixel_offset_angles(obs, 40.0, 30.0);
    CHECK(pu == doctest::Approx(0.0));
    CHECK(tv == doctest::Approx(-7.5));

    obs.v = 0.0; // top edge
    std::tie(pu, tv) = pixel_offset_angles(obs, 40.0, 30.0);
    CHECK(tv == doctest::Approx(15.0));
}

TEST_CASE("composition wraps pan but leaves tilt linear") {
    GimbalState g{175.0, -30.0};
    TargetAngles t = compose_target_angles(g, 10.0, -5.0);
    CHECK(t.phi_deg == doctest::Approx(-175.0));
    CHECK(t.theta_deg == doctest::Approx(-35.0));

    g = {-170.0, -85.0};
    t = compose_target_angles(g, -15.0, -6.0);
    CHECK(t.phi_deg == doctest::Approx(175.0));
    CHECK(t.theta_deg == doctest::Approx(-91.0));
}

TEST_CASE("relative yaw wraps the pad-minus-drone difference") {
    CHECK(relative_yaw(350.0, 10.0) == doctest::Approx(20.0));
    CHECK(relative_yaw(10.0, 350.0) == doctest::Approx(-20.0));
    CHECK(relative_yaw(0.0, 180.0) == doctest::Approx(-180.0));
    CHECK(relative_yaw(90.0, 90.0) == doctest::Approx(0.0));
}
