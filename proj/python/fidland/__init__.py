"""Fiducial landing simulator: gimbal geometry, landing policy, scenarios."""

from fidland._core import (
    Axis,
    CameraModel,
    GimbalState,
    PixelObservation,
    TargetAngles,
    batch_dir,
    compose_target_angles,
    fov_deg,
    pixel_offset_angles,
    plot_scenario_file,
    relative_yaw,
    run_scenario_csv,
    run_scenario_file,
    run_scenario_json,
    wrap_deg,
)

__all__ = [
    "Axis",
    "CameraModel",
    "GimbalState",
    "PixelObservation",
    "TargetAngles",
    "batch_dir",
    "compose_target_angles",
    "fov_deg",
    "pixel_offset_angles",
    "plot_scenario_file",
    "relative_yaw",
    "run_scenario_csv",
    "run_scenario_file",
    "run_scenario_json",
    "wrap_deg",
]

__version__ = "0.1.0"
