"""Tri-directional coil magnetic-induction link model and joint beamforming optimizer."""

from ._tricoil import (  # noqa: F401
    MU0,
    Error,
    InvalidArgument,
    NoCoupling,
    ParseError,
    SingularGeometry,
    ValidationError,
    alpha_grid,
    alternate,
    angle_sweep,
    coil_resistance,
    dipole_mutual,
    normalize_config,
    optimal_current,
    optimal_weights,
    pathloss_db,
    receiver_pose,
    run_strategy,
    scenario_mutual,
    symmetric_eig3,
    verify_current_step,
    verify_weight_step,
)

__all__ = [name for name in dir() if not name.startswith("_")]
