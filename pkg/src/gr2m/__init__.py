# src/gr2m/__init__.py
from .matrices import build_M, build_Mtilde, gamma, gamma_inv, nohara_ueda, nohara_ueda_cone, nohara_ueda_polytope
from .pair import GrPair, flip, flip_tilde, shift, shift_tilde
from .algebraic import (
    FlipThetaReport,
    crossing_number,
    enumerate_standard,
    is_standard,
    straighten,
    straighten_gr24,
    theta,
    verify_flip_equals_theta,
)

__all__ = [
    "build_M", "build_Mtilde", "gamma", "gamma_inv", "nohara_ueda", "nohara_ueda_cone", "nohara_ueda_polytope",
    "GrPair", "flip", "flip_tilde", "shift", "shift_tilde",
    "FlipThetaReport", "crossing_number", "enumerate_standard", "is_standard", "straighten", "straighten_gr24",
    "theta", "verify_flip_equals_theta",
]
