# src/mutation/__init__.py
from .triple import MutationExample, PLTriple, mutation_example, body_from_triple, regauge, shear, triangulated
from .dual import MutationFrame, build_frame, build_sigma, check_eta, dual_slice, mutation_slices, nabla

__all__ = [
    "MutationExample", "PLTriple", "mutation_example", "body_from_triple", "regauge", "shear", "triangulated",
    "MutationFrame", "build_frame", "build_sigma", "check_eta", "dual_slice", "mutation_slices", "nabla",
]
