"""Vertex types of hyperbolic tilings by regular polygons and their Heesch numbers."""
from __future__ import annotations

from .cyclic import CyclicType, Geometry, angle_sum, canonical_form, classify
from .families import ka, kbar, kn, kn_prime
from .heesch import constructive_build, forced_chain_verify, heesch_number
from .patch import Patch, new_fan, validate_patch

__version__ = "0.1.0"

__all__ = [
    "CyclicType", "Geometry", "angle_sum", "canonical_form", "classify",
    "ka", "kbar", "kn", "kn_prime",
    "constructive_build", "forced_chain_verify", "heesch_number",
    "Patch", "new_fan", "validate_patch",
]
