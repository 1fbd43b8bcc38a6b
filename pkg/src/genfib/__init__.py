"""Exact computation and identity checking for Horadam sequences and the
generalized Fibonacci/Lucas families U_n^(k), V_n^(k)."""

from .exact_arith import QuadElem, quad_pow, rational_from_pair
from .genfam import (decompose, u_family, u_family_binet, v_family,
                     v_family_binet)
from .horadam import (PRESETS, HoradamInit, Mat2, SequenceParams, horadam_w,
                      u_n, u_n_binet, v_n, v_n_binet, w_matrix_pow)

__all__ = [
    "PRESETS", "HoradamInit", "Mat2", "QuadElem", "SequenceParams",
    "decompose", "horadam_w", "quad_pow", "rational_from_pair",
    "u_family", "u_family_binet", "u_n", "u_n_binet",
    "v_family", "v_family_binet", "v_n", "v_n_binet", "w_matrix_pow",
]
