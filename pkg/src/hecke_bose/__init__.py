"""Exact-arithmetic toolkit for a discrete periodic delta Bose gas:
affine Weyl combinatorics, integral-reflection operators, the propagation
operator, and Bethe-ansatz eigenfunctions."""

from .weyl import (
    AffineRoot,
    AffineWeylElement,
    Params,
    act,
    act_on_function,
    eval_root,
    inversion_set,
    is_dominant,
    reflect,
    shortest_element,
)
from .functions import LatticeFunction, constant_function, random_rational_function
from .laurent import LaurentPolynomial, apply_T_check, apply_pi_check, pairing, weyl_act_poly
from .hamiltonian import apply_H, apply_H_tilde, d_minus, d_plus, verify_d_change
from .hecke import apply_Q, apply_Q0, apply_Qw
from .propagation import plane_wave, propagate, verify_lemma_main
from .bethe import (
    BetheSolverError,
    Partition,
    SpectralPoint,
    bethe_residual,
    bethe_wave,
    bethe_wave_function,
    hall_littlewood_P,
    hall_littlewood_R,
    solve_bethe,
    verify_hl_identity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
