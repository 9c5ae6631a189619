"""Bethe equations, their homotopy-continuation solver, Bethe wave functions,
and Hall-Littlewood polynomials."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from . import weyl

NEWTON_TOL = 1e-12
ACCEPT_RESIDUAL = 1e-10
COLLISION_TOL = 1e-8
POLE_TOL = 1e-12


class BetheSolverError(RuntimeError):
    """Continuation failure; carries the homotopy parameter where it occurred."""

    def __init__(self, message, s=None):
        super().__init__(message)
        self.s = s


@dataclass(frozen=True)
class SpectralPoint:
    """A candidate Bethe root: spectral parameters and the equation defect."""

    p: tuple
    residual: float


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of nonnegative integers."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(a < 0 for a in parts):
            raise ValueError("partition parts must be nonnegative")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("partition parts must be weakly decreasing")
        object.__setattr__(self, "parts", parts)

    def multiplicity(self, a):
        return sum(1 for part in self.parts if part == a)

    def normalization(self, t, length=None):
        """v_lambda(t) = prod_{a>=0} prod_{n=1}^{m_a} (1-t^n)/(1-t).

        When ``length`` (the number of variables) is given, the multiplicity
        of zero parts counts the padding up to that length; this is the
        normalization making P_lambda monic in the monomial basis.
        """
        mults = [self.multiplicity(a) for a in set(self.parts) if a != 0]
        if length is not None:
            if length < len(self.parts):
                raise ValueError("length shorter than the partition")
            m0 = length - sum(1 for a in self.parts if a != 0)
            if m0:
                mults.append(m0)
        v = 1
        for m in mults:
            if t == 1:
                v *= math.factorial(m)
            else:
                for n in range(1, m + 1):
                    v *= (1 - t ** n) / (1 - t)
        return v


def bethe_residual(p, params):
    """Defect vector of the Bethe equations:
    p_i^L - prod_{j != i} (beta p_i - p_j - alpha)/(p_i - beta p_j + alpha)."""
    p = tuple(getattr(p, "p", p))
    k, L = params.k, params.L
    alpha, beta = params.alpha, params.beta
    out = []
    for i in range(k):
        prod = 1
        for j in range(k):
            if j == i:
                continue
            den = p[i] - beta * p[j] + alpha
            if abs(complex(den)) < POLE_TOL:
                raise BetheSolverError(
                    "Bethe equation denominator vanishes at (i, j) = (%d, %d)"
                    % (i + 1, j + 1)
                )
            prod *= (beta * p[i] - p[j] - alpha) / den
        out.append(p[i] ** L - prod)
    return out


def _residual_and_jacobian(p, L, a, b):
    k = len(p)
    res = np.empty(k, dtype=complex)
    jac = np.zeros((k, k), dtype=complex)
    for i in range(k):
        nums = np.empty(k, dtype=complex)
        dens = np.empty(k, dtype=complex)
        ratios = np.ones(k, dtype=complex)
        for j in range(k):
            if j == i:
                continue
            nums[j] = b * p[i] - p[j] - a
            dens[j] = p[i] - b * p[j] + a
            if abs(dens[j]) < POLE_TOL:
                raise BetheSolverError("denominator pole during continuation")
            ratios[j] = nums[j] / dens[j]
        prod_all = np.prod(ratios)
        res[i] = p[i] ** L - prod_all
        jac[i, i] = L * p[i] ** (L - 1)
        for j in range(k):
            if j == i:
                continue
            partial = np.prod(np.delete(ratios, j))  # prod over l != i, j
            dr_dpi = (b * dens[j] - nums[j]) / dens[j] ** 2
            dr_dpj = (-dens[j] + b * nums[j]) / dens[j] ** 2
            jac[i, i] -= partial * dr_dpi
            jac[i, j] = -partial * dr_dpj
    return res, jac


def _newton(p, L, a, b, max_iter=60):
    p = np.array(p, dtype=complex)
    for _ in range(max_iter):
        res, jac = _residual_and_jacobian(p, L, a, b)
        defect = np.max(np.abs(res))
        if defect < NEWTON_TOL:
            return p
        step = np.linalg.solve(jac, res)
        if not np.all(np.isfinite(step)):
            raise BetheSolverError("Newton step not finite")
        p = p - step
    raise BetheSolverError("Newton did not converge")


def seed_roots_of_unity(seed_selection, L):
    """Distinct L-th roots of unity, selected by index."""
    sel = tuple(seed_selection)
    if len(sel) != len(set(m % L for m in sel)):
        raise ValueError("seed selection indices must be distinct mod L")
    return tuple(cmath.exp(2j * cmath.pi * (m % L) / L) for m in sel)


def solve_bethe(params, seed_selection, homotopy_steps=40):
    """Continue a free solution (alpha, beta) = (0, 1) to the target couplings.

    At the free point the Bethe equations reduce to p_i^L = 1, so any choice
    of k distinct L-th roots of unity is a solution.  The path is the
    straight segment in (alpha, beta); steps halve adaptively on Newton
    failure.  Root collisions and denominator poles abort with a diagnostic.
    """
    k, L = params.k, params.L
    if len(tuple(seed_selection)) != k:
        raise ValueError("need exactly k seed indices")
    a_t = complex(params.alpha)
    b_t = complex(params.beta)
    p = np.array(seed_roots_of_unity(seed_selection, L), dtype=complex)

    s = 0.0
    ds = 1.0 / max(1, homotopy_steps)
    while s < 1.0:
        s_next = min(1.0, s + ds)
        a = s_next * a_t
        b = 1.0 + s_next * (b_t - 1.0)
        try:
            q = _newton(p, L, a, b)
        except BetheSolverError as err:
            ds /= 2
            if ds < 1e-8:
                raise BetheSolverError(
                    "continuation stalled at s = %.6g: %s" % (s_next, err), s=s_next
                ) from err
            continue
        for i in range(k):
            for j in range(i + 1, k):
                if abs(q[i] - q[j]) < COLLISION_TOL:
                    raise BetheSolverError(
                        "root collision at s = %.6g between p_%d and p_%d"
                        % (s_next, i + 1, j + 1),
                        s=s_next,
                    )
        p = q
        s = s_next

    final = tuple(complex(v) for v in p)
    residual = max(abs(complex(r)) for r in bethe_residual(final, params))
    if residual > ACCEPT_RESIDUAL:
        raise BetheSolverError(
            "final residual %.3g above acceptance threshold" % residual, s=1.0
        )
    return SpectralPoint(final, residual)


def _signed_scattering_sum(p, exps, alpha, beta):
    """sum_sigma sgn(sigma) prod_{i<j} (beta p_{sigma(i)} - p_{sigma(j)} - alpha)
    * prod_i p_{sigma(i)}^{-exps_i}."""
    k = len(p)
    total = 0
    for sigma in permutations(range(k)):
        sign = _parity(sigma)
        coef = 1
        for i in range(k):
            for j in range(i + 1, k):
                coef *= beta * p[sigma[i]] - p[sigma[j]] - alpha
        mono = 1
        for i in range(k):
            mono *= p[sigma[i]] ** (-exps[i])
        total += sign * coef * mono
    return total


def _parity(sigma):
    inv = sum(
        1
        for i in range(len(sigma))
        for j in range(i + 1, len(sigma))
        if sigma[i] > sigma[j]
    )
    return -1 if inv % 2 else 1


def bethe_wave(p, x, params):
    """The Bethe wave function h_p at the point x.

    Defined by the symmetrized scattering sum on the dominant chamber and
    extended to all of the lattice by Weyl invariance h_p(w x) = h_p(x).
    """
    pvals = tuple(getattr(p, "p", p))
    if not weyl.is_dominant(x, params):
        w, _ = weyl.shortest_element(x, params)
        x = weyl.act(w, x)
    return _signed_scattering_sum(pvals, x, params.alpha, params.beta)


def bethe_wave_function(p, params):
    """h_p packaged as a memoizing lattice function."""
    from .functions import LatticeFunction

    return LatticeFunction(lambda x: bethe_wave(p, x, params))


def hall_littlewood_R(lam, z, t):
    """The symmetrized sum R_lambda(z; t) = sum_sigma prod_{i<j}
    (z_{sigma(i)} - t z_{sigma(j)})/(z_{sigma(i)} - z_{sigma(j)}) *
    prod_i z_{sigma(i)}^{lambda_i}.

    Accepts any integer exponent tuple of length <= k (padded with zeros).
    """
    z = tuple(z)
    k = len(z)
    exps = tuple(getattr(lam, "parts", lam))
    if len(exps) > k:
        raise ValueError("exponent tuple longer than variable list")
    exps = exps + (0,) * (k - len(exps))
    for i in range(k):
        for j in range(i + 1, k):
            if z[i] == z[j]:
                raise ValueError("coincident variables z_%d = z_%d" % (i + 1, j + 1))
    total = 0
    for sigma in permutations(range(k)):
        coef = 1
        for i in range(k):
            for j in range(i + 1, k):
                coef *= (z[sigma[i]] - t * z[sigma[j]]) / (z[sigma[i]] - z[sigma[j]])
        mono = 1
        for i in range(k):
            mono *= z[sigma[i]] ** exps[i]
        total += coef * mono
    return total


def hall_littlewood_P(lam, z, t):
    """P_lambda(z; t) = R_lambda(z; t) / v_lambda(t)."""
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam))
    return hall_littlewood_R(lam.parts, z, t) / lam.normalization(t, length=len(tuple(z)))


def verify_hl_identity(p, x, beta, params):
    """Check h_p|_{alpha=0}(x) = Delta(p) * R_{eps(x)}(p_1^{-1}, ..., p_k^{-1}; beta)
    on a dominant point x, in exact arithmetic for formal (non-Bethe) p."""
    if not weyl.is_dominant(x, params):
        raise ValueError("identity is stated on the dominant chamber")
    p = tuple(p)
    lhs = _signed_scattering_sum(p, tuple(x), 0, beta)
    delta = 1
    k = len(p)
    for i in range(k):
        for j in range(i + 1, k):
            delta *= p[i] - p[j]
    rhs = delta * hall_littlewood_R(tuple(x), tuple(1 / v for v in p), beta)
    return lhs == rhs
