"""Counting functions d_i^{+-} and the two-parameter deformed Hamiltonian."""

from __future__ import annotations

from .weyl import eval_root, reflect, simple_root


def _simple_values(x, params):
    k, L = params.k, params.L
    return [eval_root(simple_root(i, k), x, L) for i in range(k)]


def d_plus(i, x, params):
    """Count p in 1..k-1 with a_i(x) + ... + a_{i+p-1}(x) a non-positive multiple of L.

    Root indices are read modulo k; zero counts as a non-positive multiple.
    """
    k, L = params.k, params.L
    vals = _simple_values(x, params)
    count = 0
    s = 0
    for p in range(1, k):
        s += vals[(i + p - 1) % k]
        if s <= 0 and s % L == 0:
            count += 1
    return count


def d_minus(i, x, params):
    """Count p in 1..k-1 with a_{i-p}(x) + ... + a_{i-1}(x) a non-positive multiple of L."""
    k, L = params.k, params.L
    vals = _simple_values(x, params)
    count = 0
    s = 0
    for p in range(1, k):
        s += vals[(i - p) % k]
        if s <= 0 and s % L == 0:
            count += 1
    return count


def apply_H(f, x, params):
    """Evaluate (H f)(x) = sum_i beta^{d_i^-(x)} ( f(x - v_i) - alpha d_i^+(x) f(x) )."""
    k = params.k
    alpha, beta = params.alpha, params.beta
    total = 0
    fx = None
    for i in range(1, k + 1):
        shifted = list(x)
        shifted[i - 1] -= 1
        term = f(tuple(shifted))
        dp = d_plus(i, x, params)
        if dp and alpha != 0:
            if fx is None:
                fx = f(x)
            term = term - alpha * dp * fx
        total += beta ** d_minus(i, x, params) * term
    return total


def apply_H_tilde(f, x, params):
    """The undeformed periodic Hamiltonian: discrete Laplacian plus pair coincidences.

    (H~ f)(x) = sum_i ( f(x - v_i) - f(x) ) + #{i < j : x_i = x_j mod L} f(x).
    Counted directly, independent of the d_i^{+-} functions.
    """
    k, L = params.k, params.L
    fx = f(x)
    total = 0
    for i in range(k):
        shifted = list(x)
        shifted[i] -= 1
        total += f(tuple(shifted)) - fx
    pairs = sum(
        1
        for i in range(k)
        for j in range(i + 1, k)
        if (x[i] - x[j]) % L == 0
    )
    return total + pairs * fx


def _index_from_residue(r, k):
    r %= k
    return r if r >= 1 else k


def verify_d_change(x, i, j, params):
    """Check how d_i^{+-} transform under the simple reflection s_j.

    Expected: unchanged when i is away from {j, j+1} mod k; otherwise the
    indices j and j+1 swap roles, with a correction of theta(a_j(x) = 0).
    Returns True iff both signs match.
    """
    k, L = params.k, params.L
    sx = reflect(simple_root(j, k), x, L)
    theta = 1 if eval_root(simple_root(j, k), x, L) == 0 else 0
    for d, sign in ((d_plus, 1), (d_minus, -1)):
        got = d(i, sx, params)
        if i % k == j % k:
            expected = d(_index_from_residue(j + 1, k), x, params) + sign * theta
        elif i % k == (j + 1) % k:
            expected = d(_index_from_residue(j, k), x, params) - sign * theta
        else:
            expected = d(i, x, params)
        if got != expected:
            return False
    return True
