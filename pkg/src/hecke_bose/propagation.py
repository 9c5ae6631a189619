"""The propagation operator G and plane waves."""

from __future__ import annotations

from .functions import LatticeFunction
from .hamiltonian import d_plus
from .hecke import apply_Q_letter
from . import weyl


def _qword_cache(f, params):
    """Word-suffix cache of Q-word applications, shared across lattice points."""
    cache = {(): f}

    def get(word):
        g = cache.get(word)
        if g is None:
            g = apply_Q_letter(word[0], get(word[1:]), params)
            cache[word] = g
        return g

    return get


def propagate(f, params):
    """G(f)(x) = (Q_{w_x} f)(w_x x), with w_x the shortest element moving x
    into the dominant chamber.  On dominant points G(f) agrees with f."""
    qword = _qword_cache(f, params)

    def ev(x):
        w, word = weyl.shortest_element(x, params)
        return qword(word)(weyl.act(w, x))

    return LatticeFunction(ev)


def plane_wave(p):
    """The plane wave x -> prod_i p_i^{-x_i}; eigenfunction of sum_i t_{v_i}
    with eigenvalue sum_i p_i."""
    p = tuple(p)
    if any(v == 0 for v in p):
        raise ValueError("plane wave requires all p_i nonzero")

    def ev(x):
        val = 1
        for pi, xi in zip(p, x):
            val *= pi ** (-xi)
        return val

    return LatticeFunction(ev)


def verify_lemma_main(f, x, i, params, G=None, qword=None):
    """Check the key commutation identity behind the eigenfunction theorem:

    ((t_{v_i} - alpha d_i^+) G(f))(x)
      = ((t_{v_sigma(i)} + (1-beta) sum_{j=1}^{d_i^+(x)} t_{v_{sigma(i)+j}}) Q_{w_x} f)(w_x x)

    where sigma is the coordinate permutation of w_x.  Returns True iff the
    two sides agree exactly.  A shared G and Q-word cache may be passed in
    when checking many points.
    """
    k = params.k
    alpha, beta = params.alpha, params.beta
    if G is None:
        G = propagate(f, params)
    if qword is None:
        qword = _qword_cache(f, params)

    w, word = weyl.shortest_element(x, params)
    dp = d_plus(i, x, params)

    shifted = list(x)
    shifted[i - 1] -= 1
    lhs = G(tuple(shifted))
    if dp and alpha != 0:
        lhs -= alpha * dp * G(x)

    g = qword(word)
    wx = weyl.act(w, x)
    sigma_i = w.perm[i - 1]  # 0-based slot of v_{sigma(i)}
    y = list(wx)
    y[sigma_i] -= 1
    rhs = g(tuple(y))
    if beta != 1:
        for j in range(1, dp + 1):
            y = list(wx)
            y[(sigma_i + j) % k] -= 1
            rhs += (1 - beta) * g(tuple(y))
    return lhs == rhs
