"""Integral-reflection operators on lattice functions."""

from __future__ import annotations

from .functions import LatticeFunction
from . import weyl


def apply_Q(i, f, params):
    """The integral-reflection operator Q_i, 1 <= i < k, applied lazily to f.

    For n = a_i(x) = x_i - x_{i+1}:
      n > 0: f(s_i x) + sum_{j=1}^{n} ( alpha f(s_i x + j a_i^vee + v_{i+1})
                                        + (1-beta) f(s_i x + j a_i^vee) )
      n = 0: f(x)
      n < 0: f(s_i x) - sum_{j=0}^{-n-1} ( alpha f(s_i x - j a_i^vee + v_{i+1})
                                           + (1-beta) f(s_i x - j a_i^vee) )
    with a_i^vee = v_i - v_{i+1}.
    """
    if not 1 <= i < params.k:
        raise ValueError("Q_i index must satisfy 1 <= i < k")
    alpha = params.alpha
    one_minus_beta = 1 - params.beta
    a = i - 1  # 0-based coordinate slots (a, a+1)
    b = i

    def ev(x):
        n = x[a] - x[b]
        if n == 0:
            return f(x)
        sx = list(x)
        sx[a], sx[b] = sx[b], sx[a]
        total = f(tuple(sx))
        if n > 0:
            for j in range(1, n + 1):
                y = list(sx)
                y[a] += j
                y[b] -= j
                if alpha != 0:
                    y[b] += 1
                    total += alpha * f(tuple(y))
                    y[b] -= 1
                if one_minus_beta != 0:
                    total += one_minus_beta * f(tuple(y))
        else:
            for j in range(-n):
                y = list(sx)
                y[a] -= j
                y[b] += j
                if alpha != 0:
                    y[b] += 1
                    total -= alpha * f(tuple(y))
                    y[b] -= 1
                if one_minus_beta != 0:
                    total -= one_minus_beta * f(tuple(y))
        return total

    return LatticeFunction(ev)


def apply_Q0(f, params):
    """Q_0 = pi^{-1} Q_1 pi, by conjugation with the diagram rotation."""
    pi = weyl.pi_element(params.k, params.L)
    inner = weyl.act_on_function(pi, f)
    middle = apply_Q(1, inner, params)
    return weyl.act_on_function(weyl.inverse(pi), middle)


def apply_Q_letter(letter, f, params):
    return apply_Q0(f, params) if letter == 0 else apply_Q(letter, f, params)


def apply_Qw(word, f, params):
    """Q_w = Q_{word[0]} ... Q_{word[-1]} for a reduced word, applied to f."""
    g = f
    for letter in reversed(tuple(word)):
        g = apply_Q_letter(letter, g, params)
    return g
