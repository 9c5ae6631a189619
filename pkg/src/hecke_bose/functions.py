"""Lattice functions: memoizing evaluators from integer points to scalars."""

from __future__ import annotations

import random
from fractions import Fraction


class LatticeFunction:
    """A function on the lattice, wrapped with a transparent memo cache.

    The evaluator must be deterministic; the cache only ever stores values
    the evaluator returned, so memoized and unmemoized evaluation agree.
    Values may be exact rationals or complex floats, by caller's choice.
    """

    __slots__ = ("_eval", "_memo")

    def __init__(self, evaluator, memoize=True):
        self._eval = evaluator
        self._memo = {} if memoize else None

    def __call__(self, x):
        x = tuple(x)
        memo = self._memo
        if memo is None:
            return self._eval(x)
        v = memo.get(x)
        if v is None:
            v = self._eval(x)
            memo[x] = v
        return v


def constant_function(value):
    return LatticeFunction(lambda x: value)


def random_rational_function(seed, lo=-9, hi=9, max_den=6):
    """A deterministic pseudo-random rational-valued lattice function.

    The value at each point is derived from (seed, point) alone, so the
    function is reproducible across runs and processes.
    """

    def ev(x):
        rng = random.Random("%s|%s" % (seed, ",".join(map(str, x))))
        num = rng.randint(lo, hi)
        den = rng.randint(1, max_den)
        return Fraction(num, den)

    return LatticeFunction(ev)


def linear_combination(coeffs_and_functions):
    """Pointwise linear combination of lattice functions."""
    pairs = list(coeffs_and_functions)
    return LatticeFunction(lambda x: sum(c * f(x) for c, f in pairs))
