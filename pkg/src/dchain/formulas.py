"""Closed-form chromatic values for disjointness graphs: the convex-position
formula f, its companion g, the unit increment law, and the double-chain
prediction k + f(l). Everything is integer-exact; there is no floating point,
so there are no rounding hazards near the triangular-number boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt


def _check_positive(value: int, name: str = "n") -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")


def g_of(n: int) -> int:
    """Largest positive integer i with C(i, 2) <= n."""
    _check_positive(n)
    g = (1 + isqrt(8 * n + 1)) // 2
    # bracketing check of the isqrt algebra
    assert comb(g, 2) <= n < comb(g + 1, 2), (n, g)
    return g


def f_of(n: int) -> int:
    """Chromatic number of the disjointness graph of n convex-position points.

    Evaluates n - floor(sqrt(2n + 1/4) - 1/2) via integer square root
    (floor((isqrt(8n+1) - 1) / 2) is algebraically identical for integer n)
    and cross-checks it against the identity n - g(n) + 1 on every call.
    The closed form is defined for all n >= 1; its chromatic reading needs
    n >= 3 (f(1) = 0, f(2) = 1 are formal values).
    """
    _check_positive(n)
    direct = n - (isqrt(8 * n + 1) - 1) // 2
    via_g = n - g_of(n) + 1
    assert direct == via_g, (n, direct, via_g)
    return direct


def f_step(n: int) -> int:
    """f(n+1) - f(n); it is 0 exactly when n = C(i, 2) - 1 for some i, else 1."""
    _check_positive(n)
    return f_of(n + 1) - f_of(n)


def double_chain_chi(k: int, l: int) -> int:
    """Predicted chromatic number k + f(l) of the (k, l) double chain, l >= 3."""
    _check_positive(k, "k")
    _check_positive(l, "l")
    if k > l:
        raise ValueError(f"cup may not outnumber cap: k={k} > l={l}")
    if l < 3:
        raise ValueError(f"the prediction needs l >= 3, got l={l}")
    return k + f_of(l)


@dataclass(frozen=True)
class FormulaResult:
    """One row of the n, g(n), f(n) table, self-checked on construction."""

    n: int
    g: int
    f: int

    def __post_init__(self) -> None:
        if self.f != self.n - self.g + 1:
            raise ValueError(f"f={self.f} breaks f = n - g + 1 at n={self.n}, g={self.g}")
        if not comb(self.g, 2) <= self.n < comb(self.g + 1, 2):
            raise ValueError(f"g={self.g} is not bracketed by binomials at n={self.n}")

    @classmethod
    def for_n(cls, n: int) -> "FormulaResult":
        return cls(n, g_of(n), f_of(n))


def formula_table(n_max: int, n_min: int = 1) -> list[FormulaResult]:
    _check_positive(n_min, "n_min")
    _check_positive(n_max, "n_max")
    if n_min > n_max:
        raise ValueError(f"empty range: n_min={n_min} > n_max={n_max}")
    return [FormulaResult.for_n(n) for n in range(n_min, n_max + 1)]
