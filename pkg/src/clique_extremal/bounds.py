"""Closed-form upper bounds on clique counts, evaluated exactly.

Fractional bounds are returned as :class:`fractions.Fraction` and never
rounded; callers that need an integer cap take the floor themselves.
Precondition violations raise :class:`BoundPreconditionError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt


class BoundPreconditionError(ValueError):
    """Parameters fall outside the range where a bound is stated."""


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise BoundPreconditionError(message)


def format_rational(x: Fraction | int) -> str:
    """``"p/q"`` for non-integers, plain decimal otherwise."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


@dataclass(frozen=True)
class EdgeDecomposition:
    """``m = d(d-1)/2 + extra`` with ``d >= 1`` and ``0 <= extra <= d - 1``."""

    d: int
    extra: int

    @property
    def m(self) -> int:
        return comb(self.d, 2) + self.extra


def decompose_edges(m: int) -> EdgeDecomposition:
    _require(m >= 0, f"edge count must be non-negative, got {m}")
    d = (1 + isqrt(1 + 8 * m)) // 2
    # isqrt floors, so d is the largest integer with comb(d, 2) <= m
    return EdgeDecomposition(d, m - comb(d, 2))


def max_cliques_nm(n: int, m: int) -> int:
    """Maximum number of cliques over all graphs with ``n`` vertices and ``m`` edges."""
    _require(n >= 0 and 0 <= m <= comb(n, 2), f"need 0 <= m <= C(n,2), got n={n}, m={m}")
    dec = decompose_edges(m)
    return 2**dec.d + 2**dec.extra + n - dec.d - 1


def degree_bound(n: int, m: int, max_deg: int) -> Fraction:
    """Upper bound for graphs with ``n`` vertices, ``m`` edges and maximum degree ``max_deg``."""
    _require(max_deg >= 1, f"maximum degree must be at least 1, got {max_deg}")
    _require(n >= 0 and 0 <= 2 * m <= max_deg * n, f"need m <= max_deg*n/2, got n={n}, m={m}, max_deg={max_deg}")
    per_edge = Fraction(2 ** (max_deg + 1) - max_deg - 2, comb(max_deg + 1, 2))
    return 1 + n + per_edge * m


def degree_vertex_bound(n: int, max_deg: int) -> Fraction:
    """The weaker, edge-free form ``1 + (2^(D+1) - 1) n / (D + 1)``."""
    _require(max_deg >= 1 and n >= 0, "need max_deg >= 1 and n >= 0")
    return 1 + Fraction(2 ** (max_deg + 1) - 1, max_deg + 1) * n


def degenerate_bound(n: int, d: int) -> int:
    """Upper bound ``2^d (n - d + 1)`` for ``d``-degenerate graphs on ``n >= d`` vertices."""
    _require(0 <= d <= n, f"need n >= d >= 0, got n={n}, d={d}")
    return 2**d * (n - d + 1)


def degenerate_edge_bound(n: int, m: int, d: int) -> Fraction:
    """Edge-sensitive bound for ``d``-degenerate graphs with ``m >= C(d, 2)`` edges."""
    _require(d >= 1, f"degeneracy must be at least 1, got {d}")
    _require(m >= comb(d, 2), f"need m >= C(d,2) = {comb(d, 2)}, got m={m}")
    _require(n >= 0, f"vertex count must be non-negative, got {n}")
    return n + Fraction((2**d - 1) * m, d) - Fraction((d - 3) * 2**d + d + 1, 2)


def degenerate_max_edges(n: int, d: int) -> int:
    """Most edges a ``d``-degenerate graph on ``n >= d`` vertices can have."""
    _require(0 <= d <= n, f"need n >= d >= 0, got n={n}, d={d}")
    return d * n - comb(d + 1, 2)


def power_ratio_inequality(d: int, ell: int) -> bool:
    """Evaluate ``d (2^ell - 1) <= ell (2^d - 1)``; it holds for all ``d >= ell >= 0``."""
    _require(d >= ell >= 0, f"need d >= ell >= 0, got d={d}, ell={ell}")
    return d * (2**ell - 1) <= ell * (2**d - 1)


def planar_bound(n: int, m: int) -> Fraction:
    """Upper bound ``n + 7m/3 - 2`` for planar graphs with ``m >= 3`` edges."""
    _require(m >= 3, f"need m >= 3, got m={m}")
    return n + Fraction(7 * m, 3) - 2


def planar_clique_size_bounds(n: int) -> tuple[int, int]:
    """Caps on triangles and on 4-cliques in a planar graph on ``n >= 3`` vertices."""
    _require(n >= 3, f"need n >= 3, got n={n}")
    return 3 * n - 8, n - 3


def k5_minor_free_bound(n: int) -> int:
    _require(n >= 3, f"need n >= 3, got n={n}")
    return 8 * (n - 2)


def k33_minor_free_bound(n: int) -> Fraction:
    _require(n >= 3, f"need n >= 3, got n={n}")
    return Fraction(4 * (7 * n - 11), 3)


def zykov_bound(n: int, k: int, ell: int) -> Fraction:
    """Maximum number of ``ell``-cliques in an ``n``-vertex graph with no ``(k+1)``-clique."""
    _require(k >= 1, f"need k >= 1, got k={k}")
    _require(0 <= ell <= k, f"need k >= ell >= 0, got k={k}, ell={ell}")
    _require(n >= 0, f"vertex count must be non-negative, got {n}")
    return comb(k, ell) * Fraction(n, k) ** ell


def zykov_total_bound(n: int, k: int) -> Fraction:
    """``(n/k + 1)^k``, the cap on all cliques when there is no ``(k+1)``-clique."""
    _require(k >= 1, f"need k >= 1, got k={k}")
    _require(n >= 0, f"vertex count must be non-negative, got {n}")
    return (Fraction(n, k) + 1) ** k


def binomial_power_inequality(n: int, k: int, ell: int) -> bool:
    """Evaluate ``C(n, ell) k^ell <= C(k, ell) n^ell``; it holds for ``k >= n >= ell >= 0``."""
    _require(k >= n >= ell >= 0, f"need k >= n >= ell >= 0, got n={n}, k={k}, ell={ell}")
    return comb(n, ell) * k**ell <= comb(k, ell) * n**ell


@dataclass(frozen=True)
class OpenProblemGap:
    lhs: int
    rhs: int

    @property
    def exceeds(self) -> bool:
        return self.lhs > self.rhs


def open_problem_gap(k: int) -> OpenProblemGap:
    """Compare ``3^k`` cliques of ``K_{2,...,2}`` with ``2^(t-2) (n - t + 3)``.

    Here ``n = 2k`` and ``t = floor(3k/2) + 1``, so the right side is
    ``2^(floor(3k/2) - 1) (2k - floor(3k/2) + 2)``.
    """
    _require(k >= 1, f"need k >= 1, got k={k}")
    h = 3 * k // 2
    return OpenProblemGap(3**k, 2 ** (h - 1) * (2 * k - h + 2))


def floor_value(x: Fraction | int) -> int:
    return Fraction(x).numerator // Fraction(x).denominator
