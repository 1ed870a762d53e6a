"""Closed-form upper bounds on the game chromatic number.

All arithmetic is exact integer arithmetic; square roots under floors use
isqrt.  The genus calculator ships two published variants of its constant
(they circulate with different radicand grouping); pick with `variant`.
"""

from __future__ import annotations

from math import isqrt
from typing import Iterable


def shade_budget(k: int, t: int, reactive: bool) -> int:
    """Palette size guaranteeing an Alice win when every bicolored subgraph
    admits a score-t Bob-marking strategy: k((k-1)(t-2)+2) with reactive
    sub-strategies, k((k-1)(t-1)+1) otherwise."""
    if k < 1 or t < 1:
        raise ValueError("k and t must be positive")
    if reactive:
        return k * ((k - 1) * (t - 2) + 2)
    return k * ((k - 1) * (t - 1) + 1)


def thm_cartesian_bound(chi1: int, chi2: int, t: int) -> int:
    """Cartesian-product bound with k = chi1*chi2 and t the larger Bob-first
    game coloring number of the factors."""
    k = chi1 * chi2
    return k * ((k - 1) * (t - 1) + 1)


def multi_factor_bound(chis: Iterable[int], t: int) -> int:
    """Same arithmetic for an r-fold Cartesian product."""
    k = 1
    for chi in chis:
        k *= chi
    return k * ((k - 1) * (t - 1) + 1)


def cor_bd_bound(t: int) -> int:
    """Bound in the common game coloring number t of both factors:
    t^5 - t^3 + t^2."""
    return t**5 - t**3 + t**2


def thm_strong_bound(chi1: int, chi_sq2: int, t: int) -> int:
    """Strong-product bound with k = chi1 * chi(square of factor 2) and
    t the game coloring number of factor 1."""
    k = chi1 * chi_sq2
    return k * ((k - 1) * t + 1)


def cor_strong_bound(chi: int, delta: int, colg: int) -> int:
    """chi(G)^2 (delta^2+1)^2 col_g(G) for G strong-product a max-degree-delta
    graph."""
    return chi * chi * (delta * delta + 1) ** 2 * colg


def cor_strong_loose(delta: int, colg: int) -> int:
    """The chi-free form (delta^2+1)^2 col_g(G)^3."""
    return (delta * delta + 1) ** 2 * colg**3


def cor_acyclic_bound(chi_a: int) -> int:
    """chi_a(chi_a + 1)."""
    return chi_a * (chi_a + 1)


def cor_treewidth_bound(k: int, w: int) -> int:
    """k(3w(k-1)+2) when every bicolored subgraph has treewidth <= w."""
    return k * (3 * w * (k - 1) + 2)


def cor_planar_bound(k: int) -> int:
    """k(15k-13) when every bicolored subgraph is planar."""
    return k * (15 * k - 13)


def cor_genus_bound(k: int, g: int, variant: str = "plus") -> int:
    """Bound when every bicolored subgraph has genus <= g.

    variant="plus":  k((k-1) * floor((3 + sqrt(1+48g) + 19)/2) + 2)
    variant="times": same shape with t = floor((3*sqrt(1+48g) + 23)/2)

    The two agree at g = 0 but differ beyond; both are exposed because both
    forms are in circulation.  floor((m + sqrt(x))/2) == (m + isqrt(x)) // 2
    for integers, so everything stays exact.
    """
    if variant == "plus":
        t_minus_2 = (3 + isqrt(1 + 48 * g) + 19) // 2
    elif variant == "times":
        t = (23 + isqrt(9 * (1 + 48 * g))) // 2
        t_minus_2 = t - 2
    else:
        raise ValueError(f"unknown genus variant {variant!r}")
    return k * ((k - 1) * t_minus_2 + 2)
