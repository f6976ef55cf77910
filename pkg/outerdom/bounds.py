"""Degree-2 structure of MOPs and the domination bounds built on it."""

import fractions
import logging
import math
from typing import List, Optional

import msgspec

from outerdom.domination import gamma_mop_dp
from outerdom.mop import MopGraph, degree_two_vertices, segment_length
from outerdom.value_objects import ConsecutivePair, Rational

logger = logging.getLogger(__name__)


class BoundsReport(msgspec.Struct):
    """Every bound on the domination number of a MOP, with pass/fail flags."""

    n: int
    t: int
    k: int
    bound_thm11: Rational
    bound_thm12: int
    bound_li: Rational
    bound_third: int
    gamma: Optional[int] = None
    thm11_ok: Optional[bool] = None
    thm12_ok: Optional[bool] = None
    li_ok: Optional[bool] = None
    third_ok: Optional[bool] = None

    @property
    def li_violated(self) -> bool:
        """Return True if the exact domination number exceeds (n + k) / 4."""
        return self.li_ok is False


def consecutive_pairs(graph: MopGraph) -> List[ConsecutivePair]:
    """
    Return the ordered pairs of cyclically consecutive degree-2 vertices.

    The triangle has no chords; it returns an empty list and is counted with
    t = 3, k = 0.
    """
    degree_two = degree_two_vertices(graph)
    if graph.n == 3:  # noqa: PLR2004
        return []
    if len(degree_two) < 2:  # noqa: PLR2004
        msg = f"a MOP with n={graph.n} must have two degree-2 vertices"
        raise AssertionError(msg)
    return [
        ConsecutivePair(r, s, segment_length(graph, r, s))
        for r, s in zip(degree_two, [*degree_two[1:], degree_two[0]])
    ]


def essential_pairs(graph: MopGraph) -> List[ConsecutivePair]:
    """Return the consecutive pairs whose segment has at least three edges."""
    return [pair for pair in consecutive_pairs(graph) if pair.essential]


def essential_pair_count(graph: MopGraph) -> int:
    """Return k, the number of essential pairs."""
    return len(essential_pairs(graph))


def bad_vertices(graph: MopGraph) -> List[int]:
    """Return the first vertices of the essential pairs."""
    return [pair.r for pair in essential_pairs(graph)]


def thm12_bound(n: int, k: int) -> int:
    """Return ceil((n + k) / 4)."""
    return -(-(n + k) // 4)


def thm11_bound(n: int, t: int) -> fractions.Fraction:
    """Return (n + t) / 4."""
    return fractions.Fraction(n + t, 4)


def li_bound(n: int, k: int) -> fractions.Fraction:
    """Return (n + k) / 4, a bound that does not hold in general."""
    return fractions.Fraction(n + k, 4)


def bounds_report(graph: MopGraph, *, with_gamma: bool = True) -> BoundsReport:
    """Evaluate every bound; with `with_gamma` compare them to the exact value."""
    t = len(degree_two_vertices(graph))
    k = essential_pair_count(graph)
    report = BoundsReport(
        n=graph.n,
        t=t,
        k=k,
        bound_thm11=Rational.from_fraction(thm11_bound(graph.n, t)),
        bound_thm12=thm12_bound(graph.n, k),
        bound_li=Rational.from_fraction(li_bound(graph.n, k)),
        bound_third=math.ceil(graph.n / 3),
    )
    if with_gamma:
        gamma = gamma_mop_dp(graph).size
        report.gamma = gamma
        report.thm11_ok = gamma <= thm11_bound(graph.n, t)
        report.thm12_ok = gamma <= report.bound_thm12
        report.li_ok = gamma <= li_bound(graph.n, k)
        report.third_ok = gamma <= report.bound_third
        logger.debug("n=%d t=%d k=%d gamma=%d", graph.n, t, k, gamma)
    return report


def check_li_counterexample(graph: MopGraph) -> bool:
    """Return True if the exact domination number exceeds (n + k) / 4."""
    return bounds_report(graph, with_gamma=True).li_violated
