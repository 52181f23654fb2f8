"""Closed-form braid and diagram statistics from all-even expansion blocks.

With blocks n_ij (i = 1..t, j = 1..k_i) of the signed all-even
expansion of p/(p-q), q odd, the tangle diagram's statistics collapse
to sums over the blocks:

    b  = t + 1 + sum (n_ij - 1)                    braid index
    e  = [t odd] + sum_i (-1)^(i-1) sum_j n_ij     minimal-braid exponent sum
    s  = t + 1 + sum 2(n_ij - 1)                   Seifert circles
    w  = [t odd] + sum_i (-1)^(i-1) sum_j (2n_ij - 1)
    d+ = ceil(t/2)  + sum_{i odd}  2(n_ij - 1)     tree sign counts
    d- = floor(t/2) + sum_{i even} 2(n_ij - 1)

r+ and r- then solve r+ + r- = s - b, r+ - r- = w - e, and satisfy
2r+ = d+ - ceil(t/2) and 2r- = d- - floor(t/2), which gives the
quasipositivity inequalities 2r+ <= d+ and 2r- <= d- checked here.
Everything is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .contfrac import Rational, blocks_to_signed, murasugi_even_cf
from .diagram import DiagramStats


@dataclass(frozen=True)
class BraidStats:
    b: int
    e: int
    s: int
    w: int
    d_plus: int
    d_minus: int
    r_plus: int
    r_minus: int


class InequalityViolation(AssertionError):
    """The closed-form identities or inequalities failed; must never happen."""


def braid_index_exponent(blocks: list[list[int]]) -> tuple[int, int]:
    """Braid index b and exponent sum e of a minimal-strand braid."""
    blocks_to_signed(blocks)
    t = len(blocks)
    b = t + 1 + sum(n - 1 for block in blocks for n in block)
    e = t % 2 + sum(
        (1 if i % 2 == 0 else -1) * sum(block) for i, block in enumerate(blocks)
    )
    return b, e


def closed_form_stats(blocks: list[list[int]]) -> DiagramStats:
    """Diagram statistics s, w, d+, d- without building the diagram."""
    blocks_to_signed(blocks)
    t = len(blocks)
    s = t + 1 + sum(2 * (n - 1) for block in blocks for n in block)
    w = t % 2 + sum(
        (1 if i % 2 == 0 else -1) * sum(2 * n - 1 for n in block)
        for i, block in enumerate(blocks)
    )
    d_plus = (t + 1) // 2 + sum(
        2 * (n - 1) for i, block in enumerate(blocks) if i % 2 == 0 for n in block
    )
    d_minus = t // 2 + sum(
        2 * (n - 1) for i, block in enumerate(blocks) if i % 2 == 1 for n in block
    )
    return DiagramStats(s=s, w=w, d_plus=d_plus, d_minus=d_minus, reduced=None)


def r_pm(stats: DiagramStats, b: int, e: int) -> tuple[int, int]:
    """The unique integer solution of r+ + r- = s-b, r+ - r- = w-e."""
    total = stats.s - b
    diff = stats.w - e
    if (total + diff) % 2:
        raise InequalityViolation(
            f"parity mismatch: s-b = {total}, w-e = {diff}"
        )
    return (total + diff) // 2, (total - diff) // 2


def braid_stats(blocks: list[list[int]]) -> BraidStats:
    """All eight statistics of the block data, bundled."""
    b, e = braid_index_exponent(blocks)
    stats = closed_form_stats(blocks)
    r_plus, r_minus = r_pm(stats, b, e)
    return BraidStats(
        b=b,
        e=e,
        s=stats.s,
        w=stats.w,
        d_plus=stats.d_plus,
        d_minus=stats.d_minus,
        r_plus=r_plus,
        r_minus=r_minus,
    )


def check_inequalities(blocks: list[list[int]]) -> bool:
    """Verify 2r+ <= d+ and 2r- <= d- together with the exact residues.

    The residues are 2r+ = d+ - ceil(t/2) and 2r- = d- - floor(t/2);
    a violation raises InequalityViolation carrying the counterexample.
    """
    t = len(blocks)
    st = braid_stats(blocks)
    if 2 * st.r_plus != st.d_plus - (t + 1) // 2:
        raise InequalityViolation(f"2r+ != d+ - ceil(t/2) for {blocks}: {st}")
    if 2 * st.r_minus != st.d_minus - t // 2:
        raise InequalityViolation(f"2r- != d- - floor(t/2) for {blocks}: {st}")
    if 2 * st.r_plus > st.d_plus or 2 * st.r_minus > st.d_minus:
        raise InequalityViolation(f"inequality fails for {blocks}: {st}")
    if st.r_plus < 0 or st.r_minus < 0:
        raise InequalityViolation(f"negative r for {blocks}: {st}")
    return True


def mirror_stats(st: BraidStats) -> BraidStats:
    """Statistics of the mirror diagram: swap d and r, negate w and e."""
    return BraidStats(
        b=st.b,
        e=-st.e,
        s=st.s,
        w=-st.w,
        d_plus=st.d_minus,
        d_minus=st.d_plus,
        r_plus=st.r_minus,
        r_minus=st.r_plus,
    )


def stats_for(r: Rational) -> tuple[BraidStats, int, bool]:
    """Block statistics for p/q, mirroring first when q is even.

    Returns (stats, t, mirrored): q odd gives the statistics of the
    block diagram of p/q directly; q even is handled through the mirror
    parameter p/(p-q), whose q is then odd, and the mirror swap is
    applied to the result.  t is the block count actually used.
    """
    if r.q % 2:
        blocks = murasugi_even_cf(r)
        return braid_stats(blocks), len(blocks), False
    blocks = murasugi_even_cf(r.complement())
    return mirror_stats(braid_stats(blocks)), len(blocks), True


def stats_record(r: Rational) -> dict:
    """JSON-ready statistics record for one link, as emitted by the CLI."""
    st, t, mirrored = stats_for(r)
    blocks = murasugi_even_cf(r if not mirrored else r.complement())
    return {
        "p": r.p,
        "q": r.q,
        "t": t,
        "b": st.b,
        "e": st.e,
        "s": st.s,
        "w": st.w,
        "d_plus": st.d_plus,
        "d_minus": st.d_minus,
        "r_plus": st.r_plus,
        "r_minus": st.r_minus,
        "ineq_ok": check_inequalities(blocks),
    }
