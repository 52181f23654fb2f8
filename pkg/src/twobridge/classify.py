"""Quasipositivity of two-bridge links, decided from coefficient parity.

A two-bridge knot K(p,q) (p odd) is quasipositive exactly when every
coefficient of the subtractive expansion of p/q is even, and for knots
the notions positive / quasipositive / strongly quasipositive coincide.
For two-component links (p even) evenness is only necessary: an even
expansion leaves the question open, which is reported as a third status
rather than guessed.  The module also carries the isotopy moves
K(p,q) ~ K(p,q') with qq' = 1 mod p, mirroring K(p,q) -> K(p,p-q), and
the bookkeeping for the slice family O (p = m^2 with m odd,
q = m*h - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .contfrac import Rational, neg_cf, reg_cf_odd

QUASIPOSITIVE = "QUASIPOSITIVE"
NON_QUASIPOSITIVE = "NON_QUASIPOSITIVE"
LINK_CONDITION_HOLDS_UNDETERMINED = "LINK_CONDITION_HOLDS_UNDETERMINED"

# reason tags, in the order they are reported
EVEN_CF = "EVEN_CF"
ODD_COEFF = "ODD_COEFF"
PQ_ODD = "PQ_ODD"
LINK_CAVEAT = "LINK_CAVEAT"


@dataclass(frozen=True)
class TwoBridge:
    """The link K(p,q); a knot when p is odd, a 2-component link otherwise."""

    r: Rational

    @property
    def p(self) -> int:
        return self.r.p

    @property
    def q(self) -> int:
        return self.r.q

    @property
    def components(self) -> int:
        return 1 if self.p % 2 else 2


@dataclass(frozen=True)
class Classification:
    status: str
    reasons: tuple[str, ...]
    neg_cf: tuple[int, ...]
    # None when p is even and the link-level criterion is inconclusive
    is_positive: bool | None
    is_strongly_quasipositive: bool | None


@dataclass(frozen=True)
class LiscaOMembership:
    m: int
    h: int

    @property
    def p(self) -> int:
        return self.m * self.m

    @property
    def q(self) -> int:
        return self.m * self.h - 1


def is_even_cf(coeffs: list[int]) -> bool:
    """True iff every subtractive coefficient is even."""
    return all(a % 2 == 0 for a in coeffs)


def pq_odd_shortcut(tb: TwoBridge) -> bool:
    """True iff p*q is odd, which already forces non-quasipositivity."""
    return tb.p % 2 == 1 and tb.q % 2 == 1


def classify(tb: TwoBridge) -> Classification:
    """Decide the status of K(p,q) from the expansion of p/q.

    Knots: quasipositive iff the expansion is even (and then also
    positive and strongly quasipositive).  Links: an odd coefficient
    rules quasipositivity out; an even expansion is reported as
    LINK_CONDITION_HOLDS_UNDETERMINED, since evenness of both p/q and
    its mirror parameter does occur (e.g. 16/3 and 16/13) while a link
    and its mirror can only both be quasipositive for the unlink.
    """
    coeffs = neg_cf(tb.r)
    even = is_even_cf(coeffs)
    reasons = []
    if even:
        reasons.append(EVEN_CF)
    else:
        reasons.append(ODD_COEFF)
    if pq_odd_shortcut(tb):
        reasons.append(PQ_ODD)
    if tb.components == 1:
        status = QUASIPOSITIVE if even else NON_QUASIPOSITIVE
        flag = even
    elif even:
        status = LINK_CONDITION_HOLDS_UNDETERMINED
        reasons.append(LINK_CAVEAT)
        flag = None
    else:
        status = NON_QUASIPOSITIVE
        flag = False
    return Classification(
        status=status,
        reasons=tuple(reasons),
        neg_cf=tuple(coeffs),
        is_positive=flag,
        is_strongly_quasipositive=flag,
    )


def even_positions_even(reg_coeffs: list[int]) -> bool:
    """True iff every even-indexed entry (2nd, 4th, ...) is even.

    Applied to the odd regular expansion of p/(p-q) this is equivalent
    to evenness of the subtractive expansion of p/q.
    """
    return all(c % 2 == 0 for c in reg_coeffs[1::2])


def mirror(tb: TwoBridge) -> TwoBridge:
    """The mirror image K(p, p-q)."""
    return TwoBridge(tb.r.complement())


def inverse_rep(tb: TwoBridge) -> TwoBridge:
    """The isotopic representative K(p, q') with q*q' = 1 mod p."""
    return TwoBridge(Rational(tb.p, pow(tb.q, -1, tb.p)))


def canonical_isotopy_rep(tb: TwoBridge) -> TwoBridge:
    """Of K(p,q) and K(p,q'), the one with the smaller second parameter."""
    other = inverse_rep(tb)
    return tb if tb.q <= other.q else other


def in_lisca_O(tb: TwoBridge) -> LiscaOMembership | None:
    """Membership witness (m, h) when p = m^2, m odd, q = m*h - 1.

    Requires 0 < h < m and gcd(m, h) = 1; returns None otherwise.
    """
    m = isqrt(tb.p)
    if m * m != tb.p or m % 2 == 0 or m <= 1:
        return None
    if (tb.q + 1) % m != 0:
        return None
    h = (tb.q + 1) // m
    if not 0 < h < m or gcd(m, h) != 1:
        return None
    return LiscaOMembership(m, h)


class SliceCounterexample(AssertionError):
    """A step of the slice-family case split failed; must never happen."""


def verify_slice_nonqp(mem: LiscaOMembership) -> bool:
    """Run the h-parity case split showing members of O are not quasipositive.

    h even: q = m*h - 1 is odd, so pq is odd and the parity shortcut
    applies.  h odd: q' = m*(m-h) - 1 is odd with q*q' = 1 mod m^2, and
    the shortcut applies to the isotopic K(p, q').  Both branches are
    cross-checked against the direct expansion test; any mismatch
    raises SliceCounterexample.
    """
    if mem.m <= 1 or not 0 < mem.h < mem.m or gcd(mem.m, mem.h) != 1:
        raise ValueError(f"invalid membership data {mem}")
    p, q = mem.p, mem.q
    tb = TwoBridge(Rational(p, q))
    if mem.h % 2 == 0:
        if q % 2 == 0 or not pq_odd_shortcut(tb):
            raise SliceCounterexample(f"h even but p*q not odd for {mem}")
    else:
        q2 = mem.m * (mem.m - mem.h) - 1
        if q2 % 2 == 0:
            raise SliceCounterexample(f"q' = {q2} not odd for {mem}")
        if (q * q2) % p != 1:
            raise SliceCounterexample(f"q*q' != 1 mod p for {mem}")
        if not pq_odd_shortcut(TwoBridge(Rational(p, q2))):
            raise SliceCounterexample(f"p*q' not odd for {mem}")
        if classify(TwoBridge(Rational(p, q2))).status != NON_QUASIPOSITIVE:
            raise SliceCounterexample(f"K({p},{q2}) not ruled out for {mem}")
    if classify(tb).status != NON_QUASIPOSITIVE:
        raise SliceCounterexample(f"direct test disagrees for {mem}")
    return True


def classification_record(tb: TwoBridge) -> dict:
    """JSON-ready record for one link, as emitted by the CLI."""
    cls = classify(tb)
    mem = in_lisca_O(tb)
    return {
        "p": tb.p,
        "q": tb.q,
        "components": tb.components,
        "neg_cf": list(cls.neg_cf),
        "status": cls.status,
        "reasons": list(cls.reasons),
        "lisca_O": None if mem is None else {"m": mem.m, "h": mem.h},
    }
