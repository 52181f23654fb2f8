"""Exhaustive property suites over all parameters up to a bound.

Every invariant the package relies on is re-checked here by brute
force: expansion round trips, the conversion patterns, classification
self-consistency, the slice family, and agreement of the closed-form
statistics with the diagram-level Seifert computation.  Each suite
reports how many cases it checked and the first counterexample it saw,
so a single flipped sign anywhere surfaces with a concrete (p, q).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from . import braidstats, classify, contfrac, diagram
from .contfrac import Rational, _neg_cf_int


@dataclass
class PropertyResult:
    name: str
    checked: int
    failures: int
    first_counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.failures == 0


class _Tally:
    def __init__(self, name: str):
        self.result = PropertyResult(name, 0, 0)

    def case(self, ok: bool, detail) -> None:
        self.result.checked += 1
        if not ok:
            self.result.failures += 1
            if self.result.first_counterexample is None:
                self.result.first_counterexample = str(detail)


def coprime_pairs(max_p: int, odd_q_only: bool = False):
    """All (p, q) with 2 <= p <= max_p, 1 <= q < p, gcd(p, q) = 1."""
    step = 2 if odd_q_only else 1
    for p in range(2, max_p + 1):
        for q in range(1, p, step):
            if gcd(p, q) == 1:
                yield p, q


def check_paper_values(max_p: int = 0) -> PropertyResult:
    """The 16/3 and 16/13 expansions and their duality."""
    t = _Tally("fixed expansion values")
    t.case(contfrac.neg_cf(Rational(16, 3)) == [6, 2, 2], "16/3")
    t.case(contfrac.neg_cf(Rational(16, 13)) == [2, 2, 2, 2, 4], "16/13")
    t.case(contfrac.riemenschneider_dual([6, 2, 2]) == [2, 2, 2, 2, 4], "dual 16/3")
    t.case(contfrac.riemenschneider_dual([2, 2, 2, 2, 4]) == [6, 2, 2], "dual 16/13")
    return t.result


def check_roundtrips(max_p: int) -> PropertyResult:
    """eval is inverse to expansion, for all three expansions."""
    t = _Tally("expansion round trips")
    for p, q in coprime_pairs(max_p):
        r = Rational(p, q)
        nc = contfrac.neg_cf(r)
        rc = contfrac.reg_cf_odd(r)
        ok = (
            all(a >= 2 for a in nc)
            and contfrac.eval_neg_cf(nc) == r
            and len(rc) % 2 == 1
            and all(c >= 1 for c in rc)
            and contfrac.eval_reg_cf(rc) == r
        )
        if ok and q % 2:
            mb = contfrac.murasugi_even_cf(r)
            ok = contfrac.eval_even_cf(mb) == r.complement()
        t.case(ok, (p, q))
    return t.result


def check_lemma_conversions(max_p: int) -> PropertyResult:
    """Both regular-to-subtractive patterns agree with direct expansion."""
    t = _Tally("conversion patterns")
    for p, q in coprime_pairs(max_p):
        rc = contfrac.reg_cf_odd(Rational(p, q))
        ok = (
            contfrac.reg_to_neg(rc) == _neg_cf_int(p, q)
            and contfrac.reg_to_neg_complement(rc) == _neg_cf_int(p, p - q)
        )
        t.case(ok, (p, q, rc))
    return t.result


def check_dual_involution(max_p: int) -> PropertyResult:
    """Point-row dual maps to the complement and squares to the identity."""
    t = _Tally("point-row dual involution")
    for p, q in coprime_pairs(max_p):
        nc = _neg_cf_int(p, q)
        dual = contfrac.riemenschneider_dual(nc)
        ok = dual == _neg_cf_int(p, p - q) and contfrac.riemenschneider_dual(dual) == nc
        t.case(ok, (p, q))
    return t.result


def check_parity_lemma(max_p: int) -> PropertyResult:
    """All-even expansion with p odd forces q even."""
    t = _Tally("all-even parity")
    for p, q in coprime_pairs(max_p):
        if classify.is_even_cf(_neg_cf_int(p, q)):
            t.case(p % 2 == 0 or q % 2 == 0, f"(p,q)=({p},{q})")
        else:
            t.case(True, None)
    return t.result


def check_classification_consistency(max_p: int) -> PropertyResult:
    """For knots: the parity shortcut, the regular-expansion criterion and
    mirror exclusivity all agree with the direct evenness test."""
    t = _Tally("classification consistency (knots)")
    for p in range(3, max_p + 1, 2):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            even_here = classify.is_even_cf(_neg_cf_int(p, q))
            even_mirror = classify.is_even_cf(_neg_cf_int(p, p - q))
            reg_mirror = contfrac.reg_cf_odd(Rational(p, p - q))
            ok = (
                not (q % 2 == 1 and even_here)  # pq odd forces an odd entry
                and not (even_here and even_mirror)
                and even_here == classify.even_positions_even(reg_mirror)
            )
            if ok:
                cls = classify.classify(classify.TwoBridge(Rational(p, q)))
                want = classify.QUASIPOSITIVE if even_here else classify.NON_QUASIPOSITIVE
                ok = cls.status == want and (
                    not classify.pq_odd_shortcut(classify.TwoBridge(Rational(p, q)))
                    or cls.status == classify.NON_QUASIPOSITIVE
                )
            t.case(ok, (p, q))
    return t.result


def check_isotopy_invariance(max_p: int) -> PropertyResult:
    """K(p,q) and K(p,q') classify identically; expansions reverse."""
    t = _Tally("isotopy invariance")
    for p, q in coprime_pairs(max_p):
        q2 = pow(q, -1, p)
        nc = _neg_cf_int(p, q)
        ok = _neg_cf_int(p, q2) == nc[::-1]
        if ok:
            a = classify.classify(classify.TwoBridge(Rational(p, q)))
            b = classify.classify(classify.TwoBridge(Rational(p, q2)))
            ok = a.status == b.status
        t.case(ok, (p, q, q2))
    return t.result


def check_slice_family(max_m: int) -> PropertyResult:
    """Every member of the slice family O is non-quasipositive, both by
    the direct test and by the h-parity case split."""
    t = _Tally("slice family O")
    for m in range(3, max_m + 1, 2):
        for h in range(1, m):
            if gcd(m, h) != 1:
                continue
            mem = classify.LiscaOMembership(m, h)
            try:
                ok = classify.verify_slice_nonqp(mem)
                tb = classify.TwoBridge(Rational(mem.p, mem.q))
                found = classify.in_lisca_O(tb)
                ok = ok and found is not None and (found.m, found.h) == (m, h)
                ok = (
                    ok
                    and classify.classify(tb).status == classify.NON_QUASIPOSITIVE
                )
            except classify.SliceCounterexample as exc:
                ok = False
                t.case(ok, f"(m,h)=({m},{h}): {exc}")
                continue
            t.case(ok, (m, h))
    return t.result


def check_oracle_equivalence(max_p: int) -> PropertyResult:
    """Seifert data of the built tangle diagram equals the closed forms."""
    t = _Tally("diagram oracle vs closed forms")
    for p, q in coprime_pairs(max_p, odd_q_only=True):
        mb = contfrac.murasugi_even_cf(Rational(p, q))
        want = braidstats.closed_form_stats(mb)
        _, got = diagram.seifert_data(diagram.build_murasugi(mb))
        ok = (got.s, got.w, got.d_plus, got.d_minus) == (
            want.s,
            want.w,
            want.d_plus,
            want.d_minus,
        )
        t.case(ok, (p, q, want, got))
    return t.result


def check_diagram_properties(max_p: int) -> PropertyResult:
    """Structural checks on both builders: alternation, sign purity,
    the spanning-tree Euler identity, reducedness, crossing counts."""
    t = _Tally("diagram structure")
    for p, q in coprime_pairs(max_p):
        r = Rational(p, q)
        rc = contfrac.reg_cf_odd(r)
        ds = diagram.build_standard(rc)
        _, st = diagram.seifert_data(ds)
        ok = (
            ds.crossing_count == sum(rc)
            and len(ds.components) == (1 if p % 2 else 2)
            and diagram.is_alternating(ds)
            and st.s - (st.d_plus + st.d_minus) == 1
        )
        if ok and q % 2:
            dm = diagram.build_murasugi(contfrac.murasugi_even_cf(r))
            _, stm = diagram.seifert_data(dm)
            ok = (
                diagram.is_alternating(dm)
                and all(
                    c.sign == (1 if c.twist_region % 2 else -1) for c in dm.crossings
                )
                and stm.s - (stm.d_plus + stm.d_minus) == 1
                and stm.reduced is True
            )
        t.case(ok, (p, q))
    return t.result


def check_stats_identities(max_p: int) -> PropertyResult:
    """s-b and w-e collapse to the block sums; residues and inequalities
    hold; the mirror swap is an involution matching the q-even path."""
    t = _Tally("closed-form identities and inequalities")
    for p, q in coprime_pairs(max_p, odd_q_only=True):
        r = Rational(p, q)
        mb = contfrac.murasugi_even_cf(r)
        st = braidstats.braid_stats(mb)
        total = sum(n - 1 for block in mb for n in block)
        alt = sum(
            (1 if i % 2 == 0 else -1) * sum(n - 1 for n in block)
            for i, block in enumerate(mb)
        )
        try:
            ok = (
                st.s - st.b == total
                and st.w - st.e == alt
                and braidstats.check_inequalities(mb)
                and braidstats.mirror_stats(braidstats.mirror_stats(st)) == st
            )
            if ok and p - q != q:
                mirrored, _, flag = braidstats.stats_for(Rational(p, p - q))
                ok = (p - q) % 2 == 1 or (
                    flag and mirrored == braidstats.mirror_stats(st)
                )
        except braidstats.InequalityViolation as exc:
            t.case(False, f"(p,q)=({p},{q}): {exc}")
            continue
        t.case(ok, (p, q, st))
    return t.result


def check_known_knots(max_p: int = 0) -> PropertyResult:
    """Braid index and exponent sum of three knots with table values."""
    t = _Tally("known braid indices")
    for blocks, want in [
        ([[1, 1]], (2, 3)),  # trefoil, the 2-strand braid with exponent 3
        ([[1], [1]], (3, 0)),  # figure eight
        ([[1, 2]], (3, 4)),  # 5_2
    ]:
        t.case(braidstats.braid_index_exponent(blocks) == want, f"{blocks}")
    return t.result


ALL_CHECKS = [
    check_paper_values,
    check_roundtrips,
    check_lemma_conversions,
    check_dual_involution,
    check_parity_lemma,
    check_classification_consistency,
    check_isotopy_invariance,
    check_slice_family,
    check_oracle_equivalence,
    check_diagram_properties,
    check_stats_identities,
    check_known_knots,
]


def run_all(max_p: int) -> list[PropertyResult]:
    """Run every suite; the slice family bound is m <= sqrt(max_p)."""
    if max_p < 2:
        raise ValueError("max_p must be at least 2")
    results = []
    for fn in ALL_CHECKS:
        bound = isqrt(max_p) if fn is check_slice_family else max_p
        results.append(fn(bound))
    return results
