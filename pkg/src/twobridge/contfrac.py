"""Exact continued-fraction expansions of two-bridge parameters p/q.

Everything downstream runs on four expansions of a reduced fraction
p/q with p > q >= 1:

* ``neg_cf``: the subtractive expansion a1 - 1/(a2 - 1/(... - 1/ak))
  with every ai >= 2.  It is unique, and its coefficient parities decide
  quasipositivity.
* ``reg_cf_odd``: the ordinary Euclidean expansion with positive
  entries, rewritten to odd length (always possible, in exactly one way).
* closed-form conversions from the odd regular expansion to the
  subtractive one, for p/q itself and for the complement p/(p-q).
* ``murasugi_even_cf``: the signed all-even subtractive expansion of
  p/(p-q), defined whenever q is odd, grouped into maximal blocks of
  constant sign.  Block data feeds the braid-index formulas and the
  tangle diagram builder.

All arithmetic is exact on Python integers; no floats anywhere.
"""

from __future__ import annotations

from math import gcd


class Rational:
    """A reduced fraction p/q with p > q >= 1.

    The constructor reduces by the gcd and normalizes q modulo p into
    (0, p), so q may be given negative or larger than p.  Inputs with
    q = 0 mod p are rejected (there is no two-bridge link for them).
    """

    __slots__ = ("p", "q")

    def __init__(self, p: int, q: int):
        if p < 1:
            raise ValueError(f"p must be a positive integer, got {p}")
        q %= p
        if q == 0:
            raise ValueError(f"q must be nonzero mod p, got {p}/{q}")
        g = gcd(p, q)
        self.p = p // g
        self.q = q // g

    def complement(self) -> "Rational":
        """The fraction p/(p-q), i.e. the mirror parameter."""
        return Rational(self.p, self.p - self.q)

    def __eq__(self, other) -> bool:
        return isinstance(other, Rational) and self.p == other.p and self.q == other.q

    def __hash__(self) -> int:
        return hash((self.p, self.q))

    def __repr__(self) -> str:
        return f"Rational({self.p}, {self.q})"

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


# ---------------------------------------------------------------------------
# subtractive (negative) expansion, all coefficients >= 2


def neg_cf(r: Rational) -> list[int]:
    """Unique expansion p/q = a1 - 1/(a2 - 1/(...)) with all ai >= 2."""
    return _neg_cf_int(r.p, r.q)


def _neg_cf_int(p: int, q: int) -> list[int]:
    # ceiling-division loop; p > q >= 1 is preserved at every step
    out = []
    while q:
        a = -(-p // q)
        out.append(a)
        p, q = q, a * q - p
    return out


def eval_neg_cf(coeffs: list[int]) -> Rational:
    """Evaluate a subtractive expansion back to the fraction it denotes."""
    if not coeffs:
        raise ValueError("empty coefficient list")
    for a in coeffs:
        if a < 2:
            raise ValueError(f"subtractive coefficients must be >= 2, got {a}")
    num, den = coeffs[-1], 1
    for a in reversed(coeffs[:-1]):
        # a - den/num = (a*num - den)/num
        num, den = a * num - den, num
    return Rational(num, den)


# ---------------------------------------------------------------------------
# regular (Euclidean) expansion, normalized to odd length


def reg_cf_odd(r: Rational) -> list[int]:
    """Regular expansion c1 + 1/(c2 + 1/(...)) of odd length.

    The plain Euclidean expansion is computed first; if its length is
    even it is rewritten once: a trailing 1 is merged into its
    neighbour, and any other last entry c is split into (c-1, 1).
    """
    p, q = r.p, r.q
    out = []
    while q:
        c, rem = divmod(p, q)
        out.append(c)
        p, q = q, rem
    if len(out) % 2 == 0:
        if out[-1] == 1:
            out.pop()
            out[-1] += 1
        else:
            out[-1] -= 1
            out.append(1)
    return out


def eval_reg_cf(coeffs: list[int]) -> Rational:
    """Evaluate a regular expansion with positive entries."""
    if not coeffs:
        raise ValueError("empty coefficient list")
    for c in coeffs:
        if c < 1:
            raise ValueError(f"regular coefficients must be positive, got {c}")
    num, den = coeffs[-1], 1
    for c in reversed(coeffs[:-1]):
        num, den = c * num + den, num
    return Rational(num, den)  # rejects the degenerate value 1/1


# ---------------------------------------------------------------------------
# closed-form conversions regular -> subtractive


def reg_to_neg(coeffs: list[int]) -> list[int]:
    """Subtractive expansion of the same fraction, from an odd regular one.

    Pattern: [1+c1, 2 x (c2-1), 2+c3, 2 x (c4-1), ..., 1+c_last].
    A single-entry input [c] maps to [c] directly; the pattern's first
    and last terms are not concatenated in that degenerate case.
    """
    _check_reg_odd(coeffs)
    if coeffs == [1]:
        raise ValueError("the value 1 has no subtractive expansion")
    if len(coeffs) == 1:
        return [coeffs[0]]
    out = [1 + coeffs[0]]
    for i in range(1, len(coeffs) - 2, 2):
        out.extend([2] * (coeffs[i] - 1))
        out.append(2 + coeffs[i + 1])
    out.extend([2] * (coeffs[-2] - 1))
    out.append(1 + coeffs[-1])
    return out


def reg_to_neg_complement(coeffs: list[int]) -> list[int]:
    """Subtractive expansion of p/(p-q), from an odd regular one of p/q.

    Pattern: [2 x (c1-1), 2+c2, 2 x (c3-1), 2+c4, ..., 2 x (c_last-1)].
    """
    _check_reg_odd(coeffs)
    if coeffs == [1]:
        raise ValueError("the value 1 has no complement expansion")
    out = [2] * (coeffs[0] - 1)
    for i in range(1, len(coeffs), 2):
        out.append(2 + coeffs[i])
        out.extend([2] * (coeffs[i + 1] - 1))
    return out


def _check_reg_odd(coeffs: list[int]) -> None:
    if not coeffs or len(coeffs) % 2 == 0:
        raise ValueError(f"need an odd-length expansion, got length {len(coeffs)}")
    for c in coeffs:
        if c < 1:
            raise ValueError(f"regular coefficients must be positive, got {c}")


def riemenschneider_dual(coeffs: list[int]) -> list[int]:
    """Subtractive expansion of p/(p-q) from that of p/q, by point rows.

    Row i of the diagram holds a_i - 1 dots, starting in the column
    where the previous row ended; dual coefficients are the column
    counts plus one.  Applying the map twice is the identity.
    """
    if not coeffs:
        raise ValueError("empty coefficient list")
    for a in coeffs:
        if a < 2:
            raise ValueError(f"subtractive coefficients must be >= 2, got {a}")
    col_count: list[int] = []
    start = 0
    for a in coeffs:
        end = start + (a - 1)  # dots occupy columns start..end-1
        if len(col_count) < end:
            col_count.extend([0] * (end - len(col_count)))
        for j in range(start, end):
            col_count[j] += 1
        start = end - 1
    return [c + 1 for c in col_count]


# ---------------------------------------------------------------------------
# signed all-even expansion of p/(p-q), in constant-sign blocks


def murasugi_even_cf(r: Rational) -> list[list[int]]:
    """Blocks [n_i1, n_i2, ...] of the all-even expansion of p/(p-q).

    Requires q odd.  The flattened expansion reads
    p/(p-q) = [2*n_11, ..., -2*n_21, ..., (-1)^(t-1)*2*n_tj]^- with
    block i carrying sign (-1)^(i-1); entries within a block are
    positive.

    The expansion is greedy: the current value x is split as
    x = a - 1/x' for the unique even integer a with |x - a| < 1.  Since
    exactly one of numerator and denominator is even at every step (q
    odd guarantees this at the start and the step preserves it), x is
    never an odd integer, so that a exists, is unique, and the
    expansion it produces is the unique all-even one.
    """
    if r.q % 2 == 0:
        raise ValueError(f"q must be odd (got {r}); mirror the input first")
    comp = r.complement()
    return signed_to_blocks(_even_entries(comp.p, comp.q))


def _even_entries(num: int, den: int) -> list[int]:
    # expands num/den > 1; a pending sign flip stands in for negative tails,
    # since negating every entry of an expansion negates its value
    out = []
    flip = 1
    while den > 1:
        a = num // den
        if a % 2:
            a += 1  # the only even integer within distance 1 of num/den
        out.append(flip * a)
        rem = a * den - num
        if rem < 0:
            rem = -rem
            flip = -flip
        num, den = den, rem
    if num % 2:
        raise ArithmeticError(f"parity invariant broken at integer {num}")
    out.append(flip * num)
    return out


def eval_even_cf(blocks: list[list[int]]) -> Rational:
    """Evaluate blocks back to the fraction p/(p-q) they expand."""
    entries = blocks_to_signed(blocks)
    num, den = entries[-1], 1
    for a in reversed(entries[:-1]):
        num, den = a * num - den, num
        if den < 0:
            num, den = -num, -den
    if den < 1 or num <= den:
        raise ValueError(f"blocks do not evaluate to a fraction > 1: {num}/{den}")
    return Rational(num, den)


def blocks_to_signed(blocks: list[list[int]]) -> list[int]:
    """Flatten blocks to the signed even entry sequence."""
    if not blocks or any(not b for b in blocks):
        raise ValueError("blocks must be nonempty lists of positive integers")
    entries = []
    for i, block in enumerate(blocks):
        sign = 1 if i % 2 == 0 else -1
        for n in block:
            if n < 1:
                raise ValueError(f"block entries must be positive, got {n}")
            entries.append(sign * 2 * n)
    return entries


def signed_to_blocks(entries: list[int]) -> list[list[int]]:
    """Group a signed even sequence into maximal constant-sign blocks."""
    if not entries or entries[0] < 0:
        raise ValueError("expansion must start with a positive entry")
    blocks: list[list[int]] = []
    sign = 0
    for a in entries:
        if a == 0 or a % 2:
            raise ValueError(f"entries must be nonzero even integers, got {a}")
        s = 1 if a > 0 else -1
        if s != sign:
            blocks.append([])
            sign = s
        blocks[-1].append(abs(a) // 2)
    return blocks
