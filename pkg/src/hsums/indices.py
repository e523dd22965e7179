"""Index vectors of nested harmonic sums: enumeration, Lyndon words, counting.

An index vector is a nonempty tuple of nonzero signed integers
(a1, ..., ad).  Its weight is sum(|ai|), its depth is d.  The letter order
on the signed alphabet is fixed (version 1) as

    |a| ascending, ties broken negative before positive:
    -1 < 1 < -2 < 2 < -3 < 3 < ...

Any total order yields the same counts; this one is pinned so that basis
selection is reproducible across runs.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import UsageError

LETTER_ORDER_VERSION = 1

#: Guard for the enumeration routines.  The full alphabet at weight 8 has
#: 4374 vectors, still trivially fast; the bound is a sanity rail, not an
#: algorithmic limit.
MAX_ENUM_WEIGHT = 8


def letter_key(a: int) -> tuple[int, int]:
    """Sort key realizing the fixed letter order (version 1)."""
    return (abs(a), 0 if a < 0 else 1)


class IndexVector:
    """Immutable index vector with the canonical textual form "a1,a2,...,ad"."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[int]):
        entries = tuple(int(a) for a in entries)
        if not entries:
            raise UsageError("an index vector needs at least one entry")
        if any(a == 0 for a in entries):
            raise UsageError(f"index entries must be nonzero, got {entries}")
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("IndexVector is immutable")

    @classmethod
    def parse(cls, text: str) -> "IndexVector":
        """Parse the canonical comma-separated form, e.g. "2,-3,1"."""
        try:
            return cls(int(part) for part in text.split(","))
        except ValueError as exc:
            raise UsageError(f"cannot parse index vector {text!r}: {exc}") from None

    @property
    def weight(self) -> int:
        return sum(abs(a) for a in self.entries)

    @property
    def depth(self) -> int:
        return len(self.entries)

    def word_key(self) -> tuple[tuple[int, int], ...]:
        return tuple(letter_key(a) for a in self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, IndexVector) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __lt__(self, other: "IndexVector") -> bool:
        return self.word_key() < other.word_key()

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.entries)

    def __repr__(self) -> str:
        return f"IndexVector({self.entries!r})"


def weight(v: IndexVector) -> int:
    return v.weight


def _compositions(w: int) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of w into parts >= 1."""
    if w == 0:
        yield ()
        return
    for first in range(1, w + 1):
        for rest in _compositions(w - first):
            yield (first,) + rest


def _check_enum_weight(w: int) -> None:
    if not 1 <= w <= MAX_ENUM_WEIGHT:
        raise UsageError(
            f"enumeration weight must be in 1..{MAX_ENUM_WEIGHT}, got {w}"
        )


def enumerate_sums(w: int, allow_minus_one: bool = True) -> list[IndexVector]:
    """All index vectors of exact weight w, sorted under the letter order.

    With ``allow_minus_one=False`` vectors containing an entry -1 are
    excluded (entries +1 stay allowed).
    """
    _check_enum_weight(w)
    out = []

    def extend(rem: int, cur: list[int]):
        if rem == 0:
            out.append(IndexVector(cur))
            return
        for part in range(1, rem + 1):
            for sign in (-1, 1):
                if part == 1 and sign == -1 and not allow_minus_one:
                    continue
                cur.append(sign * part)
                extend(rem - part, cur)
                cur.pop()

    extend(w, [])
    out.sort(key=IndexVector.word_key)
    return out


def count_total(w: int) -> int:
    """Number of index vectors of weight w over the full alphabet: 2 * 3^(w-1)."""
    if w < 1:
        raise UsageError(f"weight must be >= 1, got {w}")
    return 2 * 3 ** (w - 1)


def count_no_minus_one(w: int) -> int:
    """Number of weight-w vectors avoiding the entry -1.

    Integer recurrence b_w = 2 b_{w-1} + b_{w-2} with b_1 = 1, b_2 = 3;
    this is the exact integer form of (1/2)[(1-sqrt 2)^w + (1+sqrt 2)^w].
    """
    if w < 1:
        raise UsageError(f"weight must be >= 1, got {w}")
    if w == 1:
        return 1
    prev, cur = 1, 3
    for _ in range(w - 2):
        prev, cur = cur, 2 * cur + prev
    return cur


def _mobius(n: int) -> int:
    if n == 1:
        return 1
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def count_basis_no_minus_one(w: int, raw_formula: bool = False) -> int:
    """Basis count for the no-{-1} alphabet at weight w.

    Moebius-inversion formula (2/w) * sum_{d|w} mu(w/d) * count_no_minus_one(d),
    evaluated in exact integer arithmetic.

    The formula yields 2 at w = 1 while the correct count of basis elements
    (single letters that are Lyndon words) is 1; the default corrects this,
    ``raw_formula=True`` returns the uncorrected formula value.
    """
    if w < 1:
        raise UsageError(f"weight must be >= 1, got {w}")
    if w == 1 and not raw_formula:
        return 1
    total = sum(
        _mobius(w // d) * count_no_minus_one(d) for d in range(1, w + 1) if w % d == 0
    )
    value, rem = divmod(2 * total, w)
    if rem:
        raise AssertionError(f"basis-count formula not integral at w={w}")
    return value


def is_lyndon(v: IndexVector) -> bool:
    """True iff v strictly precedes every proper suffix under the letter order."""
    wk = v.word_key()
    return all(wk < wk[i:] for i in range(1, len(wk)))


def lyndon_words(w: int, allow_minus_one: bool = True) -> list[IndexVector]:
    """All weight-w Lyndon words over the chosen alphabet, sorted."""
    return [v for v in enumerate_sums(w, allow_minus_one) if is_lyndon(v)]


def reduction_table(max_weight: int) -> dict:
    """Cumulative (total, basis) rows for both alphabets through max_weight.

    Returns {"full": {"total": [...], "basis": [...]},
             "no_minus_one": {"total": [...], "basis": [...]}},
    each list cumulative over weights 1..max_weight.  The no-{-1} basis row
    uses the corrected w=1 count (see count_basis_no_minus_one).
    """
    _check_enum_weight(max_weight)
    full_total, full_basis = [], []
    nm1_total, nm1_basis = [], []
    ct = cb = nt = nb = 0
    for w in range(1, max_weight + 1):
        ct += count_total(w)
        cb += len(lyndon_words(w, allow_minus_one=True))
        nt += count_no_minus_one(w)
        nb += count_basis_no_minus_one(w)
        full_total.append(ct)
        full_basis.append(cb)
        nm1_total.append(nt)
        nm1_basis.append(nb)
    return {
        "full": {"total": full_total, "basis": full_basis},
        "no_minus_one": {"total": nm1_total, "basis": nm1_basis},
    }
