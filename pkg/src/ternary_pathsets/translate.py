"""Carry-transducer presentations of intersections of Cantor-set translates.

For multipliers ``M_1 < ... < M_n`` the path set ``X(M_1, ..., M_n)`` is
the set of 3-adic digit sequences ``x`` (least significant digit first)
such that every product ``M_i * x`` has only digits 0 and 1.  Reading the
digits of ``x`` one at a time and multiplying by each ``M_i`` on the fly
is a finite-state process whose state is the tuple of pending carries.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from numbers import Integral
from typing import Iterable, Sequence

from .presentation import (
    DIGITS,
    Presentation,
    _require_right_resolving,
    trim,
)

FAMILIES = ("L", "N", "P", "Q")


# --- ternary strings ----------------------------------------------------------


def ternary_digits(m: int) -> tuple[int, ...]:
    """Least-significant-first base-3 digits of ``m >= 0``; ``0 -> (0,)``."""
    if m < 0:
        raise ValueError("negative integers have no finite ternary expansion")
    if m == 0:
        return (0,)
    out = []
    while m:
        m, r = divmod(m, 3)
        out.append(r)
    return tuple(out)


def to_ternary(m: int, width: int | None = None) -> str:
    """Most-significant-first display string, e.g. ``19 -> '201'``.

    With `width`, the string is left-padded with zeros (never truncated).
    """
    s = "".join(str(d) for d in reversed(ternary_digits(m)))
    if width is not None:
        s = s.rjust(width, "0")
    return s


def from_ternary(s: str) -> int:
    """Inverse of :func:`to_ternary`.  Accepts ``'(201)_3'`` style wrappers."""
    s = s.strip()
    if s.startswith("(") and s.endswith(")_3"):
        s = s[1:-3]
    if not s or any(c not in "012" for c in s):
        raise ValueError(f"not a ternary string: {s!r}")
    return int(s, 3)


@dataclass(frozen=True)
class TernaryStats:
    d3: int
    n3: int
    b3: int
    s3: int


def ternary_stats(m: int) -> TernaryStats:
    """Digit statistics of ``m >= 1``.

    d3 counts nonzero digits, n3 is the digit sum, b3 counts maximal runs
    of nonzero digits and s3 counts maximal runs of equal digits.
    """
    if m < 1:
        raise ValueError("ternary_stats needs m >= 1")
    digits = ternary_digits(m)
    runs = [(d, len(list(g))) for d, g in itertools.groupby(digits)]
    blocks = [k for k, g in itertools.groupby(digits, key=bool) if k]
    return TernaryStats(
        d3=sum(1 for d in digits if d),
        n3=sum(digits),
        b3=len(blocks),
        s3=len(runs),
    )


def normalize_multiplier(m: int) -> int:
    """Strip trailing ternary zeros: ``m / 3**v`` with ``3**v`` exactly dividing ``m``."""
    if m < 1:
        raise ValueError("multiplier must be positive")
    while m % 3 == 0:
        m //= 3
    return m


# --- multiplier sets ----------------------------------------------------------


def multiplier_set(ms: Iterable) -> tuple[int, ...]:
    """Validate a multiplier list into a strictly increasing tuple.

    Repeated multipliers collapse (the intersection is unchanged).  Rejects
    non-integers (including rationals), non-positive values and the empty
    list.
    """
    out = []
    for m in ms:
        if isinstance(m, bool) or not isinstance(m, Integral):
            raise ValueError(f"multiplier {m!r} is not an integer")
        if m < 1:
            raise ValueError(f"multiplier {m} is not positive")
        out.append(int(m))
    if not out:
        raise ValueError("need at least one multiplier")
    return tuple(sorted(set(out)))


def family_member(family: str, k: int) -> int:
    """The k-th member of one of the families L, N, P, Q.

    ===  =====================  ===================
    L    ``(1^k)_3``            ``(3^k - 1) / 2``
    N    ``(1 0^{k-1} 1)_3``    ``3^k + 1``
    P    ``(2 0^{k-1} 1)_3``    ``2 * 3^k + 1``
    Q    ``(2^k 0^{k-1} 1)_3``  ``3^{2k} - 3^k + 1``
    ===  =====================  ===================
    """
    if k < 1:
        raise ValueError("family index k must be >= 1")
    family = family.upper()
    if family == "L":
        return (3**k - 1) // 2
    if family == "N":
        return 3**k + 1
    if family == "P":
        return 2 * 3**k + 1
    if family == "Q":
        return 3 ** (2 * k) - 3**k + 1
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


# --- the transducer -----------------------------------------------------------


def carry_step(ms: Sequence[int], carries: Sequence[int], digit: int) -> tuple[int, ...] | None:
    """Advance every product ``M_i * x`` by one input digit.

    Returns the new carries, or ``None`` if some output digit would be 2.
    """
    new = []
    for m, s in zip(ms, carries):
        t = m * digit + s
        b = t % 3
        if b == 2:
            return None
        new.append((t - b) // 3)
    return tuple(new)


def _state_label(ms: Sequence[int], carries: Sequence[int]) -> str:
    # multiplier 1 never carries, so it contributes nothing to the label
    parts = [(m, c) for m, c in zip(ms, carries) if m != 1]
    if not parts:
        return "0"
    if len(parts) == 1:
        return to_ternary(parts[0][1])
    width = len(to_ternary(max(m for m, _ in parts)))
    return "|".join(to_ternary(c, width) for _, c in parts)


def build_translate_presentation(ms: Iterable[int], trimmed: bool = True) -> Presentation:
    """Presentation of ``X(M_1, ..., M_n)`` explored breadth-first from zero carry.

    Vertex ids follow discovery order (the marked zero state is 0).  Vertex
    labels are the ternary strings of the carries; with a single
    multiplier besides 1 this is just that multiplier's carry.
    """
    ms = multiplier_set(ms)
    start = tuple(0 for _ in ms)
    ids = {start: 0}
    order = [start]
    edges = set()
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for a in DIGITS:
            nxt = carry_step(ms, state, a)
            if nxt is None:
                continue
            if nxt not in ids:
                assert all(c <= m for c, m in zip(nxt, ms)), "carry bound violated"
                ids[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            edges.add((ids[state], ids[nxt], a))
    p = Presentation(tuple(_state_label(ms, s) for s in order), 0, frozenset(edges))
    return trim(p) if trimmed else p


def build_family(family: str, k: int) -> Presentation:
    return build_translate_presentation([1, family_member(family, k)])


def run_automaton(p: Presentation, prefix: Iterable[int]) -> bool:
    """True iff `prefix` (least significant digit first) labels a path from the marked vertex."""
    _require_right_resolving(p)
    if p.is_empty:
        return False
    u = p.marked
    for d in prefix:
        u = p.transition(u, int(d))
        if u is None:
            return False
    return True


def admissible_brute_force(ms: Sequence[int], prefix: Sequence[int]) -> bool:
    """Direct check of a finite prefix by integer multiplication.

    The prefix ``x_0 .. x_{n-1}`` is admissible when, for each ``M``, the
    low ``n`` digits of ``M * x`` avoid 2.  Digits above position ``n - 1``
    still depend on unread digits of ``x`` and are ignored.
    """
    x = sum(d * 3**i for i, d in enumerate(prefix))
    n = len(prefix)
    for m in ms:
        y = m * x
        for _ in range(n):
            y, r = divmod(y, 3)
            if r == 2:
                return False
    return True
