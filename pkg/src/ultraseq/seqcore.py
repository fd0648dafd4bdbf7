"""Bi-infinite integer sequences as finite windows plus extension rules.

A ``SeqWindow`` materializes a contiguous block of values and may carry a
periodic extension rule on either side.  A left periodic tail is phased so
that the unit's last element sits immediately left of ``lo``; a right tail
starts with the unit's first element immediately right of ``hi``.  All
windows are immutable; every operation returns a new window.
"""
from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .errors import (
    IncompatibleShape,
    NonDeterministic,
    NotPeriodic,
    OutOfDomain,
    TooLarge,
    WindowTooSmall,
)

MAX_WINDOW_ENV = "ULTRASEQ_MAX_WINDOW"
DEFAULT_MAX_WINDOW = 10 ** 6


def max_window_len() -> int:
    raw = os.environ.get(MAX_WINDOW_ENV)
    if raw is None:
        return DEFAULT_MAX_WINDOW
    return int(raw)


def sign(x: int) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class Periodic:
    """Periodic extension rule; a constant tail is a unit of length 1."""

    unit: tuple[int, ...]

    def __init__(self, unit: Iterable[int]):
        unit = tuple(int(v) for v in unit)
        if not unit:
            raise ValueError("periodic unit must be nonempty")
        object.__setattr__(self, "unit", unit)

    @property
    def period(self) -> int:
        return len(self.unit)


def constant(value: int) -> Periodic:
    return Periodic((value,))


ExtRule = Optional[Periodic]  # None means the side is undefined


@dataclass(frozen=True)
class SeqWindow:
    lo: int
    values: tuple[int, ...]
    left: ExtRule = None
    right: ExtRule = None

    def __init__(self, lo: int, values: Iterable[int],
                 left: ExtRule = None, right: ExtRule = None):
        values = tuple(int(v) for v in values)
        if not values:
            raise WindowTooSmall("window must hold at least one value")
        if len(values) > max_window_len():
            raise TooLarge(
                f"window of {len(values)} values exceeds the cap "
                f"({max_window_len()}); raise {MAX_WINDOW_ENV} to override")
        object.__setattr__(self, "lo", int(lo))
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    @property
    def hi(self) -> int:
        return self.lo + len(self.values) - 1

    def defined(self, k: int) -> bool:
        if k < self.lo:
            return self.left is not None
        if k > self.hi:
            return self.right is not None
        return True

    def value_at(self, k: int) -> int:
        if self.lo <= k <= self.hi:
            return self.values[k - self.lo]
        if k < self.lo:
            if self.left is None:
                raise OutOfDomain(k)
            return self.left.unit[(k - self.lo) % self.left.period]
        if self.right is None:
            raise OutOfDomain(k)
        return self.right.unit[(k - self.hi - 1) % self.right.period]

    def slice(self, a: int, b: int) -> list[int]:
        """Values at positions a..b inclusive."""
        return [self.value_at(k) for k in range(a, b + 1)]

    def __repr__(self) -> str:
        def tail(rule):
            return "undef" if rule is None else f"per{list(rule.unit)}"
        shown = list(self.values[:12])
        more = "..." if len(self.values) > 12 else ""
        return (f"SeqWindow(lo={self.lo}, {tail(self.left)} | "
                f"{shown}{more} | {tail(self.right)})")


def value_at(w: SeqWindow, k: int) -> int:
    return w.value_at(k)


def _mod_range_sum(unit: tuple[int, ...], t0: int, t1: int) -> int:
    """Sum of unit[t % p] over t in [t0, t1], in O(p) time."""
    if t0 > t1:
        return 0
    p = len(unit)
    n = t1 - t0 + 1
    full, rem = divmod(n, p)
    total = full * sum(unit)
    start = t0 + full * p
    return total + sum(unit[(start + j) % p] for j in range(rem))


def range_sum(w: SeqWindow, a: int, b: int) -> int:
    """Sum of values at positions a..b inclusive, in time proportional to
    the materialized window plus the tail periods (heads can be huge)."""
    if a > b:
        return 0
    if a < w.lo and w.left is None:
        raise OutOfDomain(a)
    if b > w.hi and w.right is None:
        raise OutOfDomain(b)
    total = 0
    if a < w.lo:
        total += _mod_range_sum(w.left.unit, a - w.lo,
                                min(b, w.lo - 1) - w.lo)
    mid_a, mid_b = max(a, w.lo), min(b, w.hi)
    if mid_a <= mid_b:
        total += sum(w.values[mid_a - w.lo:mid_b - w.lo + 1])
    if b > w.hi:
        total += _mod_range_sum(w.right.unit, max(a, w.hi + 1) - w.hi - 1,
                                b - w.hi - 1)
    return total


# --- verification -----------------------------------------------------------

OK = "ok"
VIOLATION = "violation"
UNCHECKABLE = "uncheckable"


@dataclass(frozen=True)
class CheckEntry:
    position: int
    expected: Optional[int]
    actual: Optional[int]
    status: str


@dataclass(frozen=True)
class CheckReport:
    entries: tuple[CheckEntry, ...] = field(default_factory=tuple)

    def __init__(self, entries: Iterable[CheckEntry]):
        entries = tuple(entries)
        positions = [e.position for e in entries]
        if positions != sorted(set(positions)):
            raise ValueError("entries must have strictly increasing positions")
        object.__setattr__(self, "entries", entries)

    def count(self, status: str) -> int:
        return sum(1 for e in self.entries if e.status == status)

    @property
    def ok_count(self) -> int:
        return self.count(OK)

    @property
    def violation_count(self) -> int:
        return self.count(VIOLATION)

    @property
    def uncheckable_count(self) -> int:
        return self.count(UNCHECKABLE)

    @property
    def all_ok(self) -> bool:
        return self.violation_count == 0

    def violations(self) -> list[CheckEntry]:
        return [e for e in self.entries if e.status == VIOLATION]


def verify_O_point(w: SeqWindow, p: int) -> CheckEntry:
    """Check the self-generation equation at position p.

    A negative head reads its successors (including the very value being
    checked); this is an equality test, never a generation step.
    """
    try:
        u = w.value_at(p)
        actual = w.value_at(p + 1)
        if u >= 0:
            expected = range_sum(w, p - u + 1, p) + u
        else:
            expected = range_sum(w, p, p - u - 1) - u
    except OutOfDomain:
        return CheckEntry(p, None, None, UNCHECKABLE)
    status = OK if actual == expected else VIOLATION
    return CheckEntry(p, expected, actual, status)


def verify_O_range(w: SeqWindow, a: int, b: int) -> CheckReport:
    if a > b:
        raise ValueError("range must satisfy a <= b")
    return CheckReport(verify_O_point(w, p) for p in range(a, b + 1))


# --- generation --------------------------------------------------------------

def extend_right_by_O(w: SeqWindow, steps: int,
                      supplied: Optional[dict[int, int]] = None) -> SeqWindow:
    """Append ``steps`` values generated by the self-referential rule.

    A head h >= 0 or h = -1 determines its successor; h = -2 leaves it
    unrestricted and any h <= -3 under-determines it, so those raise
    ``NonDeterministic`` unless ``supplied`` maps the successor position to
    a caller-chosen value.  Supplied values are appended verbatim; they are
    not validated here (that is the verifier's job).
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if w.right is not None:
        raise IncompatibleShape("window already has a right extension rule")
    if len(w.values) + steps > max_window_len():
        raise TooLarge(f"extension would exceed the window cap "
                       f"({max_window_len()})")
    supplied = supplied or {}
    vals = list(w.values)
    lo, hi = w.lo, w.hi

    def head_sum(a: int, b: int) -> int:
        # sum of values at a..b; the range never rises above hi here
        total = 0
        if a < lo:
            if w.left is None:
                raise OutOfDomain(a)
            total += _mod_range_sum(w.left.unit, a - lo,
                                    min(b, lo - 1) - lo)
        if b >= lo:
            total += sum(vals[max(a, lo) - lo:b - lo + 1])
        return total

    for _ in range(steps):
        head = vals[-1]
        pos = hi + 1
        if pos in supplied:
            vals.append(int(supplied[pos]))
        elif head >= 1:
            vals.append(head + head_sum(hi - head + 1, hi))
        elif head in (0, -1):
            vals.append(0)
        else:
            raise NonDeterministic(hi, head)
        hi += 1
    return SeqWindow(lo, vals, left=w.left, right=None)


# --- differences and sums ----------------------------------------------------

def _diff_once(w: SeqWindow) -> SeqWindow:
    lo, hi = w.lo, w.hi
    vals: list[int] = []
    new_lo = lo
    new_left: ExtRule = None
    new_right: ExtRule = None

    if w.left is not None:
        unit = w.left.unit
        p = len(unit)
        # boundary value at lo-1 is materialized; the rest of the tail
        # differences to a periodic tail of the same length
        new_lo = lo - 1
        vals.append(w.value_at(lo) - w.value_at(lo - 1))
        d_unit = tuple(unit[(j + 1) % p] - unit[j] for j in range(p))
        new_left = Periodic(tuple(d_unit[(j - 1) % p] for j in range(p)))

    vals.extend(w.values[i + 1] - w.values[i]
                for i in range(len(w.values) - 1))

    if w.right is not None:
        unit = w.right.unit
        p = len(unit)
        vals.append(w.value_at(hi + 1) - w.value_at(hi))
        new_right = Periodic(tuple(unit[(j + 1) % p] - unit[j]
                                   for j in range(p)))

    if not vals:
        raise WindowTooSmall("cannot difference a single-value window")
    return SeqWindow(new_lo, vals, left=new_left, right=new_right)


def difference(w: SeqWindow, k: int = 1) -> SeqWindow:
    """k-fold forward difference; materialized domain shrinks by k on any
    undefined side, periodic tails difference to periodic tails."""
    if k < 1:
        raise ValueError("difference order must be >= 1")
    if w.left is None and w.right is None and len(w.values) <= k:
        raise WindowTooSmall(
            f"window of {len(w.values)} values cannot take {k} differences")
    out = w
    for _ in range(k):
        out = _diff_once(out)
    return out


def partial_sums(w: SeqWindow, n: int) -> tuple[int, int]:
    """(sum of values at 0..n-1, sum of values at -n..-1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    s = sum(w.value_at(i) for i in range(0, n))
    r = sum(w.value_at(i) for i in range(-n, 0))
    return s, r


# --- structural predicates ---------------------------------------------------

@dataclass(frozen=True)
class FreeCheck:
    ok: bool
    position: Optional[int] = None
    condition: Optional[int] = None


def is_free(s: Sequence[int], alpha: int) -> FreeCheck:
    """Check the three freeness conditions on a finite indexed segment.

    Conditions, checked in order: (1) no term reaches an index outside
    [alpha, beta]; (2) every term generates its successor; (3) the last
    element is -2.  The first violated condition is reported.
    """
    if not s:
        raise ValueError("segment must be nonempty")
    beta = alpha + len(s) - 1

    def at(n: int) -> int:
        return s[n - alpha]

    for n in range(alpha, beta):
        a = at(n)
        reach = n + sign(a) - a
        if not (alpha <= reach <= beta):
            return FreeCheck(False, n, 1)
    for n in range(alpha, beta):
        a = at(n)
        t = sign(a)
        expected = sum(at(n - i * t) + 1 for i in range(abs(a)))
        if at(n + 1) != expected:
            return FreeCheck(False, n, 2)
    if at(beta) != -2:
        return FreeCheck(False, beta, 3)
    return FreeCheck(True)


def unitary(w: SeqWindow, p: int) -> list[int]:
    """One-period slice at positions 1..p of a period-p window."""
    if p < 1:
        raise ValueError("period must be >= 1")
    lo_chk = w.lo - (w.left.period if w.left else 0)
    hi_chk = w.hi + (w.right.period if w.right else 0)
    for k in range(lo_chk, hi_chk - p + 1):
        if w.value_at(k) != w.value_at(k + p):
            raise NotPeriodic(p)
    try:
        return [w.value_at(k) for k in range(1, p + 1)]
    except OutOfDomain:
        raise NotPeriodic(p)


def breve(unit: Sequence[int], beta: int) -> SeqWindow:
    """Left-infinite periodic window ending at ``beta``.

    ``unit`` is the one-period slice at positions 1..p; the window's last
    value is the period's wrap-around element a_0 = a_p.
    """
    unit = tuple(int(v) for v in unit)
    if not unit:
        raise ValueError("unit must be nonempty")
    p = len(unit)
    # phase the tail so value_at(beta - t) = a_{p - t} cyclically
    left_unit = tuple(unit[(j - 1) % p] for j in range(p))
    return SeqWindow(beta, (unit[-1],), left=Periodic(left_unit), right=None)


def concat(a: SeqWindow, b: Union[Sequence[int], SeqWindow]) -> SeqWindow:
    """Append ``b`` immediately after ``a``'s last index."""
    if a.right is not None:
        raise IncompatibleShape("left operand must have an undefined right side")
    if isinstance(b, SeqWindow):
        if b.left is not None:
            raise IncompatibleShape("appended window must not extend leftward")
        return SeqWindow(a.lo, a.values + b.values, left=a.left, right=b.right)
    b = tuple(int(v) for v in b)
    if not b:
        return a
    return SeqWindow(a.lo, a.values + b, left=a.left, right=None)


def window_add(a: SeqWindow, b: SeqWindow) -> SeqWindow:
    """Pointwise sum on the intersection of the materialized ranges."""
    lo = max(a.lo, b.lo)
    hi = min(a.hi, b.hi)
    if lo > hi:
        raise IncompatibleShape("windows do not overlap")
    vals = [a.value_at(k) + b.value_at(k) for k in range(lo, hi + 1)]
    left = right = None
    if a.left is not None and b.left is not None and lo == a.lo == b.lo:
        p = _lcm(a.left.period, b.left.period)
        left = Periodic(tuple(a.value_at(lo - p + j) + b.value_at(lo - p + j)
                              for j in range(p)))
    if a.right is not None and b.right is not None and hi == a.hi == b.hi:
        p = _lcm(a.right.period, b.right.period)
        right = Periodic(tuple(a.value_at(hi + 1 + j) + b.value_at(hi + 1 + j)
                               for j in range(p)))
    return SeqWindow(lo, vals, left=left, right=right)


def _lcm(x: int, y: int) -> int:
    import math
    return x * y // math.gcd(x, y)


# --- serialization -----------------------------------------------------------

def _rule_to_json(rule: ExtRule) -> dict:
    if rule is None:
        return {"kind": "undefined"}
    return {"kind": "periodic", "unit": [str(v) for v in rule.unit]}


def _rule_from_json(d: dict) -> ExtRule:
    kind = d.get("kind")
    if kind == "undefined":
        return None
    if kind == "periodic":
        return Periodic(int(v) for v in d["unit"])
    raise ValueError(f"unknown extension rule kind: {kind!r}")


def to_document(w: SeqWindow) -> dict:
    """JSON-ready document; values as decimal strings to stay bit-exact."""
    return {
        "lo": w.lo,
        "values": [str(v) for v in w.values],
        "left": _rule_to_json(w.left),
        "right": _rule_to_json(w.right),
    }


def from_document(d: dict) -> SeqWindow:
    return SeqWindow(
        int(d["lo"]),
        (int(v) for v in d["values"]),
        left=_rule_from_json(d["left"]),
        right=_rule_from_json(d["right"]),
    )


def to_json(w: SeqWindow) -> str:
    return json.dumps(to_document(w), indent=2)


def from_json(text: str) -> SeqWindow:
    return from_document(json.loads(text))


def to_csv(w: SeqWindow, a: Optional[int] = None, b: Optional[int] = None) -> str:
    """``index,value`` rows with header, LF line endings."""
    if a is None:
        a = w.lo
    if b is None:
        b = w.hi
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["index", "value"])
    for k in range(a, b + 1):
        writer.writerow([k, w.value_at(k)])
    return buf.getvalue()


def from_csv(text: str) -> SeqWindow:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != ["index", "value"]:
        raise ValueError("expected 'index,value' header")
    rows = [(int(idx), int(val)) for idx, val in reader]
    if not rows:
        raise ValueError("no data rows")
    indices = [i for i, _ in rows]
    if indices != list(range(indices[0], indices[0] + len(indices))):
        raise ValueError("indices must be contiguous and ascending")
    return SeqWindow(indices[0], (v for _, v in rows))
