"""Sequence transformations: the six-slot map H, its specialization O,
the classical linear map G with its eigen-recurrence, and the shift L.

Each application computes exactly those output positions whose input
references are defined.  Periodic tails are carried over only when
preservation is verified by evaluating one full period plus one element;
otherwise the output side becomes undefined.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import DomainExhausted, InvalidConfig, OutOfDomain, WrongInitialCount
from .seqcore import Periodic, SeqWindow, sign

SlotFn = Callable[[int, int], int]


@dataclass(frozen=True)
class HParams:
    """The six slot functions of the general transformation.

    Each slot receives (position p, value u_p) and returns an integer.
    nu_{p+1} = sum over i in [f1, f2) of f3 * u_{p*f4 - i*f5*sign(u_p)} + f6.
    """

    f1: SlotFn
    f2: SlotFn
    f3: SlotFn
    f4: SlotFn
    f5: SlotFn
    f6: SlotFn


def _const(c: int) -> SlotFn:
    return lambda p, u: c


#: slots realizing O within the general formula.  The direction factor
#: sign(u_p) is already part of the index expression, so the fifth slot is
#: the constant 1; with it the summand index is p - i*sign(u_p).
O_SLOTS = HParams(
    f1=_const(0),
    f2=lambda p, u: abs(u),
    f3=_const(1),
    f4=_const(1),
    f5=_const(1),
    f6=_const(1),
)


@dataclass(frozen=True)
class GParams:
    p: int
    q: int


# --- generic application machinery -------------------------------------------

def _apply_pointwise(w: SeqWindow,
                     compute: Callable[[int], int],
                     out_offset: int = 1) -> SeqWindow:
    """Build the output window of a shift-invariant pointwise transformation.

    ``compute(p)`` evaluates the output value at position ``p + out_offset``
    from ``w`` and raises OutOfDomain when a reference is missing.  Tail
    periodicity of the output is asserted only after checking one full
    period against the next within the computed margin.
    """
    margin_l = 2
    margin_r = 2
    if w.left is not None:
        mag = max(abs(v) for v in w.left.unit)
        margin_l = 3 * w.left.period + mag + 4
    if w.right is not None:
        mag = max(abs(v) for v in w.right.unit)
        margin_r = 3 * w.right.period + mag + 4

    p_lo = w.lo - margin_l
    p_hi = w.hi + margin_r
    computed: list[Optional[int]] = []
    for p in range(p_lo, p_hi + 1):
        try:
            computed.append(compute(p))
        except OutOfDomain:
            computed.append(None)

    # longest contiguous computable run (leftmost on ties)
    best = (0, None)  # (length, start offset)
    start = None
    for i, v in enumerate(computed + [None]):
        if v is not None and start is None:
            start = i
        elif v is None and start is not None:
            if i - start > best[0]:
                best = (i - start, start)
            start = None
    if best[1] is None:
        raise DomainExhausted("no computable output positions")
    run_len, run_start = best
    out_lo = p_lo + run_start + out_offset
    vals = computed[run_start:run_start + run_len]

    left = right = None
    if (w.left is not None and run_start == 0
            and run_len >= 2 * w.left.period):
        p = w.left.period
        if all(vals[j] == vals[j + p] for j in range(p)):
            left = Periodic(tuple(vals[j] for j in range(p)))
    if (w.right is not None and run_start + run_len == len(computed)
            and run_len >= 2 * w.right.period):
        p = w.right.period
        if all(vals[-j - 1] == vals[-j - 1 - p] for j in range(p)):
            out_hi = out_lo + run_len - 1
            right = Periodic(tuple(vals[run_len - p + j] for j in range(p)))
            del out_hi
    return SeqWindow(out_lo, vals, left=left, right=right)


# --- the transformations ------------------------------------------------------

def apply_H(h: HParams, w: SeqWindow) -> SeqWindow:
    def compute(p: int) -> int:
        u = w.value_at(p)
        a, b = h.f1(p, u), h.f2(p, u)
        if b < a:
            raise InvalidConfig(f"slot bound f2 < f1 at position {p}")
        c, d, e, f = h.f3(p, u), h.f4(p, u), h.f5(p, u), h.f6(p, u)
        s = sign(u)
        return sum(c * w.value_at(p * d - i * e * s) + f for i in range(a, b))

    return _apply_pointwise(w, compute, out_offset=1)


def apply_O(w: SeqWindow) -> SeqWindow:
    """Direct implementation of the self-referential summation rule."""
    def compute(p: int) -> int:
        u = w.value_at(p)
        s = sign(u)
        return sum(w.value_at(p - i * s) + 1 for i in range(abs(u)))

    return _apply_pointwise(w, compute, out_offset=1)


def apply_G(g: GParams, w: SeqWindow) -> SeqWindow:
    def compute(p: int) -> int:
        return g.p * w.value_at(p) - g.q * w.value_at(p - 1)

    return _apply_pointwise(w, compute, out_offset=1)


def shift_L(w: SeqWindow) -> SeqWindow:
    """Index shift by +1; extension rules are carried along."""
    return SeqWindow(w.lo + 1, w.values, left=w.left, right=w.right)


def recurrence_1_3_extend(g: GParams, r: int, initial: list[int],
                          n: int) -> SeqWindow:
    """Extend 2r initial values by the degree-2r eigen-recurrence of G^r."""
    if r < 1:
        raise ValueError("r must be >= 1")
    if len(initial) != 2 * r:
        raise WrongInitialCount(
            f"expected {2 * r} initial values, got {len(initial)}")
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = [(-1) ** i * math.comb(r, i) * g.p ** (r - i) * g.q ** i
              for i in range(r + 1)]
    vals = [int(v) for v in initial]
    for _ in range(n):
        q = len(vals)
        vals.append(sum(coeffs[i] * vals[q - r - i] for i in range(r + 1)))
    return SeqWindow(0, vals)


Transformation = Callable[[SeqWindow], SeqWindow]


def iterate(t: Transformation, n: int, w: SeqWindow) -> SeqWindow:
    """n-fold composition; raises DomainExhausted if the computable window
    empties before n steps."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = w
    for _ in range(n):
        out = t(out)
    return out


def windows_equal(a: SeqWindow, b: SeqWindow, lo: int, hi: int) -> bool:
    """Pointwise equality over [lo, hi]; undefined positions must match."""
    for k in range(lo, hi + 1):
        da, db = a.defined(k), b.defined(k)
        if da != db:
            return False
        if da and a.value_at(k) != b.value_at(k):
            return False
    return True
