"""Finite interval sequences, difference operators, shape classification.

A sequence carries an explicit ``base_index`` so windowed statements
stay unambiguous: the entries are u_b, u_{b+1}, ..., u_{b+len-1}.

Two difference operators are provided. ``nabla`` is the backward
gH-difference (defined from index b+1 on), ``delta`` the forward one
(defined up to the second-to-last index). Monotonicity is the LU order:
a sequence increases when both endpoint sequences are non-decreasing.
The width direction ("mu") is tracked separately because the theorems
hypothesize both at once.

Order predicates here are deliberately non-strict and set-valued: a
constant sequence is simultaneously increasing and decreasing, and the
checking engine needs that, since the hypotheses are satisfied by ties.
``classify`` collapses the sets to a single reported label (ties read
as increasing) purely for presentation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .intervals import Interval
from .rationals import as_rational


class TooShort(ValueError):
    """The operation needs at least two elements."""


class LengthMismatch(ValueError):
    """Paired sequences do not align."""


class IndexOutOfRange(IndexError):
    """An index fell outside the sequence."""


class NotDecomposable(ValueError):
    """No segmentation into monotone, mu-monotone pieces exists."""


class Direction(enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"
    NON_MONOTONE = "non-monotone"


class MuDirection(enum.Enum):
    MU_INCREASING = "mu-increasing"
    MU_DECREASING = "mu-decreasing"
    MU_NON_MONOTONE = "mu-non-monotone"


class Synchrony(enum.Enum):
    SYNCHRONOUS = "synchronous"
    ASYNCHRONOUS = "asynchronous"
    NEITHER = "neither"


@dataclass(frozen=True, slots=True)
class MonotonicityProfile:
    direction: Direction
    mu_direction: MuDirection
    strict: bool
    zero_indices: tuple[int, ...]

    def to_jsonable(self) -> dict:
        return {
            "direction": self.direction.value,
            "mu_direction": self.mu_direction.value,
            "strict": self.strict,
            "zero_indices": list(self.zero_indices),
        }


@dataclass(frozen=True, slots=True)
class Segment:
    start: int
    end: int
    profile: MonotonicityProfile

    def to_jsonable(self) -> dict:
        return {
            "start": self.start,
            "end": self.end,
            "profile": self.profile.to_jsonable(),
        }


@dataclass(frozen=True, slots=True)
class SegmentDecomposition:
    """Greedy maximal segmentation; adjacent segments share an element."""

    breakpoints: tuple[int, ...]
    segments: tuple[Segment, ...]

    def to_jsonable(self) -> dict:
        return {
            "breakpoints": list(self.breakpoints),
            "segments": [s.to_jsonable() for s in self.segments],
        }


def _step_directions(prev: Interval, cur: Interval) -> set[Direction]:
    out = set()
    if cur.lo >= prev.lo and cur.hi >= prev.hi:
        out.add(Direction.INCREASING)
    if cur.lo <= prev.lo and cur.hi <= prev.hi:
        out.add(Direction.DECREASING)
    return out


def _step_mu(prev: Interval, cur: Interval) -> set[MuDirection]:
    out = set()
    if cur.width >= prev.width:
        out.add(MuDirection.MU_INCREASING)
    if cur.width <= prev.width:
        out.add(MuDirection.MU_DECREASING)
    return out


@dataclass(frozen=True, slots=True)
class IntervalSequence:
    items: tuple[Interval, ...]
    base_index: int = 0

    def __post_init__(self):
        items = tuple(self.items)
        for it in items:
            if not isinstance(it, Interval):
                raise TypeError(
                    f"expected Interval elements, got {type(it).__name__};"
                    " use from_pairs or from_reals for raw values"
                )
        if not isinstance(self.base_index, int) or isinstance(self.base_index, bool):
            raise TypeError("base_index must be an int")
        object.__setattr__(self, "items", items)

    @classmethod
    def from_pairs(cls, pairs, base_index: int = 0) -> "IntervalSequence":
        return cls(tuple(Interval(lo, hi) for lo, hi in pairs), base_index)

    @classmethod
    def from_reals(cls, values, base_index: int = 0) -> "IntervalSequence":
        return cls(tuple(Interval.point(v) for v in values), base_index)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    @property
    def first_index(self) -> int:
        return self.base_index

    @property
    def last_index(self) -> int:
        # one below base_index when empty
        return self.base_index + len(self.items) - 1

    @property
    def indices(self) -> range:
        return range(self.base_index, self.base_index + len(self.items))

    @property
    def is_degenerate(self) -> bool:
        return all(it.is_degenerate for it in self.items)

    def at(self, i: int) -> Interval:
        if not (self.base_index <= i <= self.last_index):
            raise IndexOutOfRange(
                f"index {i} outside [{self.base_index}, {self.last_index}]"
            )
        return self.items[i - self.base_index]

    def window(self, n: int, m: int) -> "IntervalSequence":
        """Sub-sequence u_n..u_m keeping absolute indexing."""
        if n > m:
            raise IndexOutOfRange(f"window start {n} exceeds end {m}")
        if n < self.base_index or m > self.last_index:
            raise IndexOutOfRange(
                f"window [{n}, {m}] outside [{self.base_index}, {self.last_index}]"
            )
        lo = n - self.base_index
        return IntervalSequence(self.items[lo : m - self.base_index + 1], n)

    def reals(self) -> tuple[Fraction, ...]:
        if not self.is_degenerate:
            raise ValueError("sequence has non-degenerate elements")
        return tuple(it.lo for it in self.items)

    def to_pairs(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return tuple(it.to_pair() for it in self.items)

    # -- difference operators ------------------------------------------

    def nabla(self) -> "IntervalSequence":
        """Backward gH-differences u_i gh- u_{i-1}, indexed from b+1."""
        if len(self.items) < 2:
            raise TooShort("nabla needs at least two elements")
        diffs = tuple(
            cur.gh_diff(prev)[0] for prev, cur in zip(self.items, self.items[1:])
        )
        return IntervalSequence(diffs, self.base_index + 1)

    def delta(self) -> "IntervalSequence":
        """Forward gH-differences u_{i+1} gh- u_i, indexed from b."""
        if len(self.items) < 2:
            raise TooShort("delta needs at least two elements")
        diffs = tuple(
            cur.gh_diff(prev)[0] for prev, cur in zip(self.items, self.items[1:])
        )
        return IntervalSequence(diffs, self.base_index)

    def prefix_norm_sum(self, i: int) -> Fraction:
        """Sum of element norms over indices <= i.

        Intended for difference sequences: nabla output starts at b+1, so
        the sum at the parent's base index is empty. An empty sequence
        sums to zero for any i. Otherwise i may not exceed the last
        index (the requested prefix would not be covered).
        """
        if not self.items:
            return Fraction(0)
        if i > self.last_index:
            raise IndexOutOfRange(
                f"prefix end {i} exceeds last index {self.last_index}"
            )
        total = Fraction(0)
        for j in range(self.base_index, i + 1):
            total += self.items[j - self.base_index].norm
        return total

    # -- classification -------------------------------------------------

    def zero_indices(self) -> tuple[int, ...]:
        zero = Interval.zero()
        return tuple(i for i, it in zip(self.indices, self.items) if it == zero)

    def classify(self, strict: bool = False) -> MonotonicityProfile:
        """Collapse the order-predicate sets to one reported label.

        Ties collapse to the increasing label; use direction_set and
        mu_direction_set when the distinction matters.
        """
        dirs = direction_set(self, strict=strict)
        mus = mu_direction_set(self, strict=strict)
        if Direction.INCREASING in dirs:
            d = Direction.INCREASING
        elif Direction.DECREASING in dirs:
            d = Direction.DECREASING
        else:
            d = Direction.NON_MONOTONE
        if MuDirection.MU_INCREASING in mus:
            mu = MuDirection.MU_INCREASING
        elif MuDirection.MU_DECREASING in mus:
            mu = MuDirection.MU_DECREASING
        else:
            mu = MuDirection.MU_NON_MONOTONE
        return MonotonicityProfile(d, mu, strict, self.zero_indices())

    def alternate_segments(self) -> SegmentDecomposition:
        """Greedy maximal split into monotone, mu-monotone segments.

        Ties extend the open segment. Raises NotDecomposable when some
        step admits no monotone order at all (endpoints moving strictly
        in opposite ways), naming the first such step.
        """
        if len(self.items) < 2:
            raise TooShort("segmentation needs at least two elements")
        breakpoints = [self.base_index]
        segments = []
        seg_start = self.base_index
        allowed_d = {Direction.INCREASING, Direction.DECREASING}
        allowed_mu = {MuDirection.MU_INCREASING, MuDirection.MU_DECREASING}
        for i in range(self.base_index + 1, self.last_index + 1):
            prev, cur = self.at(i - 1), self.at(i)
            sd = _step_directions(prev, cur)
            smu = _step_mu(prev, cur)
            if not sd:
                raise NotDecomposable(
                    f"no monotone order for the step {i - 1} -> {i}"
                )
            nd = allowed_d & sd
            nmu = allowed_mu & smu
            if nd and nmu:
                allowed_d, allowed_mu = nd, nmu
            else:
                segments.append(
                    Segment(seg_start, i - 1, self.window(seg_start, i - 1).classify())
                )
                breakpoints.append(i - 1)
                seg_start = i - 1
                allowed_d, allowed_mu = sd, smu
        segments.append(
            Segment(seg_start, self.last_index,
                    self.window(seg_start, self.last_index).classify())
        )
        breakpoints.append(self.last_index)
        return SegmentDecomposition(tuple(breakpoints), tuple(segments))

    def __str__(self) -> str:
        inner = ", ".join(str(it) for it in self.items)
        if self.base_index:
            return f"{{{inner}}}@{self.base_index}"
        return f"{{{inner}}}"


def _slice(seq: IntervalSequence, first, last) -> tuple[Interval, ...]:
    b = seq.base_index
    if first is None:
        first = seq.first_index
    if last is None:
        last = seq.last_index
    if first > last:
        return ()
    if first < seq.first_index or last > seq.last_index:
        raise IndexOutOfRange(
            f"range [{first}, {last}] outside [{seq.first_index}, {seq.last_index}]"
        )
    return seq.items[first - b : last - b + 1]


def direction_set(seq, first=None, last=None, strict: bool = False) -> frozenset:
    """Every LU order the stretch satisfies (empty when neither holds)."""
    items = _slice(seq, first, last)
    up = down = True
    for prev, cur in zip(items, items[1:]):
        if strict:
            if not (cur.lo > prev.lo and cur.hi > prev.hi):
                up = False
            if not (cur.lo < prev.lo and cur.hi < prev.hi):
                down = False
        else:
            if cur.lo < prev.lo or cur.hi < prev.hi:
                up = False
            if cur.lo > prev.lo or cur.hi > prev.hi:
                down = False
    out = set()
    if up:
        out.add(Direction.INCREASING)
    if down:
        out.add(Direction.DECREASING)
    return frozenset(out)


def mu_direction_set(seq, first=None, last=None, strict: bool = False) -> frozenset:
    """Every width order the stretch satisfies."""
    items = _slice(seq, first, last)
    up = down = True
    for prev, cur in zip(items, items[1:]):
        if strict:
            if not cur.width > prev.width:
                up = False
            if not cur.width < prev.width:
                down = False
        else:
            if cur.width < prev.width:
                up = False
            if cur.width > prev.width:
                down = False
    out = set()
    if up:
        out.add(MuDirection.MU_INCREASING)
    if down:
        out.add(MuDirection.MU_DECREASING)
    return frozenset(out)


def first_direction_break(seq, direction: Direction, first=None, last=None):
    """Absolute index of the first step violating the given order, or None."""
    items = _slice(seq, first, last)
    start = seq.first_index if first is None else first
    for k, (prev, cur) in enumerate(zip(items, items[1:])):
        if direction not in _step_directions(prev, cur):
            return start + k + 1
    return None


def first_mu_break(seq, mu: MuDirection, first=None, last=None):
    items = _slice(seq, first, last)
    start = seq.first_index if first is None else first
    for k, (prev, cur) in enumerate(zip(items, items[1:])):
        if mu not in _step_mu(prev, cur):
            return start + k + 1
    return None


def synchronous(u: IntervalSequence, v: IntervalSequence) -> Synchrony:
    """Shared-direction test; ties count toward synchrony."""
    if len(u) != len(v):
        raise LengthMismatch(f"lengths differ: {len(u)} vs {len(v)}")
    du = direction_set(u)
    dv = direction_set(v)
    if du & dv:
        return Synchrony.SYNCHRONOUS
    if du and dv:
        return Synchrony.ASYNCHRONOUS
    return Synchrony.NEITHER
