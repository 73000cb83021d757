"""Inequality registry and the exact checking engine.

Seventeen discrete Opial-type statements are registered, each with its
difference operator, arity, precondition names, windowing rule, and
constant formula. ``check_single`` and ``check_pair`` evaluate both
sides exactly and return a ``Verdict``.

Precondition failures never abort a check. Each hypothesis is reported
as passed or failed on the verdict (with the first offending index in
the detail) and the sides are computed regardless, flagged through
``in_hypotheses``. Relaxed-hypothesis experiments depend on reading
numbers off non-conforming inputs.

The four real-sequence statements (T2_2 and the three lemmas) are
evaluated with plain rational arithmetic when the input is degenerate,
an independent route from the interval engine. On non-degenerate input
they fall back to interval norms and flag the degeneracy hypothesis.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .intervals import ExponentOutOfRange, Interval
from .rationals import rational_to_json
from .sequences import (
    Direction,
    IntervalSequence,
    LengthMismatch,
    MuDirection,
    NotDecomposable,
    Synchrony,
    TooShort,
    direction_set,
    first_direction_break,
    first_mu_break,
    mu_direction_set,
)

_ZERO = Interval.zero()


class ArityMismatch(TypeError):
    """Single-sequence entry point used with a pair statement, or vice versa."""


class WindowRequired(ValueError):
    """The statement is windowed and no window was supplied."""


class WindowOutOfRange(ValueError):
    """The supplied window does not fit the sequence."""


class BoundaryNotZero(ValueError):
    """Strict classical entry point rejected a nonzero boundary."""


class TheoremId(str, enum.Enum):
    T2_2 = "T2_2"
    L3_1 = "L3_1"
    L3_01 = "L3_01"
    L3_02 = "L3_02"
    T3_1 = "T3_1"
    T3_2 = "T3_2"
    T3_3 = "T3_3"
    T3_4 = "T3_4"
    T3_5 = "T3_5"
    T3_6 = "T3_6"
    T3_7 = "T3_7"
    T3_8 = "T3_8"
    T3_9 = "T3_9"
    T3_10 = "T3_10"
    T4_1 = "T4_1"
    T4_2 = "T4_2"
    T4_5 = "T4_5"


class Operator(enum.Enum):
    NABLA = "nabla"
    DELTA = "delta"
    CLASSICAL_FORWARD = "classical-forward"


@dataclass(frozen=True, slots=True)
class PreconditionCheck:
    name: str
    passed: bool
    detail: str = ""

    def to_jsonable(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True, slots=True)
class Verdict:
    theorem: TheoremId
    preconditions: tuple[PreconditionCheck, ...]
    lhs: Fraction
    rhs: Fraction
    constant: Fraction
    holds: bool
    ratio: Optional[Fraction]
    in_hypotheses: bool
    lambda1: Optional[int]
    lambda2: Optional[int]
    window: Optional[tuple[int, int]]
    notes: tuple[str, ...] = ()

    def to_jsonable(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "holds": self.holds,
            "in_hypotheses": self.in_hypotheses,
            "lhs": rational_to_json(self.lhs),
            "rhs": rational_to_json(self.rhs),
            "constant": rational_to_json(self.constant),
            "ratio": None if self.ratio is None else rational_to_json(self.ratio),
            "lambda1": self.lambda1,
            "lambda2": self.lambda2,
            "window": None if self.window is None else list(self.window),
            "preconditions": [p.to_jsonable() for p in self.preconditions],
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class TheoremSpec:
    id: TheoremId
    operator: Operator
    arity: int
    windowed: bool
    window_optional: bool
    preconditions: tuple[str, ...]
    constant_params: tuple[str, ...]
    summary: str
    constant_fn: Callable = field(repr=False, compare=False)

    def constant(self, l1: int = 1, l2: int = 1, n=None, m=None) -> Fraction:
        """Sharp constant for the given exponents and index parameters.

        The parameters follow the statement as written: n is the count
        of difference terms (or the window start for windowed forms),
        m the window end. Only the parameters named in constant_params
        are read.
        """
        for name, val in (("l1", l1), ("l2", l2)):
            if isinstance(val, bool) or not isinstance(val, int) or val < 1:
                raise ExponentOutOfRange(f"{name} must be an integer >= 1, got {val!r}")
        for p in self.constant_params:
            if p == "n" and n is None:
                raise ValueError(f"{self.id.value} constant needs n")
            if p == "m" and m is None:
                raise ValueError(f"{self.id.value} constant needs m")
        return self.constant_fn(l1, l2, n, m)

    def to_jsonable(self) -> dict:
        return {
            "id": self.id.value,
            "operator": self.operator.value,
            "arity": self.arity,
            "windowed": self.windowed,
            "window_optional": self.window_optional,
            "preconditions": list(self.preconditions),
            "constant_params": list(self.constant_params),
            "summary": self.summary,
        }


# -- constant formulas ----------------------------------------------------


def _c_opial(l1, l2, n, m):
    return Fraction(l2 * (n + 1) ** l1, l1 + l2)


def _c_opial_window(l1, l2, n, m):
    return Fraction(l2 * (m - n + 1) ** l1, l1 + l2)


def _c_opial_half(l1, l2, n, m):
    return Fraction(l2 * (m // 2 + 1) ** l1, l1 + l2)


def _c_classical(l1, l2, n, m):
    return Fraction((n + 1) // 2, 2)


def _c_pair_count(l1, l2, n, m):
    return Fraction(n, 2)


def _c_pair_window(l1, l2, n, m):
    return Fraction(m - n, 2)


def _c_pair_half(l1, l2, n, m):
    return Fraction((m + 1) // 2, 2)


def _spec(tid, op, arity, windowed, window_optional, pre, params, fn, summary):
    return TheoremSpec(
        id=tid,
        operator=op,
        arity=arity,
        windowed=windowed,
        window_optional=window_optional,
        preconditions=pre,
        constant_params=params,
        summary=summary,
        constant_fn=fn,
    )


_N = Operator.NABLA
_D = Operator.DELTA
_C = Operator.CLASSICAL_FORWARD

_REGISTRY = {
    s.id: s
    for s in (
        _spec(TheoremId.T2_2, _C, 1, False, False,
              ("degenerate", "first_zero", "last_zero"),
              ("n",), _c_classical,
              "classical forward-difference bound for real sequences vanishing at both ends"),
        _spec(TheoremId.L3_1, _N, 1, False, False,
              ("degenerate", "first_zero", "nonnegative", "nondecreasing"),
              ("l1", "l2", "n"), _c_opial,
              "signed real bound for non-negative non-decreasing sequences anchored at zero"),
        _spec(TheoremId.L3_01, _N, 1, False, False,
              ("degenerate", "first_zero"),
              ("l1", "l2", "n"), _c_opial,
              "absolute-value real bound anchored at zero, no monotonicity required"),
        _spec(TheoremId.L3_02, _N, 1, True, False,
              ("degenerate", "window_end_zero"),
              ("l1", "l2", "n", "m"), _c_opial_window,
              "windowed absolute-value real bound vanishing at the window end"),
        _spec(TheoremId.T3_1, _N, 1, False, False,
              ("first_zero", "monotone", "mu_increasing"),
              ("l1", "l2", "n"), _c_opial,
              "backward-difference bound for monotone mu-increasing sequences anchored at zero"),
        _spec(TheoremId.T3_2, _N, 1, True, False,
              ("window_end_zero", "monotone", "mu_decreasing"),
              ("l1", "l2", "n", "m"), _c_opial_window,
              "windowed backward-difference bound for monotone mu-decreasing sequences"),
        _spec(TheoremId.T3_3, _N, 1, False, False,
              ("first_zero", "alternate", "no_other_zero"),
              ("l1", "l2", "n"), _c_opial,
              "backward-difference bound for piecewise alternating sequences anchored at zero"),
        _spec(TheoremId.T3_4, _N, 1, True, False,
              ("window_end_zero", "alternate", "no_other_zero"),
              ("l1", "l2", "n", "m"), _c_opial_window,
              "windowed backward-difference bound for piecewise alternating sequences"),
        _spec(TheoremId.T3_5, _N, 1, False, False,
              ("first_zero", "last_zero", "alternate", "no_other_zero"),
              ("l1", "l2", "m"), _c_opial_half,
              "backward-difference bound for alternating sequences vanishing at both ends"),
        _spec(TheoremId.T3_6, _N, 2, False, False,
              ("first_zero", "synchronous", "mu_increasing"),
              ("n",), _c_pair_count,
              "pair product-rule bound for synchronous mu-increasing sequences anchored at zero"),
        _spec(TheoremId.T3_7, _N, 2, True, False,
              ("window_end_zero", "synchronous", "mu_decreasing"),
              ("n", "m"), _c_pair_window,
              "windowed pair bound for synchronous mu-decreasing sequences"),
        _spec(TheoremId.T3_8, _N, 2, False, True,
              ("first_zero", "alternate_u", "no_other_joint_zero"),
              ("n",), _c_pair_count,
              "pair bound with alternating first sequence, both anchored at zero"),
        _spec(TheoremId.T3_9, _N, 2, True, False,
              ("window_end_zero", "alternate_u", "no_other_joint_zero"),
              ("n", "m"), _c_pair_window,
              "windowed pair bound with alternating first sequence, vanishing at the window end"),
        _spec(TheoremId.T3_10, _N, 2, False, False,
              ("second_zero", "last_zero", "alternate_u", "no_other_joint_zero"),
              ("m",), _c_pair_half,
              "pair bound anchored at the second and the last index"),
        _spec(TheoremId.T4_1, _D, 1, False, False,
              ("first_zero", "monotone", "mu_increasing"),
              ("l1", "l2", "n"), _c_opial,
              "forward-difference version of the monotone mu-increasing bound"),
        _spec(TheoremId.T4_2, _D, 1, True, False,
              ("window_end_zero", "monotone", "mu_decreasing"),
              ("l1", "l2", "n", "m"), _c_opial_window,
              "forward-difference version of the windowed mu-decreasing bound"),
        _spec(TheoremId.T4_5, _D, 1, False, False,
              ("first_zero", "last_zero", "alternate", "no_other_zero"),
              ("l1", "l2", "m"), _c_opial_half,
              "forward-difference version of the two-end alternating bound"),
    )
}

_REAL_IDS = frozenset(
    {TheoremId.T2_2, TheoremId.L3_1, TheoremId.L3_01, TheoremId.L3_02}
)


def registry() -> tuple[TheoremSpec, ...]:
    """All registered statements, in declaration order."""
    return tuple(_REGISTRY.values())


def lookup(theorem) -> TheoremSpec:
    tid = theorem if isinstance(theorem, TheoremId) else TheoremId(str(theorem))
    return _REGISTRY[tid]


# -- precondition checks ---------------------------------------------------


def _pc_zero_at(seq, idx, name, sym="u"):
    it = seq.at(idx)
    if it == _ZERO:
        return PreconditionCheck(name, True, f"{sym}_{idx} = [0, 0]")
    return PreconditionCheck(name, False, f"{sym}_{idx} = {it} (expected [0, 0])")


def _pc_zero_pair(u, v, idx, name):
    fu = u.at(idx) == _ZERO
    fv = v.at(idx) == _ZERO
    if fu and fv:
        return PreconditionCheck(name, True, f"u_{idx} = v_{idx} = [0, 0]")
    if not fu:
        return PreconditionCheck(name, False, f"u_{idx} = {u.at(idx)} (expected [0, 0])")
    return PreconditionCheck(name, False, f"v_{idx} = {v.at(idx)} (expected [0, 0])")


def _pc_degenerate(seq, first, last):
    for i in range(first, last + 1):
        it = seq.at(i)
        if not it.is_degenerate:
            return PreconditionCheck(
                "degenerate", False, f"u_{i} = {it} has positive width"
            )
    return PreconditionCheck("degenerate", True, f"u_{first}..u_{last} are points")


def _pc_nonnegative(seq, first, last):
    for i in range(first, last + 1):
        if seq.at(i).lo < 0:
            return PreconditionCheck(
                "nonnegative", False, f"u_{i} = {seq.at(i)} drops below zero"
            )
    return PreconditionCheck("nonnegative", True, "no element drops below zero")


def _pc_nondecreasing(seq, first, last):
    if Direction.INCREASING in direction_set(seq, first, last):
        return PreconditionCheck(
            "nondecreasing", True, f"non-decreasing on [{first}, {last}]"
        )
    i = first_direction_break(seq, Direction.INCREASING, first, last)
    return PreconditionCheck("nondecreasing", False, f"decreases at i={i}")


def _pc_monotone(seq, first, last):
    dirs = direction_set(seq, first, last)
    if dirs:
        label = " and ".join(sorted(d.value for d in dirs))
        return PreconditionCheck("monotone", True, f"{label} on [{first}, {last}]")
    up = first_direction_break(seq, Direction.INCREASING, first, last)
    down = first_direction_break(seq, Direction.DECREASING, first, last)
    return PreconditionCheck(
        "monotone",
        False,
        f"no single order on [{first}, {last}]; both orders broken by i={max(up, down)}",
    )


def _pc_mu(seq, first, last, want):
    name = "mu_increasing" if want is MuDirection.MU_INCREASING else "mu_decreasing"
    if want in mu_direction_set(seq, first, last):
        return PreconditionCheck(name, True, f"width order holds on [{first}, {last}]")
    i = first_mu_break(seq, want, first, last)
    return PreconditionCheck(name, False, f"width order breaks at i={i}")


def _pc_mu_pair(u, v, first, last, want, name):
    mu_u = want in mu_direction_set(u, first, last)
    mu_v = want in mu_direction_set(v, first, last)
    if mu_u and mu_v:
        return PreconditionCheck(name, True, f"width order holds for u and v on [{first}, {last}]")
    sym, s = ("u", u) if not mu_u else ("v", v)
    i = first_mu_break(s, want, first, last)
    return PreconditionCheck(name, False, f"{sym} width order breaks at i={i}")


def _pc_alternate(seq, first, last, name="alternate"):
    if last - first + 1 < 2:
        return PreconditionCheck(name, True, f"[{first}, {last}] is trivially alternate")
    try:
        dec = seq.window(first, last).alternate_segments()
    except NotDecomposable as exc:
        return PreconditionCheck(name, False, str(exc))
    return PreconditionCheck(
        name, True,
        f"{len(dec.segments)} segment(s), breakpoints {list(dec.breakpoints)}",
    )


def _pc_no_other_zero(seq, first, last, allowed, name="no_other_zero"):
    for i in range(first, last + 1):
        if i in allowed:
            continue
        if seq.at(i) == _ZERO:
            return PreconditionCheck(name, False, f"u_{i} = [0, 0] is a stray zero")
    return PreconditionCheck(name, True, "no stray zero")


def _pc_no_other_joint_zero(u, v, first, last, allowed):
    for i in range(first, last + 1):
        if i in allowed:
            continue
        if u.at(i) == _ZERO and v.at(i) == _ZERO:
            return PreconditionCheck(
                "no_other_joint_zero", False, f"u_{i} = v_{i} = [0, 0] is a stray joint zero"
            )
    return PreconditionCheck("no_other_joint_zero", True, "no stray joint zero")


def _pc_synchronous(u, v, first, last):
    du = direction_set(u, first, last)
    dv = direction_set(v, first, last)
    if du & dv:
        shared = " and ".join(sorted(d.value for d in du & dv))
        return PreconditionCheck("synchronous", True, f"shared order: {shared}")
    if not du or not dv:
        sym, s = ("u", u) if not du else ("v", v)
        up = first_direction_break(s, Direction.INCREASING, first, last)
        down = first_direction_break(s, Direction.DECREASING, first, last)
        return PreconditionCheck(
            "synchronous", False,
            f"{sym} admits no single order on [{first}, {last}]; broken by i={max(up, down)}",
        )
    return PreconditionCheck(
        "synchronous", False, "u and v are monotone in opposite directions"
    )


# -- window handling --------------------------------------------------------


def _window_ints(window):
    try:
        n, m = window
    except (TypeError, ValueError):
        raise WindowOutOfRange(f"window must be a pair of indices, got {window!r}")
    for val in (n, m):
        if isinstance(val, bool) or not isinstance(val, int):
            raise WindowOutOfRange(f"window indices must be ints, got {window!r}")
    return n, m


def _resolve_window_single(spec, b, e, window):
    if spec.windowed:
        if window is None:
            raise WindowRequired(f"{spec.id.value} needs a window (n, m)")
        n, m = _window_ints(window)
        if not (b + 1 <= n <= m <= e):
            raise WindowOutOfRange(
                f"window [{n}, {m}] invalid; need {b + 1} <= n <= m <= {e}"
            )
        return n, m
    if window is not None:
        raise ValueError(f"{spec.id.value} does not take a window")
    return b, e


def _resolve_window_pair(spec, b, e, window):
    if spec.windowed or spec.window_optional:
        if window is None:
            if spec.window_optional:
                return e, e
            raise WindowRequired(f"{spec.id.value} needs a window (n, m)")
        n, m = _window_ints(window)
        if not (b <= n <= m <= e):
            raise WindowOutOfRange(
                f"window [{n}, {m}] invalid; need {b} <= n <= m <= {e}"
            )
        return n, m
    if window is not None:
        raise ValueError(f"{spec.id.value} does not take a window")
    return b, e


# -- checking ---------------------------------------------------------------


def _check_lambdas(spec, l1, l2):
    for name, val in (("l1", l1), ("l2", l2)):
        if isinstance(val, bool) or not isinstance(val, int):
            raise ExponentOutOfRange(f"{name} must be an integer >= 1, got {val!r}")
        if val < 1:
            raise ExponentOutOfRange(f"{name} must be >= 1, got {val}")
    if spec.id is TheoremId.T2_2 and (l1, l2) != (1, 1):
        raise ValueError("T2_2 has fixed exponents l1 = l2 = 1")


def _verdict(spec, pre, lhs, rhs, const, l1, l2, window, notes):
    holds = lhs <= rhs
    if rhs > 0:
        ratio = lhs / rhs
    elif lhs == 0 and rhs == 0:
        ratio = Fraction(0)
    else:
        ratio = None
    return Verdict(
        theorem=spec.id,
        preconditions=pre,
        lhs=lhs,
        rhs=rhs,
        constant=const,
        holds=holds,
        ratio=ratio,
        in_hypotheses=all(p.passed for p in pre),
        lambda1=l1,
        lambda2=l2,
        window=window,
        notes=notes,
    )


def check_single(seq: IntervalSequence, l1: int, l2: int, theorem, window=None) -> Verdict:
    """Evaluate a single-sequence statement exactly.

    window is required for the windowed statements (a pair (n, m) of
    absolute indices with base+1 <= n <= m <= last) and rejected
    elsewhere. Hypothesis failures are reported, never raised.
    """
    spec = lookup(theorem)
    if spec.arity != 1:
        raise ArityMismatch(f"{spec.id.value} compares a pair of sequences; use check_pair")
    _check_lambdas(spec, l1, l2)
    if len(seq) < 2:
        raise TooShort(f"{spec.id.value} needs at least two elements")
    b, e = seq.first_index, seq.last_index
    n, m = _resolve_window_single(spec, b, e, window)
    if spec.id in _REAL_IDS:
        pre, lhs, rhs, const, notes = _eval_real(spec, seq, l1, l2, n, m)
    elif spec.operator is Operator.NABLA:
        pre, lhs, rhs, const, notes = _eval_nabla(spec, seq, l1, l2, n, m)
    else:
        pre, lhs, rhs, const, notes = _eval_delta(spec, seq, l1, l2, n, m)
    win_echo = (n, m) if spec.windowed else None
    return _verdict(spec, pre, lhs, rhs, const, l1, l2, win_echo, notes)


def _eval_real(spec, seq, l1, l2, n, m):
    b, e = seq.first_index, seq.last_index
    tid = spec.id
    hyp_end = m if tid is TheoremId.L3_02 else e
    pre = [_pc_degenerate(seq, b, hyp_end)]
    if tid is TheoremId.L3_02:
        pre.append(_pc_zero_at(seq, m, "window_end_zero"))
    else:
        pre.append(_pc_zero_at(seq, b, "first_zero"))
    if tid is TheoremId.T2_2:
        pre.append(_pc_zero_at(seq, e, "last_zero"))
        const = spec.constant(l1, l2, n=e - b)
    elif tid is TheoremId.L3_02:
        const = spec.constant(l1, l2, n=n, m=m)
    else:
        const = spec.constant(l1, l2, n=e - b)
    if tid is TheoremId.L3_1:
        pre.append(_pc_nonnegative(seq, b, e))
        pre.append(_pc_nondecreasing(seq, b, e))
    notes = []
    if pre[0].passed:
        xs = {i: seq.at(i).lo for i in range(b, hyp_end + 1)}
        if tid is TheoremId.T2_2:
            d = {i: xs[i + 1] - xs[i] for i in range(b, e)}
            lhs = sum((abs(xs[i] * d[i]) for i in range(b + 1, e)), Fraction(0))
            rhs = const * sum((d[i] ** 2 for i in range(b, e)), Fraction(0))
        else:
            g = {i: xs[i] - xs[i - 1] for i in range(b + 1, hyp_end + 1)}
            if tid is TheoremId.L3_1:
                lhs = sum(
                    (xs[i] ** l1 * g[i] ** l2 for i in range(b + 1, e + 1)), Fraction(0)
                )
                rhs = const * sum(
                    (g[i] ** (l1 + l2) for i in range(b + 1, e + 1)), Fraction(0)
                )
            elif tid is TheoremId.L3_01:
                lhs = sum(
                    (abs(xs[i] ** l1 * g[i] ** l2) for i in range(b + 1, e + 1)),
                    Fraction(0),
                )
                rhs = const * sum(
                    (abs(g[i]) ** (l1 + l2) for i in range(b + 1, e + 1)), Fraction(0)
                )
            else:
                lhs = sum(
                    (abs(xs[i] ** l1 * g[i] ** l2) for i in range(n, m)), Fraction(0)
                )
                rhs = const * sum(
                    (abs(g[i]) ** (l1 + l2) for i in range(n, m + 1)), Fraction(0)
                )
    else:
        notes.append("non-degenerate input: evaluated with interval norms")
        if tid is TheoremId.T2_2:
            d = seq.delta()
            lhs = sum(((seq.at(i) * d.at(i)).norm for i in range(b + 1, e)), Fraction(0))
            rhs = const * sum((d.at(i).norm ** 2 for i in range(b, e)), Fraction(0))
        else:
            g = seq.nabla()
            if tid is TheoremId.L3_02:
                l_rng, r_rng = range(n, m), range(n, m + 1)
            else:
                l_rng = r_rng = range(b + 1, e + 1)
            lhs = sum(
                (((seq.at(i) ** l1) * (g.at(i) ** l2)).norm for i in l_rng), Fraction(0)
            )
            rhs = const * sum((g.at(i).norm ** (l1 + l2) for i in r_rng), Fraction(0))
    return tuple(pre), lhs, rhs, const, tuple(notes)


def _eval_nabla(spec, seq, l1, l2, n, m):
    b, e = seq.first_index, seq.last_index
    tid = spec.id
    g = seq.nabla()
    pre = []
    if tid is TheoremId.T3_1:
        pre.append(_pc_zero_at(seq, b, "first_zero"))
        pre.append(_pc_monotone(seq, b + 1, e))
        pre.append(_pc_mu(seq, b + 1, e, MuDirection.MU_INCREASING))
        lhs_rng, rhs_rng = range(b + 1, e + 1), range(b + 1, e + 1)
        const = spec.constant(l1, l2, n=e - b)
    elif tid is TheoremId.T3_2:
        pre.append(_pc_zero_at(seq, m, "window_end_zero"))
        pre.append(_pc_monotone(seq, b, m))
        pre.append(_pc_mu(seq, b, m, MuDirection.MU_DECREASING))
        lhs_rng, rhs_rng = range(n, m), range(n, m + 1)
        const = spec.constant(l1, l2, n=n, m=m)
    elif tid is TheoremId.T3_3:
        pre.append(_pc_zero_at(seq, b, "first_zero"))
        pre.append(_pc_alternate(seq, b + 1, e))
        pre.append(_pc_no_other_zero(seq, b + 1, e, frozenset()))
        lhs_rng, rhs_rng = range(b + 1, e + 1), range(b + 1, e + 1)
        const = spec.constant(l1, l2, n=e - b)
    elif tid is TheoremId.T3_4:
        pre.append(_pc_zero_at(seq, m, "window_end_zero"))
        pre.append(_pc_alternate(seq, b, m))
        pre.append(_pc_no_other_zero(seq, b, m, frozenset({m})))
        lhs_rng, rhs_rng = range(n, m), range(n, m + 1)
        const = spec.constant(l1, l2, n=n, m=m)
    else:
        pre.append(_pc_zero_at(seq, b, "first_zero"))
        pre.append(_pc_zero_at(seq, e, "last_zero"))
        pre.append(_pc_alternate(seq, b, e))
        pre.append(_pc_no_other_zero(seq, b, e, frozenset({b, e})))
        lhs_rng, rhs_rng = range(b + 1, e), range(b + 1, e + 1)
        const = spec.constant(l1, l2, m=e - b)
    lhs = sum(
        (((seq.at(i) ** l1) * (g.at(i) ** l2)).norm for i in lhs_rng), Fraction(0)
    )
    rhs = const * sum((g.at(i).norm ** (l1 + l2) for i in rhs_rng), Fraction(0))
    return tuple(pre), lhs, rhs, const, ()


def _eval_delta(spec, seq, l1, l2, n, m):
    b, e = seq.first_index, seq.last_index
    tid = spec.id
    d = seq.delta()
    pre = []
    if tid is TheoremId.T4_1:
        pre.append(_pc_zero_at(seq, b, "first_zero"))
        pre.append(_pc_monotone(seq, b + 1, e))
        pre.append(_pc_mu(seq, b + 1, e, MuDirection.MU_INCREASING))
        lhs_rng, rhs_rng = range(b, e), range(b, e)
        const = spec.constant(l1, l2, n=e - b)
    elif tid is TheoremId.T4_2:
        pre.append(_pc_zero_at(seq, m, "window_end_zero"))
        pre.append(_pc_monotone(seq, b, m))
        pre.append(_pc_mu(seq, b, m, MuDirection.MU_DECREASING))
        lhs_rng, rhs_rng = range(n, m), range(n - 1, m)
        const = spec.constant(l1, l2, n=n, m=m)
    else:
        pre.append(_pc_zero_at(seq, b, "first_zero"))
        pre.append(_pc_zero_at(seq, e, "last_zero"))
        pre.append(_pc_alternate(seq, b, e))
        pre.append(_pc_no_other_zero(seq, b, e, frozenset({b, e})))
        lhs_rng, rhs_rng = range(b + 1, e), range(b, e)
        const = spec.constant(l1, l2, m=e - b)
    lhs = sum(
        (((seq.at(i) ** l1) * (d.at(i) ** l2)).norm for i in lhs_rng), Fraction(0)
    )
    rhs = const * sum((d.at(i).norm ** (l1 + l2) for i in rhs_rng), Fraction(0))
    return tuple(pre), lhs, rhs, const, ()


def _v_profile_note(v, first, last):
    p = v.window(first, last).classify()
    return (
        f"v on [{first}, {last}] classifies as {p.direction.value}, "
        f"{p.mu_direction.value} (recorded, not required)"
    )


def check_pair(u: IntervalSequence, v: IntervalSequence, theorem, window=None,
               *, alt_boundary: bool = False) -> Verdict:
    """Evaluate a pair statement exactly.

    T3_7 and T3_9 require a window (n, m); T3_8 accepts an optional one
    (default: both ends at the last index). alt_boundary switches T3_10
    to its first-index anchoring.
    """
    spec = lookup(theorem)
    if spec.arity != 2:
        raise ArityMismatch(f"{spec.id.value} takes a single sequence; use check_single")
    if alt_boundary and spec.id is not TheoremId.T3_10:
        raise ValueError("alt_boundary applies only to T3_10")
    if len(u) != len(v):
        raise LengthMismatch(f"lengths differ: {len(u)} vs {len(v)}")
    if u.base_index != v.base_index:
        raise LengthMismatch(
            f"base indices differ: {u.base_index} vs {v.base_index}"
        )
    if len(u) < 2:
        raise TooShort(f"{spec.id.value} needs at least two elements")
    b, e = u.first_index, u.last_index
    n, m = _resolve_window_pair(spec, b, e, window)
    nu, nv = u.nabla(), v.nabla()
    tid = spec.id
    pre = []
    notes = []
    if tid is TheoremId.T3_6:
        pre.append(_pc_zero_pair(u, v, b, "first_zero"))
        pre.append(_pc_synchronous(u, v, b, e))
        pre.append(_pc_mu_pair(u, v, b, e, MuDirection.MU_INCREASING, "mu_increasing"))
        terms = range(b + 1, e + 1)
        const = spec.constant(n=e - b)
    elif tid is TheoremId.T3_7:
        pre.append(_pc_zero_pair(u, v, m, "window_end_zero"))
        pre.append(_pc_synchronous(u, v, b, m))
        pre.append(_pc_mu_pair(u, v, b, m, MuDirection.MU_DECREASING, "mu_decreasing"))
        terms = range(n + 1, m + 1)
        const = spec.constant(n=n, m=m)
    elif tid is TheoremId.T3_8:
        pre.append(_pc_zero_pair(u, v, b, "first_zero"))
        pre.append(_pc_alternate(u, b, m, name="alternate_u"))
        pre.append(_pc_no_other_joint_zero(u, v, b, m, frozenset({b})))
        terms = range(b + 1, n + 1)
        const = spec.constant(n=n - b)
        notes.append(_v_profile_note(v, b, m))
    elif tid is TheoremId.T3_9:
        pre.append(_pc_zero_pair(u, v, m, "window_end_zero"))
        pre.append(_pc_alternate(u, b, m, name="alternate_u"))
        pre.append(_pc_no_other_joint_zero(u, v, b, m, frozenset({m})))
        terms = range(n + 1, m + 1)
        const = spec.constant(n=n, m=m)
        notes.append(_v_profile_note(v, b, m))
    else:
        if alt_boundary:
            pre.append(_pc_zero_pair(u, v, b, "first_zero"))
            allowed = frozenset({b, e})
            notes.append("alternate boundary mode: anchors at the first and last index")
        else:
            pre.append(_pc_zero_pair(u, v, b + 1, "second_zero"))
            allowed = frozenset({b + 1, e})
        pre.append(_pc_zero_pair(u, v, e, "last_zero"))
        pre.append(_pc_alternate(u, b, e, name="alternate_u"))
        pre.append(_pc_no_other_joint_zero(u, v, b, e, allowed))
        terms = range(b + 1, e + 1)
        const = spec.constant(m=e - b)
        notes.append(_v_profile_note(v, b, e))
    lhs = sum(
        ((u.at(i - 1) * nv.at(i) + v.at(i) * nu.at(i)).norm for i in terms),
        Fraction(0),
    )
    rhs = const * sum(
        ((nu.at(i) ** 2 + nv.at(i) ** 2).norm for i in terms), Fraction(0)
    )
    win_echo = (n, m) if (spec.windowed or spec.window_optional) else None
    return _verdict(spec, tuple(pre), lhs, rhs, const, None, None, win_echo, tuple(notes))


def check_classical(seq) -> Verdict:
    """Strict entry point for the classical real-sequence bound.

    Accepts an iterable of exact reals or a degenerate IntervalSequence.
    Unlike check_single, nonzero boundaries raise BoundaryNotZero here.
    """
    if isinstance(seq, IntervalSequence):
        s = seq
    else:
        s = IntervalSequence.from_reals(seq)
    if not s.is_degenerate:
        raise ValueError("classical check expects a real-valued (degenerate) sequence")
    if len(s) < 2:
        raise TooShort("classical check needs at least two elements")
    if s.at(s.first_index) != _ZERO:
        raise BoundaryNotZero(f"u_{s.first_index} = {s.at(s.first_index)} (expected [0, 0])")
    if s.at(s.last_index) != _ZERO:
        raise BoundaryNotZero(f"u_{s.last_index} = {s.at(s.last_index)} (expected [0, 0])")
    return check_single(s, 1, 1, TheoremId.T2_2)


def lhs_terms(seq: IntervalSequence, l1: int, l2: int, theorem, window=None):
    """Per-index products u_i^l1 (Du_i)^l2 with their norms.

    Returns a list of (index, product interval, norm). Summing the norms
    reproduces Verdict.lhs for every single-sequence statement except
    L3_1 outside its hypotheses, where the verdict lhs is a signed sum.
    """
    spec = lookup(theorem)
    if spec.arity != 1:
        raise ArityMismatch(f"{spec.id.value} compares a pair of sequences")
    _check_lambdas(spec, l1, l2)
    if len(seq) < 2:
        raise TooShort(f"{spec.id.value} needs at least two elements")
    b, e = seq.first_index, seq.last_index
    n, m = _resolve_window_single(spec, b, e, window)
    tid = spec.id
    if tid is TheoremId.T2_2:
        rng, diffs = range(b + 1, e), seq.delta()
    elif tid in (TheoremId.T3_1, TheoremId.T3_3, TheoremId.L3_1, TheoremId.L3_01):
        rng, diffs = range(b + 1, e + 1), seq.nabla()
    elif tid in (TheoremId.T3_2, TheoremId.T3_4, TheoremId.L3_02):
        rng, diffs = range(n, m), seq.nabla()
    elif tid is TheoremId.T3_5:
        rng, diffs = range(b + 1, e), seq.nabla()
    elif tid is TheoremId.T4_1:
        rng, diffs = range(b, e), seq.delta()
    elif tid is TheoremId.T4_2:
        rng, diffs = range(n, m), seq.delta()
    else:
        rng, diffs = range(b + 1, e), seq.delta()
    out = []
    for i in rng:
        term = (seq.at(i) ** l1) * (diffs.at(i) ** l2)
        out.append((i, term, term.norm))
    return out
