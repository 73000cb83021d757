from fractions import Fraction

import pytest

from opialcheck import (
    ArityMismatch,
    BoundaryNotZero,
    ExponentOutOfRange,
    LengthMismatch,
    Operator,
    TheoremId,
    TooShort,
    WindowOutOfRange,
    WindowRequired,
    check_classical,
    check_pair,
    check_single,
    lhs_terms,
    lookup,
    registry,
)

from conftest import rseq, seq


# -- registry ------------------------------------------------------------------


def test_registry_contents():
    specs = registry()
    assert len(specs) == 17
    assert specs[0].id is TheoremId.T2_2
    assert specs[-1].id is TheoremId.T4_5
    assert {s.id.value for s in specs} == {
        "T2_2", "L3_1", "L3_01", "L3_02",
        "T3_1", "T3_2", "T3_3", "T3_4", "T3_5",
        "T3_6", "T3_7", "T3_8", "T3_9", "T3_10",
        "T4_1", "T4_2", "T4_5",
    }


def test_lookup_coerces_strings():
    assert lookup("T3_5").id is TheoremId.T3_5
    assert lookup(TheoremId.T3_5) is lookup("T3_5")
    with pytest.raises(ValueError):
        lookup("T9_9")


def test_operators_and_arity():
    assert lookup("T3_1").operator is Operator.NABLA
    assert lookup("T4_1").operator is Operator.DELTA
    assert lookup("T2_2").operator is Operator.CLASSICAL_FORWARD
    assert lookup("T3_6").arity == 2
    assert lookup("T3_1").arity == 1


def test_windowed_flags():
    windowed = {s.id.value for s in registry() if s.windowed}
    assert windowed == {"L3_02", "T3_2", "T3_4", "T4_2", "T3_7", "T3_9"}
    assert lookup("T3_8").window_optional
    assert not lookup("T3_8").windowed


def test_constants():
    assert lookup("T3_1").constant(2, 3, n=5) == Fraction(108, 5)
    assert lookup("T3_2").constant(1, 2, n=2, m=5) == Fraction(8, 3)
    assert lookup("T3_5").constant(2, 3, m=5) == Fraction(27, 5)
    assert lookup("T2_2").constant(1, 1, n=4) == 1
    assert lookup("T3_6").constant(n=2) == 1
    assert lookup("T3_7").constant(n=1, m=3) == 1
    assert lookup("T3_10").constant(m=5) == Fraction(3, 2)


def test_constant_validation():
    with pytest.raises(ValueError, match="n"):
        lookup("T3_1").constant(1, 1)
    with pytest.raises(ExponentOutOfRange):
        lookup("T3_1").constant(0, 1, n=3)
    with pytest.raises(ExponentOutOfRange):
        lookup("T3_1").constant(True, 1, n=3)


# -- single-sequence checks -------------------------------------------------------


def test_t3_5_frozen_values(ex33):
    v = check_single(ex33, 2, 3, "T3_5")
    assert v.in_hypotheses and v.holds
    assert v.lhs == 704
    assert v.rhs == Fraction(31104, 5)
    assert v.constant == Fraction(27, 5)
    assert v.ratio == Fraction(55, 486)
    assert v.lambda1 == 2 and v.lambda2 == 3
    assert v.window is None


def test_t3_5_second_exponent_pair(ex33):
    v = check_single(ex33, 1, 2, "T3_5")
    assert v.holds
    assert v.lhs == 80
    assert v.rhs == 192


def test_t4_5_frozen_values(ex33):
    v = check_single(ex33, 2, 3, "T4_5")
    assert v.in_hypotheses and v.holds
    assert v.lhs == 2496
    assert v.rhs == Fraction(31104, 5)


def test_t3_1_equality_on_doubling_ramp():
    s = seq([(i, 2 * i) for i in range(4)])
    v = check_single(s, 1, 1, "T3_1")
    assert v.in_hypotheses and v.holds
    assert v.lhs == 24 and v.rhs == 24
    assert v.ratio == 1


def test_t4_1_on_doubling_ramp():
    s = seq([(i, 2 * i) for i in range(4)])
    v = check_single(s, 1, 1, "T4_1")
    assert v.in_hypotheses and v.holds
    assert v.lhs == 12 and v.rhs == 24


def test_t3_2_windowed(ex32_n5):
    v = check_single(ex32_n5, 1, 2, "T3_2", window=(2, 5))
    assert v.in_hypotheses and v.holds
    assert v.lhs == Fraction(235, 216)
    assert v.rhs == Fraction(28, 9)
    assert v.constant == Fraction(8, 3)
    assert v.window == (2, 5)


def test_window_validation(ex32_n5):
    with pytest.raises(WindowRequired):
        check_single(ex32_n5, 1, 2, "T3_2")
    with pytest.raises(WindowOutOfRange):
        check_single(ex32_n5, 1, 2, "T3_2", window=(1, 5))
    with pytest.raises(WindowOutOfRange):
        check_single(ex32_n5, 1, 2, "T3_2", window=(2, 6))
    with pytest.raises(WindowOutOfRange):
        check_single(ex32_n5, 1, 2, "T3_2", window=(4, 3))
    with pytest.raises(ValueError):
        check_single(ex32_n5, 1, 2, "T3_1", window=(2, 5))


def test_out_of_hypotheses_still_computes(ex33):
    # ex33 is not monotone, so T3_1 does not apply, but the numbers
    # are still evaluated and reported
    v = check_single(ex33, 1, 1, "T3_1")
    assert not v.in_hypotheses
    failed = [p for p in v.preconditions if not p.passed]
    assert failed and all(p.detail for p in failed)
    assert v.lhs > 0 and v.rhs > 0
    assert v.in_hypotheses == all(p.passed for p in v.preconditions)


def test_exponent_validation(ex33):
    with pytest.raises(ExponentOutOfRange):
        check_single(ex33, 0, 1, "T3_5")
    with pytest.raises(ExponentOutOfRange):
        check_single(ex33, 1, Fraction(1, 2), "T3_5")
    with pytest.raises(ValueError):
        check_single(rseq([0, 1, 0]), 1, 2, "T2_2")


def test_too_short():
    with pytest.raises(TooShort):
        check_single(seq([(0, 0)]), 1, 1, "T3_1")


def test_arity_guards(ex33):
    with pytest.raises(ArityMismatch):
        check_single(ex33, 1, 1, "T3_6")
    with pytest.raises(ArityMismatch):
        check_pair(ex33, ex33, "T3_1")


def test_verdict_jsonable_shape(ex33):
    payload = check_single(ex33, 2, 3, "T3_5").to_jsonable()
    assert payload["theorem"] == "T3_5"
    assert payload["lhs"] == 704
    assert payload["rhs"] == "31104/5"
    assert payload["holds"] is True
    assert isinstance(payload["preconditions"], list)
    assert {"name", "passed", "detail"} <= set(payload["preconditions"][0])


# -- real-sequence lemmas ------------------------------------------------------


def test_classical_frozen_tent():
    v = check_classical([0, 1, 2, 1, 0])
    assert v.theorem is TheoremId.T2_2
    assert v.in_hypotheses and v.holds
    assert v.lhs == 4 and v.rhs == 4


def test_classical_accepts_degenerate_sequence():
    v = check_classical(rseq([0, 1, 2, 1, 0]))
    assert v.lhs == 4 and v.rhs == 4


def test_classical_boundary_enforced():
    with pytest.raises(BoundaryNotZero):
        check_classical([1, 1, 0])
    with pytest.raises(BoundaryNotZero):
        check_classical([0, 1, 1])
    with pytest.raises(ValueError):
        check_classical(seq([(0, 0), (1, 2), (0, 0)]))
    with pytest.raises(TooShort):
        check_classical([0])


def test_l3_1_signed_products():
    v = check_single(rseq([0, 1, 3]), 2, 1, "L3_1")
    assert v.in_hypotheses and v.holds
    assert v.lhs == 19  # 1^2*1 + 3^2*2, signed, no absolute values
    assert v.rhs == 27


def test_l3_01_absolute_products():
    v = check_single(rseq([0, 1, -2]), 1, 1, "L3_01")
    assert v.in_hypotheses and v.holds
    assert v.lhs == 7  # |1*1| + |-2*-3|
    assert v.rhs == 15


def test_l3_02_window():
    v = check_single(rseq([5, 2, 0]), 1, 1, "L3_02", window=(1, 2))
    assert v.in_hypotheses and v.holds
    assert v.lhs == 6
    assert v.rhs == 13


def test_real_lemma_interval_fallback(ex33):
    v = check_single(ex33, 1, 1, "T2_2")
    assert not v.in_hypotheses  # degenerate precondition fails
    assert any("interval norms" in note for note in v.notes)
    assert v.lhs >= 0 and v.rhs >= 0


# -- pair checks ------------------------------------------------------------------


def test_t3_6_equality_case():
    u = seq([(0, 0), (1, 2), (2, 4)])
    v = check_pair(u, u, "T3_6")
    assert v.in_hypotheses and v.holds
    assert v.lhs == 16 and v.rhs == 16
    assert v.lambda1 is None and v.lambda2 is None


def test_t3_7_windowed_pair():
    u = seq([(2, 4), (1, 2), (0, 0)])
    v = check_pair(u, u, "T3_7", window=(0, 2))
    assert v.in_hypotheses and v.holds
    assert v.lhs == 16 and v.rhs == 16


def test_t3_8_default_window():
    u = seq([(0, 0), (1, 2), (2, 4)])
    v = check_pair(u, u, "T3_8")
    assert v.in_hypotheses and v.holds
    assert v.window == (2, 2)
    assert v.lhs == 16 and v.rhs == 16
    assert any("v " in note or "v_" in note or "v on" in note for note in v.notes)


def test_t3_9_frozen():
    u = seq([(1, 2), (0, 0)])
    w = seq([(3, 3), (0, 0)])
    v = check_pair(u, w, "T3_9", window=(0, 1))
    assert v.in_hypotheses and v.holds
    assert v.lhs == 6
    assert v.rhs == Fraction(13, 2)


def test_t3_10_default_and_alt_boundary():
    u = seq([(1, 2), (0, 0), (1, 1), (0, 0)])
    w = seq([(0, 0), (0, 0), (2, 3), (0, 0)])
    v = check_pair(u, w, "T3_10")
    assert v.in_hypotheses and v.holds

    ua = seq([(0, 0), (1, 2), (0, 0)])
    wa = seq([(0, 0), (1, 1), (0, 0)])
    va = check_pair(ua, wa, "T3_10", alt_boundary=True)
    assert va.in_hypotheses and va.holds
    assert any("boundary" in note for note in va.notes)
    # the default reading requires the zero at the second index instead
    vd = check_pair(ua, wa, "T3_10")
    assert not vd.in_hypotheses


def test_alt_boundary_only_t3_10():
    u = seq([(0, 0), (1, 2), (2, 4)])
    with pytest.raises(ValueError):
        check_pair(u, u, "T3_6", alt_boundary=True)


def test_pair_alignment_errors():
    u = seq([(0, 0), (1, 2), (2, 4)])
    short = seq([(0, 0), (1, 2)])
    with pytest.raises(LengthMismatch):
        check_pair(u, short, "T3_6")
    shifted = seq([(0, 0), (1, 2), (2, 4)], base=1)
    with pytest.raises(LengthMismatch):
        check_pair(u, shifted, "T3_6")


# -- term inspection ----------------------------------------------------------------


def test_lhs_terms_t3_5(ex33):
    terms = lhs_terms(ex33, 2, 3, "T3_5")
    assert [t[0] for t in terms] == [1, 2, 3, 4]
    assert [t[2] for t in terms] == [32, 128, 288, 256]
    assert sum(t[2] for t in terms) == check_single(ex33, 2, 3, "T3_5").lhs


def test_lhs_terms_windowed(ex32_n5):
    terms = lhs_terms(ex32_n5, 1, 2, "T3_2", window=(2, 5))
    assert [t[0] for t in terms] == [2, 3, 4]
    assert sum(t[2] for t in terms) == Fraction(235, 216)


def test_lhs_terms_delta_range(ex33):
    terms = lhs_terms(ex33, 2, 3, "T4_5")
    assert [t[0] for t in terms] == [1, 2, 3, 4]
    assert sum(t[2] for t in terms) == 2496
