from __future__ import annotations

import random
from fractions import Fraction

import pytest

import scv.identities as identities
from scv.identities import (
    CoefficientError,
    RecurrenceOrder4,
    check_bb2,
    check_bb4_direct,
    check_bb4_initial,
    check_bb4_recurrence,
    check_cc1,
    check_cc4,
    check_liu26,
    check_telescope,
    eval_bb4_side,
    self_test_transcription,
)
from scv.poly import UniPoly
from scv.sequences import d_val, pair_binomial_poly, s_val


def test_cc1_examples():
    assert check_cc1(0, 0).passed
    for n in range(5):
        assert check_cc1(0, n).passed
    assert check_cc1(1, 1).passed
    for j in range(5):
        for k in range(5):
            assert check_cc1(j, k).passed


def test_cc1_is_polynomial_equality():
    r = check_cc1(1, 1)
    # both witnesses are the full coefficient lists of a degree-4 polynomial
    assert r.lhs_witness == r.rhs_witness
    assert r.lhs_witness.count(",") == 4


def test_cc4_examples():
    assert check_cc4(1, 1).passed
    assert check_cc4(1, 1).lhs_witness == "4"
    assert check_cc4(0, 0).passed
    assert check_cc4(2, 3).passed
    with pytest.raises(ValueError):
        check_cc4(2, 5)


def test_liu26_examples():
    assert check_liu26(0).lhs_witness == "1"
    assert check_liu26(2).passed
    r = check_liu26(7)
    assert r.passed and r.rhs_witness == "-1"
    for s in range(20):
        assert check_liu26(s).passed


def test_telescope_examples():
    r = check_telescope(1)
    assert r.passed
    assert check_telescope(2).passed
    assert check_telescope(6).passed
    with pytest.raises(ValueError):
        check_telescope(0)


def test_telescope_degree_12_case():
    cleared = pair_binomial_poly(6).scale(6 * (-1) ** 7)
    assert cleared.degree == 12
    assert check_telescope(6).passed


def test_bb2_examples():
    assert check_bb2(0).passed
    r = check_bb2(1)
    assert r.passed
    # (1+2x)(1+x+x^2) = 1+3x+3x^2+2x^3
    assert r.lhs_witness == "[1, 3, 3, 2]"
    assert check_bb2(5).passed


def test_eval_bb4_side_values():
    assert eval_bb4_side("lhs", 0, 0) == 1
    assert eval_bb4_side("lhs", 1, 1) == eval_bb4_side("rhs", 1, 1) == 9
    # the double-sum side factors through the polynomial families
    for m in range(6):
        for n in range(6):
            assert eval_bb4_side("lhs", m, n) == d_val(n, m) * s_val(n, m)
    with pytest.raises(ValueError):
        eval_bb4_side("middle", 1, 1)


def test_bb4_direct_small_grid():
    for m in range(8):
        for n in range(8):
            assert check_bb4_direct(m, n).passed


def test_bb4_sides_are_nonnegative_integers():
    for side in ("lhs", "rhs"):
        for m in range(6):
            for n in range(6):
                v = eval_bb4_side(side, m, n)
                assert isinstance(v, int) and v >= 0


def test_recurrence_table_matches_factored_forms():
    # The stored triples must reproduce the factored coefficient polynomials.
    rec = RecurrenceOrder4.default()

    def c0(m, n):
        return (m + 1) ** 3 * (m + 2) * (3 * m * m + 18 * m + 26)

    def c1(m, n):
        return -2 * (m + 2) * (
            12 * m**3 * n**2 + 12 * m**3 * n + 90 * m**2 * n**2 + 3 * m**3
            + 90 * m**2 * n + 212 * m * n**2 + 23 * m**2 + 212 * m * n
            + 156 * n**2 + 55 * m + 156 * n + 41
        )

    def c2(m, n):
        return -2 * (
            3 * m**6 + 30 * m**4 * n**2 + 45 * m**5 + 30 * m**4 * n
            + 300 * m**3 * n**2 + 287 * m**4 + 300 * m**3 * n
            + 1094 * m**2 * n**2 + 995 * m**3 + 1094 * m**2 * n
            + 1720 * m * n**2 + 1964 * m**2 + 1720 * m * n + 978 * n**2
            + 2070 * m + 978 * n + 898
        )

    def c3(m, n):
        return -2 * (m + 3) * (
            12 * m**3 * n**2 + 12 * m**3 * n + 90 * m**2 * n**2 + 3 * m**3
            + 90 * m**2 * n + 212 * m * n**2 + 22 * m**2 + 212 * m * n
            + 154 * n**2 + 50 * m + 154 * n + 34
        )

    def c4(m, n):
        return (m + 3) * (m + 4) ** 3 * (3 * m * m + 12 * m + 11)

    factored = [c0, c1, c2, c3, c4]
    rng = random.Random(99)
    for _ in range(40):
        m, n = rng.randrange(0, 60), rng.randrange(0, 60)
        for i in range(5):
            assert rec.coefficient(i, m, n) == factored[i](m, n)


def test_recurrence_leading_coefficient_nonzero():
    rec = RecurrenceOrder4.default()
    for m in range(201):
        assert rec.leading_coefficient(m, 0) > 0
        assert rec.leading_coefficient(m, 17) > 0


def test_transcription_self_test_runs_before_rhs_certification(monkeypatch):
    monkeypatch.setattr(identities, "_TRANSCRIPTION_CERTIFIED", False)
    assert check_bb4_recurrence("rhs", 0, 0).passed
    assert identities._TRANSCRIPTION_CERTIFIED


def test_transcription_self_test_catches_corruption(monkeypatch):
    bad = tuple(
        tuple(t) if i != 2 else tuple(t[:-1] + ((6, 0, -7),))
        for i, t in enumerate(identities._RECURRENCE_TRIPLES)
    )
    monkeypatch.setattr(identities, "_RECURRENCE_TRIPLES", bad)
    monkeypatch.setattr(identities, "_TRANSCRIPTION_CERTIFIED", False)
    with pytest.raises(CoefficientError):
        self_test_transcription()


def test_vanishing_leading_coefficient_is_an_error():
    rec = RecurrenceOrder4(
        (((0, 0, 1),), ((0, 0, 1),), ((0, 0, 1),), ((0, 0, 1),), ((0, 0, 0),))
    )
    with pytest.raises(CoefficientError):
        rec.residual("lhs", 1, 1)


def test_bb4_recurrence_examples():
    assert check_bb4_recurrence("lhs", 0, 0).passed
    r = check_bb4_recurrence("rhs", 5, 7)
    assert r.passed and r.lhs_witness == "0"


def test_bb4_initial_values():
    for m in range(4):
        for n in range(10):
            assert check_bb4_initial(m, n).passed
    with pytest.raises(ValueError):
        check_bb4_initial(4, 0)


def test_identity_checks_expose_exact_modulus():
    for r in [check_cc1(1, 2), check_cc4(2, 1), check_liu26(3), check_bb2(2)]:
        assert r.modulus == "exact"
        assert r.passed == (r.lhs_witness == r.rhs_witness)
