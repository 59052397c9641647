import itertools
from fractions import Fraction
from math import gcd

import pytest

from fixtures import EXCEPTIONAL_SET, INTERVAL_EXCEPTIONS, WITNESS_FAILURES
from oracles import smallest_interval_numerator
from repvar.density import (
    ExceptionalSet,
    GenusPositive,
    IndexTwoRealization,
    InductiveReduction,
    TriangleWitness,
    interval_coprime,
    is_so3_dense,
    scan_hyperbolic_triples,
    strict_triangle,
    triangle_witness,
)
from repvar.presentation import FuchsianPresentation


def test_strict_triangle_examples():
    assert not strict_triangle(Fraction(1, 4), Fraction(1, 4), Fraction(1, 2))
    assert strict_triangle(Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))
    assert strict_triangle(Fraction(1, 2), Fraction(1, 3), Fraction(3, 7))
    with pytest.raises(ValueError):
        strict_triangle(Fraction(1, 2), Fraction(2, 3), Fraction(1, 4))
    with pytest.raises(ValueError):
        strict_triangle(Fraction(0), Fraction(1, 3), Fraction(1, 4))


def test_triangle_witness_examples():
    # exhaustive lexicographic search; (1,1,2) satisfies 1/2 < 1/3 + 2/7
    assert triangle_witness(2, 3, 7) == (1, 1, 2)
    assert triangle_witness(2, 4, 6) is None
    assert triangle_witness(5, 5, 5) == (1, 1, 1)
    assert triangle_witness(3, 4, 4) == (1, 1, 1)
    with pytest.raises(ValueError):
        triangle_witness(2, 3, 6)  # Euclidean, not hyperbolic


def test_witness_validity_and_monotonicity():
    for d1 in range(2, 15):
        for d2 in range(d1, 15):
            for d3 in range(d2, 15):
                if Fraction(1, d1) + Fraction(1, d2) + Fraction(1, d3) >= 1:
                    continue
                strict = triangle_witness(d1, d2, d3, strict=True)
                loose = triangle_witness(d1, d2, d3, strict=False)
                if strict is None:
                    continue
                qs = [Fraction(a, d) for a, d in zip(strict, (d1, d2, d3))]
                assert strict_triangle(*qs)
                for a, d in zip(strict, (d1, d2, d3)):
                    assert gcd(a, d) == 1 and 0 < Fraction(a, d) <= Fraction(1, 2)
                # a strict witness is in particular a non-strict witness, so
                # the non-strict search cannot come back empty
                assert loose is not None


def test_scan_hyperbolic_triples():
    assert scan_hyperbolic_triples(12) == sorted(
        {(2, 4, 6), (2, 6, 6), (2, 6, 10), (3, 6, 6), (4, 6, 12)}
    )
    assert scan_hyperbolic_triples(7) == [(2, 4, 6), (2, 6, 6), (3, 6, 6)]
    assert set(scan_hyperbolic_triples(24)) == WITNESS_FAILURES
    with pytest.raises(ValueError):
        scan_hyperbolic_triples(6)


def test_interval_coprime_examples():
    assert interval_coprime(7, 1) == 3  # (d-1)/2 for odd d
    assert interval_coprime(6, 1) is None
    assert interval_coprime(12, 3) == 1  # boundary 1/12 allowed only at d=12
    assert interval_coprime(2, 1) == 1
    assert interval_coprime(2, 2) == 1
    assert interval_coprime(3, 2) == 1
    assert interval_coprime(6, 3) == 1
    for d in (4, 6, 10):
        assert interval_coprime(d, 2) is None
    for d in (2, 3, 18):
        assert interval_coprime(d, 3) is None
    with pytest.raises(ValueError):
        interval_coprime(1, 1)
    with pytest.raises(ValueError):
        interval_coprime(7, 4)


def test_interval_coprime_agrees_with_search_oracle():
    # existence agrees with the smallest-numerator search for d <= 2000,
    # and every returned value is coprime and inside its interval
    for case in (1, 2, 3):
        for d in range(2, 2001):
            value = interval_coprime(d, case)
            oracle = smallest_interval_numerator(d, case)
            assert (value is None) == (oracle is None), (case, d)
            assert (value is None) == (d in INTERVAL_EXCEPTIONS[case]), (case, d)
            if value is None:
                continue
            assert gcd(value, d) == 1
            q = Fraction(value, d)
            if case == 1:
                assert Fraction(1, 4) < q < Fraction(1, 2) or (
                    q in (Fraction(1, 4), Fraction(1, 2)) and d in (2, 4)
                )
            elif case == 2:
                assert Fraction(1, 3) < q < Fraction(1, 2) or (
                    q in (Fraction(1, 3), Fraction(1, 2)) and d in (2, 3)
                )
            else:
                assert Fraction(1, 12) < q < Fraction(4, 15) or (
                    q == Fraction(1, 12) and d == 12
                )


def test_is_so3_dense_examples():
    verdict = is_so3_dense(FuchsianPresentation(0, (2, 4, 6)))
    assert not verdict.dense and isinstance(verdict.reason, ExceptionalSet)
    verdict = is_so3_dense(FuchsianPresentation(0, (2, 3, 7)))
    assert verdict.dense and isinstance(verdict.reason, TriangleWitness)
    assert verdict.reason.angles == (1, 1, 2)
    verdict = is_so3_dense(FuchsianPresentation(1, (5,)))
    assert verdict.dense and isinstance(verdict.reason, GenusPositive)


def test_exceptional_set_is_exactly_six():
    not_dense = set()
    count = 0
    for g in range(3):
        for m in range(6):
            for periods in itertools.combinations_with_replacement(range(2, 13), m):
                try:
                    p = FuchsianPresentation(g, periods)
                except ValueError:
                    continue
                count += 1
                if not is_so3_dense(p).dense:
                    not_dense.add((g, p.periods))
    assert count > 4000
    assert not_dense == {(0, t) for t in EXCEPTIONAL_SET}


def test_index_two_realizations():
    parents = {
        (2, 5, 5): (2, 4, 5),
        (3, 3, 5): (2, 3, 10),
        (3, 5, 5): (2, 5, 6),
        (5, 5, 5): (2, 5, 10),
        (3, 3, 4): (2, 3, 8),
        (4, 4, 4): (2, 4, 8),
    }
    for triple, parent in parents.items():
        verdict = is_so3_dense(FuchsianPresentation(0, triple))
        assert verdict.dense
        assert isinstance(verdict.reason, IndexTwoRealization)
        assert verdict.reason.parent.periods == parent
        # the parent itself is dense via a direct triangle witness
        parent_verdict = is_so3_dense(verdict.reason.parent)
        assert parent_verdict.dense
        assert isinstance(parent_verdict.reason, TriangleWitness)


def test_344_note_surfaces_its_witness():
    verdict = is_so3_dense(FuchsianPresentation(0, (3, 4, 4)))
    assert not verdict.dense
    assert "(1, 1, 1)" in verdict.note and "octahedral" in verdict.note
    # the other five exceptions have no witness so no such note
    for triple in sorted(WITNESS_FAILURES):
        assert is_so3_dense(FuchsianPresentation(0, triple)).note == ""


def test_inductive_reduction_reasons():
    for periods in ((2, 2, 2, 3), (2, 3, 4, 5), (2,) * 5, (3, 3, 3, 3, 3, 3)):
        p = FuchsianPresentation(0, periods)
        verdict = is_so3_dense(p)
        assert verdict.dense
        reason = verdict.reason
        assert isinstance(reason, InductiveReduction)
        assert reason.auxiliary >= 7
        assert reason.split == (periods[-2], periods[-1], reason.auxiliary)
        assert reason.retained == periods[:-2] + (reason.auxiliary,)
        if (periods[-2], periods[-1]) != (2, 2):
            assert triangle_witness(*reason.split) is not None
    verdict = is_so3_dense(FuchsianPresentation(0, (2, 2, 2, 3)))
    assert verdict.reason.auxiliary == 7
    assert verdict.reason.split == (2, 3, 7)


def test_verdict_consistency():
    assert not is_so3_dense(FuchsianPresentation(0, (2, 6, 10))).dense
    # the dense flag and the ExceptionalSet reason are tied together
    with pytest.raises(AssertionError):
        from repvar.density import DensityVerdict
        DensityVerdict(True, ExceptionalSet())
