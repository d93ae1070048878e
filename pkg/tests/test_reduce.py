import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sgf import core, oracle, reduce
from sgf.errors import NotNumerical, SemigroupOverflow


def test_johnson_5_6_9():
    f, steps = reduce.johnson_frobenius([5, 6, 9])
    assert f == 13 == oracle.oracle_frobenius([5, 6, 9])
    (step,) = steps
    assert (step.d, step.pivot, step.reduced) == (3, 5, (5, 2, 3))


def test_johnson_4_6_9():
    f, steps = reduce.johnson_frobenius([4, 6, 9])
    assert f == 11 == oracle.oracle_frobenius([4, 6, 9])
    assert (steps[0].d, steps[0].pivot) == (3, 4)


def test_johnson_two_generators():
    f, steps = reduce.johnson_frobenius([5, 8])
    assert f == 5 * 8 - 5 - 8 and steps == []


def test_johnson_requires_numerical():
    with pytest.raises(NotNumerical):
        reduce.johnson_frobenius([6, 9, 15])


def test_reduction_step_tie_goes_to_smallest_pivot():
    # removing 6 leaves gcd(10, 15) = 5; removing 10 leaves gcd(6, 15) = 3
    step = reduce.reduction_step((6, 10, 15))
    assert (step.pivot, step.d) == (6, 5)
    assert reduce.reduction_step((3, 5)) is None
    assert reduce.reduction_step((4, 5, 7)) is None


@pytest.mark.parametrize("gens", [[5, 6, 9], [4, 6, 9], [2, 3], [6, 10, 15], [12, 18, 20, 27]])
def test_type_preservation(gens):
    assert reduce.type_preservation_check(gens)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(2, 80), min_size=2, max_size=5))
def test_johnson_matches_core(raw):
    S = core.normalize(raw)
    if not S.is_numerical:
        return
    f, _ = reduce.johnson_frobenius(raw)
    assert f == core.frobenius(S)


def test_johnson_sweep_small():
    sweep = reduce.johnson_sweep(40)
    assert sweep["reducible"] > 0 and sweep["mismatches"] == 0


@pytest.mark.parametrize("gens, coeffs", [([4, 9], (-2, 1)), ([6, 9], (-1, 1)), ([5], (1,))])
def test_bezout_examples(gens, coeffs):
    cert = reduce.bezout_certificate(gens)
    assert cert.coefficients == coeffs
    assert cert.validate()


def test_bezout_semigroup_mode():
    for gens in ([4, 9], [6, 9], [6, 10], [9, 15], [14, 35]):
        cert = reduce.bezout_certificate(gens, mode="semigroup")
        assert cert.target == gcd(*gens) and cert.validate()
    with pytest.raises(ValueError):
        reduce.bezout_certificate([4, 6, 9], mode="semigroup")
    with pytest.raises(ValueError):
        reduce.bezout_certificate([4, 9], mode="magic")


def test_bezout_coefficients_bounded_by_generators():
    rng = random.Random(7)
    for _ in range(2000):
        gens = [rng.randint(1, 10**9) for _ in range(rng.randint(2, 6))]
        cert = reduce.bezout_certificate(gens)
        assert cert.validate()
        assert all(abs(c) <= max(gens) for c in cert.coefficients)


def test_bezout_products_beyond_int64_are_reported():
    with pytest.raises(SemigroupOverflow):
        reduce.bezout_certificate([10**18 + 1, 10**18 - 1])


def test_validator_rejects_wrong_certificates():
    assert not reduce.validate_certificate((4, 9), (1, 1), 1)
    assert not reduce.validate_certificate((4, 9), (1,), 1)
    with pytest.raises(SemigroupOverflow):
        reduce.validate_certificate((2**62, 3), (4, 0), 1)


@pytest.mark.parametrize("gens, m, alpha0", [([6, 10], 2, 8), ([2, 3], 1, 2), ([9, 15], 3, 8)])
def test_conductor(gens, m, alpha0):
    b = reduce.conductor_bound(gens)
    assert (b.m, b.alpha0) == (m, alpha0)
    S = core.normalize(gens)
    assert core.contains(S, alpha0 * m)
    assert not core.contains(S, (alpha0 - 1) * m)
    assert reduce.conductor_window_ok(gens)
