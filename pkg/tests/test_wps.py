import random
from math import comb

import pytest

from modulipic.errors import DomainError
from modulipic.root_system import LieType, build, m_G
from modulipic.verlinde import count_P_ell, enumerate_P_ell
from modulipic.wps import (
    WpsWeights,
    generator_degree,
    hilbert_dim,
    hilbert_dim_bruteforce,
    wps_from_group,
)


def test_gcd_validation():
    with pytest.raises(DomainError):
        WpsWeights((2, 4, 6))
    with pytest.raises(DomainError):
        WpsWeights((0, 1))


def test_generator_degree_examples():
    assert generator_degree(WpsWeights((1, 1, 1, 1))) == 1
    assert generator_degree(WpsWeights((1, 2, 3, 2, 1))) == 6
    assert generator_degree(WpsWeights((1, 2, 3, 4, 6, 5, 4, 3, 2))) == 60


def test_hilbert_examples():
    assert hilbert_dim(WpsWeights((1, 1)), 3) == 4
    assert hilbert_dim(WpsWeights((1, 1, 2)), 2) == 4
    for k in range(1, 5):
        for d in range(8):
            assert hilbert_dim(WpsWeights((1,) * (k + 1)), d) == comb(d + k, k)


def test_hilbert_unrepresentable_degree_is_zero():
    assert hilbert_dim(WpsWeights((1, 5)), 0) == 1
    assert hilbert_dim(WpsWeights((2, 3)), 1) == 0


def test_dp_vs_bruteforce_random():
    rng = random.Random(20240817)
    done = 0
    while done < 50:
        k = rng.randint(1, 4)
        ws = tuple(rng.randint(1, 6) for _ in range(k + 1))
        try:
            n = WpsWeights(ws)
        except DomainError:
            continue
        d = rng.randint(0, 30)
        assert hilbert_dim(n, d) == hilbert_dim_bruteforce(n, d), (ws, d)
        done += 1


def test_wps_from_group_examples():
    assert wps_from_group(build(LieType.parse("A4"))).weights == (1, 1, 1, 1, 1)
    assert wps_from_group(build(LieType.parse("E7"))).weights == (1, 2, 2, 3, 4, 3, 2, 1)
    assert wps_from_group(build(LieType.parse("G2"))).weights == (1, 1, 2)


@pytest.mark.parametrize("tok", ["A1", "A3", "B3", "C2", "D4", "G2", "F4", "E6", "E7", "E8"])
def test_slack_variable_count_identity(tok):
    datum = build(LieType.parse(tok))
    model = wps_from_group(datum)
    for ell in range(21):
        assert hilbert_dim(model, ell) == count_P_ell(datum, ell)
    # spot-check against actual enumeration at small level
    for ell in range(4):
        assert hilbert_dim(model, ell) == len(enumerate_P_ell(datum, ell))


@pytest.mark.parametrize("tok", ["A2", "B4", "C3", "D5", "G2", "F4", "E6", "E7", "E8"])
def test_generator_degree_equals_mG(tok):
    datum = build(LieType.parse(tok))
    assert generator_degree(wps_from_group(datum)) == m_G(datum)
