import pytest

from modulipic.errors import DomainError
from modulipic.root_system import LieType, build, root_to_weight_coords
from modulipic.picard import report, theta_exponent
from modulipic.wps import generator_degree

ALL_TYPES = ([f"A{k}" for k in range(1, 9)] + [f"B{k}" for k in range(3, 9)]
             + [f"C{k}" for k in range(2, 9)] + [f"D{k}" for k in range(4, 9)]
             + ["E6", "E7", "E8", "F4", "G2"])


def test_report_examples():
    r = report(LieType.parse("E8"), 3)
    assert r.m_G == 60 and r.generator_weights == (8,) and not r.locally_factorial
    r = report(LieType.parse("C5"), 2)
    assert r.m_G == 1 and r.generator_weights == (1,) and r.locally_factorial
    r = report(LieType.parse("D4"), 1)
    assert r.generator_weights == (1, 3, 4)
    assert r.genus1_model.weights == (1, 1, 2, 1, 1)


def test_genus1_model_presence():
    assert report(LieType.parse("G2"), 1).genus1_model is not None
    assert report(LieType.parse("G2"), 2).genus1_model is None


def test_genus0_rejected():
    with pytest.raises(DomainError):
        report(LieType.parse("A1"), 0)


@pytest.mark.parametrize("tok", ALL_TYPES)
def test_invariants(tok):
    lie = LieType.parse(tok)
    r = report(lie, 1)
    assert r.pic == "free of rank 1"
    assert r.locally_factorial == (lie.series in ("A", "C")) == (r.m_G == 1)
    assert r.beta_image_exponent == r.m_G
    assert generator_degree(r.genus1_model) == r.m_G
    assert r.canonical_generator == min(r.generator_weights)
    assert r == report(lie, 1)


@pytest.mark.parametrize("tok", ALL_TYPES)
def test_theta_exponent_fundamentals_divisible(tok):
    datum = build(LieType.parse(tok))
    for i in range(datum.rank):
        omega = tuple(int(j == i) for j in range(datum.rank))
        mv, power = theta_exponent(datum, omega)
        assert power >= 1 and mv == power * report(datum.lie, 1).m_G


def test_theta_exponent_examples():
    a1 = build(LieType.parse("A1"))
    assert theta_exponent(a1, (1,)) == (1, 1)
    e8 = build(LieType.parse("E8"))
    assert theta_exponent(e8, (0,) * 7 + (1,)) == (60, 1)
    for tok in ("A2", "G2", "F4"):
        datum = build(LieType.parse(tok))
        adj = tuple(int(x) for x in root_to_weight_coords(datum, datum.theta))
        mv, power = theta_exponent(datum, adj)
        assert mv == 2 * datum.dual_coxeter
        assert power == mv // report(datum.lie, 1).m_G
