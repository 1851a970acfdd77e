import mpmath
import pytest

from modulipic.errors import DomainError, ResourceError
from modulipic.root_system import LieType, build
from modulipic.verlinde import (
    VerlindeQuery,
    count_P_ell,
    enumerate_P_ell,
    kac_peterson_S,
    t_ell,
    verlinde_dim,
    weyl_group,
)


def test_enumerate_examples():
    a1 = build(LieType.parse("A1"))
    assert enumerate_P_ell(a1, 3) == [(0,), (1,), (2,), (3,)]
    e8 = build(LieType.parse("E8"))
    assert enumerate_P_ell(e8, 1) == [(0,) * 8]
    a2 = build(LieType.parse("A2"))
    assert len(enumerate_P_ell(a2, 2)) == 6


def test_enumerate_lexicographic_and_level_bound():
    g2 = build(LieType.parse("G2"))
    ws = enumerate_P_ell(g2, 4)
    assert ws == sorted(ws)
    from modulipic.root_system import level
    assert all(level(g2, mu) <= 4 for mu in ws)


@pytest.mark.parametrize("tok", ["A1", "A3", "B3", "C2", "D4", "G2", "F4", "E6"])
def test_count_matches_enumeration_and_monotone(tok):
    datum = build(LieType.parse(tok))
    prev = None
    for ell in range(7):
        n = count_P_ell(datum, ell)
        assert n == len(enumerate_P_ell(datum, ell))
        if prev is not None:
            assert n >= prev
        prev = n
    assert count_P_ell(datum, 0) == 1


def test_t_ell_examples():
    assert t_ell(build(LieType.parse("A1")), 1) == 6
    assert t_ell(build(LieType.parse("E8")), 0) == 30 ** 8
    assert t_ell(build(LieType.parse("A2")), 1) == 48


def test_genus1_is_count():
    for tok in ("A2", "G2", "C3"):
        lie = LieType.parse(tok)
        datum = build(lie)
        for ell in range(5):
            res = verlinde_dim(VerlindeQuery(lie, 1, ell))
            assert res.rounded == count_P_ell(datum, ell)
            assert res.abs_gap == 0.0


def test_su2_known_values():
    lie = LieType.parse("A1")
    assert verlinde_dim(VerlindeQuery(lie, 2, 1)).rounded == 4
    assert verlinde_dim(VerlindeQuery(lie, 2, 2)).rounded == 10
    assert verlinde_dim(VerlindeQuery(lie, 3, 1)).rounded == 8


def test_level1_is_2_to_g_for_su2():
    lie = LieType.parse("A1")
    for g in range(1, 6):
        assert verlinde_dim(VerlindeQuery(lie, g, 1)).rounded == 2 ** g


def test_e8_level1_is_1():
    lie = LieType.parse("E8")
    for g in range(2, 6):
        res = verlinde_dim(VerlindeQuery(lie, g, 1))
        assert res.rounded == 1
        assert res.abs_gap < 1e-9


def test_level0_certifies_to_1():
    for tok in ("A1", "A2", "G2", "B3"):
        res = verlinde_dim(VerlindeQuery(LieType.parse(tok), 2, 0))
        assert res.rounded == 1


def test_genus0_rejected():
    with pytest.raises(DomainError):
        VerlindeQuery(LieType.parse("A1"), 0, 2)


def test_determinism_bit_identical():
    q = VerlindeQuery(LieType.parse("G2"), 3, 3)
    r1 = verlinde_dim(q)
    r2 = verlinde_dim(q)
    assert mpmath.mpf(r1.value) == mpmath.mpf(r2.value)
    assert r1.precision_bits == r2.precision_bits


def test_weyl_group_orders():
    assert len(weyl_group(build(LieType.parse("A1")))) == 2
    assert len(weyl_group(build(LieType.parse("G2")))) == 12
    assert len(weyl_group(build(LieType.parse("B3")))) == 48


def test_weyl_group_guard():
    with pytest.raises(ResourceError):
        weyl_group(build(LieType.parse("E8")))


def test_weyl_group_signs_balanced():
    signs = [s for _, s in weyl_group(build(LieType.parse("C2")))]
    assert signs.count(1) == signs.count(-1) == 4


def test_s_matrix_a1_level1():
    with mpmath.workprec(256):
        S = kac_peterson_S(build(LieType.parse("A1")), 1)
        target = 1 / mpmath.sqrt(2)
        for row in S:
            for x in row:
                assert abs(abs(x) - target) < mpmath.mpf("1e-60")


def test_s_matrix_a1_level2_S00():
    with mpmath.workprec(256):
        S = kac_peterson_S(build(LieType.parse("A1")), 2)
        assert abs(S[0][0] - mpmath.mpf(1) / 2) < mpmath.mpf("1e-60")


def test_s_matrix_symmetric_unitary_a2():
    with mpmath.workprec(256):
        for ell in (1, 2, 3):
            S = kac_peterson_S(build(LieType.parse("A2")), ell)
            n = len(S)
            for i in range(n):
                for j in range(n):
                    assert abs(S[i][j] - S[j][i]) < mpmath.mpf("1e-20")
                    dot = sum(S[i][m] * mpmath.conj(S[j][m]) for m in range(n))
                    assert abs(dot - (1 if i == j else 0)) < mpmath.mpf("1e-20")
