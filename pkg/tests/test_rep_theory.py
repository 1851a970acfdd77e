import pytest

from modulipic.errors import DomainError, ResourceError, ShapeError
from modulipic.root_system import LieType, build
from modulipic.rep_theory import (
    WeightSystem,
    dynkin_index,
    freudenthal_weights,
    index_via_weights,
    omega_d,
    tensor_weight_system,
    theta_levels,
    weyl_dim,
)


@pytest.fixture(scope="module")
def a1():
    return build(LieType.parse("A1"))


def test_weyl_dim_trivial_and_sl2(a1):
    for tok in ("A3", "C2", "G2", "E6"):
        d = build(LieType.parse(tok))
        assert weyl_dim(d, (0,) * d.rank) == 1
    assert [weyl_dim(a1, (n,)) for n in range(6)] == [1, 2, 3, 4, 5, 6]


def test_weyl_dim_known_values():
    assert weyl_dim(build(LieType.parse("B3")), (1, 0, 0)) == 7
    assert weyl_dim(build(LieType.parse("G2")), (1, 0)) == 7
    assert weyl_dim(build(LieType.parse("E8")), (0, 0, 0, 0, 0, 0, 0, 1)) == 248


def test_weyl_dim_rejects_non_dominant(a1):
    with pytest.raises(DomainError):
        weyl_dim(a1, (-1,))


def test_dynkin_index_examples(a1):
    for k in range(1, 9):
        d = build(LieType.parse(f"A{k}"))
        assert dynkin_index(d, (1,) + (0,) * (k - 1)) == 1
    assert dynkin_index(build(LieType.parse("E8")), (0,) * 7 + (1,)) == 60
    assert dynkin_index(build(LieType.parse("F4")), (0, 0, 0, 1)) == 6
    assert dynkin_index(a1, (0,)) == 0


@pytest.mark.parametrize("tok", ["A1", "A2", "B3", "C2", "D4", "G2", "F4"])
def test_adjoint_index_is_2h(tok):
    datum = build(LieType.parse(tok))
    # adjoint highest weight = theta in weight coordinates
    from modulipic.root_system import root_to_weight_coords
    adj = tuple(int(x) for x in root_to_weight_coords(datum, datum.theta))
    assert dynkin_index(datum, adj) == 2 * datum.dual_coxeter


def test_freudenthal_sl2_adjoint(a1):
    ws = freudenthal_weights(a1, (2,))
    assert ws.entries == {(2,): 1, (0,): 1, (-2,): 1}


def test_freudenthal_sl3_adjoint():
    a2 = build(LieType.parse("A2"))
    ws = freudenthal_weights(a2, (1, 1))
    assert ws.entries[(0, 0)] == 2
    assert ws.total_multiplicity() == 8


def test_freudenthal_totals_match_weyl_dim():
    for tok, lam in [("G2", (1, 0)), ("G2", (0, 1)), ("B3", (0, 0, 1)),
                     ("C2", (1, 1)), ("F4", (1, 0, 0, 0))]:
        d = build(LieType.parse(tok))
        assert freudenthal_weights(d, lam).total_multiplicity() == weyl_dim(d, lam)


def test_freudenthal_orbit_symmetry():
    from modulipic.rep_theory import weyl_orbit
    d = build(LieType.parse("C2"))
    ws = freudenthal_weights(d, (1, 1))
    for mu, m in ws.entries.items():
        dom = _dominant_rep(d, mu)
        assert ws.entries[dom] == m


def _dominant_rep(datum, mu):
    cur = mu
    while any(c < 0 for c in cur):
        i = next(i for i, c in enumerate(cur) if c < 0)
        row = datum.cartan[i]
        cur = tuple(cur[j] - cur[i] * row[j] for j in range(datum.rank))
    return cur


def test_freudenthal_size_guard():
    e8 = build(LieType.parse("E8"))
    with pytest.raises(ResourceError):
        freudenthal_weights(e8, (1, 0, 0, 0, 0, 0, 0, 1))


def test_index_via_weights_examples(a1):
    assert index_via_weights(WeightSystem(1, {(1,): 1, (-1,): 1}), a1) == 1
    assert index_via_weights(freudenthal_weights(a1, (2,)), a1) == 4
    b3 = build(LieType.parse("B3"))
    assert index_via_weights(freudenthal_weights(b3, (0, 0, 1)), b3) == 2


def test_sl2_index_closed_form(a1):
    # index of the n-dim irrep of sl2 is n(n^2-1)/6
    for n in range(1, 12):
        ws = freudenthal_weights(a1, (n - 1,))
        assert index_via_weights(ws, a1) == n * (n * n - 1) // 6


def test_tensor_with_trivial_is_identity(a1):
    v = freudenthal_weights(a1, (3,))
    triv = WeightSystem(1, {(0,): 1})
    assert tensor_weight_system(v, triv) == v


def test_tensor_sl2_fund_squared(a1):
    v = freudenthal_weights(a1, (1,))
    t = tensor_weight_system(v, v)
    assert t.entries == {(2,): 1, (0,): 2, (-2,): 1}
    assert index_via_weights(t, a1) == 4


def test_tensor_rank_mismatch(a1):
    a2 = build(LieType.parse("A2"))
    with pytest.raises(ShapeError):
        tensor_weight_system(freudenthal_weights(a1, (1,)),
                             freudenthal_weights(a2, (1, 0)))


def test_theta_levels_consistent_with_weight_system():
    g2 = build(LieType.parse("G2"))
    lv = theta_levels(g2, (1, 0))
    assert len(lv) == 7
    assert sum(x * x for x in lv) // 2 == dynkin_index(g2, (1, 0))


def test_omega_d_examples():
    for tok, winners, mg in [("A4", [1, 4], 1), ("D4", [1, 3, 4], 2),
                             ("E7", [7], 12), ("B3", [1, 3], 2)]:
        w, m = omega_d(build(LieType.parse(tok)))
        assert (w, m) == (winners, mg), tok
