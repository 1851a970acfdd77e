"""Acceptance battery: every check re-derives its expected values from an
independent route (hand-frozen table, brute-force oracle, or closed form).

Each check raises AssertionError on failure and returns a short summary
string on success.  The CLI selftest command and tests/test_acceptance.py
both run this registry.
"""

from fractions import Fraction

import mpmath
import numpy as np

from .root_system import LieType, build, m_G
from .rep_theory import (
    dynkin_index,
    freudenthal_weights,
    fundamental_indices,
    index_via_weights,
    omega_d,
    theta_levels,
    weyl_dim,
)
from .verlinde import (
    VerlindeQuery,
    count_P_ell,
    enumerate_P_ell,
    kac_peterson_S,
    t_ell,
    verlinde_dim,
)
from .wps import WpsWeights, generator_degree, hilbert_dim, wps_from_group
from .picard import report

RANK_LE_6 = ([f"A{k}" for k in range(1, 7)] + [f"B{k}" for k in range(3, 7)]
             + [f"C{k}" for k in range(2, 7)] + [f"D{k}" for k in range(4, 7)] + ["E6"])

ALL_CONCRETE = ([f"A{k}" for k in range(1, 9)] + [f"B{k}" for k in range(3, 9)]
                + [f"C{k}" for k in range(2, 9)] + [f"D{k}" for k in range(4, 9)]
                + ["E6", "E7", "E8", "F4", "G2"])

RANK_LE_4 = ["A1", "A2", "A3", "A4", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2"]


def _expected_prop23(tok):
    """Frozen expectations: the published omega_d/m table row for each type."""
    s, k = tok[0], int(tok[1:])
    if s == "A":
        return sorted({1, k}), 1
    if s == "C":
        return [1], 1
    if s == "B":
        return ([1, 3], 2) if k == 3 else ([1], 2)
    if s == "D":
        return ([1, 3, 4], 2) if k == 4 else ([1], 2)
    return {"E6": ([1, 6], 6), "E7": ([7], 12), "E8": ([8], 60),
            "F4": ([4], 6), "G2": ([1], 2)}[tok]


def _expected_wps(tok):
    """Frozen expectations: the published weighted-projective type row."""
    s, k = tok[0], int(tok[1:])
    if s in ("A", "C"):
        return (1,) * (k + 1)
    if s == "B":
        return (1, 1) + (2,) * (k - 2) + (1,)
    if s == "D":
        return (1, 1) + (2,) * (k - 3) + (1, 1)
    return {"G2": (1, 1, 2), "F4": (1, 2, 3, 2, 1), "E6": (1, 1, 2, 2, 3, 2, 1),
            "E7": (1, 2, 2, 3, 4, 3, 2, 1), "E8": (1, 2, 3, 4, 6, 5, 4, 3, 2)}[tok]


def check_01_prop23_table():
    n = 0
    for tok in ALL_CONCRETE:
        winners, mg = omega_d(build(LieType.parse(tok)))
        exp_w, exp_m = _expected_prop23(tok)
        assert winners == list(exp_w), f"{tok}: omega_d {winners} != {exp_w}"
        assert mg == exp_m, f"{tok}: m_G {mg} != {exp_m}"
        n += 1
    return f"omega_d and m_G regenerated for {n} types"


def check_02_wps_table():
    for tok in ALL_CONCRETE:
        got = wps_from_group(build(LieType.parse(tok))).weights
        assert got == _expected_wps(tok), f"{tok}: wps {got} != {_expected_wps(tok)}"
    return f"weighted projective types regenerated for {len(ALL_CONCRETE)} types"


def check_03_mG_is_lcm_of_comarks():
    for tok in ALL_CONCRETE:
        datum = build(LieType.parse(tok))
        _, mg = omega_d(datum)
        assert mg == m_G(datum), f"{tok}: m_G mismatch"
        assert mg == generator_degree(wps_from_group(datum)), f"{tok}: lcm mismatch"
    return f"lcm(1, comarks) == m_G for {len(ALL_CONCRETE)} types"


def check_04_genus1_counts():
    n = 0
    for tok in RANK_LE_6 + ["F4", "G2"]:
        lie = LieType.parse(tok)
        datum = build(lie)
        for ell in range(7):
            got = verlinde_dim(VerlindeQuery(lie, 1, ell)).rounded
            assert got == len(enumerate_P_ell(datum, ell)), f"{tok} ell={ell}"
            n += 1
    return f"F_1(ell) == |P_ell| for {n} (type, level) pairs"


def check_05_prop19_count():
    n = 0
    for tok in RANK_LE_6 + ["F4", "G2", "E7", "E8"]:
        datum = build(LieType.parse(tok))
        model = wps_from_group(datum)
        mg = m_G(datum)
        for p in range(1, 6):
            assert hilbert_dim(model, p * mg) == count_P_ell(datum, p * mg), f"{tok} p={p}"
            n += 1
    return f"hilbert_dim((1,comarks), p*m_G) == |P_(p*m_G)| for {n} cases"


def check_06_su2_closed_form():
    lie = LieType.parse("A1")
    pinned = {(2, 1): 4, (2, 2): 10, (3, 1): 8}
    n = 0
    with mpmath.workprec(192):
        for g in (2, 3, 4):
            for ell in range(1, 7):
                oracle = mpmath.mpf(2 * (ell + 2)) ** (g - 1) * mpmath.fsum(
                    (2 * mpmath.sinpi(mpmath.mpf(j + 1) / (ell + 2))) ** (2 - 2 * g)
                    for j in range(ell + 1))
                res = verlinde_dim(VerlindeQuery(lie, g, ell))
                assert res.abs_gap < 1e-6, f"g={g} ell={ell}: gap {res.abs_gap}"
                assert res.rounded == int(mpmath.nint(oracle)), f"g={g} ell={ell}"
                if (g, ell) in pinned:
                    assert res.rounded == pinned[(g, ell)], f"g={g} ell={ell}"
                n += 1
    return f"SU(2) closed form matched for {n} (genus, level) pairs"


def check_07_integrality_higher_genus():
    n = 0
    for tok in ("A2", "C2", "G2"):
        lie = LieType.parse(tok)
        for g in (2, 3):
            for ell in range(1, 5):
                res = verlinde_dim(VerlindeQuery(lie, g, ell))
                assert res.abs_gap < 1e-6 and res.rounded >= 1, f"{tok} g={g} ell={ell}"
                n += 1
    return f"certified integer Verlinde numbers in {n} higher-genus cases"


def check_08_s_matrix_oracle():
    from .root_system import root_weight_pairing
    checked = 0
    with mpmath.workprec(256):
        for tok in ("A1", "A2"):
            lie = LieType.parse(tok)
            datum = build(lie)
            for ell in range(4):
                S = kac_peterson_S(datum, ell, precision_bits=256)
                n = len(S)
                res = max(abs(sum(S[i][m] * mpmath.conj(S[j][m]) for m in range(n))
                              - (1 if i == j else 0))
                          for i in range(n) for j in range(n))
                assert res < mpmath.mpf("1e-20"), f"{tok} ell={ell}: unitarity {res}"
                t = t_ell(datum, ell)
                for m, mu in enumerate(enumerate_P_ell(datum, ell)):
                    prod = mpmath.mpf(1)
                    for alpha in datum.positive_roots:
                        r = root_weight_pairing(datum, tuple(x + 1 for x in mu), alpha) \
                            / (ell + datum.dual_coxeter)
                        prod *= (2 * mpmath.sinpi(mpmath.mpf(r.numerator) / r.denominator)) ** 2
                    assert abs(S[0][m] ** 2 * t - prod) < mpmath.mpf("1e-20"), \
                        f"{tok} ell={ell} mu={mu}: sine product tie"
                for g in (2, 3):
                    via_S = sum(S[0][m] ** (2 - 2 * g) for m in range(n))
                    direct = verlinde_dim(VerlindeQuery(lie, g, ell)).rounded
                    assert abs(via_S - direct) < 1e-6, f"{tok} ell={ell} g={g}"
                checked += 1
    return f"S-matrix unitary + tied to the sine formula in {checked} (type, level) cases"


def check_09_dynkin_index_oracle():
    n = 0
    for tok in RANK_LE_4:
        datum = build(LieType.parse(tok))
        for i in range(datum.rank):
            omega = tuple(int(j == i) for j in range(datum.rank))
            closed = dynkin_index(datum, omega)
            oracle = index_via_weights(freudenthal_weights(datum, omega), datum)
            assert closed == oracle, f"{tok} omega_{i + 1}: {closed} != {oracle}"
            n += 1
    return f"closed-form == Freudenthal index for {n} fundamental weights"


def _irreps_up_to_dim(datum, maxdim):
    out = []
    coords = [0] * datum.rank

    def rec(i):
        if i == datum.rank:
            return
        while True:
            if weyl_dim(datum, tuple(coords)) > maxdim:
                coords[i] = 0
                return
            if i == datum.rank - 1:
                out.append(tuple(coords))
            else:
                rec(i + 1)
            coords[i] += 1

    if datum.rank == 1:
        n = 0
        while weyl_dim(datum, (n,)) <= maxdim:
            out.append((n,))
            n += 1
    else:
        rec(0)
    return out


def check_10_tensor_identity():
    pairs = 0
    for tok in ("A1", "A2", "C2", "G2"):
        datum = build(LieType.parse(tok))
        irreps = _irreps_up_to_dim(datum, 200)
        levels = {lam: np.array(theta_levels(datum, lam), dtype=np.int64) for lam in irreps}
        dims = {lam: len(levels[lam]) for lam in irreps}
        idx = {lam: dynkin_index(datum, lam) for lam in irreps}
        for a, lam in enumerate(irreps):
            for mu in irreps[a:]:
                # index of the tensor from the convolved theta-levels
                sums = np.add.outer(levels[lam], levels[mu])
                twice = int(np.sum(sums.astype(np.int64) ** 2))
                assert twice % 2 == 0
                lhs = twice // 2
                rhs = idx[lam] * dims[mu] + idx[mu] * dims[lam]
                assert lhs == rhs, f"{tok} {lam} x {mu}: {lhs} != {rhs}"
                pairs += 1
    return f"m(V x W) == m_V dim W + m_W dim V on {pairs} irrep pairs"


def check_11_divisibility():
    n = 0
    for tok in ALL_CONCRETE:
        datum = build(LieType.parse(tok))
        mg = m_G(datum)
        for m in fundamental_indices(datum):
            assert m % mg == 0, f"{tok}: m_G = {mg} does not divide {m}"
            n += 1
    return f"m_G divides every fundamental index ({n} checks)"


def check_12_local_factoriality():
    for tok in ALL_CONCRETE:
        lie = LieType.parse(tok)
        rep = report(lie, 2)
        assert rep.locally_factorial == (lie.series in ("A", "C")), tok
        assert rep.locally_factorial == (rep.m_G == 1), tok
    return f"locally factorial iff series A or C ({len(ALL_CONCRETE)} types)"


# (name, function, included in quick level)
CHECKS = [
    ("prop23-table", check_01_prop23_table, True),
    ("wps-table", check_02_wps_table, True),
    ("mG-lcm-identity", check_03_mG_is_lcm_of_comarks, True),
    ("genus1-counts", check_04_genus1_counts, True),
    ("prop19-count", check_05_prop19_count, True),
    ("su2-closed-form", check_06_su2_closed_form, True),
    ("higher-genus-integrality", check_07_integrality_higher_genus, False),
    ("s-matrix-oracle", check_08_s_matrix_oracle, False),
    ("dynkin-index-oracle", check_09_dynkin_index_oracle, False),
    ("tensor-identity", check_10_tensor_identity, False),
    ("divisibility", check_11_divisibility, True),
    ("local-factoriality", check_12_local_factoriality, True),
]


def run(level="full", report_fn=print):
    """Run the battery; returns the number of failures."""
    failures = 0
    for name, fn, quick in CHECKS:
        if level == "quick" and not quick:
            continue
        try:
            summary = fn()
            report_fn(f"PASS {name}: {summary}")
        except AssertionError as exc:
            failures += 1
            report_fn(f"FAIL {name}: {exc}")
    return failures
