"""Regeneration of the summary tables from first principles.

Rows are the concrete instantiations A1-A8, B3-B8, C2-C8, D4-D8, E6-E8,
F4, G2, always in this order, so output is byte-stable across runs.
"""

from .root_system import LieType, build, m_G
from .rep_theory import omega_d
from .wps import wps_from_group

CONCRETE_TYPES = (
    [f"A{k}" for k in range(1, 9)]
    + [f"B{k}" for k in range(3, 9)]
    + [f"C{k}" for k in range(2, 9)]
    + [f"D{k}" for k in range(4, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)


def prop23_rows():
    """(type, omega_d indices, m_G) for every concrete type."""
    rows = []
    for tok in CONCRETE_TYPES:
        datum = build(LieType.parse(tok))
        winners, mg = omega_d(datum)
        rows.append({"type": tok, "omega_d": winners, "m": mg})
    return rows


def wps_rows():
    """(type, weighted projective type of the genus-1 moduli space)."""
    return [{"type": tok, "weights": list(wps_from_group(build(LieType.parse(tok))).weights)}
            for tok in CONCRETE_TYPES]


def comark_rows():
    return [{"type": tok, "comarks": list(build(LieType.parse(tok)).comarks)}
            for tok in CONCRETE_TYPES]
