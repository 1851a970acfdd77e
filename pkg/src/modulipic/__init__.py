"""Computational Lie theory for Picard groups of moduli of G-bundles.

Exposes root-system construction, Dynkin indices, Verlinde dimensions,
weighted projective genus-1 models, and the assembled Picard report.
"""

__version__ = "0.1.0"

from .root_system import LieType, RootDatum, build, pairing, index_P_over_Qlg, m_G
from .rep_theory import (
    WeightSystem,
    weyl_dim,
    dynkin_index,
    freudenthal_weights,
    index_via_weights,
    tensor_weight_system,
    omega_d,
)
from .verlinde import (
    VerlindeQuery,
    VerlindeResult,
    enumerate_P_ell,
    count_P_ell,
    t_ell,
    verlinde_dim,
    kac_peterson_S,
    weyl_group,
)
from .wps import WpsWeights, generator_degree, hilbert_dim, wps_from_group
from .picard import PicardReport, report, theta_exponent

__all__ = [
    "LieType", "RootDatum", "build", "pairing", "index_P_over_Qlg", "m_G",
    "WeightSystem", "weyl_dim", "dynkin_index", "freudenthal_weights",
    "index_via_weights", "tensor_weight_system", "omega_d",
    "VerlindeQuery", "VerlindeResult", "enumerate_P_ell", "count_P_ell",
    "t_ell", "verlinde_dim", "kac_peterson_S", "weyl_group",
    "WpsWeights", "generator_degree", "hilbert_dim", "wps_from_group",
    "PicardReport", "report", "theta_exponent",
]
