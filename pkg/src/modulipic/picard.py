"""Headline answer per (G, genus): Picard group generator, m_G, beta image,
genus-1 weighted projective model, local factoriality."""

from dataclasses import dataclass
from typing import Optional

from .errors import ConsistencyError, DomainError
from .root_system import LieType, RootDatum, build, m_G
from .rep_theory import dynkin_index, omega_d
from .wps import WpsWeights, wps_from_group


@dataclass(frozen=True)
class PicardReport:
    lie: LieType
    genus: int
    pic: str                       # always "free of rank 1"
    generator_weights: tuple       # 1-based fundamental-weight indices, sorted
    canonical_generator: int       # lexicographically first of the above
    m_G: int
    beta_image_exponent: int
    genus1_model: Optional[WpsWeights]
    locally_factorial: bool

    def to_dict(self):
        return {
            "type": str(self.lie),
            "genus": self.genus,
            "pic": self.pic,
            "generator_weights": list(self.generator_weights),
            "canonical_generator": self.canonical_generator,
            "m_G": self.m_G,
            "beta_image_exponent": self.beta_image_exponent,
            "genus1_model": list(self.genus1_model.weights) if self.genus1_model else None,
            "locally_factorial": self.locally_factorial,
        }


def report(lie: LieType, genus: int) -> PicardReport:
    """Assemble the Picard report for the moduli of semistable G-bundles."""
    if genus < 1:
        raise DomainError("genus must be >= 1 (genus 0 is unsupported)")
    datum = build(lie)
    winners, mg = omega_d(datum)
    factorial_flag = lie.series in ("A", "C")
    if factorial_flag != (mg == 1):
        raise ConsistencyError(f"{lie}: factoriality criterion disagrees with m_G = {mg}")
    return PicardReport(
        lie=lie,
        genus=genus,
        pic="free of rank 1",
        generator_weights=tuple(winners),
        canonical_generator=winners[0],
        m_G=mg,
        beta_image_exponent=mg,
        genus1_model=wps_from_group(datum) if genus == 1 else None,
        locally_factorial=factorial_flag,
    )


def theta_exponent(datum: RootDatum, highest_weight):
    """(m_V, m_V / m_G): the theta bundle of V as a power of the generator."""
    mv = dynkin_index(datum, highest_weight)
    mg = m_G(datum)
    if mv % mg != 0:
        raise ConsistencyError(f"{datum.lie}: index {mv} not divisible by m_G = {mg}")
    return mv, mv // mg
