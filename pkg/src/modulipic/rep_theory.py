"""Weyl dimensions, Dynkin indices, and the Freudenthal multiplicity oracle.

The closed-form Dynkin index dim V * <lambda, lambda + 2 rho> / dim g is the
production path; index_via_weights over a Freudenthal weight system is the
independent oracle used to guard the form normalization.
"""

from fractions import Fraction
from functools import lru_cache
from math import lcm

from .errors import ConsistencyError, DomainError, ResourceError, ShapeError
from .root_system import (
    RootDatum,
    is_dominant,
    level,
    root_weight_pairing,
    weight_gram,
    weight_to_root_coords,
)
from .linalg import bilinear

FREUDENTHAL_DIM_GUARD = 10 ** 5


class WeightSystem:
    """Multiset of weights (fundamental-weight coordinates) with multiplicities."""

    def __init__(self, rank, entries):
        self.rank = rank
        self.entries = dict(entries)

    def total_multiplicity(self):
        return sum(self.entries.values())

    def __eq__(self, other):
        return isinstance(other, WeightSystem) and self.rank == other.rank and self.entries == other.entries

    def __repr__(self):
        return f"WeightSystem(rank={self.rank}, {len(self.entries)} weights, dim={self.total_multiplicity()})"


def _require_dominant(weight):
    if not is_dominant(weight):
        raise DomainError(f"weight {weight} is not dominant")


def weyl_dim(datum: RootDatum, highest_weight) -> int:
    """Dimension of the irreducible with the given dominant highest weight."""
    _require_dominant(highest_weight)
    k = datum.rank
    d = [datum.form[j][j] / 2 for j in range(k)]
    dim = Fraction(1)
    for alpha in datum.positive_roots:
        num = sum(d[j] * alpha[j] * (highest_weight[j] + 1) for j in range(k))
        den = sum(d[j] * alpha[j] for j in range(k))
        dim *= num / den
    if dim.denominator != 1 or dim < 1:
        raise ConsistencyError(f"Weyl dimension came out non-integral: {dim}")
    return int(dim)


def dynkin_index(datum: RootDatum, highest_weight) -> int:
    """Closed-form Dynkin index: dim V * <lambda, lambda + 2 rho> / dim g."""
    _require_dominant(highest_weight)
    g = weight_gram(datum)
    lam = tuple(highest_weight)
    shifted = tuple(n + 2 for n in lam)
    casimir = bilinear(lam, g, shifted)
    m = weyl_dim(datum, lam) * casimir / datum.dim_adjoint
    if m.denominator != 1 or m < 0:
        raise ConsistencyError(f"Dynkin index non-integral for {lam}: {m} (form normalization bug?)")
    return int(m)


def _simple_reflection(datum, weight, i):
    row = datum.cartan[i]
    return tuple(weight[j] - weight[i] * row[j] for j in range(datum.rank))


def weyl_orbit(datum: RootDatum, dominant_weight):
    """Full Weyl orbit of a dominant weight."""
    seen = {tuple(dominant_weight)}
    stack = [tuple(dominant_weight)]
    while stack:
        w = stack.pop()
        for i in range(datum.rank):
            if w[i] > 0:
                r = _simple_reflection(datum, w, i)
                if r not in seen:
                    seen.add(r)
                    stack.append(r)
    return seen


def _weight_support(datum, highest_weight):
    """All weights of V(highest_weight), generated by root strings downward."""
    seen = {tuple(highest_weight)}
    stack = [tuple(highest_weight)]
    while stack:
        mu = stack.pop()
        for i in range(datum.rank):
            if mu[i] > 0:
                row = datum.cartan[i]
                cur = mu
                for _ in range(mu[i]):
                    cur = tuple(cur[j] - row[j] for j in range(datum.rank))
                    if cur not in seen:
                        seen.add(cur)
                        stack.append(cur)
    return seen


def freudenthal_weights(datum: RootDatum, highest_weight) -> WeightSystem:
    """Weight multiplicities of V(highest_weight) by the Freudenthal recursion.

    Guarded: refuses when weyl_dim exceeds FREUDENTHAL_DIM_GUARD rather than
    grinding through an oversized weight system.
    """
    _require_dominant(highest_weight)
    dim = weyl_dim(datum, highest_weight)
    if dim > FREUDENTHAL_DIM_GUARD:
        raise ResourceError(f"dim V = {dim} exceeds the Freudenthal guard {FREUDENTHAL_DIM_GUARD}")

    k = datum.rank
    lam = tuple(highest_weight)
    g = weight_gram(datum)
    d = [datum.form[j][j] / 2 for j in range(k)]
    support = _weight_support(datum, lam)
    roots_w = []   # positive roots in weight coordinates, with <alpha,alpha>
    for alpha in datum.positive_roots:
        aw = tuple(sum(alpha[i] * datum.cartan[i][j] for i in range(k)) for j in range(k))
        norm = bilinear(alpha, datum.form, alpha)
        roots_w.append((alpha, aw, norm))

    def gap_height(mu):
        x = weight_to_root_coords(datum, tuple(a - b for a, b in zip(lam, mu)))
        h = sum(x)
        if any(c.denominator != 1 for c in x) or h.denominator != 1:
            raise ConsistencyError("weight not below highest weight in the root lattice")
        return int(h)

    dominant = sorted((mu for mu in support if is_dominant(mu)), key=gap_height)
    lam_norm = bilinear(tuple(n + 1 for n in lam), g, tuple(n + 1 for n in lam))

    mult = {lam: 1}
    for nu in weyl_orbit(datum, lam):
        mult[nu] = 1
    for mu in dominant[1:]:
        acc = Fraction(0)
        for alpha, aw, norm in roots_w:
            t = 1
            while True:
                shifted = tuple(m + t * a for m, a in zip(mu, aw))
                m_sh = mult.get(shifted)
                if m_sh is None:
                    break
                # <mu + t*alpha, alpha>
                acc += m_sh * (sum(d[j] * alpha[j] * mu[j] for j in range(k)) + t * norm)
                t += 1
        denom = lam_norm - bilinear(tuple(n + 1 for n in mu), g, tuple(n + 1 for n in mu))
        val = 2 * acc / denom
        if val.denominator != 1 or val < 1:
            raise ConsistencyError(f"Freudenthal multiplicity of {mu} non-integral: {val}")
        m_mu = int(val)
        for nu in weyl_orbit(datum, mu):
            mult[nu] = m_mu

    ws = WeightSystem(k, mult)
    if ws.total_multiplicity() != dim:
        raise ConsistencyError(
            f"Freudenthal total {ws.total_multiplicity()} != Weyl dimension {dim} for {lam}")
    return ws


def index_via_weights(ws: WeightSystem, datum: RootDatum) -> int:
    """Dynkin index from a weight system: (1/2) * sum mult(mu) * <mu, theta>^2."""
    if ws.rank != datum.rank:
        raise ShapeError(f"weight system rank {ws.rank} != datum rank {datum.rank}")
    acc = Fraction(0)
    for mu, m in ws.entries.items():
        acc += m * Fraction(level(datum, mu)) ** 2
    acc /= 2
    if acc.denominator != 1:
        raise ConsistencyError(f"weight-system index non-integral: {acc}")
    return int(acc)


def tensor_weight_system(v: WeightSystem, w: WeightSystem) -> WeightSystem:
    """Weight system of the tensor product: multiset convolution of weights."""
    if v.rank != w.rank:
        raise ShapeError(f"rank mismatch: {v.rank} vs {w.rank}")
    out = {}
    for mu, a in v.entries.items():
        for nu, b in w.entries.items():
            s = tuple(x + y for x, y in zip(mu, nu))
            out[s] = out.get(s, 0) + a * b
    return WeightSystem(v.rank, out)


def theta_levels(datum: RootDatum, highest_weight):
    """Multiset of <mu, theta> over the weights of V(highest_weight), as a list.

    Equivalent data to the weight system for index purposes, but cheap to
    convolve in bulk (the pairing with theta is additive under tensor).
    """
    ws = freudenthal_weights(datum, highest_weight)
    out = []
    for mu, m in ws.entries.items():
        out.extend([level(datum, mu)] * m)
    out.sort()
    return out


@lru_cache(maxsize=None)
def fundamental_indices(datum: RootDatum):
    """Dynkin indices of all fundamental representations, in Bourbaki order."""
    k = datum.rank
    return tuple(dynkin_index(datum, tuple(int(i == j) for j in range(k))) for i in range(k))


def omega_d(datum: RootDatum):
    """All 1-based indices d with m_{V(omega_d)} dividing every m_{V(omega_i)},
    together with m_G = lcm(1, comarks); asserts the two agree."""
    ms = fundamental_indices(datum)
    winners = [i + 1 for i, m in enumerate(ms) if all(other % m == 0 for other in ms)]
    mg = lcm(1, *datum.comarks)
    common = {ms[i - 1] for i in winners}
    if len(common) != 1 or common.pop() != mg:
        raise ConsistencyError(
            f"{datum.lie}: lcm of comarks {mg} != minimal fundamental index {sorted(common)}")
    return winners, mg
