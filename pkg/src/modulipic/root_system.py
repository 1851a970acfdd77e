"""Root-system data for the simple types A-G in Bourbaki numbering.

All arithmetic is exact (ints and Fractions).  The invariant form is
normalized so that the highest root theta satisfies <theta, theta> = 2;
with that normalization the comarks are a_i^vee = a_i * <alpha_i, alpha_i>/2
and are always positive integers.

Weight vectors are plain integer tuples in the fundamental-weight basis;
roots are integer tuples in the simple-root basis.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .errors import ConsistencyError, InvalidTypeError, ShapeError
from .linalg import bilinear, mat_inv, mat_vec, smith_diagonal, transpose

_MIN_RANK = {"A": 1, "B": 3, "C": 2, "D": 4, "E": 6, "F": 4, "G": 2}
_MAX_RANK = {"A": None, "B": None, "C": None, "D": None, "E": 8, "F": 4, "G": 2}

# |Delta+| for the exceptional types (classical series have closed forms)
_NUM_POS_ROOTS_EXC = {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}


@dataclass(frozen=True)
class LieType:
    """A simple type: series letter plus rank, e.g. LieType('E', 8)."""

    series: str
    rank: int

    def __post_init__(self):
        if self.series not in _MIN_RANK:
            raise InvalidTypeError(f"unknown series {self.series!r}; expected one of A-G")
        lo, hi = _MIN_RANK[self.series], _MAX_RANK[self.series]
        if self.series == "B" and self.rank == 2:
            raise InvalidTypeError("B2 is not admitted (it is an alias of C2); use C2")
        if self.rank < lo or (hi is not None and self.rank > hi):
            rng = f"rank >= {lo}" if hi is None else f"rank in [{lo}, {hi}]"
            raise InvalidTypeError(f"{self.series}{self.rank} is not admissible: series {self.series} requires {rng}")

    def __str__(self):
        return f"{self.series}{self.rank}"

    @staticmethod
    def parse(token: str) -> "LieType":
        token = token.strip()
        if len(token) < 2 or not token[0].isalpha() or not token[1:].isdigit():
            raise InvalidTypeError(f"cannot parse type token {token!r}; expected e.g. 'A3', 'E8', 'G2'")
        return LieType(token[0].upper(), int(token[1:]))


@dataclass(frozen=True)
class RootDatum:
    """Immutable bundle of all root-system data derived from a LieType."""

    lie: LieType
    cartan: tuple            # k x k integer Cartan matrix, A_ij = <alpha_i, alpha_j^vee>
    positive_roots: tuple    # integer vectors in the simple-root basis, by height
    form: tuple              # Gram matrix <alpha_i, alpha_j>, Fractions, <theta,theta>=2
    theta: tuple             # marks a_i: highest root in the simple-root basis
    comarks: tuple           # a_i^vee
    rho: tuple               # all-ones weight vector
    dual_coxeter: int
    index_P_over_Qlg: int

    @property
    def rank(self):
        return self.lie.rank

    @property
    def num_positive_roots(self):
        return len(self.positive_roots)

    @property
    def dim_adjoint(self):
        return self.rank + 2 * self.num_positive_roots


def cartan_matrix(lie: LieType) -> tuple:
    k = lie.rank
    a = [[2 if i == j else 0 for j in range(k)] for i in range(k)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    s = lie.series
    if s in ("A", "B", "C"):
        for i in range(k - 1):
            link(i, i + 1)
        if s == "B" and k >= 2:
            a[k - 2][k - 1] = -2   # alpha_k is short
        if s == "C" and k >= 2:
            a[k - 1][k - 2] = -2   # alpha_k is long
    elif s == "D":
        for i in range(k - 2):
            link(i, i + 1)
        link(k - 3, k - 1)
    elif s == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: k - 1]
        for u, v in zip(chain, chain[1:]):
            link(u, v)
        link(1, 3)
    elif s == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif s == "G":
        link(0, 1, -1, -3)
    return tuple(tuple(row) for row in a)


def _positive_root_closure(cartan):
    """All positive roots by closure of root strings starting from the simple roots."""
    k = len(cartan)
    roots = {tuple(int(i == j) for j in range(k)) for i in range(k)}
    changed = True
    while changed:
        changed = False
        for beta in sorted(roots):
            for i in range(k):
                pair = sum(beta[j] * cartan[j][i] for j in range(k))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pair >= 1:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        changed = True
    return sorted(roots, key=lambda r: (sum(r), r))


def _symmetrizer(cartan):
    """d_i with <alpha_i, alpha_j> = A_ij * d_j symmetric; d_1 = 1 before scaling."""
    k = len(cartan)
    d = [None] * k
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(k):
            if cartan[i][j] != 0 and i != j and d[j] is None:
                d[j] = d[i] * Fraction(cartan[j][i], cartan[i][j])
                stack.append(j)
    if any(x is None for x in d):
        raise ConsistencyError("Dynkin diagram is disconnected")
    return d


@lru_cache(maxsize=None)
def build(lie: LieType) -> RootDatum:
    """Construct the full RootDatum for an admissible simple type."""
    k = lie.rank
    cartan = cartan_matrix(lie)
    pos = _positive_root_closure(cartan)

    s = lie.series
    expected = {"A": k * (k + 1) // 2, "B": k * k, "C": k * k, "D": k * (k - 1)}.get(s)
    if expected is None:
        expected = _NUM_POS_ROOTS_EXC[(s, k)]
    if len(pos) != expected:
        raise ConsistencyError(f"{lie}: found {len(pos)} positive roots, expected {expected}")

    heights = [sum(r) for r in pos]
    if heights.count(max(heights)) != 1:
        raise ConsistencyError(f"{lie}: highest root is not unique")
    theta = pos[-1]

    d = _symmetrizer(cartan)
    theta_sq = sum(theta[i] * theta[j] * cartan[i][j] * d[j] for i in range(k) for j in range(k))
    scale = Fraction(2) / theta_sq
    d = [x * scale for x in d]
    form = tuple(tuple(cartan[i][j] * d[j] for j in range(k)) for i in range(k))

    comarks = []
    for i in range(k):
        c = theta[i] * d[i]
        if c.denominator != 1 or c <= 0:
            raise ConsistencyError(f"{lie}: comark a_{i + 1}^vee = {c} is not a positive integer")
        comarks.append(int(c))
    comarks = tuple(comarks)

    h = 1 + sum(comarks)
    rho_theta = sum(comarks)   # <rho, theta> = sum_i a_i^vee since rho = (1,...,1)
    if h != rho_theta + 1:
        raise ConsistencyError(f"{lie}: dual Coxeter identity failed")

    # [P : Q_lg] via Smith normal form of the long roots in weight coordinates
    long_norm = max(bilinear(r, form, r) for r in pos)
    if long_norm != 2:
        raise ConsistencyError(f"{lie}: long-root norm is {long_norm}, expected 2")
    at = transpose(cartan)
    long_rows = [mat_vec(at, r) for r in pos if bilinear(r, form, r) == 2]
    diag = smith_diagonal(long_rows)
    if len(diag) != k or 0 in diag:
        raise ConsistencyError(f"{lie}: long roots do not span the weight space")
    index = 1
    for e in diag:
        index *= e

    return RootDatum(
        lie=lie,
        cartan=cartan,
        positive_roots=tuple(pos),
        form=form,
        theta=theta,
        comarks=comarks,
        rho=(1,) * k,
        dual_coxeter=h,
        index_P_over_Qlg=index,
    )


@lru_cache(maxsize=None)
def _inv_cartan_T(datum: RootDatum):
    return mat_inv(transpose(datum.cartan))


@lru_cache(maxsize=None)
def weight_gram(datum: RootDatum):
    """Gram matrix of the form in the fundamental-weight basis (Fractions)."""
    binv = _inv_cartan_T(datum)
    k = datum.rank
    # lambda(weight coords n) has root coords x = (A^T)^{-1} n
    g = [[None] * k for _ in range(k)]
    cols = [mat_vec(binv, tuple(int(m == j) for m in range(k))) for j in range(k)]
    for i in range(k):
        for j in range(k):
            g[i][j] = bilinear(cols[i], datum.form, cols[j])
    return tuple(tuple(row) for row in g)


def weight_to_root_coords(datum: RootDatum, weight):
    """Fraction coordinates of a weight vector in the simple-root basis."""
    return mat_vec(_inv_cartan_T(datum), weight)


def root_to_weight_coords(datum: RootDatum, root):
    """Integer weight-basis coordinates of a vector given in the root basis."""
    return mat_vec(transpose(datum.cartan), root)


def pairing(datum: RootDatum, x, y, basis_x="weight", basis_y="weight"):
    """Normalized invariant form of two vectors, each in either basis.

    basis 'weight' means fundamental-weight coordinates, 'root' means
    simple-root coordinates.  Exact rational result.
    """
    if len(x) != datum.rank or len(y) != datum.rank:
        raise ShapeError(f"expected length-{datum.rank} vectors")
    xr = x if basis_x == "root" else weight_to_root_coords(datum, x)
    yr = y if basis_y == "root" else weight_to_root_coords(datum, y)
    return bilinear(xr, datum.form, yr)


def root_weight_pairing(datum: RootDatum, weight, root):
    """<weight, root> computed directly: sum_j d_j * root_j * weight_j."""
    d = [datum.form[j][j] / 2 for j in range(datum.rank)]
    return sum(d[j] * root[j] * weight[j] for j in range(datum.rank))


def level(datum: RootDatum, weight):
    """<weight, theta> = sum_i n_i a_i^vee; integer for integral weights."""
    return sum(n * c for n, c in zip(weight, datum.comarks))


def is_dominant(weight):
    return all(n >= 0 for n in weight)


def index_P_over_Qlg(datum: RootDatum) -> int:
    """Order of the quotient of the weight lattice by the long-root lattice."""
    return datum.index_P_over_Qlg


def m_G(datum: RootDatum) -> int:
    """lcm of the comarks (with 1): the generator exponent of Im(beta)."""
    return lcm(1, *datum.comarks)
