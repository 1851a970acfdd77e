"""Weighted projective spaces P(N): generator degree and graded dimensions."""

from dataclasses import dataclass
from math import gcd, lcm

from .errors import DomainError
from .root_system import RootDatum


@dataclass(frozen=True)
class WpsWeights:
    """Grading weights (n_0, ..., n_k) of a weighted projective space."""

    weights: tuple

    def __post_init__(self):
        if not self.weights or any(n < 1 for n in self.weights):
            raise DomainError(f"weights must be positive integers, got {self.weights}")
        if gcd(*self.weights) != 1:
            raise DomainError(f"gcd of weights {self.weights} must be 1")

    def __str__(self):
        return "(" + ",".join(map(str, self.weights)) + ")"


def generator_degree(n: WpsWeights) -> int:
    """Degree s of the ample generator O(s) of Pic(P(N)): lcm of the weights."""
    return lcm(*n.weights)


def hilbert_dim(n: WpsWeights, degree: int) -> int:
    """Number of monomials of the given weighted degree (0 when none exist)."""
    if degree < 0:
        raise DomainError("degree must be >= 0")
    counts = [0] * (degree + 1)
    counts[0] = 1
    for w in n.weights:
        for b in range(w, degree + 1):
            counts[b] += counts[b - w]
    return counts[degree]


def hilbert_dim_bruteforce(n: WpsWeights, degree: int) -> int:
    """Direct enumeration oracle for hilbert_dim; exponential, small degrees only."""
    ws = n.weights

    def rec(i, remaining):
        if i == len(ws) - 1:
            return 1 if remaining % ws[i] == 0 else 0
        return sum(rec(i + 1, remaining - m * ws[i])
                   for m in range(remaining // ws[i] + 1))

    return rec(0, degree)


def wps_from_group(datum: RootDatum) -> WpsWeights:
    """Type (1, a_1^vee, ..., a_k^vee) of the genus-1 moduli space of G-bundles."""
    return WpsWeights((1,) + datum.comarks)
