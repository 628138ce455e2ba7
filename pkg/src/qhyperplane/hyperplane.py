"""The quantum hyperplane: monomial calculus and scaling automorphisms.

The algebra has N generators x_1, ..., x_N subject to x_i x_j = q_ij x_j x_i
for i < j, with q_ii = 1 and q_ji = q_ij^{-1}.  Monomials are written in the
normal form x_1^{a_1} ... x_N^{a_N}, so a monomial is just a multi-index
(a tuple of nonnegative ints) together with a QCoefficient.

A scaling automorphism acts diagonally on the generators, sigma(x_i) = p_i x_i
with p_i nonzero; the canonical one is p_i = prod_j q_ji, which is exactly the
choice that makes the top twisted homology class survive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Mapping, Sequence

from .qscalar import NumericAssignment, QCoefficient

MultiIndex = tuple[int, ...]

SYMBOLIC = "symbolic"
NUMERIC = "numeric"


# ---------------------------------------------------------------------------
# multi-index helpers

def degree(alpha: MultiIndex) -> int:
    return sum(alpha)


def unit(n: int, i: int) -> MultiIndex:
    """The multi-index with a single 1 in (1-based) position i."""
    if not 1 <= i <= n:
        raise IndexError(f"generator index {i} out of range 1..{n}")
    return tuple(1 if k == i - 1 else 0 for k in range(n))


def add_index(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    return tuple(x + y for x, y in zip(a, b))


def sub_index(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    out = tuple(x - y for x, y in zip(a, b))
    if any(x < 0 for x in out):
        raise ValueError(f"{a} - {b} leaves the nonnegative orthant")
    return out


def dominates(a: MultiIndex, b: MultiIndex) -> bool:
    return all(x >= y for x, y in zip(a, b))


def support(alpha: MultiIndex) -> tuple[int, ...]:
    return tuple(i + 1 for i, v in enumerate(alpha) if v > 0)


def iter_multidegrees(n: int, max_total: int) -> Iterator[MultiIndex]:
    """All multi-indices with total degree <= max_total, by (total, lex)."""
    def fixed_total(total: int, length: int):
        if length == 1:
            yield (total,)
            return
        for head in range(total + 1):
            for tail in fixed_total(total - head, length - 1):
                yield (head,) + tail

    for total in range(max_total + 1):
        yield from sorted(fixed_total(total, n))


def iter_exterior(n: int, weight: int | None = None) -> Iterator[MultiIndex]:
    """All 0/1 multi-indices, optionally of fixed weight, in lex order."""
    weights = range(n + 1) if weight is None else (weight,)
    for w in weights:
        if w < 0 or w > n:
            continue
        for chosen in combinations(range(n), w):
            yield tuple(1 if k in chosen else 0 for k in range(n))


# ---------------------------------------------------------------------------
# the algebra

@dataclass(frozen=True)
class AlgebraSpec:
    """The quantum symmetric algebra on n generators.

    mode is "symbolic" (the q_ij are independent symbols, the generic regime)
    or "numeric" (every q_ij carries an exact nonzero rational value).
    """

    n: int
    mode: str
    assignment: NumericAssignment | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one generator")
        if self.mode not in (SYMBOLIC, NUMERIC):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == NUMERIC:
            if self.assignment is None or not self.assignment.covers(self.n):
                raise ValueError("numeric mode needs a value for every pair q_ij")
        elif self.assignment is not None:
            raise ValueError("symbolic mode takes no numeric assignment")

    @classmethod
    def symbolic(cls, n: int) -> "AlgebraSpec":
        return cls(n, SYMBOLIC)

    @classmethod
    def numeric(cls, n: int, values: Mapping[tuple[int, int], Fraction] | NumericAssignment) -> "AlgebraSpec":
        if not isinstance(values, NumericAssignment):
            values = NumericAssignment(values)
        return cls(n, NUMERIC, values)

    @classmethod
    def with_distinct_primes(cls, n: int) -> "AlgebraSpec":
        return cls(n, NUMERIC, NumericAssignment.distinct_primes(n))

    @classmethod
    def one_parameter(cls, n: int, q) -> "AlgebraSpec":
        """The one-parameter hyperplane x_i x_j = q x_j x_i for i > j.

        In the stored convention this means q_ij = 1/q for every i < j.
        """
        q = Fraction(q)
        if q == 0:
            raise ValueError("q must be nonzero")
        if n == 1:
            return cls(n, NUMERIC, NumericAssignment({}))
        return cls(n, NUMERIC, NumericAssignment.uniform(n, 1 / q))

    def pairs(self) -> Iterator[tuple[int, int]]:
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                yield (i, j)

    def q_power(self, i: int, j: int, e: int = 1) -> QCoefficient:
        """q_ij^e as a coefficient, honouring the mode."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"generator pair ({i},{j}) out of range")
        if i == j or e == 0:
            return QCoefficient.one()
        if self.mode == SYMBOLIC:
            return QCoefficient.q_power(i, j, e)
        return QCoefficient.rational(self.assignment.value(i, j) ** e)

    def uniform_value(self) -> Fraction | None:
        """The common value of all q_ij if there is one (numeric mode)."""
        if self.mode != NUMERIC:
            return None
        values = {self.assignment.value(i, j) for (i, j) in self.pairs()}
        if len(values) == 1:
            return values.pop()
        if not values:          # N = 1 has no pairs
            return Fraction(1)
        return None

    def specialized_at_primes(self) -> "AlgebraSpec":
        """Numeric counterpart with distinct primes (identity on numeric specs)."""
        if self.mode == NUMERIC:
            return self
        return AlgebraSpec.with_distinct_primes(self.n)


# ---------------------------------------------------------------------------
# normal ordering

def commutation_factor(spec: AlgebraSpec, gamma: MultiIndex, i: int) -> QCoefficient:
    """The unique c with x^gamma x_i = c * x_i x^gamma.

    Moving x_i leftwards through the normal-ordered word, each letter x_k
    with k > i contributes q_ik^{-1} and each with k < i contributes q_ki,
    so c = prod_k q_ki^{gamma(k)}.
    """
    if not 1 <= i <= spec.n:
        raise IndexError(f"generator index {i} out of range 1..{spec.n}")
    c = QCoefficient.one()
    for k, g in enumerate(gamma, start=1):
        if g == 0 or k == i:
            continue
        if k < i:
            c = c * spec.q_power(k, i, g)
        else:
            c = c * spec.q_power(i, k, -g)
    return c


def normal_order(spec: AlgebraSpec, word: Sequence[int]) -> tuple[QCoefficient, MultiIndex]:
    """Normal form of a product of generators given by index.

    Letters are appended one at a time; appending x_i behind a prefix of
    multidegree gamma costs prod_{k>i} q_ik^{-gamma(k)}.
    """
    counts = [0] * spec.n
    coeff = QCoefficient.one()
    for i in word:
        if not 1 <= i <= spec.n:
            raise IndexError(f"generator index {i} out of range 1..{spec.n}")
        for k in range(i + 1, spec.n + 1):
            if counts[k - 1]:
                coeff = coeff * spec.q_power(i, k, -counts[k - 1])
        counts[i - 1] += 1
    return coeff, tuple(counts)


def monomial_product(spec: AlgebraSpec, a: MultiIndex, b: MultiIndex) -> tuple[QCoefficient, MultiIndex]:
    """x^a * x^b = c * x^{a+b}; c collects one q_jk^{-1} per inversion."""
    coeff = QCoefficient.one()
    for j in range(1, spec.n + 1):
        if b[j - 1] == 0:
            continue
        for k in range(j + 1, spec.n + 1):
            if a[k - 1]:
                coeff = coeff * spec.q_power(j, k, -a[k - 1] * b[j - 1])
    return coeff, add_index(a, b)


# ---------------------------------------------------------------------------
# scaling automorphisms

@dataclass(frozen=True)
class ScalingAutomorphism:
    """sigma(x_i) = p_i x_i with every p_i nonzero."""

    p: tuple[QCoefficient, ...]

    def __post_init__(self):
        if any(c.is_zero() for c in self.p):
            raise ValueError("scaling coefficients must be nonzero")

    @classmethod
    def identity(cls, n: int) -> "ScalingAutomorphism":
        return cls(tuple(QCoefficient.one() for _ in range(n)))

    @classmethod
    def from_rationals(cls, values: Sequence) -> "ScalingAutomorphism":
        return cls(tuple(QCoefficient.rational(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.p)

    def is_identity(self) -> bool:
        return all(c.is_one() for c in self.p)


def apply_sigma(sigma: ScalingAutomorphism, alpha: MultiIndex) -> QCoefficient:
    """Eigenvalue of x^alpha under sigma: prod_i p_i^{alpha(i)}."""
    out = QCoefficient.one()
    for c, a in zip(sigma.p, alpha):
        if a:
            out = out * c ** a
    return out


def canonical_automorphism(spec: AlgebraSpec) -> ScalingAutomorphism:
    """p_i = prod_j q_ji, the choice with a surviving top homology class."""
    ps = []
    for i in range(1, spec.n + 1):
        c = QCoefficient.one()
        for j in range(1, spec.n + 1):
            if j < i:
                c = c * spec.q_power(j, i, 1)
            elif j > i:
                c = c * spec.q_power(i, j, -1)
        ps.append(c)
    return ScalingAutomorphism(tuple(ps))


def automorphism_for_top_class(spec: AlgebraSpec, alpha: MultiIndex) -> ScalingAutomorphism:
    """The scaling automorphism making x^alpha (x) x_1^...^x_N a top class.

    p_i = prod_j q_ji^{alpha(j)+1}; alpha = 0 recovers the canonical one.
    """
    if len(alpha) != spec.n:
        raise ValueError("alpha must have one entry per generator")
    ps = []
    for i in range(1, spec.n + 1):
        c = QCoefficient.one()
        for j in range(1, spec.n + 1):
            e = alpha[j - 1] + 1
            if j < i:
                c = c * spec.q_power(j, i, e)
            elif j > i:
                c = c * spec.q_power(i, j, -e)
        ps.append(c)
    return ScalingAutomorphism(tuple(ps))


def specialize_automorphism(sigma: ScalingAutomorphism,
                            assignment: NumericAssignment) -> ScalingAutomorphism:
    return ScalingAutomorphism(tuple(
        QCoefficient.rational(c.specialize(assignment)) for c in sigma.p))


def sigma_commutes_at(spec: AlgebraSpec, sigma: ScalingAutomorphism,
                      gamma: MultiIndex, i: int) -> bool:
    """Does x^gamma x_i = sigma(x_i) x^gamma hold?"""
    return commutation_factor(spec, gamma, i) == sigma.p[i - 1]


def is_admissible(spec: AlgebraSpec, sigma: ScalingAutomorphism, gamma: MultiIndex) -> bool:
    """Membership in the set of multidegrees whose classes survive.

    gamma qualifies when every generator in its support sigma-commutes with
    x^gamma; these are exactly the multidegrees carrying homology.
    """
    return all(sigma_commutes_at(spec, sigma, gamma, i) for i in support(gamma))


# ---------------------------------------------------------------------------
# genericity

@dataclass(frozen=True)
class GenericityReport:
    generic: bool
    witness: MultiIndex | None
    bound: int
    structural: bool

    def to_dict(self) -> dict:
        return {"generic": self.generic,
                "witness": list(self.witness) if self.witness is not None else None,
                "bound": self.bound,
                "structural": self.structural}


def is_generic(spec: AlgebraSpec, bound: int) -> GenericityReport:
    """Bounded search for a genericity violation.

    A witness is a multidegree, supported on at least two generators, whose
    monomial commutes with every generator in its support (multiples of a
    single generator always commute with themselves and are not violations).
    Symbolic mode is generic structurally: a nontrivial monomial relation
    among independent symbols is impossible.
    """
    if bound < 2:
        raise ValueError("bound must be at least 2")
    if spec.mode == SYMBOLIC:
        return GenericityReport(True, None, bound, structural=True)
    identity = ScalingAutomorphism.identity(spec.n)
    for gamma in iter_multidegrees(spec.n, bound):
        if len(support(gamma)) < 2:
            continue
        if is_admissible(spec, identity, gamma):
            return GenericityReport(False, gamma, bound, structural=False)
    return GenericityReport(True, None, bound, structural=False)
