"""Ground truth: the genuine twisted Hochschild chain complex, truncated by
multidegree.

Chain spaces in degree n are spanned by (n+1)-tuples of monomials; the
boundary multiplies adjacent tensor slots and wraps the last slot around
through the twist, sigma acting before the wrap-around product.  Every face
preserves the total multidegree, so restricting to one multidegree gives a
finite complex whose homology dimensions are exact, and they are compared
cell by cell against the combinatorial count coming from the reduced Koszul
complex.

Rank computations need decidable zero, so this module insists on numeric
mode; symbolic input is specialized at distinct primes, which is faithful to
the generic regime.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

from .exactlinalg import SparseExactMatrix
from .homology import predicted_dims
from .hyperplane import (AlgebraSpec, MultiIndex, NUMERIC, ScalingAutomorphism,
                         apply_sigma, degree, iter_multidegrees,
                         monomial_product, specialize_automorphism)

Tensor = tuple[MultiIndex, ...]
TensorChain = dict[Tensor, Fraction]

DEFAULT_CELL_CAP = 20000

NATURAL = "natural"
INVARIANT = "invariant"
QUOTIENT = "quotient"


class CellTooLarge(Exception):
    """A chain space exceeded the configured basis cap."""


def _compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    if parts == 1:
        return [(total,)]
    out = []
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            out.append((head,) + tail)
    return out


class HochschildComplex:
    """Twisted Hochschild chains of one numeric algebra and scaling twist."""

    def __init__(self, spec: AlgebraSpec, sigma: ScalingAutomorphism,
                 cap: int = DEFAULT_CELL_CAP):
        if spec.mode != NUMERIC:
            raise ValueError("the oracle needs numeric parameters; "
                             "specialize symbolic input at distinct primes first")
        if sigma.n != spec.n:
            raise ValueError("automorphism size disagrees with the algebra")
        self.spec = spec
        self.sigma = sigma
        self.cap = cap
        self._p = tuple(c.as_fraction() for c in sigma.p)
        self._basis_cache: dict[tuple[int, MultiIndex], list[Tensor]] = {}
        self._rank_cache: dict[tuple[int, MultiIndex], int] = {}

    # -- bases ----------------------------------------------------------------

    def basis_size(self, n: int, gamma: MultiIndex) -> int:
        size = 1
        for g in gamma:
            size *= comb(g + n, n)
        return size

    def basis(self, n: int, gamma: MultiIndex) -> list[Tensor]:
        """Basis tensors of degree n and multidegree gamma, lexicographic."""
        key = (n, gamma)
        cached = self._basis_cache.get(key)
        if cached is not None:
            return cached
        if self.basis_size(n, gamma) > self.cap:
            raise CellTooLarge(f"basis of C_{n}{gamma} exceeds cap {self.cap}")
        per_coordinate = [_compositions(g, n + 1) for g in gamma]
        tensors = []
        for combo in product(*per_coordinate):
            tensors.append(tuple(tuple(coord[slot] for coord in combo)
                                 for slot in range(n + 1)))
        tensors.sort()
        self._basis_cache[key] = tensors
        return tensors

    # -- the boundary -----------------------------------------------------------

    def boundary_faces(self, tensor: Tensor) -> list[tuple[Tensor, Fraction]]:
        """Faces of one basis tensor with their exact coefficients."""
        n = len(tensor) - 1
        if n < 1:
            return []
        spec = self.spec
        faces = []
        sign = 1
        for i in range(n):
            coeff, merged = monomial_product(spec, tensor[i], tensor[i + 1])
            faces.append((tensor[:i] + (merged,) + tensor[i + 2:],
                          sign * coeff.as_fraction()))
            sign = -sign
        twist = apply_sigma(self.sigma, tensor[n]).as_fraction()
        coeff, merged = monomial_product(spec, tensor[n], tensor[0])
        faces.append(((merged,) + tensor[1:n], sign * twist * coeff.as_fraction()))
        return faces

    def boundary(self, chain: TensorChain) -> TensorChain:
        out: TensorChain = {}
        for tensor, value in chain.items():
            if len(tensor) == 1:
                continue
            for face, coeff in self.boundary_faces(tensor):
                merged = out.get(face, Fraction(0)) + coeff * value
                if merged:
                    out[face] = merged
                else:
                    out.pop(face, None)
        return out

    def boundary_matrix(self, n: int, gamma: MultiIndex) -> SparseExactMatrix:
        """Matrix of the boundary from degree n to degree n-1 at one
        multidegree, in the lexicographic bases."""
        if n < 1:
            return SparseExactMatrix(0, len(self.basis(0, gamma)))
        rows = {t: r for r, t in enumerate(self.basis(n - 1, gamma))}
        cols = self.basis(n, gamma)
        entries: dict[tuple[int, int], Fraction] = {}
        for c, tensor in enumerate(cols):
            for face, coeff in self.boundary_faces(tensor):
                key = (rows[face], c)
                merged = entries.get(key, Fraction(0)) + coeff
                if merged:
                    entries[key] = merged
                else:
                    entries.pop(key, None)
        return SparseExactMatrix(len(rows), len(cols), entries)

    def _rank(self, n: int, gamma: MultiIndex) -> int:
        key = (n, gamma)
        if key not in self._rank_cache:
            self._rank_cache[key] = self.boundary_matrix(n, gamma).rank()
        return self._rank_cache[key]

    # -- eigenstructure -----------------------------------------------------------

    def eigenvalue(self, gamma: MultiIndex) -> Fraction:
        return apply_sigma(self.sigma, gamma).as_fraction()

    def tensor_eigenvalue(self, tensor: Tensor) -> Fraction:
        value = Fraction(1)
        for alpha in tensor:
            value *= apply_sigma(self.sigma, alpha).as_fraction()
        return value

    def eigen_decompose(self, chain: TensorChain) -> dict[Fraction, TensorChain]:
        """Split a chain by the scaling eigenvalue of its basis tensors."""
        parts: dict[Fraction, TensorChain] = {}
        for tensor, value in chain.items():
            if value:
                parts.setdefault(self.tensor_eigenvalue(tensor), {})[tensor] = value
        return parts

    # -- homology dimensions ----------------------------------------------------

    def natural_dims(self, gamma: MultiIndex, n_max: int) -> list[int]:
        """dim H_n for n = 0..n_max by rank-nullity at one multidegree."""
        dims = []
        for n in range(n_max + 1):
            size = len(self.basis(n, gamma))
            dims.append(size - self._rank(n, gamma) - self._rank(n + 1, gamma))
        return dims

    def invariant_and_quotient_dims(self, gamma: MultiIndex,
                                    n_max: int) -> tuple[list[int], list[int]]:
        """Dimensions of the invariant subcomplex and of the quotient by the
        image of (1 - sigma).

        A scaling twist acts on the whole multidegree component by one
        scalar: the invariant selection keeps everything or nothing, and
        (1 - sigma) is zero or invertible correspondingly, so both variants
        coincide with the natural dimensions or vanish outright.
        """
        if self.eigenvalue(gamma) == 1:
            dims = self.natural_dims(gamma, n_max)
            return list(dims), list(dims)
        zeros = [0] * (n_max + 1)
        return list(zeros), list(zeros)


# ---------------------------------------------------------------------------
# comparison against the reduced complex

@dataclass(frozen=True)
class ComparisonCell:
    gamma: MultiIndex
    n: int
    natural_oracle: int | None
    natural_predicted: int
    invariant_oracle: int | None
    quotient_oracle: int | None
    invariant_predicted: int
    skipped: bool

    @property
    def match(self) -> bool:
        if self.skipped:
            return True
        return (self.natural_oracle == self.natural_predicted
                and self.invariant_oracle == self.invariant_predicted
                and self.quotient_oracle == self.invariant_predicted)

    def to_dict(self) -> dict:
        return {"gamma": list(self.gamma), "n": self.n,
                "natural_oracle": self.natural_oracle,
                "natural_predicted": self.natural_predicted,
                "invariant_oracle": self.invariant_oracle,
                "quotient_oracle": self.quotient_oracle,
                "invariant_predicted": self.invariant_predicted,
                "match": self.match, "skipped": self.skipped}


@dataclass(frozen=True)
class ComparisonReport:
    cells: tuple[ComparisonCell, ...]
    bound: int
    n_max: int

    @property
    def agreement(self) -> bool:
        return all(cell.match for cell in self.cells)

    @property
    def skipped_cells(self) -> tuple[ComparisonCell, ...]:
        return tuple(cell for cell in self.cells if cell.skipped)

    def mismatches(self) -> tuple[ComparisonCell, ...]:
        return tuple(cell for cell in self.cells if not cell.match)

    def to_dict(self) -> dict:
        return {"agreement": self.agreement, "bound": self.bound,
                "n_max": self.n_max,
                "cells": [cell.to_dict() for cell in self.cells]}


def compare_with_koszul(spec: AlgebraSpec, sigma: ScalingAutomorphism,
                        n_max: int, bound: int,
                        cap: int = DEFAULT_CELL_CAP) -> ComparisonReport:
    """Cell-by-cell comparison of oracle homology dimensions with the counts
    predicted by the reduced complex, over all multidegrees up to the bound.

    Symbolic input is specialized at distinct primes first.  Cells whose
    chain spaces exceed the cap are reported as skipped, never guessed.
    """
    if spec.mode != NUMERIC:
        assignment = AlgebraSpec.with_distinct_primes(spec.n).assignment
        sigma = specialize_automorphism(sigma, assignment)
        spec = AlgebraSpec.numeric(spec.n, assignment)
    complex_ = HochschildComplex(spec, sigma, cap)
    cells = []
    for gamma in iter_multidegrees(spec.n, bound):
        feasible_n = -1
        for n in range(n_max + 1):
            if all(complex_.basis_size(k, gamma) <= cap for k in range(n + 2)):
                feasible_n = n
            else:
                break
        natural = complex_.natural_dims(gamma, feasible_n) if feasible_n >= 0 else []
        invariant, quotient = (complex_.invariant_and_quotient_dims(gamma, feasible_n)
                               if feasible_n >= 0 else ([], []))
        for n in range(n_max + 1):
            predicted_nat, predicted_inv = predicted_dims(spec, sigma, gamma, n)
            if n <= feasible_n:
                cells.append(ComparisonCell(gamma, n, natural[n], predicted_nat,
                                            invariant[n], quotient[n],
                                            predicted_inv, skipped=False))
            else:
                cells.append(ComparisonCell(gamma, n, None, predicted_nat,
                                            None, None, predicted_inv,
                                            skipped=True))
    return ComparisonReport(tuple(cells), bound, n_max)
