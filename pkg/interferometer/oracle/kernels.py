"""Separable two-point kernels and fields on a three-axis grid.

A kernel is `identity * 1 + sum_k coeff_k * Fx_k (x) Fy_k (x) Fs_k`, one matrix per axis.
The diamond contraction integrates the adjacent arguments with the grid weights, so on
each axis it reduces to F1 @ diag(w) @ F2 and the term lists multiply pairwise.
Fields are sums of rank-1 tensor products of per-axis vectors.
"""

from dataclasses import dataclass, field
import math

import numpy as np

from interferometer.exceptions import InvalidGrid
from interferometer.oracle.grids import GridSet

# relative distance below which two factors are merged into one term
MERGE_RTOL = 1e-10


@dataclass(frozen=True)
class Term:
    coeff: complex
    factors: tuple[np.ndarray, ...] = field(repr=False)


def _merge_terms(terms: list[Term], rtol: float = MERGE_RTOL) -> list[Term]:
    """Sum the coefficients of terms whose factors agree on every axis"""
    terms = [term for term in terms if term.coeff != 0]
    if not terms:
        return []

    # terms built from the same arrays merge without a numerical comparison
    by_identity: dict[tuple[int, ...], Term] = {}
    for term in terms:
        key = tuple(id(factor) for factor in term.factors)
        if key in by_identity:
            kept = by_identity[key]
            by_identity[key] = Term(kept.coeff + term.coeff, kept.factors)
        else:
            by_identity[key] = term
    terms = list(by_identity.values())

    n_axes = len(terms[0].factors)
    stacks = [
        np.empty((len(terms),) + terms[0].factors[axis].shape, dtype=np.result_type(*(t.factors[axis] for t in terms)))
        for axis in range(n_axes)
    ]
    scales = np.empty((len(terms), n_axes))
    coeffs = np.zeros(len(terms), dtype=complex)
    kept_factors: list[tuple[np.ndarray, ...]] = []

    for term in terms:
        count = len(kept_factors)
        candidates = np.arange(count)
        norms = [np.linalg.norm(factor) for factor in term.factors]

        for axis, factor in enumerate(term.factors):
            if candidates.size == 0:
                break
            diff = np.linalg.norm((stacks[axis][candidates] - factor).reshape(candidates.size, -1), axis=1)
            candidates = candidates[diff <= rtol * np.maximum(scales[candidates, axis], norms[axis])]

        if candidates.size:
            coeffs[candidates[0]] += term.coeff
            continue

        for axis, factor in enumerate(term.factors):
            stacks[axis][count] = factor
        scales[count] = norms
        coeffs[count] = term.coeff
        kept_factors.append(term.factors)

    return [Term(complex(coeff), factors) for coeff, factors in zip(coeffs, kept_factors) if coeff != 0]


@dataclass(frozen=True)
class SeparableKernel:
    grids: GridSet
    terms: tuple[Term, ...] = ()
    identity: complex = 0j

    @classmethod
    def unit(cls, grids: GridSet, coeff: complex = 1.0) -> "SeparableKernel":
        return cls(grids=grids, identity=complex(coeff))

    @classmethod
    def zero(cls, grids: GridSet) -> "SeparableKernel":
        return cls(grids=grids)

    @property
    def rank(self) -> int:
        return len(self.terms)

    def _with(self, terms, identity: complex) -> "SeparableKernel":
        return SeparableKernel(grids=self.grids, terms=tuple(terms), identity=complex(identity))

    def scale(self, coeff: complex) -> "SeparableKernel":
        return self._with((Term(coeff * t.coeff, t.factors) for t in self.terms), coeff * self.identity)

    def __add__(self, other: "SeparableKernel") -> "SeparableKernel":
        self.grids.check_same(other.grids)
        return self._with(self.terms + other.terms, self.identity + other.identity)

    def __sub__(self, other: "SeparableKernel") -> "SeparableKernel":
        return self + other.scale(-1)

    def adjoint(self) -> "SeparableKernel":
        return self._with(
            (Term(t.coeff.conjugate(), tuple(f.conj().T for f in t.factors)) for t in self.terms),
            self.identity.conjugate(),
        )

    def transpose(self) -> "SeparableKernel":
        return self._with((Term(t.coeff, tuple(f.T for f in t.factors)) for t in self.terms), self.identity)

    def conj(self) -> "SeparableKernel":
        return self._with(
            (Term(t.coeff.conjugate(), tuple(f.conj() for f in t.factors)) for t in self.terms),
            self.identity.conjugate(),
        )

    def compress(self, rtol: float = MERGE_RTOL) -> "SeparableKernel":
        return self._with(_merge_terms(list(self.terms), rtol), self.identity)

    def _identity_factors(self) -> tuple[np.ndarray, ...]:
        return tuple(np.diag(1 / axis.weights) for axis in self.grids.axes)

    def _all_terms(self) -> list[Term]:
        terms = list(self.terms)
        if self.identity != 0:
            terms.append(Term(self.identity, self._identity_factors()))
        return terms

    def hs_norm(self) -> float:
        """Weighted Hilbert-Schmidt norm, the identity part materialized on the grid"""
        terms = self._all_terms()
        if not terms:
            return 0.0

        coeffs = np.array([t.coeff for t in terms])
        gram = np.outer(coeffs.conj(), coeffs)
        for axis_index, axis in enumerate(self.grids.axes):
            measure = np.sqrt(np.outer(axis.weights, axis.weights)).ravel()
            stacked = np.stack([t.factors[axis_index].ravel() * measure for t in terms])
            gram = gram * (stacked.conj() @ stacked.T)

        return math.sqrt(max(gram.sum().real, 0.0))

    def trace(self) -> complex:
        """Weighted trace; the identity contributes one per grid point"""
        total = self.identity * math.prod(self.grids.shape)
        for term in self.terms:
            value = term.coeff
            for factor, axis in zip(term.factors, self.grids.axes):
                value *= np.einsum("ii,i->", factor, axis.weights)
            total += value
        return complex(total)

    def to_dense(self, limit: int) -> np.ndarray:
        """Kernel values K[p, q] over the flattened (x, y, s) grid"""
        if self.grids.n_points > limit:
            raise InvalidGrid(f"dense form is limited to {limit} points per axis, got {self.grids.n_points}")

        size = math.prod(self.grids.shape)
        dense = np.zeros((size, size), dtype=complex)
        for term in self._all_terms():
            block = term.factors[0]
            for factor in term.factors[1:]:
                block = np.kron(block, factor)
            dense += term.coeff * block
        return dense

    def operator_matrix(self, limit: int) -> np.ndarray:
        """Dense matrix whose products reproduce the diamond contraction"""
        return self.to_dense(limit) * dense_weights(self.grids)[np.newaxis, :]


def dense_weights(grids: GridSet) -> np.ndarray:
    weights = grids.axes[0].weights
    for axis in grids.axes[1:]:
        weights = np.kron(weights, axis.weights)
    return weights


def diamond(first: SeparableKernel, second: SeparableKernel) -> SeparableKernel:
    first.grids.check_same(second.grids)
    weights = [axis.weights[:, np.newaxis] for axis in first.grids.axes]

    terms = [Term(first.identity * t.coeff, t.factors) for t in second.terms]
    terms += [Term(t.coeff * second.identity, t.factors) for t in first.terms]

    products: dict[tuple[int, int], np.ndarray] = {}
    for left in first.terms:
        for right in second.terms:
            factors = []
            for axis, (f1, f2) in enumerate(zip(left.factors, right.factors)):
                key = (id(f1), id(f2))
                if key not in products:
                    products[key] = f1 @ (weights[axis] * f2)
                factors.append(products[key])
            terms.append(Term(left.coeff * right.coeff, tuple(factors)))

    result = SeparableKernel(grids=first.grids, terms=tuple(terms), identity=first.identity * second.identity)
    return result.compress()


def chain(*kernels: SeparableKernel) -> SeparableKernel:
    result = kernels[0]
    for kernel in kernels[1:]:
        result = diamond(result, kernel)
    return result


@dataclass(frozen=True)
class FieldVector:
    grids: GridSet
    terms: tuple[Term, ...] = ()

    @classmethod
    def gaussian(cls, grids: GridSet, amplitude: complex = 1.0) -> "FieldVector":
        """Product of exp(-r x^2 / 4) envelopes, r being each axis's seed ratio"""
        factors = tuple(np.exp(-0.25 * axis.seed_ratio * axis.points**2) for axis in grids.axes)
        return cls(grids=grids, terms=(Term(complex(amplitude), factors),))

    def scale(self, coeff: complex) -> "FieldVector":
        return FieldVector(grids=self.grids, terms=tuple(Term(coeff * t.coeff, t.factors) for t in self.terms))

    def __add__(self, other: "FieldVector") -> "FieldVector":
        self.grids.check_same(other.grids)
        return FieldVector(grids=self.grids, terms=self.terms + other.terms)

    def conj(self) -> "FieldVector":
        return FieldVector(
            grids=self.grids,
            terms=tuple(Term(t.coeff.conjugate(), tuple(f.conj() for f in t.factors)) for t in self.terms),
        )

    def compress(self, rtol: float = MERGE_RTOL) -> "FieldVector":
        return FieldVector(grids=self.grids, terms=tuple(_merge_terms(list(self.terms), rtol)))

    def norm_sq(self) -> float:
        return inner(self, self).real

    def to_dense(self) -> np.ndarray:
        size = math.prod(self.grids.shape)
        dense = np.zeros(size, dtype=complex)
        for term in self.terms:
            block = term.factors[0]
            for factor in term.factors[1:]:
                block = np.kron(block, factor)
            dense += term.coeff * block
        return dense


def diamond_field(kernel: SeparableKernel, vector: FieldVector) -> FieldVector:
    kernel.grids.check_same(vector.grids)
    weights = [axis.weights for axis in kernel.grids.axes]

    terms = [Term(kernel.identity * t.coeff, t.factors) for t in vector.terms]
    for k_term in kernel.terms:
        for v_term in vector.terms:
            factors = tuple(f @ (w * v) for f, w, v in zip(k_term.factors, weights, v_term.factors))
            terms.append(Term(k_term.coeff * v_term.coeff, factors))

    return FieldVector(grids=kernel.grids, terms=tuple(terms)).compress()


def inner(first: FieldVector, second: FieldVector) -> complex:
    """Weighted inner product, conjugate-linear in the first argument"""
    first.grids.check_same(second.grids)
    if not first.terms or not second.terms:
        return 0j

    left = np.array([t.coeff for t in first.terms])
    right = np.array([t.coeff for t in second.terms])
    gram = np.outer(left.conj(), right)

    for axis_index, axis in enumerate(first.grids.axes):
        a = np.stack([t.factors[axis_index] for t in first.terms])
        b = np.stack([t.factors[axis_index] for t in second.terms])
        gram = gram * np.einsum("ip,p,jp->ij", a.conj(), axis.weights, b)

    return complex(gram.sum())
