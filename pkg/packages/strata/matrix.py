"""Unipotent upper-triangular integer matrices indexed by a stratification poset"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple

import numpy as np

from .arith import checked, checked_mul
from .errors import NotUnipotent, SpaceMismatch
from .poset import StratPoset, StratumId

logger = logging.getLogger(__name__)

Pair = Tuple[StratumId, StratumId]


@dataclass(frozen=True, eq=False)
class TriangularMatrix:
    """
    Matrix (a_{W,V}) over the strata of a poset with a_{V,V} = 1 and
    a_{W,V} = 0 unless W <= V. Only nonzero off-diagonal entries are stored.
    """
    poset: StratPoset
    off_diagonal: Dict[Pair, int]

    def entry(self, lower: StratumId, upper: StratumId) -> int:
        if lower == upper:
            self.poset.require(lower)
            return 1
        return self.off_diagonal.get((lower, upper), 0)

    def to_rows(self) -> List[List[int]]:
        """Dense rows in the canonical linear extension"""
        order = self.poset.strata
        return [[self.entry(w, v) for v in order] for w in order]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TriangularMatrix):
            return NotImplemented
        return self.poset == other.poset and self.off_diagonal == other.off_diagonal

    def __hash__(self) -> int:
        return hash((self.poset, tuple(sorted(self.off_diagonal.items()))))

    def __matmul__(self, other: "TriangularMatrix") -> "TriangularMatrix":
        return matmul(self, other)


def make_triangular(poset: StratPoset, entries: Mapping[Pair, int]) -> TriangularMatrix:
    """
    Validate and build a unipotent triangular matrix.

    Raises:
        NotUnipotent: a diagonal entry differs from 1 or an entry sits off the order
    """
    off_diagonal: Dict[Pair, int] = {}
    for (lower, upper), value in entries.items():
        poset.require(lower)
        poset.require(upper)
        value = checked(int(value))
        if lower == upper:
            if value != 1:
                raise NotUnipotent(f"Diagonal entry at {lower!r} is {value}, expected 1")
            continue
        if value == 0:
            continue
        if not poset.lt(lower, upper):
            raise NotUnipotent(
                f"Entry ({lower}, {upper}) = {value} but {lower!r} is not below {upper!r}"
            )
        off_diagonal[(lower, upper)] = value
    return TriangularMatrix(poset=poset, off_diagonal=off_diagonal)


def identity(poset: StratPoset) -> TriangularMatrix:
    return TriangularMatrix(poset=poset, off_diagonal={})


def transition_matrix(poset: StratPoset) -> TriangularMatrix:
    """Closed indicators in the open-indicator basis: a_{W,V} = 1 iff W <= V."""
    return TriangularMatrix(poset=poset, off_diagonal={pair: 1 for pair in poset.comparable_pairs()})


def invert_unipotent(matrix: TriangularMatrix) -> TriangularMatrix:
    """
    Invert a unipotent triangular matrix by the recursion over the order:
    a'_{V,V} = 1 and a'_{W,V} = -sum_{W <= S < V} a'_{W,S} a_{S,V}.

    Raises:
        OverflowError: an intermediate value leaves the checked integer range
    """
    poset = matrix.poset
    inverse: Dict[Pair, int] = {}
    for upper in poset.strata:
        lower_strata = poset.strictly_below(upper)
        for lower in lower_strata:
            total = 0
            for middle in lower_strata:
                if not poset.leq(lower, middle):
                    continue
                a_mid_up = matrix.off_diagonal.get((middle, upper), 0)
                if not a_mid_up:
                    continue
                inv_low_mid = 1 if middle == lower else inverse.get((lower, middle), 0)
                total = checked(total + checked_mul(inv_low_mid, a_mid_up))
            if total:
                inverse[(lower, upper)] = checked(-total)
    return TriangularMatrix(poset=poset, off_diagonal=inverse)


def matmul(left: TriangularMatrix, right: TriangularMatrix) -> TriangularMatrix:
    if left.poset != right.poset:
        raise SpaceMismatch("Cannot multiply matrices over different posets")
    poset = left.poset
    product: Dict[Pair, int] = {}
    for lower, upper in poset.comparable_pairs():
        total = 0
        for middle in poset.above[lower] & poset.below[upper]:
            total = checked(total + checked_mul(left.entry(lower, middle), right.entry(middle, upper)))
        if total:
            product[(lower, upper)] = total
    return TriangularMatrix(poset=poset, off_diagonal=product)


def is_identity(matrix: TriangularMatrix) -> bool:
    return not matrix.off_diagonal


def brute_force_inverse(matrix: TriangularMatrix) -> TriangularMatrix:
    """
    Independent oracle: Gauss-Jordan elimination over Fractions on the dense
    matrix, ignoring the triangular structure. The result must be integral.

    Raises:
        ArithmeticError: the elimination produced a non-integral entry
    """
    order = matrix.poset.strata
    n = len(order)
    augmented = np.array(
        [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix.to_rows())],
        dtype=object,
    )

    for i in range(n):
        for j in range(i, n):
            if augmented[j, i] != 0:
                if i != j:
                    augmented[[i, j]] = augmented[[j, i]]
                break
        else:
            raise ZeroDivisionError("matrix is singular")
        augmented[i, :] = augmented[i, :] / augmented[i, i]
        for j in range(n):
            if j != i and augmented[j, i] != 0:
                augmented[j, :] = augmented[j, :] - augmented[j, i] * augmented[i, :]

    entries: Dict[Pair, int] = {}
    for i, lower in enumerate(order):
        for j, upper in enumerate(order):
            value = augmented[i, n + j]
            if value.denominator != 1:
                raise ArithmeticError(f"Non-integral inverse entry {value} at ({lower}, {upper})")
            if i != j and value != 0:
                entries[(lower, upper)] = int(value)
    return make_triangular(matrix.poset, entries)
