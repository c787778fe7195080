"""Integral lattices carried by a Gram matrix in a fixed basis."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, reduce
from math import gcd
from typing import Sequence

from . import exactalg


class DegenerateLatticeError(ValueError):
    pass


@dataclass(frozen=True)
class GramLattice:
    """A nondegenerate symmetric integral Gram matrix.

    The determinant is computed once at construction (it doubles as the
    nondegeneracy check) and cached as ``discriminant``.
    """

    gram: tuple[tuple[int, ...], ...]
    discriminant: int = field(init=False, compare=False, repr=False)

    def __init__(self, gram: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in gram)
        if not rows:
            raise ValueError("a lattice needs positive rank")
        if not exactalg.is_symmetric(rows):
            raise ValueError("Gram matrix must be symmetric")
        d = exactalg.det(rows)
        if d == 0:
            raise DegenerateLatticeError("Gram matrix is singular")
        object.__setattr__(self, "gram", rows)
        object.__setattr__(self, "discriminant", d)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def pair(self, x: Sequence[int], y: Sequence[int]) -> int:
        return sum(
            xi * sum(g * yj for g, yj in zip(row, y))
            for xi, row in zip(x, self.gram)
            if xi
        )

    def norm(self, x: Sequence[int]) -> int:
        return self.pair(x, x)

    @cached_property
    def content(self) -> int:
        return reduce(gcd, (abs(x) for row in self.gram for x in row), 0)

    @cached_property
    def inertia(self) -> tuple[int, int, int]:
        return exactalg.inertia(self.gram)

    def to_json(self) -> dict:
        return {"rank": self.rank, "gram": [list(row) for row in self.gram]}

    @classmethod
    def from_json(cls, data: dict) -> GramLattice:
        L = cls(data["gram"])
        if "rank" in data and int(data["rank"]) != L.rank:
            raise ValueError(f"rank field {data['rank']} does not match Gram size {L.rank}")
        return L


@dataclass(frozen=True)
class DiscGroup:
    """Discriminant group as invariant factors s_1 | s_2 | ... | s_r."""

    invariant_factors: tuple[int, ...]

    @property
    def order(self) -> int:
        out = 1
        for s in self.invariant_factors:
            out *= s
        return out

    @property
    def nontrivial_factors(self) -> tuple[int, ...]:
        return tuple(s for s in self.invariant_factors if s != 1)


def content(L: GramLattice) -> int:
    return L.content


def primitive_rescale(L: GramLattice) -> GramLattice:
    d = L.content
    if d == 1:
        return L
    return GramLattice([[x // d for x in row] for row in L.gram])


def discriminant(L: GramLattice) -> int:
    return L.discriminant


def disc_group(L: GramLattice) -> DiscGroup:
    return DiscGroup(tuple(exactalg.smith_normal_form(L.gram, det_value=L.discriminant)))


def is_even(L: GramLattice) -> bool:
    return all(L.gram[i][i] % 2 == 0 for i in range(L.rank))


def is_positive_definite(L: GramLattice) -> bool:
    return L.inertia == (L.rank, 0, 0)


def is_unimodular(L: GramLattice) -> bool:
    return abs(L.discriminant) == 1


def direct_sum(A: GramLattice, B: GramLattice) -> GramLattice:
    return GramLattice(exactalg.block_diagonal(A.gram, B.gram))


def tensor(A: GramLattice, B: GramLattice) -> GramLattice:
    return GramLattice(exactalg.kronecker(A.gram, B.gram))


def scaled(L: GramLattice, k: int) -> GramLattice:
    return GramLattice([[k * x for x in row] for row in L.gram])
