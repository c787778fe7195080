"""Short vectors, Witt's root-lattice test, and ADE identification."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import exactalg
from .lattice import GramLattice, is_positive_definite, primitive_rescale

DEFAULT_MAX_NODES = 5_000_000


class NotPositiveDefiniteError(ValueError):
    pass


class EnumerationBudgetExceeded(RuntimeError):
    pass


class InconsistentRootSystem(RuntimeError):
    """Root count, rank and discriminant do not fit any catalog type."""


@dataclass(frozen=True)
class ShortVectorSet:
    bound: int
    vectors: tuple[tuple[int, ...], ...]
    norms: tuple[int, ...]
    nodes: int = 0

    def with_norm(self, s: int) -> list[tuple[int, ...]]:
        return [v for v, q in zip(self.vectors, self.norms) if q == s]

    def count(self, s: int) -> int:
        """Full count of vectors of norm s (both signs)."""
        return 2 * sum(1 for q in self.norms if q == s)


def _sign_canonical(v: Sequence[int]) -> tuple[int, ...]:
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def enumerate_short(
    L: GramLattice, bound: int = 2, max_nodes: int = DEFAULT_MAX_NODES
) -> ShortVectorSet:
    """All +-classes of nonzero x with b(x, x) <= bound (Fincke-Pohst).

    Uses the exact rational LDL^T factorization
    b(x, x) = sum_i D_i (x_i + sum_{j>i} L_ji x_j)^2 and walks coordinates
    from last to first. Interval endpoints come from a float square root
    widened by one and are then filtered exactly, so no vector is lost to
    rounding. Raises EnumerationBudgetExceeded after ``max_nodes`` tree nodes.
    """
    if not is_positive_definite(L):
        raise NotPositiveDefiniteError("enumeration needs a positive-definite form")
    n = L.rank
    Lf, D = exactalg.ldl(L.gram)
    # mu[i][j] = L[j][i] for j > i: coefficient of x_j in the i-th square
    mu = [[Lf[j][i] for j in range(n)] for i in range(n)]
    x = [0] * n
    found: list[tuple[int, ...]] = []
    nodes = 0
    bound_q = Fraction(bound)

    def candidates(i: int, remaining: Fraction) -> list[int]:
        c = -sum((mu[i][j] * x[j] for j in range(i + 1, n) if x[j]), Fraction(0))
        r = remaining / D[i]
        s = math.sqrt(float(r))
        lo = math.floor(float(c) - s) - 1
        hi = math.ceil(float(c) + s) + 1
        return [
            (v, D[i] * (v - c) ** 2)
            for v in range(lo, hi + 1)
            if (v - c) ** 2 <= r
        ]

    # depth-first; `zero_above` keeps only the class representative whose
    # last nonzero coordinate is positive
    def search(i: int, remaining: Fraction, zero_above: bool):
        nonlocal nodes
        for v, used in candidates(i, remaining):
            if zero_above and v < 0:
                continue
            nodes += 1
            if nodes > max_nodes:
                raise EnumerationBudgetExceeded(
                    f"more than {max_nodes} enumeration nodes at rank {n}"
                )
            x[i] = v
            if i == 0:
                if any(x):
                    found.append(tuple(x))
            else:
                search(i - 1, remaining - used, zero_above and v == 0)
        x[i] = 0

    search(n - 1, bound_q, True)
    found = sorted(_sign_canonical(v) for v in found)
    norms = tuple(L.norm(v) for v in found)
    return ShortVectorSet(bound=bound, vectors=tuple(found), norms=norms, nodes=nodes)


@dataclass(frozen=True, order=True)
class RootType:
    family: str  # "Z1", "A", "D", "E6", "E7", "E8"
    rank: int

    def __post_init__(self):
        ok = {
            "Z1": self.rank == 1,
            "A": self.rank >= 1,
            "D": self.rank >= 4,
            "E6": self.rank == 6,
            "E7": self.rank == 7,
            "E8": self.rank == 8,
        }.get(self.family)
        if not ok:
            raise ValueError(f"no root lattice {self.family} of rank {self.rank}")

    def __str__(self) -> str:
        if self.family in ("A", "D"):
            return f"{self.family}{self.rank}"
        return self.family

    @property
    def root_count(self) -> int:
        """Number of norm-2 vectors."""
        l = self.rank
        return {
            "Z1": 0,
            "A": l * (l + 1),
            "D": 2 * l * (l - 1),
            "E6": 72,
            "E7": 126,
            "E8": 240,
        }[self.family]

    @property
    def norm_one_count(self) -> int:
        return 2 if self.family == "Z1" else 0

    @property
    def abs_discriminant(self) -> int:
        return {
            "Z1": 1,
            "A": self.rank + 1,
            "D": 4,
            "E6": 3,
            "E7": 2,
            "E8": 1,
        }[self.family]


@dataclass(frozen=True)
class Component:
    root_type: RootType
    generators: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class RootDecomposition:
    components: tuple[Component, ...]

    @property
    def types(self) -> list[RootType]:
        return sorted(c.root_type for c in self.components)

    @property
    def rank(self) -> int:
        return sum(c.root_type.rank for c in self.components)

    def label(self) -> str:
        """Compact name such as ``A2^2`` or ``Z1^4 + A1``."""
        counts = Counter(str(t) for t in self.types)
        parts = []
        for name in sorted(counts, key=lambda s: (s != "Z1", s)):
            k = counts[name]
            parts.append(name if k == 1 else f"{name}^{k}")
        return " + ".join(parts)

    def to_json(self) -> list[dict]:
        return [{"type": t.family, "rank": t.rank} for t in self.types]


def identify_type(rank: int, norm_one: int, roots: int, abs_disc: int) -> RootType:
    """Catalog type from (rank, #norm-1 vectors, #norm-2 vectors, |disc|).

    Counts are full counts (both signs).
    """
    if norm_one:
        if rank != 1 or norm_one != 2 or roots:
            raise InconsistentRootSystem(
                f"norm-1 component with rank {rank}, {norm_one} units, {roots} roots"
            )
        candidate = RootType("Z1", 1)
    else:
        l = rank
        if roots == l * (l + 1):
            candidate = RootType("A", l)
        elif l >= 4 and roots == 2 * l * (l - 1):
            candidate = RootType("D", l)
        elif (l, roots) == (6, 72):
            candidate = RootType("E6", 6)
        elif (l, roots) == (7, 126):
            candidate = RootType("E7", 7)
        elif (l, roots) == (8, 240):
            candidate = RootType("E8", 8)
        else:
            raise InconsistentRootSystem(f"no catalog type of rank {l} has {roots} roots")
    if candidate.abs_discriminant != abs_disc:
        raise InconsistentRootSystem(
            f"{candidate} should have |disc| {candidate.abs_discriminant}, got {abs_disc}"
        )
    return candidate


def _connected_components(vectors, L: GramLattice) -> list[list[int]]:
    n = len(vectors)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    # pair via precomputed G x to keep this quadratic in the vector count
    images = [[sum(g * v for g, v in zip(row, x)) for row in L.gram] for x in vectors]
    for i in range(n):
        for j in range(i + 1, n):
            if sum(a * b for a, b in zip(vectors[i], images[j])):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda g: vectors[g[0]])


def generates(vectors: Sequence[Sequence[int]], rank: int) -> bool:
    """True iff the vectors span Z^rank (all invariant factors equal 1)."""
    if len(vectors) < rank:
        return False
    factors = exactalg.smith_normal_form([list(v) for v in vectors])
    return len(factors) == rank and all(s == 1 for s in factors)


def witt_decompose(
    L: GramLattice, max_nodes: int = DEFAULT_MAX_NODES
) -> Optional[RootDecomposition]:
    """Root decomposition of L, or None when L is not a root lattice."""
    if not is_positive_definite(L):
        return None
    short = enumerate_short(L, 2, max_nodes=max_nodes)
    if not generates(short.vectors, L.rank):
        return None

    units = short.with_norm(1)
    components: list[Component] = [
        Component(RootType("Z1", 1), (u,)) for u in units
    ]
    # Norm-2 vectors meeting a unit live inside the Z^k summand.
    unit_images = [[sum(g * v for g, v in zip(row, u)) for row in L.gram] for u in units]
    roots = [
        r
        for r in short.with_norm(2)
        if all(sum(a * b for a, b in zip(r, img)) == 0 for img in unit_images)
    ]
    for group in _connected_components(roots, L):
        gens = tuple(roots[i] for i in group)
        basis = exactalg.row_basis(gens)
        sub = exactalg.congruent(basis, L.gram)
        rt = identify_type(len(basis), 0, 2 * len(gens), abs(exactalg.det(sub)))
        components.append(Component(rt, gens))

    dec = RootDecomposition(tuple(components))
    verify_certificate(L, dec, short)
    return dec


def verify_certificate(
    L: GramLattice, dec: RootDecomposition, short: ShortVectorSet | None = None
) -> None:
    """Check the decomposition against invariants of L; raise on mismatch.

    Components must be mutually orthogonal, and the sum of the catalog
    forms must match L in rank, |disc|, root count and norm-1 count.
    """
    comps = dec.components
    for a in range(len(comps)):
        for b in range(a + 1, len(comps)):
            for x in comps[a].generators:
                for y in comps[b].generators:
                    if L.pair(x, y):
                        raise InconsistentRootSystem("components are not orthogonal")
    if short is None:
        short = enumerate_short(L, 2)
    disc = 1
    for t in dec.types:
        disc *= t.abs_discriminant
    k = sum(1 for t in dec.types if t.family == "Z1")
    expected = (
        dec.rank,
        disc,
        # u +- v over pairs of orthogonal units add 2k(k-1) norm-2 vectors
        sum(t.root_count for t in dec.types) + 2 * k * (k - 1),
        2 * k,
    )
    actual = (L.rank, abs(L.discriminant), short.count(2), short.count(1))
    if expected != actual:
        raise InconsistentRootSystem(
            f"certificate mismatch: decomposition gives {expected}, lattice has {actual}"
        )


def similar_to(L: GramLattice, max_nodes: int = DEFAULT_MAX_NODES) -> Optional[RootDecomposition]:
    """Root decomposition of the primitive rescale, or None."""
    return witt_decompose(primitive_rescale(L), max_nodes=max_nodes)


# --- catalog -------------------------------------------------------------


def _cartan_from_edges(n: int, edges) -> list[list[int]]:
    G = [[2 * (i == j) for j in range(n)] for i in range(n)]
    for i, j in edges:
        G[i][j] = G[j][i] = -1
    return G


def catalog_gram(t: RootType) -> GramLattice:
    """Standard Gram matrix (Cartan matrix for the even types)."""
    l = t.rank
    if t.family == "Z1":
        return GramLattice([[1]])
    if t.family == "A":
        return GramLattice(_cartan_from_edges(l, [(i, i + 1) for i in range(l - 1)]))
    if t.family == "D":
        edges = [(i, i + 1) for i in range(l - 2)] + [(l - 3, l - 1)]
        return GramLattice(_cartan_from_edges(l, edges))
    # E_l: chain 0..l-2 with the extra node attached to node 2
    edges = [(i, i + 1) for i in range(l - 2)] + [(2, l - 1)]
    return GramLattice(_cartan_from_edges(l, edges))


def catalog_sum(types: Sequence[RootType]) -> GramLattice:
    blocks = [catalog_gram(t).gram for t in types]
    G: list[list[int]] = [list(r) for r in blocks[0]]
    for b in blocks[1:]:
        G = exactalg.block_diagonal(G, b)
    return GramLattice(G)


def parse_root_type(text: str) -> RootType:
    if text == "Z1":
        return RootType("Z1", 1)
    if text in ("E6", "E7", "E8"):
        return RootType(text, int(text[1]))
    return RootType(text[0], int(text[1:]))
