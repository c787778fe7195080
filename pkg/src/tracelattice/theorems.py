"""Predicted versus computed classification of trace-form lattices.

Predictions encode the classification results for the cyclotomic and
quadratic families; ``verify`` recomputes everything from the Gram matrix
and records where the two agree.
"""

from __future__ import annotations

import cmath
from math import gcd
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from . import exactalg
from .cyclotomic import (
    Involution,
    canonical_conductor,
    composite_basis_matrix,
    factorize,
    gram_trace_form,
    phi,
)
from .discgroup import cyclotomic_disc_formula
from .lattice import (
    GramLattice,
    disc_group,
    is_even,
    is_positive_definite,
    is_unimodular,
    primitive_rescale,
)
from .quadratic import QuadField, is_squarefree, quad_gram
from .roots import (
    DEFAULT_MAX_NODES,
    EnumerationBudgetExceeded,
    RootDecomposition,
    similar_to,
    witt_decompose,
)

CYCLOTOMIC = "cyclotomic"
QUADRATIC = "quadratic"

# Largest integer emitted as a JSON number; larger values become strings.
JSON_INT_LIMIT = 2**53


def json_int(x: int):
    return x if abs(x) < JSON_INT_LIMIT else str(x)


@dataclass(frozen=True)
class FieldSpec:
    """A number field from one of the two families, with its involution.

    Only positive-definite pairs are representable: the identity on a
    totally real field, or complex conjugation on a CM field.
    """

    kind: str
    param: int
    theta: Involution

    def __post_init__(self):
        if self.kind == CYCLOTOMIC:
            if self.param < 1:
                raise ValueError("conductor must be positive")
            totally_real = self.param <= 2
        elif self.kind == QUADRATIC:
            QuadField(self.param)
            totally_real = self.param > 0
        else:
            raise ValueError(f"unknown field family {self.kind!r}")
        want = Involution.IDENTITY if totally_real else Involution.CONJUGATION
        if self.theta is not want:
            raise ValueError(
                f"{self.label}: theta must be {want.value} "
                f"({'totally real' if totally_real else 'CM'} field)"
            )

    @classmethod
    def cyclotomic(cls, m: int) -> FieldSpec:
        theta = Involution.IDENTITY if m <= 2 else Involution.CONJUGATION
        return cls(CYCLOTOMIC, m, theta)

    @classmethod
    def quadratic(cls, c: int) -> FieldSpec:
        theta = Involution.IDENTITY if c > 0 else Involution.CONJUGATION
        return cls(QUADRATIC, c, theta)

    @property
    def label(self) -> str:
        name = f"Q(zeta_{self.param})" if self.kind == CYCLOTOMIC else f"Q(sqrt({self.param}))"
        return f"{name}, {self.theta.value}"

    @property
    def degree(self) -> int:
        return phi(self.param) if self.kind == CYCLOTOMIC else 2

    @property
    def sort_key(self) -> tuple:
        return (self.kind != CYCLOTOMIC, abs(self.param), self.param)

    def gram(self) -> GramLattice:
        if self.kind == CYCLOTOMIC:
            return gram_trace_form(self.param, self.theta)
        return quad_gram(QuadField(self.param), self.theta)

    def as_cyclotomic_conductor(self) -> Optional[int]:
        """Canonical conductor when the field is cyclotomic, else None."""
        if self.kind == CYCLOTOMIC:
            return canonical_conductor(self.param)
        return {-1: 4, -3: 3}.get(self.param)


def _power_label(name: str, k: int) -> str:
    return name if k == 1 else f"{name}^{k}"


@dataclass(frozen=True)
class Prediction:
    root_lattice: Optional[str]  # unscaled lattice, None = not a root lattice
    similar: Optional[str]  # primitive rescale
    content: Optional[int]  # trace ideal generator when a similarity is predicted


def predict(spec: FieldSpec) -> Prediction:
    """Classification predicted for ``spec``.

    Q gives Z1. Conductors 2^a (a >= 2) give Z^n after dividing by
    n; conductors 2^a 3^b (b >= 1) give A2^(n/2) after dividing by n/2.
    Q(sqrt -3) and Q(sqrt -1) are the only unscaled root lattices besides Q.
    Everything else is similar neither to Z^n nor to an even root lattice;
    mixed root lattices such as Z1 + A1 are outside the prediction.
    """
    cond = spec.as_cyclotomic_conductor()
    n = spec.degree
    if cond is None:
        return Prediction(None, None, None)
    if cond == 1:
        return Prediction("Z1", "Z1", 1)
    f = factorize(cond)
    if set(f) == {2}:
        root = "A1^2" if cond == 4 else None
        return Prediction(root, _power_label("Z1", n), n)
    if set(f) <= {2, 3} and 3 in f:
        root = "A2" if cond == 3 else None
        return Prediction(root, _power_label("A2", n // 2), n // 2)
    return Prediction(None, None, None)


def _label(dec: Optional[RootDecomposition]) -> Optional[str]:
    return None if dec is None else dec.label()


def unmixed_label(dec: Optional[RootDecomposition]) -> Optional[str]:
    """Label when all components are Z1 or none are; None otherwise."""
    if dec is None:
        return None
    units = [t.family == "Z1" for t in dec.types]
    return dec.label() if all(units) or not any(units) else None


def rescale_not_even_unimodular(target: Union[FieldSpec, GramLattice]) -> bool:
    """True iff the primitive rescale is NOT both even and unimodular."""
    L = target.gram() if isinstance(target, FieldSpec) else target
    P = primitive_rescale(L)
    return not (is_even(P) and is_unimodular(P))


def disc_bound_witness(spec: FieldSpec) -> bool:
    """Whether |disc K|^(1/n) > n/2, i.e. |disc K| * 2^n > n^n."""
    n = spec.degree
    return abs(spec.gram().discriminant) * 2**n > n**n


@dataclass
class ClassificationRecord:
    spec: FieldSpec
    n: int
    content: int
    disc: int
    invariant_factors: tuple[int, ...]
    positive_definite: bool
    even: bool
    root_lattice: Optional[str]
    similar: Optional[str]
    prediction: Prediction
    not_even_unimodular: bool
    disc_bound: bool
    agreement: dict[str, bool] = field(default_factory=dict)
    error: Optional[str] = None

    @property
    def agrees(self) -> bool:
        return self.error is None and all(self.agreement.values())

    def to_json(self) -> dict:
        return {
            "field": self.spec.label,
            "kind": self.spec.kind,
            "param": self.spec.param,
            "theta": self.spec.theta.value,
            "n": self.n,
            "content": self.content,
            "disc": json_int(self.disc),
            "invariant_factors": [json_int(s) for s in self.invariant_factors],
            "positive_definite": self.positive_definite,
            "even": self.even,
            "root_lattice": self.root_lattice,
            "similar": self.similar,
            "predicted": {
                "root_lattice": self.prediction.root_lattice,
                "similar": self.prediction.similar,
                "content": self.prediction.content,
            },
            "rescale_not_even_unimodular": self.not_even_unimodular,
            "disc_root_exceeds_half_degree": self.disc_bound,
            "agreement": dict(self.agreement),
            "error": self.error,
            # the only-if directions are checked over these two families only
            "scope": "family-verified",
        }


def verify(spec: FieldSpec, max_nodes: int = DEFAULT_MAX_NODES) -> ClassificationRecord:
    L = spec.gram()
    pred = predict(spec)
    root = witt_decompose(L, max_nodes=max_nodes)
    sim = root if L.content == 1 else similar_to(L, max_nodes=max_nodes)
    rec = ClassificationRecord(
        spec=spec,
        n=L.rank,
        content=L.content,
        disc=L.discriminant,
        invariant_factors=tuple(disc_group(L).invariant_factors),
        positive_definite=is_positive_definite(L),
        even=is_even(L),
        root_lattice=_label(root),
        similar=_label(sim),
        prediction=pred,
        not_even_unimodular=rescale_not_even_unimodular(L),
        disc_bound=disc_bound_witness(spec),
    )
    rec.agreement = {
        "root_lattice": rec.root_lattice == pred.root_lattice,
        "similar": unmixed_label(sim) == pred.similar,
        "content": pred.content is None or rec.content == pred.content,
        "not_even_unimodular": rec.not_even_unimodular,
    }
    return rec


def sweep_specs(max_m: int, max_quad: int) -> list[FieldSpec]:
    specs = [FieldSpec.cyclotomic(m) for m in range(1, max_m + 1)]
    specs += [
        FieldSpec.quadratic(c)
        for c in range(-max_quad, max_quad + 1)
        if c not in (0, 1) and is_squarefree(c)
    ]
    return sorted(specs, key=lambda s: s.sort_key)


def _failed_record(spec: FieldSpec, err: Exception) -> ClassificationRecord:
    L = spec.gram()
    return ClassificationRecord(
        spec=spec,
        n=L.rank,
        content=L.content,
        disc=L.discriminant,
        invariant_factors=(),
        positive_definite=is_positive_definite(L),
        even=is_even(L),
        root_lattice=None,
        similar=None,
        prediction=predict(spec),
        not_even_unimodular=rescale_not_even_unimodular(L),
        disc_bound=disc_bound_witness(spec),
        agreement={"completed": False},
        error=f"{type(err).__name__}: {err}",
    )


def sweep(max_m: int, max_quad: int, max_nodes: int = DEFAULT_MAX_NODES) -> list[ClassificationRecord]:
    records = []
    for spec in sweep_specs(max_m, max_quad):
        try:
            records.append(verify(spec, max_nodes=max_nodes))
        except EnumerationBudgetExceeded as err:
            records.append(_failed_record(spec, err))
    return records


@dataclass(frozen=True)
class ConductorInvariants:
    n: int
    content: int
    abs_disc: int
    invariant_factors: tuple[int, ...]
    similar: Optional[str]


def conductor_invariants(m: int) -> ConductorInvariants:
    spec = FieldSpec.cyclotomic(m)
    L = spec.gram()
    return ConductorInvariants(
        n=L.rank,
        content=L.content,
        abs_disc=abs(L.discriminant),
        invariant_factors=tuple(disc_group(L).invariant_factors),
        similar=_label(similar_to(L)),
    )


def discriminant_matches_formula(m: int, theta: Involution) -> bool:
    """|det Gram| and the invariant-factor product both equal the formula value."""
    L = gram_trace_form(m, theta)
    target = cyclotomic_disc_formula(m)
    return abs(L.discriminant) == target and disc_group(L).order == target


def tensor_congruence(i: int, j: int) -> bool:
    """gram(i) ⊗ gram(j) equals gram(ij) in the basis zeta_i^a zeta_j^b.

    Also requires the change of basis to be unimodular, so the two
    lattices are isometric and not merely related by a sublattice.
    """
    conj = Involution.CONJUGATION
    P = composite_basis_matrix(i, j)
    if abs(exactalg.det(P)) != 1:
        return False
    lhs = exactalg.kronecker(gram_trace_form(i, conj).gram, gram_trace_form(j, conj).gram)
    rhs = exactalg.congruent(P, gram_trace_form(i * j, conj).gram)
    return lhs == rhs


def embedding_gram(m: int) -> np.ndarray:
    """sum over embeddings sigma of sigma(zeta^i) * conj(sigma(zeta^j))."""
    n = phi(m)
    ks = [k for k in range(1, m + 1) if gcd(k, m) == 1]
    roots = np.array([cmath.exp(2j * cmath.pi * k / m) for k in ks])
    V = np.array([roots**i for i in range(n)])  # V[i, s] = sigma_s(zeta^i)
    return V @ V.conj().T


def check_bk(m: int) -> float:
    """Max |b_K - Gram| over the power basis, Gram taken with the matching involution.

    For CM fields (m >= 3) the comparison is against complex conjugation;
    for K = Q against the identity.
    """
    theta = Involution.CONJUGATION if m >= 3 else Involution.IDENTITY
    exact = np.array(gram_trace_form(m, theta).gram, dtype=float)
    return float(np.max(np.abs(embedding_gram(m) - exact)))
