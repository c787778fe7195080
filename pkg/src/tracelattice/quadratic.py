"""Trace forms of quadratic fields Q(sqrt c)."""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import Involution, factorize
from .lattice import GramLattice


def is_squarefree(c: int) -> bool:
    if c == 0:
        return False
    return all(e == 1 for e in factorize(abs(c)).values())


@dataclass(frozen=True)
class QuadField:
    c: int

    def __post_init__(self):
        if self.c in (0, 1) or not is_squarefree(self.c):
            raise ValueError(f"c={self.c} is not a squarefree integer other than 0, 1")

    @property
    def omega_trace(self) -> int:
        # omega = sqrt c, or (1 + sqrt c)/2 when c = 1 mod 4
        return 1 if self.c % 4 == 1 else 0

    @property
    def omega_norm(self) -> int:
        return (1 - self.c) // 4 if self.c % 4 == 1 else -self.c

    @property
    def is_imaginary(self) -> bool:
        return self.c < 0


def quad_discriminant(F: QuadField) -> int:
    return F.c if F.c % 4 == 1 else 4 * F.c


def quad_gram(F: QuadField, theta: Involution) -> GramLattice:
    """Gram of Trace(x * theta(y)) on the integral basis {1, omega}.

    theta(omega) is omega for the identity and its Galois conjugate
    t - omega otherwise, so every entry is a polynomial in t = Tr(omega)
    and N = Norm(omega).
    """
    if theta is Involution.CONJUGATION and not F.is_imaginary:
        raise ValueError("complex conjugation needs an imaginary quadratic field (c < 0)")
    t, nrm = F.omega_trace, F.omega_norm
    if theta is Involution.CONJUGATION:
        ww = 2 * nrm  # Tr(omega * omega') = 2 N
    else:
        ww = t * t - 2 * nrm  # Tr(omega^2)
    return GramLattice([[2, t], [t, ww]])
