"""Cyclicity of p-primary parts of the discriminant group of Z[zeta_m].

The p-primary part is read off the invariant factors of the trace-form
Gram matrix and compared with the prediction from the ramification data
(e, f, g) of p. The two routes share nothing but the conductor.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import Involution, factorize, gram_trace_form, is_prime, phi, ramification
from .lattice import DiscGroup, disc_group


def p_adic_valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class PPrimaryReport:
    p: int
    exponents: tuple[int, ...]

    @property
    def cyclic(self) -> bool:
        return len(self.exponents) <= 1

    @property
    def nontrivial(self) -> bool:
        return bool(self.exponents)

    @property
    def order(self) -> int:
        return self.p ** sum(self.exponents)


def p_primary(dg: DiscGroup, p: int) -> PPrimaryReport:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    exps = []
    for s in dg.invariant_factors:
        v = p_adic_valuation(s, p)
        if v:
            exps.append(v)
    return PPrimaryReport(p, tuple(exps))


def is_ramified(m: int, p: int) -> bool:
    """p ramifies in Q(zeta_m) iff p | m and phi(p^a) > 1."""
    return ramification(m, p).e > 1


@lru_cache(maxsize=None)
def cyclotomic_disc_group(m: int, theta: Involution = Involution.CONJUGATION) -> DiscGroup:
    return disc_group(gram_trace_form(m, theta))


def criterion(m: int, p: int) -> bool:
    """Predicted cyclicity: one prime above p, p odd, e = 2, f = 1."""
    if phi(m) <= 1:
        raise ValueError(f"degree phi({m}) = {phi(m)}; the criterion needs degree > 1")
    data = ramification(m, p)
    if data.e <= 1:
        raise ValueError(f"{p} is unramified in Q(zeta_{m})")
    return data.g == 1 and p % 2 == 1 and data.e == 2 and data.f == 1


@dataclass(frozen=True)
class CrosscheckRow:
    m: int
    p: int
    e: int
    f: int
    g: int
    exponents: tuple[int, ...]
    snf_cyclic: bool
    predicted: bool

    @property
    def agree(self) -> bool:
        return self.snf_cyclic == self.predicted


def crosscheck_row(m: int, p: int) -> CrosscheckRow:
    predicted = criterion(m, p)
    rep = p_primary(cyclotomic_disc_group(m), p)
    data = ramification(m, p)
    return CrosscheckRow(
        m=m,
        p=p,
        e=data.e,
        f=data.f,
        g=data.g,
        exponents=rep.exponents,
        snf_cyclic=rep.cyclic and rep.nontrivial,
        predicted=predicted,
    )


def crosscheck(m: int, p: int) -> bool:
    return crosscheck_row(m, p).agree


def ramified_pairs(max_m: int) -> list[tuple[int, int]]:
    return [
        (m, p)
        for m in range(1, max_m + 1)
        if phi(m) > 1
        for p in sorted(factorize(m))
        if is_ramified(m, p)
    ]


def cyclotomic_disc_formula(m: int) -> int:
    """|disc Q(zeta_m)| = m^phi(m) / prod_{p | m} p^(phi(m)/(p-1))."""
    n = phi(m)
    num = m**n
    den = 1
    for p in factorize(m):
        den *= p ** (n // (p - 1))
    if num % den:
        raise ArithmeticError("discriminant formula is not integral")
    return num // den
