"""Exact arithmetic in Z[zeta_m] and the trace-form lattices it carries.

Elements are coefficient vectors in the power basis 1, zeta, ...,
zeta^(phi(m)-1), always fully reduced modulo the m-th cyclotomic
polynomial.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .lattice import GramLattice


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (n is always small here)."""
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(p: int) -> bool:
    return p >= 2 and factorize(p) == {p: 1}


def phi(m: int) -> int:
    result = m
    for p in factorize(m):
        result -= result // p
    return result


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def multiplicative_order(a: int, n: int) -> int:
    if n == 1:
        return 1
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    k, x = 1, a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


def canonical_conductor(m: int) -> int:
    """Q(zeta_m) = Q(zeta_{m/2}) when m = 2 mod 4."""
    return m // 2 if m % 4 == 2 else m


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # coefficient lists, lowest degree first; den monic
    num = list(num)
    dq = len(den) - 1
    out = [0] * (len(num) - dq)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dq]
        out[i] = c
        if c:
            for k, d in enumerate(den):
                num[i + k] -= c * d
    if any(num[:dq]):
        raise ArithmeticError("polynomial division was not exact")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first (monic, degree phi(m))."""
    if m < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (m - 1) + [1]  # t^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


def _reduce(coeffs: list[int], m: int) -> tuple[int, ...]:
    phi_m = cyclotomic_poly(m)
    n = len(phi_m) - 1
    c = list(coeffs)
    for k in range(len(c) - 1, n - 1, -1):
        top = c[k]
        if top:
            base = k - n
            for i in range(n):
                c[base + i] -= top * phi_m[i]
            c[k] = 0
    c = c[:n] + [0] * max(0, n - len(c))
    return tuple(c)


@lru_cache(maxsize=None)
def _zeta_powers(m: int) -> tuple[tuple[int, ...], ...]:
    """Reduced coefficient vectors of zeta^j for 0 <= j < m."""
    n = phi(m)
    out = []
    cur = [1] + [0] * (n - 1)
    for _ in range(m):
        out.append(tuple(cur))
        shifted = [0] + cur
        cur = list(_reduce(shifted, m))
    return tuple(out)


@dataclass(frozen=True)
class CycloElement:
    m: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != phi(self.m):
            raise ValueError(
                f"expected {phi(self.m)} coefficients for m={self.m}, "
                f"got {len(self.coeffs)}"
            )

    @classmethod
    def from_poly(cls, m: int, coeffs) -> CycloElement:
        return cls(m, _reduce(list(coeffs), m))

    @classmethod
    def one(cls, m: int) -> CycloElement:
        return cls.zeta(m, 0)

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> CycloElement:
        return cls(m, _zeta_powers(m)[k % m])

    def _check(self, other: CycloElement):
        if self.m != other.m:
            raise ValueError(f"conductor mismatch: {self.m} vs {other.m}")

    def __add__(self, other: CycloElement) -> CycloElement:
        self._check(other)
        return CycloElement(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: CycloElement) -> CycloElement:
        self._check(other)
        return CycloElement(self.m, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> CycloElement:
        return CycloElement(self.m, tuple(-a for a in self.coeffs))

    def __mul__(self, other: CycloElement) -> CycloElement:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return CycloElement(self.m, _reduce(prod, self.m))

    def __pow__(self, e: int) -> CycloElement:
        if e < 0:
            raise ValueError("negative powers are only defined for roots of unity")
        result = CycloElement.one(self.m)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def trace(self) -> int:
        return trace(self)


def mul(x: CycloElement, y: CycloElement) -> CycloElement:
    return x * y


class Involution(enum.Enum):
    IDENTITY = "id"
    CONJUGATION = "conj"

    @classmethod
    def parse(cls, text: str) -> Involution:
        return cls(text)


def apply(theta: Involution, x: CycloElement) -> CycloElement:
    """theta(x); conjugation sends zeta^k to zeta^(m-k)."""
    if theta is Involution.IDENTITY:
        return x
    powers = _zeta_powers(x.m)
    out = [0] * len(x.coeffs)
    for k, c in enumerate(x.coeffs):
        if c:
            for i, v in enumerate(powers[(-k) % x.m]):
                out[i] += c * v
    return CycloElement(x.m, tuple(out))


def multiplication_matrix(x: CycloElement) -> list[list[int]]:
    """Matrix of y -> x*y in the power basis; column i is x*zeta^i."""
    n = len(x.coeffs)
    cols = [(x * CycloElement.zeta(x.m, i)).coeffs for i in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


@lru_cache(maxsize=None)
def _power_traces(m: int) -> tuple[int, ...]:
    # Trace of multiplication by zeta^k, k mod m: the diagonal of that
    # matrix has entries coeff_i(zeta^(k+i)).
    powers = _zeta_powers(m)
    n = phi(m)
    return tuple(sum(powers[(k + i) % m][i] for i in range(n)) for k in range(m))


def power_trace(m: int, k: int) -> int:
    """Trace_{K/Q}(zeta_m^k) via the multiplication matrix."""
    return _power_traces(m)[k % m]


def trace(x: CycloElement) -> int:
    """Trace_{K/Q}(x): trace of multiplication by x, expanded linearly."""
    table = _power_traces(x.m)
    return sum(c * table[k] for k, c in enumerate(x.coeffs) if c)


def mobius_trace(m: int, k: int) -> int:
    """Closed form Trace(zeta_m^k) = mu(d) phi(m)/phi(d), d = m/gcd(m,k)."""
    d = m // gcd(m, k % m) if k % m else 1
    return mobius(d) * phi(m) // phi(d)


def _check_theta(m: int, theta: Involution):
    if theta is Involution.CONJUGATION and m < 3:
        raise ValueError("complex conjugation is undefined for m <= 2 (K = Q)")


@lru_cache(maxsize=None)
def gram_trace_form(m: int, theta: Involution) -> GramLattice:
    """Gram matrix of (x, y) -> Trace(x * theta(y)) on the power basis."""
    _check_theta(m, theta)
    n = phi(m)
    table = _power_traces(m)
    sign = -1 if theta is Involution.CONJUGATION else 1
    # zeta^i * theta(zeta^j) = zeta^(i + sign*j)
    gram = tuple(tuple(table[(i + sign * j) % m] for j in range(n)) for i in range(n))
    return GramLattice(gram)


def trace_ideal_generator(m: int, theta: Involution = Involution.IDENTITY) -> int:
    """Positive generator of Trace(O) as an ideal of Z (the content)."""
    return gram_trace_form(m, theta).content


def roots_of_unity_order(m: int) -> int:
    return m if m % 2 == 0 else 2 * m


@dataclass(frozen=True)
class RamificationData:
    p: int
    a: int
    e: int
    f: int
    g: int

    @property
    def ramified(self) -> bool:
        return self.e > 1


def ramification(m: int, p: int) -> RamificationData:
    """Splitting of p in Q(zeta_m) from the cyclotomic splitting law."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    a = 0
    rest = m
    while rest % p == 0:
        rest //= p
        a += 1
    e = phi(p**a)
    f = multiplicative_order(p, rest)
    g = phi(rest) // f
    return RamificationData(p=p, a=a, e=e, f=f, g=g)


def composite_basis_matrix(i: int, j: int) -> list[list[int]]:
    """Coordinates of zeta_i^a * zeta_j^b in the power basis of zeta_(ij).

    Rows are ordered with a outer and b inner, matching the row order of
    the Kronecker product of the two factor Gram matrices.
    """
    if gcd(i, j) != 1:
        raise ValueError("factors must be coprime")
    m = i * j
    # zeta_i = zeta_m^j, zeta_j = zeta_m^i
    return [
        list(CycloElement.zeta(m, j * a + i * b).coeffs)
        for a in range(phi(i))
        for b in range(phi(j))
    ]
