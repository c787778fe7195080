"""Exact integer and rational linear algebra.

Matrices are plain row-major sequences of Python ints (or Fractions where
noted). Nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

IntMatrix = Sequence[Sequence[int]]


def _shape(M: IntMatrix) -> tuple[int, int]:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    for row in M:
        if len(row) != cols:
            raise ValueError("ragged matrix")
    return rows, cols


def _require_square(M: IntMatrix) -> int:
    rows, cols = _shape(M)
    if rows != cols:
        raise ValueError(f"expected a square matrix, got {rows}x{cols}")
    return rows


def is_symmetric(M: IntMatrix) -> bool:
    n = _require_square(M)
    return all(M[i][j] == M[j][i] for i in range(n) for j in range(i))


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(M: IntMatrix) -> list[list[int]]:
    return [list(col) for col in zip(*M)]


def matmul(A: IntMatrix, B: IntMatrix) -> list[list[int]]:
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def congruent(U: IntMatrix, M: IntMatrix) -> list[list[int]]:
    """Return U M U^T (rows of U are the new basis vectors)."""
    return matmul(matmul(U, M), transpose(U))


def det(M: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = _require_square(M)
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        rowk = A[k]
        for i in range(k + 1, n):
            rowi = A[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (akk * rowi[j] - aik * rowk[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


def smith_normal_form(M: IntMatrix, det_value: int | None = None) -> list[int]:
    """Invariant factors s_1 | s_2 | ... of an integer matrix.

    Returns ``min(rows, cols)`` nonnegative factors, unit factors included.
    Zero factors (rank deficiency) come last. For nonsingular square input
    the reduction is carried out modulo ``|det M|`` to keep entries small;
    pass ``det_value`` when the determinant is already known.
    """
    rows, cols = _shape(M)
    size = min(rows, cols)
    if size == 0:
        return []
    modulus = 0
    if rows == cols:
        modulus = abs(det(M) if det_value is None else det_value)
    A = [list(row) for row in M]
    if modulus:
        A = [[_sym_mod(x, modulus) for x in row] for row in A]

    diag: list[int] = []
    for t in range(size):
        pivot = _min_abs_position(A, t, rows, cols)
        if pivot is None:
            diag.extend([0] * (size - t))
            break
        while True:
            i, j = pivot
            _swap_rows(A, t, i)
            _swap_cols(A, t, j)
            if _clear_pivot_cross(A, t, rows, cols, modulus):
                pivot = _min_abs_position(A, t, rows, cols)
                continue
            # pivot now divides nothing else in its row/col; check the rest
            p = A[t][t]
            bad = None
            for r in range(t + 1, rows):
                row = A[r]
                for c in range(t + 1, cols):
                    if row[c] % p:
                        bad = r
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            # fold the offending row into the pivot row and repeat
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
            pivot = (t, t)
        diag.append(abs(A[t][t]))

    if modulus:
        diag = [gcd(d, modulus) for d in diag]
    return _normalize_chain(diag)


def _sym_mod(x: int, n: int) -> int:
    r = x % n
    return r - n if 2 * r > n else r


def _min_abs_position(A, t, rows, cols):
    best = None
    best_val = 0
    for r in range(t, rows):
        row = A[r]
        for c in range(t, cols):
            v = row[c]
            if v:
                av = abs(v)
                if best is None or av < best_val:
                    best, best_val = (r, c), av
                    if av == 1:
                        return best
    return best


def _swap_rows(A, i, j):
    if i != j:
        A[i], A[j] = A[j], A[i]


def _swap_cols(A, i, j):
    if i != j:
        for row in A:
            row[i], row[j] = row[j], row[i]


def _clear_pivot_cross(A, t, rows, cols, modulus) -> bool:
    """Reduce row t and column t against the pivot A[t][t].

    Returns True when a nonzero remainder was left behind (a smaller pivot
    exists and the caller should re-pivot).
    """
    p = A[t][t]
    leftover = False
    prow = A[t]
    for r in range(t + 1, rows):
        row = A[r]
        if row[t]:
            q = row[t] // p
            if q:
                for c in range(t, cols):
                    row[c] -= q * prow[c]
                if modulus:
                    for c in range(t + 1, cols):
                        row[c] = _sym_mod(row[c], modulus)
            if row[t]:
                leftover = True
    for c in range(t + 1, cols):
        if prow[c]:
            q = prow[c] // p
            if q:
                for r in range(t, rows):
                    A[r][c] -= q * A[r][t]
                if modulus:
                    for r in range(t + 1, rows):
                        A[r][c] = _sym_mod(A[r][c], modulus)
            if prow[c]:
                leftover = True
    return leftover


def _normalize_chain(diag: list[int]) -> list[int]:
    # Diagonal reduction above already yields a divisibility chain; this
    # re-derives it from pairwise gcd/lcm as a guard against pivot ordering.
    d = list(diag)
    n = len(d)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = d[i], d[j]
            if a == 0 and b != 0:
                d[i], d[j] = b, 0
                continue
            if a and b and b % a:
                g = gcd(a, b)
                d[i], d[j] = g, a * b // g
    return d


def row_basis(vectors: IntMatrix) -> list[list[int]]:
    """A Z-basis (row echelon form) of the lattice spanned by the rows."""
    rows, cols = _shape(vectors)
    A = [list(v) for v in vectors if any(v)]
    basis: list[list[int]] = []
    col = 0
    while A and col < cols:
        live = [v for v in A if v[col]]
        if not live:
            col += 1
            continue
        rest = [v for v in A if not v[col]]
        # Euclid on column `col` across the live rows
        while len(live) > 1:
            live.sort(key=lambda v: abs(v[col]))
            head = live[0]
            nxt = []
            for v in live[1:]:
                q = v[col] // head[col]
                w = [a - q * b for a, b in zip(v, head)]
                if w[col]:
                    nxt.append(w)
                elif any(w):
                    rest.append(w)
            live = [head] + nxt
        pivot = live[0]
        if pivot[col] < 0:
            pivot = [-a for a in pivot]
        basis.append(pivot)
        A = rest
        col += 1
    return basis


def ldl(M: IntMatrix) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Rational LDL^T factorization without pivoting.

    Returns (L, D) with L unit lower triangular. Elimination is done
    fraction-free: after k Bareiss steps the trailing entries are p_k times
    the Schur complement, p_k the k-th leading principal minor, so
    D_k = a_kk / p_k and L_ik = a_ik / a_kk. Raises ZeroDivisionError when a
    leading principal minor vanishes.
    """
    n = _require_square(M)
    A = [list(row) for row in M]
    L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    D: list[Fraction] = []
    prev = 1
    for k in range(n):
        akk = A[k][k]
        if akk == 0:
            raise ZeroDivisionError(f"zero pivot at {k}")
        D.append(Fraction(akk, prev))
        rowk = A[k]
        for i in range(k + 1, n):
            L[i][k] = Fraction(A[i][k], akk)
        for i in range(k + 1, n):
            rowi = A[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (akk * rowi[j] - aik * rowk[j]) // prev
        prev = akk
    return L, D


def inertia(M: IntMatrix) -> tuple[int, int, int]:
    """Sylvester inertia (n_plus, n_minus, n_zero) of a symmetric matrix.

    Fraction-free symmetric elimination; the sign of the k-th rational
    pivot is sign(p_k) * sign(p_{k-1}). When the remaining block has a zero
    diagonal but a nonzero off-diagonal entry a_ij, the congruence
    e_i -> e_i + e_j produces the nonzero pivot 2 a_ij.
    """
    n = _require_square(M)
    if not is_symmetric(M):
        raise ValueError("inertia requires a symmetric matrix")
    A = [list(row) for row in M]
    plus = minus = 0
    prev = 1
    active = list(range(n))
    while active:
        k = next((i for i in active if A[i][i] != 0), None)
        if k is None:
            pair = next(
                ((i, j) for i in active for j in active if i != j and A[i][j] != 0),
                None,
            )
            if pair is None:
                break
            i, j = pair
            for r in active:
                A[r][i] += A[r][j]
            for c in active:
                A[i][c] += A[j][c]
            k = i
        pivot = A[k][k]
        if (pivot > 0) == (prev > 0):
            plus += 1
        else:
            minus += 1
        active.remove(k)
        rowk = A[k]
        for i in active:
            rowi = A[i]
            aik = rowi[k]
            for j in active:
                rowi[j] = (pivot * rowi[j] - aik * rowk[j]) // prev
        prev = pivot
    return plus, minus, n - plus - minus


def kronecker(A: IntMatrix, B: IntMatrix) -> list[list[int]]:
    """Kronecker product, (A⊗B)[(i,k),(j,l)] = A[i][j] * B[k][l]."""
    ra, ca = _shape(A)
    rb, cb = _shape(B)
    return [
        [A[i][j] * B[k][l] for j in range(ca) for l in range(cb)]
        for i in range(ra)
        for k in range(rb)
    ]


def block_diagonal(A: IntMatrix, B: IntMatrix) -> list[list[int]]:
    ra, ca = _shape(A)
    rb, cb = _shape(B)
    top = [list(row) + [0] * cb for row in A]
    bottom = [[0] * ca + list(row) for row in B]
    return top + bottom
