"""Exact integer matrix algebra: Smith normal form and congruence systems.

Entries are Python ints throughout; nothing here ever touches floats.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence


class InvariantViolation(AssertionError):
    """An internal algebraic identity failed to hold."""


class PadTooShort(ValueError):
    pass


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ValueError(f"data does not match shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        data = tuple(tuple(int(v) for v in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, k: int) -> "IntMatrix":
        return cls(k, k, tuple(tuple(int(i == j) for j in range(k)) for i in range(k)))

    @classmethod
    def diag(cls, entries: Sequence[int], rows: int | None = None, cols: int | None = None) -> "IntMatrix":
        rows = len(entries) if rows is None else rows
        cols = len(entries) if cols is None else cols
        m = [[0] * cols for _ in range(rows)]
        for k, v in enumerate(entries):
            m[k][k] = int(v)
        return cls.from_rows(m, cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.data[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.data)

    def select_columns(self, cols: Sequence[int]) -> "IntMatrix":
        return IntMatrix.from_rows([[r[j] for j in cols] for r in self.data], len(cols))

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([list(c) for c in zip(*self.data)] if self.rows else [], self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = list(zip(*other.data)) if other.rows else [()] * other.cols
        return IntMatrix.from_rows(
            [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.data], other.cols
        )

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.data)

    def det(self) -> int:
        """Determinant by fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        k = self.rows
        a = self.tolist()
        sign, prev = 1, 1
        for p in range(k):
            if a[p][p] == 0:
                swap = next((r for r in range(p + 1, k) if a[r][p] != 0), None)
                if swap is None:
                    return 0
                a[p], a[swap] = a[swap], a[p]
                sign = -sign
            for i in range(p + 1, k):
                for j in range(p + 1, k):
                    a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) // prev
            prev = a[p][p]
        return sign * a[k - 1][k - 1] if k else 1

    def is_diagonal(self) -> bool:
        return all(v == 0 for i, r in enumerate(self.data) for j, v in enumerate(r) if i != j)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.data[k][k] for k in range(min(self.rows, self.cols)))


@dataclass(frozen=True)
class SnfResult:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular and ``D`` in Smith form."""

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def factors(self) -> tuple[int, ...]:
        return self.D.diagonal()

    def check(self, M: IntMatrix) -> None:
        if self.U @ M @ self.V != self.D:
            raise InvariantViolation("U M V != D")
        if abs(self.U.det()) != 1 or abs(self.V.det()) != 1:
            raise InvariantViolation("transform is not unimodular")
        if not self.D.is_diagonal():
            raise InvariantViolation("D is not diagonal")
        if not is_divisibility_chain(self.factors):
            raise InvariantViolation(f"bad invariant factor chain {self.factors}")


def is_divisibility_chain(factors: Sequence[int]) -> bool:
    """Nonnegative, each nonzero entry divides the next, zeros only at the end."""
    if any(f < 0 for f in factors):
        return False
    for a, b in zip(factors, factors[1:]):
        if a == 0:
            if b != 0:
                return False
        elif b % a:
            return False
    return True


def smith_normal_form(M: IntMatrix, check: bool = True) -> SnfResult:
    """Smith normal form by elementary operations.

    The pivot is the nonzero entry of least absolute value in the remaining
    block, ties broken by (row, column).
    """
    m, n = M.rows, M.cols
    A = M.tolist()
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for row in itertools.chain(A, V):
            row[j], row[k] = row[k], row[j]

    def add_row(src, dst, q):  # row_dst -= q * row_src
        for mat in (A, U):
            s, d = mat[src], mat[dst]
            for c in range(len(d)):
                d[c] -= q * s[c]

    def add_col(src, dst, q):  # col_dst -= q * col_src
        for row in itertools.chain(A, V):
            row[dst] -= q * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    v = A[i][j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
            if best is None:
                break
            _, i, j = best
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(t, i, A[i][t] // p)
                    clean = clean and A[i][t] == 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(t, j, A[t][j] // p)
                    clean = clean and A[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            # pull a non-multiple into the pivot row; next pass shrinks the pivot
            add_row(bad, t, -1)
        if A[t][t] < 0:
            A[t] = [-v for v in A[t]]
            U[t] = [-v for v in U[t]]

    result = SnfResult(IntMatrix.from_rows(A, n), IntMatrix.from_rows(U, m), IntMatrix.from_rows(V, n))
    if check:
        result.check(M)
    return result


def invariant_factors(M: IntMatrix, pad_to: int) -> tuple[int, ...]:
    diag = smith_normal_form(M).factors
    nonzero = [d for d in diag if d]
    if pad_to < len(nonzero):
        raise PadTooShort(f"{len(nonzero)} nonzero factors do not fit in length {pad_to}")
    return tuple(nonzero) + (0,) * (pad_to - len(nonzero))


def gcd_mod(a: int, n: int) -> int:
    """gcd with the convention gcd(0, n) = n."""
    return math.gcd(a, n)


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^free_rank + Z_t1 + ... + Z_ts`` with ``1 < t1 | t2 | ...``."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        return math.prod(self.torsion) if self.is_finite else None

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z_{t}" for t in self.torsion)
        return " + ".join(parts) or "0"


def abelian_group(relations: IntMatrix) -> AbelianGroup:
    """Abelian group with one generator per column and one relation per row."""
    factors = smith_normal_form(relations).factors if relations.rows and relations.cols else ()
    nonzero = [f for f in factors if f]
    return AbelianGroup(relations.cols - len(nonzero), tuple(f for f in nonzero if f > 1))


@dataclass(frozen=True)
class CongruenceSolutionSet:
    """Solutions of ``H x == -b (mod n)`` as ``particular + span(basis)``.

    Each basis entry is ``(vector, period)``; the vectors generate independent
    cyclic pieces, so every solution has exactly one coefficient tuple with
    ``0 <= c_k < period_k``.
    """

    modulus: int
    dimension: int
    particular: tuple[int, ...] | None
    basis: tuple[tuple[tuple[int, ...], int], ...]

    @property
    def cardinality(self) -> int:
        if self.particular is None:
            return 0
        return math.prod(p for _, p in self.basis)

    def __len__(self) -> int:
        return self.cardinality

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        """Generate every solution once, in coefficient order (not sorted)."""
        if self.particular is None:
            return iter(())
        n = self.modulus
        sols = [self.particular]
        for vec, period in self.basis:
            multiples = [tuple(c * v for v in vec) for c in range(period)]
            sols = [tuple((a + b) % n for a, b in zip(s, m)) for s in sols for m in multiples]
        return iter(sols)

    def materialize(self) -> list[tuple[int, ...]]:
        return sorted(self)


def solve_congruences(H: IntMatrix, b: Sequence[int], n: int) -> CongruenceSolutionSet:
    """All ``x`` in ``Z_n^cols`` with ``H x == -b (mod n)``.

    With ``U H V = D`` the substitution ``x = V y`` splits the system into
    scalar congruences ``D_kk y_k == (U(-b))_k``. ``V`` is invertible mod n,
    so distinct ``y`` give distinct ``x``.
    """
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if len(b) != H.rows:
        raise ValueError("right-hand side length does not match row count")
    cols = H.cols
    if H.rows == 0 or cols == 0:
        if any(v % n for v in b):
            return CongruenceSolutionSet(n, cols, None, ())
        basis = tuple((tuple(int(k == j) for k in range(cols)), n) for j in range(cols) if n > 1)
        return CongruenceSolutionSet(n, cols, (0,) * cols, basis)

    snf = smith_normal_form(H)
    rhs = snf.U.apply([-v for v in b])
    diag = snf.factors
    y0 = [0] * cols
    y_basis = []
    for k in range(H.rows):
        d = diag[k] if k < len(diag) else 0
        g = gcd_mod(d, n)
        if rhs[k] % g:
            return CongruenceSolutionSet(n, cols, None, ())
        if k >= cols:
            continue
        step = n // g
        if step > 1:
            y0[k] = (rhs[k] // g) * pow(d // g, -1, step) % step
        if g > 1:
            y_basis.append((k, step, g))
    for k in range(H.rows, cols):
        y_basis.append((k, 1, n))

    V = snf.V
    particular = tuple(v % n for v in V.apply(y0))
    basis = []
    for k, step, period in y_basis:
        vec = tuple(V[r, k] * step % n for r in range(cols))
        basis.append((vec, period))
    return CongruenceSolutionSet(n, cols, particular, tuple(basis))


def is_solution(H: IntMatrix, b: Sequence[int], n: int, x: Sequence[int]) -> bool:
    return all((hx + bi) % n == 0 for hx, bi in zip(H.apply(x), b))
