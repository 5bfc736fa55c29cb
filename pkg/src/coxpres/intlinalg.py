"""Exact integer matrices: rank, Hermite normal form, kernel bases.

Everything here works over Python's arbitrary-precision integers; there is
no floating point anywhere.  Matrices are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored as a tuple of row tuples."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = self.entries
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")

    @staticmethod
    def from_rows(rows) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(x) for x in r) for r in rows))

    @staticmethod
    def from_cols(cols) -> "IntMatrix":
        cols = [tuple(int(x) for x in c) for c in cols]
        return IntMatrix(tuple(zip(*cols))) if cols else IntMatrix(())

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def zero(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix(tuple((0,) * cols for _ in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.col(j) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries))) if self.entries else self

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        bt = other.transpose().entries
        return IntMatrix(tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in bt)
            for row in self.entries))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in r) for r in self.entries)


def rank(m: IntMatrix) -> int:
    """Rank over the rationals, by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in m.entries]
    nr, nc = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(nc):
        piv = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        if r == nr:
            break
    return r


def hermite_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns (H, U) with U unimodular, U @ m == H, pivots positive, entries
    above each pivot reduced into [0, pivot), and zero rows at the bottom.
    """
    a = [list(r) for r in m.entries]
    nr, nc = m.rows, m.cols
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]

    def addmul(dst, src, q):
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def negate(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    r = 0
    pivots = []
    for c in range(nc):
        # Euclid on the column below row r.
        while True:
            nz = [i for i in range(r, nr) if a[i][c] != 0]
            if not nz:
                break
            imin = min(nz, key=lambda i: abs(a[i][c]))
            swap(r, imin)
            if a[r][c] < 0:
                negate(r)
            done = True
            for i in range(r + 1, nr):
                if a[i][c] != 0:
                    addmul(i, r, a[i][c] // a[r][c])
                    done = done and a[i][c] == 0
            if done:
                break
        if r < nr and a[r][c] != 0:
            pivots.append((r, c))
            r += 1
            if r == nr:
                break
    for pr, pc in pivots:
        for i in range(pr):
            q = a[i][pc] // a[pr][pc]
            if q:
                addmul(i, pr, q)
    return IntMatrix.from_rows(a), IntMatrix.from_rows(u)


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Rows form a Z-basis of the integer kernel {v : m @ v = 0}.

    Computed from the HNF transform of the transpose: the transformation
    rows that map to zero rows span the (saturated) kernel lattice.
    """
    if m.cols == 0:
        return IntMatrix(())
    h, u = hermite_normal_form(m.transpose())
    zero_rows = [i for i in range(h.rows) if all(x == 0 for x in h.row(i))]
    return IntMatrix.from_rows([u.row(i) for i in zero_rows])


def row_space_hnf(m: IntMatrix) -> IntMatrix:
    """Canonical form of the row lattice: nonzero rows of the HNF."""
    h, _ = hermite_normal_form(m)
    return IntMatrix.from_rows([r for r in h.entries if any(x != 0 for x in r)])


def primitive(v) -> tuple[int, ...]:
    """Scale an integer vector to primitive form (gcd 1, orientation kept)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in v)
