"""Exact square matrices and the elementary generators of SL_n.

Generator indices follow the algebraic convention and are 1-based:
``transvection(F, n, 1, 2, a)`` is the identity plus ``a`` in row 1,
column 2.  Raw entry access through ``entry(i, j)`` and ``rows`` is
0-based like everything else in Python.

Inverses and determinants use fraction-free (Bareiss) elimination, which
keeps intermediate values to minor-sized entries over Q and costs nothing
extra over F_p.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (BadIndices, DimensionMismatch, FieldMismatch, Singular,
                     VerificationFailed, ZeroParameter)
from .fields import Field, Scalar
from .poly import Poly


class Matrix:
    """Immutable square matrix over an exact field."""

    __slots__ = ("field", "n", "rows")

    def __init__(self, field: Field, rows):
        rows = tuple(tuple(field.scalar(x) for x in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise DimensionMismatch("matrix must be square")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # --- constructors ---

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, [[1 if i == j else 0 for j in range(n)]
                           for i in range(n)])

    @classmethod
    def zero(cls, field: Field, n: int) -> "Matrix":
        return cls(field, [[0] * n for _ in range(n)])

    @classmethod
    def scalar_matrix(cls, field: Field, n: int, c) -> "Matrix":
        c = field.scalar(c)
        return cls(field, [[c if i == j else 0 for j in range(n)]
                           for i in range(n)])

    @classmethod
    def diagonal(cls, field: Field, entries) -> "Matrix":
        entries = list(entries)
        n = len(entries)
        return cls(field, [[entries[i] if i == j else 0 for j in range(n)]
                           for i in range(n)])

    @classmethod
    def companion(cls, poly: Poly) -> "Matrix":
        """Companion matrix of a monic polynomial: subdiagonal ones and the
        negated coefficients down the last column."""
        from .errors import NotMonic
        if not poly.is_monic() or poly.degree() < 1:
            raise NotMonic("companion matrix needs a monic polynomial of degree >= 1")
        n = poly.degree()
        field = poly.field
        rows = [[field.zero for _ in range(n)] for _ in range(n)]
        for i in range(1, n):
            rows[i][i - 1] = field.one
        for i in range(n):
            rows[i][n - 1] = -poly.coefficient(i)
        return cls(field, rows)

    def direct_sum(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise FieldMismatch("direct sum over different fields")
        n, m = self.n, other.n
        z = self.field.zero
        rows = []
        for i in range(n):
            rows.append(list(self.rows[i]) + [z] * m)
        for i in range(m):
            rows.append([z] * n + list(other.rows[i]))
        return Matrix(self.field, rows)

    # --- queries ---

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i][j]

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.field, self.n)

    def is_scalar(self) -> bool:
        c = self.rows[0][0]
        for i in range(self.n):
            for j in range(self.n):
                want = c if i == j else self.field.zero
                if self.rows[i][j] != want:
                    return False
        return True

    def trace(self) -> Scalar:
        t = self.field.zero
        for i in range(self.n):
            t = t + self.rows[i][i]
        return t

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.n == other.n
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.rows))

    def __str__(self):
        return "[" + "; ".join(" ".join(str(x) for x in row)
                               for row in self.rows) + "]"

    def __repr__(self):
        return f"Matrix[{self.field}]({self})"

    # --- arithmetic ---

    def _check(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatch("matrices over different fields")
        if self.n != other.n:
            raise DimensionMismatch(f"dimensions {self.n} and {other.n} differ")

    def __mul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        n = self.n
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            new_row = []
            for col in cols:
                acc = self.field.zero
                for a, b in zip(row, col):
                    acc = acc + a * b
                new_row.append(acc)
            out.append(new_row)
        return Matrix(self.field, out)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(self.field,
                      [[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(self.field,
                      [[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, [[-a for a in row] for row in self.rows])

    def scale(self, c) -> "Matrix":
        c = self.field.scalar(c)
        return Matrix(self.field, [[c * a for a in row] for row in self.rows])

    def __pow__(self, k: int) -> "Matrix":
        if k < 0:
            return self.inverse() ** (-k)
        result = Matrix.identity(self.field, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def _bareiss_forward(self, augmented):
        """Fraction-free forward elimination on [self | augmented columns].

        Returns (rows, sign) with the left block upper triangular; its last
        diagonal entry is det(self) up to the recorded sign.  Raises
        Singular if the left block is rank deficient.
        """
        field = self.field
        n = self.n
        m = [list(self.rows[i]) + list(augmented[i]) for i in range(n)]
        width = len(m[0])
        sign = field.one
        prev = field.one
        for k in range(n):
            pivot_row = None
            for r in range(k, n):
                if not m[r][k].is_zero():
                    pivot_row = r
                    break
            if pivot_row is None:
                raise Singular("matrix is singular")
            if pivot_row != k:
                m[k], m[pivot_row] = m[pivot_row], m[k]
                sign = -sign
            pivot = m[k][k]
            for i in range(k + 1, n):
                head = m[i][k]
                for j in range(k + 1, width):
                    m[i][j] = (pivot * m[i][j] - head * m[k][j]) / prev
                m[i][k] = field.zero
            prev = pivot
        return m, sign

    def det(self) -> Scalar:
        field = self.field
        try:
            m, sign = self._bareiss_forward([[] for _ in range(self.n)])
        except Singular:
            return field.zero
        return sign * m[self.n - 1][self.n - 1]

    def inverse(self) -> "Matrix":
        field = self.field
        n = self.n
        ident = Matrix.identity(field, n)
        m, _ = self._bareiss_forward([list(ident.rows[i]) for i in range(n)])
        # back-substitution on the upper-triangular left block
        cols = []
        for c in range(n):
            x = [field.zero] * n
            for i in range(n - 1, -1, -1):
                acc = m[i][n + c]
                for j in range(i + 1, n):
                    acc = acc - m[i][j] * x[j]
                x[i] = acc / m[i][i]
            cols.append(x)
        return Matrix(field, [[cols[j][i] for j in range(n)] for i in range(n)])

    def conj(self, g: "Matrix") -> "Matrix":
        """Conjugate by g: returns g^-1 * self * g."""
        self._check(g)
        return g.inverse() * self * g

    # --- characteristic polynomial from principal minors ---

    def _submatrix(self, indices) -> "Matrix":
        return Matrix(self.field,
                      [[self.rows[i][j] for j in indices] for i in indices])

    def charpoly_minors(self) -> Poly:
        """Characteristic polynomial via signed sums of principal minors."""
        field = self.field
        n = self.n
        coeffs = [field.zero] * (n + 1)
        coeffs[n] = field.one
        sign = field.one
        for k in range(1, n + 1):
            sign = -sign
            acc = field.zero
            for idx in itertools.combinations(range(n), k):
                acc = acc + self._submatrix(idx).det()
            coeffs[n - k] = sign * acc
        return Poly(field, coeffs)


def commutator(g: Matrix, h: Matrix) -> Matrix:
    """g h g^-1 h^-1."""
    g._check(h)
    return g * h * g.inverse() * h.inverse()


# --- elementary generators (1-based indices) ---

def _check_indices(n, *idx, distinct=True):
    for i in idx:
        if not 1 <= i <= n:
            raise BadIndices(f"index {i} outside 1..{n}")
    if distinct and len(set(idx)) != len(idx):
        raise BadIndices(f"indices {idx} must be distinct")


def transvection(field: Field, n: int, i: int, j: int, a) -> Matrix:
    """t_ij(a): identity plus a at position (i, j)."""
    _check_indices(n, i, j)
    a = field.scalar(a)
    rows = [[field.one if r == c else field.zero for c in range(n)]
            for r in range(n)]
    rows[i - 1][j - 1] = a
    return Matrix(field, rows)


def diag_one(field: Field, n: int, i: int, a) -> Matrix:
    """d_i(a): identity with a at position (i, i); determinant a."""
    _check_indices(n, i)
    a = field.scalar(a)
    if a.is_zero():
        raise ZeroParameter("d_i(a) needs a != 0")
    rows = [[field.one if r == c else field.zero for c in range(n)]
            for r in range(n)]
    rows[i - 1][i - 1] = a
    return Matrix(field, rows)


def diag_pair(field: Field, n: int, i: int, j: int, a) -> Matrix:
    """d_ij(a): a at (i, i) and a^-1 at (j, j); determinant 1."""
    _check_indices(n, i, j)
    a = field.scalar(a)
    if a.is_zero():
        raise ZeroParameter("d_ij(a) needs a != 0")
    rows = [[field.one if r == c else field.zero for c in range(n)]
            for r in range(n)]
    rows[i - 1][i - 1] = a
    rows[j - 1][j - 1] = a.inverse()
    return Matrix(field, rows)


def perm(field: Field, n: int, i: int, j: int) -> Matrix:
    """p_ij: the transposition permutation matrix; determinant -1."""
    _check_indices(n, i, j)
    rows = [[field.one if r == c else field.zero for c in range(n)]
            for r in range(n)]
    rows[i - 1][i - 1] = field.zero
    rows[j - 1][j - 1] = field.zero
    rows[i - 1][j - 1] = field.one
    rows[j - 1][i - 1] = field.one
    return Matrix(field, rows)


def signed_perm(field: Field, n: int, i: int, j: int) -> Matrix:
    """p-hat_ij: transposition with one sign flip; determinant 1."""
    _check_indices(n, i, j)
    rows = [[field.one if r == c else field.zero for c in range(n)]
            for r in range(n)]
    rows[i - 1][i - 1] = field.zero
    rows[j - 1][j - 1] = field.zero
    rows[i - 1][j - 1] = field.one
    rows[j - 1][i - 1] = -field.one
    return Matrix(field, rows)


@dataclass(frozen=True)
class ElemGen:
    """A symbolic elementary generator; ``matrix()`` realizes it."""

    kind: str  # "transvection" | "diag_one" | "diag_pair" | "perm" | "signed_perm"
    n: int
    i: int
    j: int | None = None
    a: object = None

    def matrix(self, field: Field) -> Matrix:
        if self.kind == "transvection":
            return transvection(field, self.n, self.i, self.j, self.a)
        if self.kind == "diag_one":
            return diag_one(field, self.n, self.i, self.a)
        if self.kind == "diag_pair":
            return diag_pair(field, self.n, self.i, self.j, self.a)
        if self.kind == "perm":
            return perm(field, self.n, self.i, self.j)
        if self.kind == "signed_perm":
            return signed_perm(field, self.n, self.i, self.j)
        raise ValueError(f"unknown generator kind {self.kind!r}")


def _transvection_shape(m: Matrix):
    """If m equals t_kl(c) for some k != l, c != 0, return (k, l, c) 1-based."""
    n = m.n
    hit = None
    for i in range(n):
        for j in range(n):
            want_one = i == j
            v = m.rows[i][j]
            if want_one:
                if not v.is_one():
                    return None
            elif not v.is_zero():
                if hit is not None:
                    return None
                hit = (i + 1, j + 1, v)
    return hit


def transvection_normalizer(field: Field, n: int, i: int, j: int, a) -> Matrix:
    """A determinant-1 matrix conjugating t_ij(a) into t_12(1).

    Built from signed transpositions that move the slot to (1, 2) followed
    by one diagonal rescale; the result is verified exactly.
    """
    if n < 3:
        raise BadIndices("normalization into t_12(1) needs n >= 3")
    _check_indices(n, i, j)
    a = field.scalar(a)
    if a.is_zero():
        raise ZeroParameter("cannot normalize the identity")
    eps = Matrix.identity(field, n)
    cur = transvection(field, n, i, j, a)

    def step(g):
        nonlocal eps, cur
        eps = eps * g
        cur = cur.conj(g)

    k, l, _ = _transvection_shape(cur)
    if k != 1:
        step(signed_perm(field, n, 1, k))
        k, l, _ = _transvection_shape(cur)
    if l != 2:
        step(signed_perm(field, n, 2, l))
    k, l, c = _transvection_shape(cur)
    if not c.is_one():
        step(diag_pair(field, n, 2, 3, c.inverse()))
    if cur != transvection(field, n, 1, 2, 1) or not eps.det().is_one():
        raise VerificationFailed("transvection normalization failed its check")
    return eps
