"""Canonical forms: Smith normal form over K[X], invariant factors,
Frobenius (rational canonical) form, elementary divisors and the
generalized Jordan form, all with explicit, exactly verified transforms.

The Smith reduction is the textbook one with deterministic pivoting:
the nonzero entry of minimal degree wins, ties broken row-major.  The
similarity transform for the Frobenius form is read off the inverse row
transform of the Smith reduction of the characteristic matrix: its
columns, evaluated on the matrix, generate the cyclic decomposition.
Every emitted transform is re-checked by exact multiplication; a failed
check is a hard error, never a silent fallback.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (BrokenChain, DimensionMismatch, FieldMismatch,
                     Singular, VerificationFailed)
from .fields import Field
from .matrix import Matrix
from .poly import Poly, factor_completely, poly_divmod


class PolyMat:
    """Square matrix with polynomial entries."""

    __slots__ = ("field", "n", "rows")

    def __init__(self, field: Field, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("polynomial matrix must be square")
        for r in rows:
            for p in r:
                if not isinstance(p, Poly) or p.field != field:
                    raise FieldMismatch("entry field mismatch")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMat is immutable")

    @classmethod
    def identity(cls, field: Field, n: int) -> "PolyMat":
        one = Poly.one(field)
        zero = Poly.zero(field)
        return cls(field, [[one if i == j else zero for j in range(n)]
                           for i in range(n)])

    @classmethod
    def characteristic(cls, sigma: Matrix) -> "PolyMat":
        """X*e - sigma."""
        field = sigma.field
        x = Poly.x(field)
        rows = []
        for i in range(sigma.n):
            row = []
            for j in range(sigma.n):
                c = Poly.constant(field, -sigma.rows[i][j])
                row.append(x + c if i == j else c)
            rows.append(row)
        return cls(field, rows)

    def __mul__(self, other: "PolyMat") -> "PolyMat":
        if self.n != other.n or self.field != other.field:
            raise DimensionMismatch("polynomial matrix product mismatch")
        cols = list(zip(*other.rows))
        zero = Poly.zero(self.field)
        out = []
        for row in self.rows:
            new_row = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    if not (a.is_zero() or b.is_zero()):
                        acc = acc + a * b
                new_row.append(acc)
            out.append(new_row)
        return PolyMat(self.field, out)

    def __eq__(self, other):
        if not isinstance(other, PolyMat):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def det(self) -> Poly:
        """Determinant by minor expansion (division-free; test-scale sizes)."""
        n = self.n
        memo = {}

        def minor(row, cols):
            if row == n:
                return Poly.one(self.field)
            key = cols
            got = memo.get((row, key))
            if got is not None:
                return got
            acc = Poly.zero(self.field)
            sign = 1
            for pos, c in enumerate(cols):
                entry = self.rows[row][c]
                if not entry.is_zero():
                    rest = cols[:pos] + cols[pos + 1:]
                    term = entry * minor(row + 1, rest)
                    acc = acc + (term if sign > 0 else -term)
                sign = -sign
            memo[(row, key)] = acc
            return acc

        return minor(0, tuple(range(n)))

    def is_unimodular(self) -> bool:
        d = self.det()
        return d.is_constant() and not d.is_zero()


@dataclass(frozen=True)
class SNFResult:
    """Diagonalization U * A * V = D with unimodular U, V.

    ``diag`` lists the monic diagonal entries in divisibility order
    (constants normalized to 1).  ``u_inverse`` is maintained alongside the
    reduction and satisfies ``u_inverse * U = identity``.
    """

    matrix: PolyMat
    d: PolyMat
    u: PolyMat
    v: PolyMat
    u_inverse: PolyMat
    diag: tuple

    def verify(self) -> bool:
        return (self.u * self.matrix * self.v == self.d
                and self.u.is_unimodular()
                and self.v.is_unimodular())


def smith_normal_form(a: PolyMat) -> SNFResult:
    """Smith normal form over K[X] with transformation matrices."""
    field = a.field
    n = a.n
    m = [list(row) for row in a.rows]
    zero = Poly.zero(field)
    one = Poly.one(field)
    u = [[one if i == j else zero for j in range(n)] for i in range(n)]
    uinv = [[one if i == j else zero for j in range(n)] for i in range(n)]
    v = [[one if i == j else zero for j in range(n)] for i in range(n)]

    def swap_rows(r, s):
        m[r], m[s] = m[s], m[r]
        u[r], u[s] = u[s], u[r]
        for row in uinv:
            row[r], row[s] = row[s], row[r]

    def swap_cols(r, s):
        for row in m:
            row[r], row[s] = row[s], row[r]
        for row in v:
            row[r], row[s] = row[s], row[r]

    def row_sub(i, t, q):
        # row_i -= q * row_t
        for col in range(n):
            if not m[t][col].is_zero():
                m[i][col] = m[i][col] - q * m[t][col]
            if not u[t][col].is_zero():
                u[i][col] = u[i][col] - q * u[t][col]
        for row in uinv:
            if not row[i].is_zero():
                row[t] = row[t] + q * row[i]

    def row_add(t, i):
        # row_t += row_i
        for col in range(n):
            m[t][col] = m[t][col] + m[i][col]
            u[t][col] = u[t][col] + u[i][col]
        for row in uinv:
            row[i] = row[i] - row[t]

    def col_sub(j, t, q):
        # col_j -= q * col_t
        for row in m:
            if not row[t].is_zero():
                row[j] = row[j] - q * row[t]
        for row in v:
            if not row[t].is_zero():
                row[j] = row[j] - q * row[t]

    def scale_row(t, c):
        for col in range(n):
            m[t][col] = m[t][col] * c
            u[t][col] = u[t][col] * c
        cinv = c.inverse()
        for row in uinv:
            row[t] = row[t] * cinv

    def find_pivot(t):
        best = None
        for i in range(t, n):
            for j in range(t, n):
                if m[i][j].is_zero():
                    continue
                if best is None or m[i][j].degree() < m[best[0]][best[1]].degree():
                    best = (i, j)
        return best

    for t in range(n):
        while True:
            pos = find_pivot(t)
            if pos is None:
                break
            if pos != (t, t):
                if pos[0] != t:
                    swap_rows(pos[0], t)
                if pos[1] != t:
                    swap_cols(pos[1], t)
            # clear column t, re-pivoting whenever a remainder survives
            restart = False
            for i in range(t + 1, n):
                if m[i][t].is_zero():
                    continue
                q, r = poly_divmod(m[i][t], m[t][t])
                row_sub(i, t, q)
                if not r.is_zero():
                    restart = True
            if restart:
                continue
            for j in range(t + 1, n):
                if m[t][j].is_zero():
                    continue
                q, r = poly_divmod(m[t][j], m[t][t])
                col_sub(j, t, q)
                if not r.is_zero():
                    restart = True
            if restart:
                continue
            # pivot must divide the whole trailing block
            offender = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if m[i][j].is_zero():
                        continue
                    _, r = poly_divmod(m[i][j], m[t][t])
                    if not r.is_zero():
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_add(t, offender)

    for t in range(n):
        if not m[t][t].is_zero() and not m[t][t].is_monic():
            scale_row(t, m[t][t].leading().inverse())

    diag = tuple(m[t][t] for t in range(n))
    for t in range(n - 1):
        if not diag[t].divides(diag[t + 1]):
            raise VerificationFailed("Smith diagonal violates the divisibility chain")
    return SNFResult(matrix=a,
                     d=PolyMat(field, m),
                     u=PolyMat(field, u),
                     v=PolyMat(field, v),
                     u_inverse=PolyMat(field, uinv),
                     diag=diag)


# --- invariant factors and the Frobenius form ---

def invariant_factors(sigma: Matrix) -> list[Poly]:
    """Nonconstant monic diagonal entries of the Smith form of X*e - sigma,
    in divisibility order."""
    snf = smith_normal_form(PolyMat.characteristic(sigma))
    return [p for p in snf.diag if not p.is_constant()]


def poly_at_matrix(p: Poly, sigma: Matrix) -> Matrix:
    """Evaluate a polynomial at a matrix (Horner)."""
    field = sigma.field
    acc = Matrix.zero(field, sigma.n)
    ident = Matrix.identity(field, sigma.n)
    for c in reversed(p.coeffs):
        acc = acc * sigma + ident.scale(c)
    return acc


def _poly_times_vector(p: Poly, sigma: Matrix, vec):
    field = sigma.field
    acc = [field.zero] * sigma.n
    for c in reversed(p.coeffs):
        acc = _mat_vec(sigma, acc)
        acc = [a + c * b for a, b in zip(acc, vec)]
    return acc


def _mat_vec(sigma: Matrix, vec):
    return [sum((a * b for a, b in zip(row, vec)), start=sigma.field.zero)
            for row in sigma.rows]


@dataclass(frozen=True)
class FrobeniusData:
    """Frobenius form with a verified similarity transform.

    ``transform`` P satisfies P^-1 * sigma * P == form exactly.
    """

    invariant_factors: tuple
    form: Matrix
    transform: Matrix
    generators: tuple  # cyclic generator vectors, one per invariant factor

    @property
    def is_transvection_class(self) -> bool:
        field = self.form.field
        facs = self.invariant_factors
        if not facs:
            return False
        lin = Poly.linear(field, 1)
        sq = lin * lin
        return all(p == lin for p in facs[:-1]) and facs[-1] == sq


def _module_generators(sigma: Matrix, snf: SNFResult):
    """Cyclic generators of K^n as a K[X]-module, one per diagonal entry."""
    field = sigma.field
    n = sigma.n
    gens = []
    for i in range(n):
        vec = [field.zero] * n
        for j in range(n):
            q = snf.u_inverse.rows[j][i]
            if q.is_zero():
                continue
            basis = [field.zero] * n
            basis[j] = field.one
            contrib = _poly_times_vector(q, sigma, basis)
            vec = [a + b for a, b in zip(vec, contrib)]
        gens.append(vec)
    return gens


def frobenius_form(sigma: Matrix) -> FrobeniusData:
    """Rational canonical form of sigma with an exact similarity transform."""
    field = sigma.field
    n = sigma.n
    snf = smith_normal_form(PolyMat.characteristic(sigma))
    if any(p.is_zero() for p in snf.diag):
        raise Singular("characteristic matrix degenerated; input not square-proper")
    gens = _module_generators(sigma, snf)
    columns = []
    factors = []
    generators = []
    blocks = []
    for i in range(n):
        d = snf.diag[i]
        if d.is_constant():
            continue
        factors.append(d)
        generators.append(tuple(gens[i]))
        vec = gens[i]
        for _ in range(d.degree()):
            columns.append(vec)
            vec = _mat_vec(sigma, vec)
        blocks.append(Matrix.companion(d))
    transform = Matrix(field, [[columns[j][i] for j in range(n)]
                               for i in range(n)])
    form = blocks[0]
    for b in blocks[1:]:
        form = form.direct_sum(b)
    if transform.inverse() * sigma * transform != form:
        raise VerificationFailed("Frobenius transform failed its exact check")
    return FrobeniusData(invariant_factors=tuple(factors), form=form,
                         transform=transform, generators=tuple(generators))


def is_similar(sigma: Matrix, tau: Matrix) -> bool:
    """Similarity via equality of invariant factor lists."""
    if sigma.field != tau.field:
        raise FieldMismatch("similarity over different fields")
    if sigma.n != tau.n:
        raise DimensionMismatch("similarity needs equal dimensions")
    return invariant_factors(sigma) == invariant_factors(tau)


def solve_similarity(sigma: Matrix, tau: Matrix) -> Matrix:
    """Some g with g^-1 * sigma * g == tau, via both Frobenius transforms."""
    from .errors import NotSimilar
    if not is_similar(sigma, tau):
        raise NotSimilar("matrices have different invariant factors")
    fs = frobenius_form(sigma)
    ft = frobenius_form(tau)
    g = fs.transform * ft.transform.inverse()
    if g.inverse() * sigma * g != tau:
        raise VerificationFailed("similarity transform failed its exact check")
    return g


# --- elementary divisors and the generalized Jordan form ---

def elementary_divisors(sigma: Matrix) -> list[tuple[Poly, int]]:
    """Multiset of (irreducible monic P, power q), sorted by polynomial then
    descending power.  Raises FactorizationUnavailable when an invariant
    factor over Q resists the provided tests."""
    out = []
    for p in invariant_factors(sigma):
        for irr, mult in factor_completely(p):
            out.append((irr, mult))
    out.sort(key=lambda pair: (pair[0].sort_key(), -pair[1]))
    return out


def jordan_block(p: Poly, q: int) -> Matrix:
    """Generalized Jordan block: q companion blocks of an irreducible monic
    polynomial chained by corner-one coupling blocks on the subdiagonal."""
    field = p.field
    d = p.degree()
    block = Matrix.companion(p)
    j = block
    for _ in range(q - 1):
        j = j.direct_sum(block)
    rows = [list(r) for r in j.rows]
    for k in range(1, q):
        rows[k * d][k * d - 1] = field.one
    return Matrix(field, rows)


@dataclass(frozen=True)
class JordanData:
    """Generalized Jordan form with a verified transform."""

    elementary_divisors: tuple  # ((irreducible Poly, power), ...) in block order
    form: Matrix
    transform: Matrix


def jordan_form(sigma: Matrix) -> JordanData:
    """Generalized Jordan form with blocks sorted deterministically and an
    exact similarity transform."""
    field = sigma.field
    n = sigma.n
    snf = smith_normal_form(PolyMat.characteristic(sigma))
    gens = _module_generators(sigma, snf)
    pieces = []  # (irreducible, power, generator vector of that primary part)
    for i in range(n):
        d = snf.diag[i]
        if d.is_constant():
            continue
        for irr, mult in factor_completely(d):
            cof, _ = poly_divmod(d, irr ** mult)
            w = _poly_times_vector(cof, sigma, gens[i])
            pieces.append((irr, mult, w))
    pieces.sort(key=lambda t: (t[0].sort_key(), -t[1]))
    columns = []
    blocks = []
    divisors = []
    for irr, mult, w in pieces:
        divisors.append((irr, mult))
        blocks.append(jordan_block(irr, mult))
        chain_seed = w
        for _ in range(mult):
            vec = chain_seed
            for _ in range(irr.degree()):
                columns.append(vec)
                vec = _mat_vec(sigma, vec)
            chain_seed = _poly_times_vector(irr, sigma, chain_seed)
    form = blocks[0]
    for b in blocks[1:]:
        form = form.direct_sum(b)
    transform = Matrix(field, [[columns[j][i] for j in range(n)]
                               for i in range(n)])
    if transform.inverse() * sigma * transform != form:
        raise VerificationFailed("Jordan transform failed its exact check")
    return JordanData(elementary_divisors=tuple(divisors), form=form,
                      transform=transform)


def assert_divisibility_chain(factors) -> None:
    """Validate that consecutive entries divide each other."""
    for a, b in zip(factors, factors[1:]):
        if not a.divides(b):
            raise BrokenChain(f"{a} does not divide {b}")
