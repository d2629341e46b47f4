"""The stable (direct-limit) layer: representatives modulo top-left
identity padding, the padding rule for invariant factors, stabilized
Frobenius data, and the collapsed two-value verdict.

A stable element is stored through its minimal representative: the matrix
left after stripping every leading identity row/column pair.  Padding a
matrix by one identity slot transforms its invariant-factor chain by a
purely combinatorial rule, so the stabilized chain is computed on chains,
then cross-checked against direct Smith reduction in the tests.

In the stable group every noncentral class reaches the transvection class
with at most two factors: one step of padding hands the characteristic
polynomial the root 1, and the finite root construction applies in the
padded dimension.  stable_m returns that embedded, fully verified witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import Exact, MReport
from .errors import BrokenChain, CentralElement, Singular, VerificationFailed
from .matrix import Matrix
from .normalforms import invariant_factors
from .poly import Poly
from .witness import PLUS, MINUS, Witness, witness_m1, witness_root


@dataclass(frozen=True)
class StableElement:
    """An invertible stable-group element via its minimal representative."""

    rep: Matrix
    n_min: int

    @classmethod
    def from_matrix(cls, m: Matrix) -> "StableElement":
        if m.det().is_zero():
            raise Singular("stable elements must be invertible")
        n = m.n
        k = 0
        while k < n - 1 and _leading_slot_trivial(m, k):
            k += 1
        rep = Matrix(m.field, [[m.rows[i][j] for j in range(k, n)]
                               for i in range(k, n)])
        return cls(rep=rep, n_min=n - k)

    @property
    def field(self):
        return self.rep.field

    def is_central(self) -> bool:
        return self.rep.is_identity()

    def representative(self, n: int) -> Matrix:
        """The unique representative in dimension n >= n_min."""
        if n < self.n_min:
            raise ValueError(f"no representative below dimension {self.n_min}")
        if n == self.n_min:
            return self.rep
        return Matrix.identity(self.field, n - self.n_min).direct_sum(self.rep)

    def __eq__(self, other):
        if not isinstance(other, StableElement):
            return NotImplemented
        return self.rep == other.rep and self.n_min == other.n_min


def _leading_slot_trivial(m: Matrix, k: int) -> bool:
    for j in range(m.n):
        want = m.field.one if j == k else m.field.zero
        if m.rows[k][j] != want or m.rows[j][k] != want:
            return False
    return True


def pad_rule(factors) -> list[Poly]:
    """Invariant factors of (1) (+) sigma from those of sigma.

    With P_0 = 1 and P_{r+1} = P_r * (X - 1), the first index j whose
    P_j * (X - 1) divides P_{j+1} is the slot that absorbs the new factor;
    index 0 inserts a fresh X - 1 at the front.
    """
    factors = list(factors)
    if not factors:
        raise BrokenChain("empty invariant factor chain")
    field = factors[0].field
    for a, b in zip(factors, factors[1:]):
        if not a.divides(b):
            raise BrokenChain(f"{a} does not divide {b}")
    lin = Poly.linear(field, 1)
    r = len(factors)
    for j in range(r + 1):
        pj = factors[j - 1] if j > 0 else Poly.one(field)
        pj1 = factors[j] if j < r else factors[-1] * lin
        if (pj * lin).divides(pj1):
            if j == 0:
                return [lin] + factors
            return factors[:j - 1] + [factors[j - 1] * lin] + factors[j:]
    raise BrokenChain("padding rule found no slot; chain must be invalid")


@dataclass(frozen=True)
class StableFrobenius:
    """Stabilized invariant factors (leading X-1 entries stripped) plus the
    dimension index where the chain stops changing shape."""

    invariant_factors: tuple
    stabilization_index: int

    def is_transvection_class(self) -> bool:
        if len(self.invariant_factors) != 1:
            return False
        p = self.invariant_factors[0]
        lin = Poly.linear(p.field, 1)
        return p == lin * lin


def stable_frobenius(x: StableElement) -> StableFrobenius:
    """Iterate the padding rule until it only prepends X - 1, then strip."""
    chain = list(invariant_factors(x.rep))
    lin = Poly.linear(x.field, 1)
    steps = 0
    limit = x.n_min + len(chain) + 4
    while pad_rule(chain) != [lin] + chain:
        chain = pad_rule(chain)
        steps += 1
        if steps > limit:
            raise VerificationFailed("padding failed to stabilize; "
                                     "this should be impossible")
    while chain and chain[0] == lin:
        chain = chain[1:]
    return StableFrobenius(tuple(chain), x.n_min + steps)


def stable_is_similar(x: StableElement, y: StableElement) -> bool:
    if x.field != y.field:
        return False
    return (stable_frobenius(x).invariant_factors
            == stable_frobenius(y).invariant_factors)


@dataclass(frozen=True)
class StableVerdict:
    """Stable classification with an embedded finite witness."""

    report: MReport
    stable_form: StableFrobenius
    witness: Witness
    witness_dim: int


def stable_m(x: StableElement) -> StableVerdict:
    """Exact stable verdict: 1 on the transvection class, else 2, each with
    a finite verified witness in the smallest usable dimension."""
    if x.is_central():
        raise CentralElement("the identity class has no verdict")
    sf = stable_frobenius(x)
    if sf.is_transvection_class():
        dim = max(x.n_min, 3)
        w = witness_m1(x.representative(dim))
        report = MReport(Exact(1, (PLUS,)), "stable-t",
                         "stabilized form is the transvection class")
        return StableVerdict(report, sf, w, dim)
    dim = max(x.n_min + 1, 3)
    w = witness_root(x.representative(dim), root=1)
    report = MReport(Exact(2, (PLUS, MINUS)), "stable-root",
                     "identity padding gives the characteristic polynomial "
                     "the root 1")
    return StableVerdict(report, sf, w, dim)
