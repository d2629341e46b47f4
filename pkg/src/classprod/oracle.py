"""Ground-truth class-product oracle over small GL_n(F_p).

Classes are enumerated as explicit sets by breadth-first closure under
conjugation by the unit transvections t_ij(1) (over a prime field these
generate the whole elementary group, so the orbit is the full class).
Matrices live as flat tuples of residues; sets store a canonical
little-endian base-p packing, so membership tests are integer hashing.

Product containment is decided classwise: a product of conjugation-closed
sets is conjugation-closed, so it contains the transvection class as soon
as it meets it, and one representative per class is enough to seed the
next fold.  Sign patterns whose determinant balance is off are skipped
outright.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import CentralMatrix, FieldMismatch, TooLarge
from .fields import PrimeField
from .matrix import Matrix

DEFAULT_CAP = 2_000_000

PLUS = 1
MINUS = -1


class GroupContext:
    """Flat-tuple arithmetic for n x n matrices over F_p."""

    def __init__(self, field: PrimeField, n: int, cap: int = DEFAULT_CAP):
        if field.kind != "Fp":
            raise FieldMismatch("the oracle works over prime fields only")
        self.field = field
        self.n = n
        self.p = field.p
        self.cap = cap
        self._powers = [self.p ** k for k in range(n * n)]
        # conjugation moves: one per unit transvection t_ij(1), 0-based
        self._moves = [(i, j) for i in range(n) for j in range(n) if i != j]
        flat = [0] * (n * n)
        for i in range(n):
            flat[i * n + i] = 1
        flat[1] = 1
        self.t12 = tuple(flat)

    # --- conversions ---

    def from_matrix(self, m: Matrix):
        if m.field != self.field or m.n != self.n:
            raise FieldMismatch("matrix does not match this context")
        return tuple(x.value for row in m.rows for x in row)

    def to_matrix(self, flat) -> Matrix:
        n = self.n
        return Matrix(self.field, [flat[i * n:(i + 1) * n] for i in range(n)])

    def pack(self, flat) -> int:
        code = 0
        for x, w in zip(flat, self._powers):
            code += x * w
        return code

    def unpack(self, code: int):
        p = self.p
        out = []
        for _ in range(self.n * self.n):
            out.append(code % p)
            code //= p
        return tuple(out)

    # --- arithmetic on flat tuples ---

    def mul(self, a, b):
        n, p = self.n, self.p
        out = [0] * (n * n)
        for i in range(n):
            ai = i * n
            for k in range(n):
                av = a[ai + k]
                if av:
                    bk = k * n
                    for j in range(n):
                        out[ai + j] += av * b[bk + j]
        return tuple(x % p for x in out)

    def det(self, a) -> int:
        n, p = self.n, self.p
        m = [list(a[i * n:(i + 1) * n]) for i in range(n)]
        det = 1
        for c in range(n):
            piv = None
            for r in range(c, n):
                if m[r][c] % p:
                    piv = r
                    break
            if piv is None:
                return 0
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                det = -det
            det = det * m[c][c] % p
            inv = pow(m[c][c], p - 2, p)
            for r in range(c + 1, n):
                f = m[r][c] * inv % p
                if f:
                    for k in range(c, n):
                        m[r][k] = (m[r][k] - f * m[c][k]) % p
        return det % p

    def inv(self, a):
        n, p = self.n, self.p
        m = [list(a[i * n:(i + 1) * n]) + [1 if j == i else 0 for j in range(n)]
             for i in range(n)]
        for c in range(n):
            piv = None
            for r in range(c, n):
                if m[r][c] % p:
                    piv = r
                    break
            if piv is None:
                raise ZeroDivisionError("singular matrix in oracle inverse")
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
            inv = pow(m[c][c], p - 2, p)
            m[c] = [x * inv % p for x in m[c]]
            for r in range(n):
                if r != c and m[r][c]:
                    f = m[r][c]
                    m[r] = [(x - f * y) % p for x, y in zip(m[r], m[c])]
        return tuple(m[i][n + j] for i in range(n) for j in range(n))

    def left_mul_t12(self, flat):
        """t_12(1) * flat: adds row 2 to row 1."""
        n, p = self.n, self.p
        out = list(flat)
        for k in range(n):
            out[k] = (out[k] + out[n + k]) % p
        return tuple(out)

    def conjugate_move(self, flat, move):
        """Conjugate by the unit transvection at ``move = (i, j)``."""
        i, j = move
        n, p = self.n, self.p
        out = list(flat)
        oi, oj = i * n, j * n
        for k in range(n):
            out[oi + k] = (out[oi + k] - out[oj + k]) % p
        for k in range(n):
            out[k * n + j] = (out[k * n + j] + out[k * n + i]) % p
        return tuple(out)

    def close_class(self, seed, into: set, cap: int | None = None):
        """BFS the conjugation orbit of ``seed`` into the packed-code set
        ``into``; returns the number of elements added."""
        cap = cap or self.cap
        moves = self._moves
        pack = self.pack
        conj = self.conjugate_move
        code = pack(seed)
        if code in into:
            return 0
        into.add(code)
        queue = deque([seed])
        added = 1
        while queue:
            cur = queue.popleft()
            for mv in moves:
                nxt = conj(cur, mv)
                c = pack(nxt)
                if c not in into:
                    into.add(c)
                    queue.append(nxt)
                    added += 1
                    if len(into) > cap:
                        raise TooLarge(
                            f"enumerated set exceeded the cap of {cap} elements")
        return added


@dataclass(frozen=True)
class ClassSet:
    """An enumerated conjugacy class: packed-code set plus metadata."""

    context: GroupContext
    representative: tuple
    elements: frozenset
    det: int

    @property
    def size(self) -> int:
        return len(self.elements)

    def contains(self, flat) -> bool:
        return self.context.pack(flat) in self.elements

    def inverse(self) -> "ClassSet":
        ctx = self.context
        inv_rep = ctx.inv(self.representative)
        elems = frozenset(ctx.pack(ctx.inv(ctx.unpack(c))) for c in self.elements)
        return ClassSet(ctx, inv_rep, elems, ctx.det(inv_rep))


@dataclass(frozen=True)
class OracleVerdict:
    m_min: int
    realizing_patterns: tuple


def enumerate_E_class(sigma: Matrix, cap: int = DEFAULT_CAP) -> ClassSet:
    """Enumerate the conjugation orbit of ``sigma`` under SL_n(F_p)."""
    ctx = GroupContext(sigma.field, sigma.n, cap)
    return _enumerate(ctx, ctx.from_matrix(sigma))


def _enumerate(ctx: GroupContext, seed) -> ClassSet:
    elems: set = set()
    ctx.close_class(seed, elems)
    return ClassSet(ctx, seed, frozenset(elems), ctx.det(seed))


class _ProductCache:
    """Lazily built product sets C^s1 * C^s2 with class representatives."""

    def __init__(self, ctx: GroupContext, cls: ClassSet):
        self.ctx = ctx
        self.sets = {PLUS: cls, MINUS: cls.inverse()}
        self.t_class = _enumerate(ctx, ctx.t12)
        self._pairs: dict = {}

    def single(self, sign: int) -> ClassSet:
        return self.sets[sign]

    def pair(self, s1: int, s2: int):
        """Return (packed element set, list of class representatives) of the
        product set C^s1 * C^s2."""
        key = (s1, s2)
        if key in self._pairs:
            return self._pairs[key]
        ctx = self.ctx
        left = self.sets[s1]
        right = self.sets[s2]
        elems: set = set()
        reps: list = []
        right_elems = [ctx.unpack(c) for c in right.elements]
        for c in right_elems:
            seed = ctx.mul(left.representative, c)
            if ctx.pack(seed) not in elems:
                ctx.close_class(seed, elems)
                reps.append(seed)
        result = (frozenset(elems), tuple(reps))
        self._pairs[key] = result
        return result


def _sign_patterns(length: int):
    out = [()]
    for _ in range(length):
        out = [p + (s,) for p in out for s in (PLUS, MINUS)]
    return out


def _det_order(p: int, d: int) -> int:
    k = 1
    acc = d % p
    while acc != 1:
        acc = acc * d % p
        k += 1
    return k


def class_product_contains_t(classes) -> bool:
    """Decide whether the product of the given classes contains the
    transvection class.  ``classes`` is a list of (ClassSet, sign) pairs
    over one context."""
    if not classes:
        return False
    ctx = classes[0][0].context
    for cls, _ in classes:
        if cls.context is not ctx and (cls.context.field != ctx.field
                                       or cls.context.n != ctx.n):
            raise FieldMismatch("classes live in different groups")
    sides = [(cls.inverse() if sign == MINUS else cls) for cls, sign in classes]
    t_class = _enumerate(ctx, ctx.t12)
    if len(sides) == 1:
        return ctx.pack(ctx.t12) in sides[0].elements
    # fold all but the last factor into a union of classes
    elems = set(sides[0].elements)
    reps = [sides[0].representative]
    for cls in sides[1:-1]:
        factor = [ctx.unpack(c) for c in cls.elements]
        new_elems: set = set()
        new_reps: list = []
        for r in reps:
            for c in factor:
                seed = ctx.mul(r, c)
                if ctx.pack(seed) not in new_elems:
                    ctx.close_class(seed, new_elems)
                    new_reps.append(seed)
        elems, reps = new_elems, new_reps
    last = sides[-1]
    t_elems = t_class.elements
    for r in reps:
        for c in last.elements:
            if ctx.pack(ctx.mul(r, ctx.unpack(c))) in t_elems:
                return True
    return False


def minimal_m_search(sigma: Matrix, cap: int = DEFAULT_CAP) -> OracleVerdict:
    """True minimal product length and all realizing sign patterns of that
    length, by exhaustive set products up to length 4."""
    if sigma.is_scalar():
        raise CentralMatrix("central classes have no verdict")
    ctx = GroupContext(sigma.field, sigma.n, cap)
    cls = _enumerate(ctx, ctx.from_matrix(sigma))
    cache = _ProductCache(ctx, cls)
    t_packed = ctx.pack(ctx.t12)
    t_elems = cache.t_class.elements
    det_ord = _det_order(ctx.p, cls.det)

    def feasible(pattern):
        return sum(pattern) % det_ord == 0

    def hits(pattern) -> bool:
        if not feasible(pattern):
            return False
        m = len(pattern)
        if m == 1:
            return t_packed in cache.single(pattern[0]).elements
        if m == 2:
            rep = cache.single(pattern[0]).representative
            right = cache.single(pattern[1])
            for c in right.elements:
                if ctx.pack(ctx.mul(rep, ctx.unpack(c))) in t_elems:
                    return True
            return False
        if m == 3:
            left, _ = cache.pair(pattern[0], pattern[1])
            right = cache.single(-pattern[2])
            for c in right.elements:
                if ctx.pack(ctx.left_mul_t12(ctx.unpack(c))) in left:
                    return True
            return False
        left, _ = cache.pair(pattern[0], pattern[1])
        right, _ = cache.pair(-pattern[3], -pattern[2])
        for c in right:
            if ctx.pack(ctx.left_mul_t12(ctx.unpack(c))) in left:
                return True
        return False

    for length in range(1, 5):
        realized = tuple(p for p in _sign_patterns(length) if hits(p))
        if realized:
            return OracleVerdict(length, realized)
    raise TooLarge("no pattern of length <= 4 hit; this should be impossible")


def all_classes(field: PrimeField, n: int, cap: int = DEFAULT_CAP):
    """Partition all of GL_n(F_p) into conjugation classes.

    Returns a list of ClassSet in the deterministic order their smallest
    packed representative appears.
    """
    ctx = GroupContext(field, n, cap)
    total_codes = field.p ** (n * n)
    if total_codes > max(cap * 32, 2_100_000):
        raise TooLarge(f"full scan of {total_codes} matrices exceeds the cap")
    seen: set = set()
    out = []
    for code in range(total_codes):
        if code in seen:
            continue
        flat = ctx.unpack(code)
        if ctx.det(flat) == 0:
            continue
        elems: set = set()
        ctx.close_class(flat, elems)
        seen |= elems
        out.append(ClassSet(ctx, flat, frozenset(elems), ctx.det(flat)))
    return out
