"""Synthesis of verified product decompositions of the unit transvection.

A witness for sigma is an ordered list of (sign, conjugator) pairs with
every conjugator of determinant 1 whose evaluated product

    (sigma^s1)^g1 * (sigma^s2)^g2 * ... == t_12(1)

holds exactly.  Constructions follow a fixed recipe per classifier case:
reduce to an arranged block form, produce the identity there with
elementary conjugators, then pull the whole equation back to the original
matrix.  Every intermediate identity is re-checked; a failed check raises
instead of emitting a wrong witness, and the final object is verified as a
whole before it is returned.

Conjugator bookkeeping uses two facts valid for n >= 3: t_12(1) commutes
with the last-slot dilation d_n(x), so a conjugator reaching t_12(1) can
be corrected into SL by one dilation, and any invertible g splits as
(SL element) * d_n(det g), which transports whole witnesses along
arbitrary similarity transforms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import classify_m_general, classify_m_n3, describe_class
from .errors import (CentralMatrix, HasDegreeOneFactor, NoRoot, NotInT,
                     PreconditionViolated, ShapeMismatch, SynthesisFailed,
                     VerificationFailed)
from .fields import Field
from .matrix import (Matrix, diag_one, diag_pair, perm, signed_perm,
                     transvection, transvection_normalizer)
from .normalforms import (frobenius_form, invariant_factors, jordan_block,
                          solve_similarity)
from .poly import Poly, roots_in_field, strip_root

PLUS = 1
MINUS = -1


@dataclass(frozen=True)
class Witness:
    """A verified decomposition t_12(1) = prod (sigma^sign)^conjugator."""

    sigma: Matrix
    factors: tuple  # ((sign, conjugator Matrix), ...)
    case_tag: str

    @property
    def length(self) -> int:
        return len(self.factors)

    @property
    def signs(self) -> tuple:
        return tuple(s for s, _ in self.factors)

    def target(self) -> Matrix:
        return transvection(self.sigma.field, self.sigma.n, 1, 2, 1)

    def product(self) -> Matrix:
        sigma_inv = None
        acc = Matrix.identity(self.sigma.field, self.sigma.n)
        for sign, g in self.factors:
            if sign == PLUS:
                base = self.sigma
            else:
                if sigma_inv is None:
                    sigma_inv = self.sigma.inverse()
                base = sigma_inv
            acc = acc * base.conj(g)
        return acc


def verify_witness(w: Witness) -> bool:
    """Exact validity check: SL conjugators and product equal to t_12(1)."""
    one = w.sigma.field.one
    for _, g in w.factors:
        if g.det() != one:
            return False
    return w.product() == w.target()


def _finalize(sigma: Matrix, factors, case_tag: str) -> Witness:
    w = Witness(sigma, tuple(factors), case_tag)
    if not verify_witness(w):
        raise VerificationFailed(f"witness construction for case {case_tag} "
                                 "failed its exact check")
    return w


def to_E_conjugators(base: Witness, sigma: Matrix, g: Matrix) -> Witness:
    """Transport a witness for tau = g^-1 * sigma * g to one for sigma.

    Splits g = eps * d_n(det g) and rewrites each conjugator as
    eps * d * conj * d^-1, which stays in SL and preserves the product
    because the target commutes with d_n.
    """
    if not verify_witness(base):
        raise VerificationFailed("refusing to transport an unverified witness")
    if sigma.conj(g) != base.sigma:
        raise PreconditionViolated("g does not conjugate sigma onto the base matrix")
    field = sigma.field
    n = sigma.n
    d = diag_one(field, n, n, g.det())
    d_inv = d.inverse()
    eps = g * d_inv
    new_factors = [(sign, eps * d * conj * d_inv) for sign, conj in base.factors]
    return _finalize(sigma, new_factors, base.case_tag)


def _sl_correct(rho: Matrix) -> Matrix:
    """Divide out the determinant through the last slot: rho * d_n(det)^-1."""
    field = rho.field
    return rho * diag_one(field, rho.n, rho.n, rho.det().inverse())


def _conjugator_to_t12(sigma: Matrix) -> Matrix:
    """An SL matrix eps with sigma^eps == t_12(1), for sigma in the
    transvection class."""
    field = sigma.field
    n = sigma.n
    t = transvection(field, n, 1, 2, 1)
    rho = solve_similarity(sigma, t)
    eps = _sl_correct(rho)
    if sigma.conj(eps) != t or not eps.det().is_one():
        raise VerificationFailed("SL correction toward t_12(1) failed")
    return eps


def witness_m1(sigma: Matrix) -> Witness:
    """Length-1 witness for members of the transvection class."""
    desc = describe_class(sigma)
    if not desc.is_transvection_class:
        raise NotInT("matrix is not in the transvection class")
    eps = _conjugator_to_t12(sigma)
    return _finalize(sigma, [(PLUS, eps)], "m1")


# --- the root construction: length 2, pattern (+, -) ---

def _root_arrangement(sigma: Matrix, a):
    """Arranged form rho = J((X-a)^q) (+) Frobenius(complement) together
    with the complement's invariant factors."""
    field = sigma.field
    facs = invariant_factors(sigma)
    stripped = [strip_root(p, a) for p in facs]
    powers = [k for _, k in stripped]
    q = powers[-1]
    if q == 0:
        raise NoRoot(f"{a} is not a root of the invariant factors")
    lin = Poly.linear(field, a)
    complement = []
    for i, (cof, _) in enumerate(stripped):
        prev_power = powers[i - 1] if i > 0 else 0
        p = cof * lin ** prev_power
        if not p.is_constant():
            complement.append(p)
    return q, complement


def _blocks_matrix(field, blocks):
    acc = None
    for b in blocks:
        acc = b if acc is None else acc.direct_sum(b)
    return acc


def witness_root(sigma: Matrix, root=None) -> Witness:
    """Length-2 witness (+, -) from a root of the characteristic polynomial."""
    desc = describe_class(sigma)
    field = sigma.field
    n = sigma.n
    roots = roots_in_field(desc.charpoly)
    if root is not None:
        root = field.scalar(root)
        if not desc.charpoly.evaluate(root).is_zero():
            raise NoRoot(f"{root} is not a root")
        a = root
    elif roots:
        a = roots[0]
    else:
        raise NoRoot("characteristic polynomial has no root in the field")
    q, complement = _root_arrangement(sigma, a)
    comp_degrees = [p.degree() for p in complement]

    def arranged(blocks):
        j = jordan_block(Poly.linear(field, a), q)
        rest = _blocks_matrix(field, [Matrix.companion(p) for p in blocks])
        return j if rest is None else j.direct_sum(rest)

    if q == 1:
        if complement and all(d == 1 for d in comp_degrees):
            # diagonal case: rho = diag(a, b, ..., b)
            b = -complement[-1].coefficient(0)
            rho = arranged(complement)
            u = transvection(field, n, 1, 2, 1)
            pre = Matrix.identity(field, n)
            k, l, val = 1, 2, a * b.inverse() - 1
        else:
            m = next(i for i, d in enumerate(comp_degrees) if d >= 2)
            order = [complement[m]] + complement[:m] + complement[m + 1:]
            rho = arranged(order)
            pre = transvection(field, n, 2, 3, -a)
            u = transvection(field, n, 2, 1, 1)
            k, l, val = 3, 1, a.inverse()
    elif q == 2:
        if complement and all(d == 1 for d in comp_degrees):
            b = -complement[-1].coefficient(0)
            rho = arranged(complement)
            pre = transvection(field, n, 1, 2, a - b)
            u = transvection(field, n, 1, 3, 1)
            k, l, val = 2, 3, b.inverse()
        else:
            m = next(i for i, d in enumerate(comp_degrees) if d >= 2)
            order = [complement[m]] + complement[:m] + complement[m + 1:]
            rho = arranged(order)
            pre = transvection(field, n, 3, 4, -a)
            u = transvection(field, n, 3, 1, 1)
            k, l, val = 4, 1, a.inverse()
    else:
        rho = arranged(complement)
        pre = Matrix.identity(field, n)
        u = transvection(field, n, 2, 1, 1)
        k, l, val = 3, 1, a.inverse()

    if val.is_zero():
        raise VerificationFailed("degenerate commutator parameter; matrix "
                                 "should have been rejected as central")
    # [rho^pre, u] = rho^pre * (rho^-1)^(pre * u^-1) realizes t_kl(val)
    norm = transvection_normalizer(field, n, k, l, val)
    factors = [(PLUS, pre * norm), (MINUS, pre * u.inverse() * norm)]
    base = _finalize(rho, factors, "root")
    g = solve_similarity(sigma, rho)
    return to_E_conjugators(base, sigma, g)


# --- the length-4 construction: pattern (+, -, +, -) ---

def _group_identity_factors(b: Matrix, c: Matrix):
    """Conjugators turning [[x, b], c] into the four-factor product
    x * (x^-1)^(b^-1) * x^(b^-1 c^-1) * (x^-1)^(c^-1)."""
    e = Matrix.identity(b.field, b.n)
    b_inv = b.inverse()
    c_inv = c.inverse()
    return [(PLUS, e), (MINUS, b_inv), (PLUS, b_inv * c_inv), (MINUS, c_inv)]


def witness_four(sigma: Matrix) -> Witness:
    """Length-4 witness for matrices whose invariant factors all have
    degree at least 2."""
    describe_class(sigma)
    field = sigma.field
    n = sigma.n
    facs = invariant_factors(sigma)
    if any(p.degree() == 1 for p in facs):
        raise HasDegreeOneFactor("a degree-1 invariant factor exists; "
                                 "use the root construction")
    degrees = [p.degree() for p in facs]
    if all(d == 2 for d in degrees):
        rho = _blocks_matrix(field, [Matrix.companion(p) for p in facs])
        a0 = rho.entry(0, 1)  # top entry of the companion column
        b = transvection(field, n, 1, 4, 1)
        c = transvection(field, n, 1, 2, 1)
        k, l, val = 1, 3, -a0.inverse()
    else:
        m = next(i for i, d in enumerate(degrees) if d >= 3)
        order = [facs[m]] + facs[:m] + facs[m + 1:]
        rho = _blocks_matrix(field, [Matrix.companion(p) for p in order])
        t = degrees[m]
        a0 = rho.entry(0, t - 1)
        b = c = transvection(field, n, t - 1, t, 1)
        k, l, val = t - 1, 1, -a0.inverse()
    norm = transvection_normalizer(field, n, k, l, val)
    factors = [(s, g * norm) for s, g in _group_identity_factors(b, c)]
    base = _finalize(rho, factors, "four")
    g = solve_similarity(sigma, rho)
    return to_E_conjugators(base, sigma, g)


# --- antidiagonal pattern moves (dimension 3) ---

def antidiag_parameters(m: Matrix):
    """Read (a, d, f, b, c) off the pattern [[0,0,a],[d,0,b],[0,f,c]];
    raises ShapeMismatch unless a, d, f are nonzero and the zeros hold."""
    if m.n != 3:
        raise ShapeMismatch("pattern moves are specific to dimension 3")
    zeros = [(0, 0), (0, 1), (1, 1), (2, 0)]
    if any(not m.entry(i, j).is_zero() for i, j in zeros):
        raise ShapeMismatch("matrix misses required zero slots")
    a, d, f = m.entry(0, 2), m.entry(1, 0), m.entry(2, 1)
    if a.is_zero() or d.is_zero() or f.is_zero():
        raise ShapeMismatch("antidiagonal entries must be nonzero")
    return a, d, f, m.entry(1, 2), m.entry(2, 2)


def _antidiag(field, a, d, f, b, c) -> Matrix:
    return Matrix(field, [[0, 0, a], [d, 0, b], [0, f, c]])


def lemperm_move(m: Matrix, move) -> tuple[Matrix, Matrix]:
    """Apply one SL conjugation move to an antidiagonal-pattern matrix.

    ``move`` is ``("rotate",)`` for the cyclic move
    (a,d,f,b,c) -> (d,f,a, a^-1 b f, c) or ``("scale", x)`` for
    (a,d,f,b,c) -> (a x^2, d x^-1, f x^-1, b x, c).  Returns the conjugated
    matrix and the SL conjugator, verified.
    """
    field = m.field
    a, d, f, b, c = antidiag_parameters(m)
    if move[0] == "rotate":
        eps = (signed_perm(field, 3, 3, 2) * signed_perm(field, 3, 3, 1)
               * transvection(field, 3, 2, 3, -(a.inverse()) * c)
               * transvection(field, 3, 1, 3, a.inverse() * b)
               * diag_pair(field, 3, 1, 3, -1))
        expect = _antidiag(field, d, f, a, a.inverse() * b * f, c)
    elif move[0] == "scale":
        x = field.scalar(move[1])
        if x.is_zero():
            raise ShapeMismatch("scale move needs a nonzero parameter")
        eps = diag_pair(field, 3, 3, 1, x)
        expect = _antidiag(field, a * x * x, d * x.inverse(),
                           f * x.inverse(), b * x, c)
    else:
        raise ShapeMismatch(f"unknown move {move!r}")
    got = m.conj(eps)
    if got != expect or not eps.det().is_one():
        raise VerificationFailed("pattern move failed its exact check")
    return got, eps


def run_moves(m: Matrix, moves) -> tuple[Matrix, Matrix]:
    """Apply a sequence of pattern moves; returns (result, conjugator)."""
    eps = Matrix.identity(m.field, 3)
    for move in moves:
        m, step = lemperm_move(m, move)
        eps = eps * step
    return m, eps


def _unrotate(m: Matrix) -> Matrix:
    """Parameter-level inverse of the rotate move."""
    a, d, f, b, c = antidiag_parameters(m)
    return _antidiag(m.field, f, a, d, b * d.inverse() * f, c)


def route_to_pattern(start: Matrix, target: Matrix):
    """Bounded search for a move sequence conjugating one antidiagonal
    pattern onto another: rotations around a single solved scale, with a
    brute-forced second scale over small prime fields as a fallback.
    Raises SynthesisFailed when nothing closes."""
    antidiag_parameters(target)
    field = start.field
    for i in range(3):
        for j in range(3):
            pre = [("rotate",)] * i
            mid, _ = run_moves(start, pre)
            a, d, f, b, c = antidiag_parameters(mid)
            want = target
            try:
                for _ in range(j):
                    want = _unrotate(want)
            except ShapeMismatch:
                continue
            ta, td, tf, tb, tc = antidiag_parameters(want)
            if tc != c:
                continue
            x = d * td.inverse()
            if x.is_zero() or x != f * tf.inverse():
                continue
            if a * x * x != ta or b * x != tb:
                continue
            moves = pre + [("scale", x)] + [("rotate",)] * j
            got, eps = run_moves(start, moves)
            if got == target:
                return moves, eps
    if field.kind == "Fp" and field.p <= 50:
        units = [field.scalar(v) for v in range(1, field.p)]
        for i in range(3):
            for x in units:
                for j in range(3):
                    for y in units:
                        moves = ([("rotate",)] * i + [("scale", x)]
                                 + [("rotate",)] * j + [("scale", y)])
                        got, eps = run_moves(start, moves)
                        if got == target:
                            return moves, eps
    raise SynthesisFailed("no pattern-move route found")


# --- dimension-3 constructions without roots ---

def _frobenius_3cycle(sigma: Matrix):
    """Frobenius data for a 3x3 matrix with a single invariant factor,
    plus the companion-column parameters (a, b, c)."""
    fd = frobenius_form(sigma)
    if len(fd.invariant_factors) != 1:
        raise PreconditionViolated("characteristic polynomial must be "
                                   "irreducible (single invariant factor)")
    form = fd.form
    return fd, form.entry(0, 2), form.entry(1, 2), form.entry(2, 2)


def witness_square_n3(sigma: Matrix) -> Witness:
    """Length-2 witness (+, +) for 3x3 classes with no root whose
    determinant squares to 1."""
    desc = describe_class(sigma)
    field = sigma.field
    if sigma.n != 3:
        raise PreconditionViolated("this construction is specific to n = 3")
    if roots_in_field(desc.charpoly):
        raise PreconditionViolated("characteristic polynomial has a root")
    if desc.det * desc.det != field.one:
        raise PreconditionViolated("determinant squared must be 1")
    fd, a, b, c = _frobenius_3cycle(sigma)
    sigma_f = fd.form
    sigma0 = Matrix(field, [[0, 0, a], [1, 0, 1], [0, 1, -a]])
    t12 = transvection(field, 3, 1, 2, 1)
    # conjugate sigma0^2 onto t_12(1): permutation step, Frobenius transform
    # of the target transvection, then the SL determinant correction
    ft = frobenius_form(t12)
    rho0 = perm(field, 3, 1, 2) * transvection(field, 3, 2, 1, a)
    if (sigma0 ** 2).conj(rho0) != ft.form:
        raise VerificationFailed("square arrangement failed its exact check")
    eps = _sl_correct(rho0 * ft.transform.inverse())
    if (sigma0 ** 2).conj(eps) != t12:
        raise VerificationFailed("square normalization failed its exact check")
    xi = Matrix(field, [[-1, 0, -b - 1], [0, -1, a + c], [0, 0, 1]])
    d13m = diag_pair(field, 3, 1, 3, -1)
    if xi * xi != Matrix.identity(field, 3) or sigma0 * xi != sigma_f.conj(d13m):
        raise VerificationFailed("involution split failed its exact check")
    xi_eps = xi.conj(eps)
    factors = [(PLUS, d13m * eps), (PLUS, d13m * eps * xi_eps)]
    base = _finalize(sigma_f, factors, "square")
    return to_E_conjugators(base, sigma, fd.transform)


def witness_cube_n3(sigma: Matrix) -> Witness:
    """Length-3 witness (+, +, +) for 3x3 classes with no root whose
    determinant has multiplicative order exactly 3."""
    desc = describe_class(sigma)
    field = sigma.field
    if sigma.n != 3:
        raise PreconditionViolated("this construction is specific to n = 3")
    one = field.one
    if desc.det ** 3 != one or desc.det * desc.det == one:
        if field.kind == "Q":
            raise PreconditionViolated(
                "unreachable over Q: 1 is the only rational cube root of "
                "unity, so order-3 determinants do not exist")
        raise PreconditionViolated("determinant must have order exactly 3")
    if roots_in_field(desc.charpoly):
        raise PreconditionViolated("characteristic polynomial has a root")
    fd, a, b, c = _frobenius_3cycle(sigma)
    sigma_f = fd.form
    t12 = transvection(field, 3, 1, 2, 1)
    a_inv = a.inverse()

    rotate = ("rotate",)
    if not b.is_zero():
        case = "cube-1"
        sigma0 = _antidiag(field, a, 1, 1, field.zero, field.zero)
        target = _antidiag(field, a * a, 1, 1, field.zero, field.zero)
        pre_eps = signed_perm(field, 3, 3, 2)
        xi = Matrix(field, [[-1, 0, -b], [0, -1, c], [0, 0, 1]])
        eps_prime = (signed_perm(field, 3, 2, 3)
                     * transvection(field, 3, 3, 1, b.inverse() * c)
                     * diag_pair(field, 3, 3, 2, -b))
        w3 = transvection(field, 3, 3, 1, b.inverse() ** 2 * c)
        route2 = [("scale", b.inverse()), rotate, ("scale", -b.inverse())]
    elif not c.is_zero():
        case = "cube-2"
        sigma0 = _antidiag(field, a, 1, 1, field.zero, field.zero)
        target = _antidiag(field, a * a, 1, 1, field.zero, field.zero)
        pre_eps = signed_perm(field, 3, 3, 2)
        xi = Matrix(field, [[-1, 0, 0], [0, -1, c], [0, 0, 1]])
        eps_prime = (transvection(field, 3, 3, 1, c * a_inv)
                     * diag_pair(field, 3, 3, 2, c))
        w3 = t12 * signed_perm(field, 3, 2, 3)
        route2 = [rotate, rotate, ("scale", -c.inverse()),
                  rotate, rotate, ("scale", -one)]
    else:
        case = "cube-3"
        sigma0 = Matrix(field, [[0, 0, a], [1, 0, 1], [0, 1, 0]])
        target = _antidiag(field, a * a, 1, 1, -one, field.scalar(2))
        pre_eps = (signed_perm(field, 3, 3, 2)
                   * transvection(field, 3, 2, 3, -a_inv))
        xi = Matrix(field, [[-1, 0, -1], [0, -1, 0], [0, 0, 1]])
        eps_prime = (diag_pair(field, 3, 1, 3, -a)
                     * transvection(field, 3, 2, 3, -(field.scalar(2)) * a_inv))
        w3 = (transvection(field, 3, 2, 3, field.scalar(2) * a_inv)
              * transvection(field, 3, 1, 3, field.scalar(2) * a_inv)
              * signed_perm(field, 3, 2, 1))
        route2 = [rotate, ("scale", -one), rotate, ("scale", a_inv)]

    d13m = diag_pair(field, 3, 1, 3, -1)
    if xi * xi != Matrix.identity(field, 3) or sigma0 * xi != sigma_f.conj(d13m):
        raise VerificationFailed("involution split failed its exact check")
    start = (sigma0 ** 2).conj(pre_eps)
    _, route_eps = run_moves(start, [rotate, ("scale", -a)])
    eps = pre_eps * route_eps
    if (sigma0 ** 2).conj(eps) != target:
        raise VerificationFailed("cube arrangement failed its exact check")
    mid = (t12 * sigma_f.inverse().conj(eps_prime)).conj(w3)
    routed, eps_route2 = run_moves(mid, route2)
    eps2 = w3 * eps_route2
    if routed != target or (t12 * sigma_f.inverse().conj(eps_prime)).conj(eps2) != target:
        raise VerificationFailed("inverse-side arrangement failed its exact check")
    eps2_inv = eps2.inverse()
    xi_eps = xi.conj(eps)
    factors = [(PLUS, d13m * eps * eps2_inv),
               (PLUS, d13m * eps * xi_eps * eps2_inv),
               (PLUS, eps_prime)]
    base = _finalize(sigma_f, factors, case)
    return to_E_conjugators(base, sigma, fd.transform)


# --- standalone conjugator solving ---

def _centralizer_det_fix(m: Matrix, target_det, coeff_pool) -> Matrix | None:
    """Search z in the polynomial algebra of m with det z == target_det,
    trying coefficient vectors from ``coeff_pool`` (low degree first)."""
    import itertools as _it

    from .normalforms import poly_at_matrix
    field = m.field
    for coeffs in _it.product(coeff_pool, repeat=m.n):
        z = poly_at_matrix(Poly(field, list(coeffs)), m)
        if z.det() == target_det:
            return z
    return None


def solve_conjugator(m: Matrix, n_mat: Matrix, require_sl: bool = False) -> Matrix:
    """A verified g with g^-1 * m * g == n_mat; optionally with det 1.

    The base solution comes from the two Frobenius transforms.  The SL
    refinement multiplies by a commuting polynomial of m chosen to cancel
    the determinant, searched exhaustively over F_p and over a small
    integer coefficient box over Q; over Q an antidiagonal pattern route is
    tried first when both sides match the pattern.  Raises SynthesisFailed
    when the bounded searches are exhausted.
    """
    field = m.field
    if require_sl and field.kind == "Q":
        try:
            antidiag_parameters(m)
            antidiag_parameters(n_mat)
            _, eps = route_to_pattern(m, n_mat)
            return eps
        except (ShapeMismatch, SynthesisFailed):
            pass
    g0 = solve_similarity(m, n_mat)
    if not require_sl or g0.det().is_one():
        return g0
    target = g0.det().inverse()
    if field.kind == "Fp":
        if field.p ** m.n > 200_000:
            raise SynthesisFailed("centralizer search space too large")
        pool = [field.scalar(v) for v in range(field.p)]
    else:
        pool = [field.scalar(v) for v in (0, 1, -1, 2, -2, 3, -3)]
    z = _centralizer_det_fix(m, target, pool)
    if z is None:
        try:
            antidiag_parameters(m)
            antidiag_parameters(n_mat)
            _, eps = route_to_pattern(m, n_mat)
            return eps
        except (ShapeMismatch, SynthesisFailed):
            raise SynthesisFailed(
                "no determinant-1 conjugator found within the search bounds")
    g = z * g0
    if g.inverse() * m * g != n_mat or not g.det().is_one():
        raise VerificationFailed("conjugator failed its exact check")
    return g


# --- dispatcher ---

def synthesize_witness(sigma: Matrix) -> Witness:
    """Produce a verified witness whose length matches the classifier's
    exact verdict (or its proven upper bound when only bounds are known)."""
    if sigma.n == 3:
        report = classify_m_n3(sigma)
        builder = {
            "n3-i": witness_m1,
            "n3-ii": witness_root,
            "n3-iii": witness_square_n3,
            "n3-iv": witness_cube_n3,
            "n3-v": witness_four,
        }[report.case_tag]
        w = builder(sigma)
    else:
        report = classify_m_general(sigma)
        if report.case_tag == "gen-t":
            w = witness_m1(sigma)
        elif report.case_tag == "gen-root":
            w = witness_root(sigma)
        else:
            w = witness_four(sigma)
    return Witness(w.sigma, w.factors, report.case_tag)
