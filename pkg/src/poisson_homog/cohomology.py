"""
Relative Lie algebra cohomology H(l, H; V) for finite-dimensional modules.

Cochains of degree k are stored in ambient coordinates on Hom(wedge^k l, V):
entry (I, a) is component a of c(e_I), with I running over increasing
k-subsets in lexicographic order (index = position(I) * dim V + a). The
relative cochains (wedge^k (l/h)* (x) V)^H form a subspace cut out by
  iota_x c = 0 and x . c = 0 for x in h,  g . c = c for component generators g.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg as la
from .exterior import basis_keys, linear_extension, Multivector, sort_sign
from .lie import LieAlgebraData, ValidationReport, Violation, adjoint_character, is_closed
from .linalg import DimensionError, Subspace


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteModule:
    """
    rho[i] is the matrix of the i-th basis vector of l on V. Each component
    generator is a pair (matrix on l, matrix on V) for a representative of a
    component of H.
    """
    dim: int
    rho: tuple
    component_generators: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "rho", tuple(la.mat(r) for r in self.rho))
        gens = tuple((la.mat(a), la.mat(b)) for a, b in self.component_generators)
        object.__setattr__(self, "component_generators", gens)
        for r in self.rho:
            if len(r) != self.dim or any(len(row) != self.dim for row in r):
                raise DimensionError("module matrices must be %d x %d" % (self.dim, self.dim))
        for _, b in gens:
            if len(b) != self.dim:
                raise DimensionError("generator matrix on V must be %d x %d" % (self.dim, self.dim))

    def act(self, x: Sequence) -> tuple:
        """Matrix of a general element x of l."""
        out = la.zeros(self.dim, self.dim)
        for c, r in zip(x, self.rho):
            if c:
                out = la.matadd(out, la.matscale(c, r))
        return out


def validate_module(m: FiniteModule, l: LieAlgebraData) -> ValidationReport:
    """Representation property on basis pairs, and compatibility of each component generator."""
    if len(m.rho) != l.dim:
        raise DimensionError("module has %d matrices, algebra dimension %d" % (len(m.rho), l.dim))
    bad = []
    n = l.dim
    for i in range(n):
        for j in range(i + 1, n):
            lhs = m.act(l.bracket_basis(i, j))
            rhs = la.matsub(la.matmul(m.rho[i], m.rho[j]), la.matmul(m.rho[j], m.rho[i]))
            diff = la.matsub(lhs, rhs)
            if any(not la.is_zero(r) for r in diff):
                bad.append(Violation("representation", (i, j), tuple(x for r in diff for x in r)))
    for t, (A, G) in enumerate(m.component_generators):
        Ginv = la.inverse(G)
        for i in range(n):
            lhs = la.matmul(la.matmul(G, m.rho[i]), Ginv)
            rhs = m.act(tuple(r[i] for r in A))
            diff = la.matsub(lhs, rhs)
            if any(not la.is_zero(r) for r in diff):
                bad.append(Violation("component-generator", (t, i), tuple(x for r in diff for x in r)))
    return ValidationReport(tuple(bad))


# builders

def trivial_module(l: LieAlgebraData, dim: int = 1, generators: Sequence = ()) -> FiniteModule:
    return FiniteModule(dim, tuple(la.zeros(dim, dim) for _ in range(l.dim)),
                        tuple((A, la.identity(dim)) for A in generators))


def adjoint_module(l: LieAlgebraData, generators: Sequence = ()) -> FiniteModule:
    from .lie import ad_matrix
    n = l.dim
    return FiniteModule(n, tuple(ad_matrix(la.unit(n, i), l) for i in range(n)),
                        tuple((A, A) for A in generators))


def character_module(l: LieAlgebraData, chi: Sequence, generators: Sequence = ()) -> FiniteModule:
    """One-dimensional module x . v = chi(x) v; generators are (matrix on l, scalar)."""
    return FiniteModule(1, tuple(((la.frac(c),),) for c in chi),
                        tuple((A, ((la.frac(s),),)) for A, s in generators))


def top_module(l: LieAlgebraData, generators: Sequence = ()) -> FiniteModule:
    """wedge^top l: l acts by its adjoint character, H by det Ad_h."""
    return character_module(l, adjoint_character(l), [(A, la.det(la.mat(A))) for A in generators])


def weight_module(space, N: int) -> FiniteModule:
    """
    The identity-point weight character of the drinfeld data, on l in the
    basis space.l.basis: v -> (N/2)(chi_l(v) - chi_g(x) + chi_{g*}(xi)).
    Whether this is a representation depends on the data; run validate_module.
    """
    from .drinfeld import coefficient_weight_at_identity
    chi = [coefficient_weight_at_identity(space, N, b) for b in space.l.basis]
    return FiniteModule(1, tuple(((c,),) for c in chi))


def direct_sum(U: FiniteModule, V: FiniteModule) -> FiniteModule:
    def block(A, B):
        top = tuple(tuple(r) + la.zero_vec(V.dim) for r in A)
        bot = tuple(la.zero_vec(U.dim) + tuple(r) for r in B)
        return top + bot
    if len(U.component_generators) != len(V.component_generators):
        raise ValueError("modules carry different component generators")
    gens = tuple((a, block(b, d)) for (a, b), (_, d) in zip(U.component_generators, V.component_generators))
    return FiniteModule(U.dim + V.dim, tuple(block(a, b) for a, b in zip(U.rho, V.rho)), gens)


def tensor_product(U: FiniteModule, V: FiniteModule) -> FiniteModule:
    """U (x) V with basis index a * dim V + b."""
    IU, IV = la.identity(U.dim), la.identity(V.dim)
    rho = tuple(la.matadd(la.kron(a, IV), la.kron(IU, b)) for a, b in zip(U.rho, V.rho))
    if len(U.component_generators) != len(V.component_generators):
        raise ValueError("modules carry different component generators")
    gens = tuple((a, la.kron(b, d)) for (a, b), (_, d) in zip(U.component_generators, V.component_generators))
    return FiniteModule(U.dim * V.dim, rho, gens)


# ---------------------------------------------------------------------------
# ambient cochains
# ---------------------------------------------------------------------------

class _Index:
    def __init__(self, m: int, k: int, dimV: int):
        self.keys = basis_keys(m, k)
        self.pos = {K: i for i, K in enumerate(self.keys)}
        self.dimV = dimV

    def __len__(self):
        return len(self.keys) * self.dimV

    def flat(self, K, a):
        return self.pos[K] * self.dimV + a


def ambient_dim(m: int, k: int, dimV: int) -> int:
    return len(basis_keys(m, k)) * dimV


def ce_differential(l: LieAlgebraData, V: FiniteModule, k: int) -> tuple:
    """Matrix of d: Hom(wedge^k l, V) -> Hom(wedge^(k+1) l, V) in ambient coordinates."""
    m = l.dim
    p = V.dim
    src = _Index(m, k, p)
    dst = _Index(m, k + 1, p)
    D = [[Fraction(0)] * len(src) for _ in range(len(dst))]
    for K in dst.keys:
        for j, kj in enumerate(K):
            rest = K[:j] + K[j + 1:]
            sgn = 1 if j % 2 == 0 else -1
            R = V.rho[kj]
            for a in range(p):
                row = dst.flat(K, a)
                for b in range(p):
                    if R[a][b]:
                        D[row][src.flat(rest, b)] += sgn * R[a][b]
        for i in range(len(K)):
            for j in range(i + 1, len(K)):
                rest = K[:i] + K[i + 1:j] + K[j + 1:]
                sgn = 1 if (i + j) % 2 == 0 else -1
                for t, c in enumerate(l.bracket_basis(K[i], K[j])):
                    if not c:
                        continue
                    s, I = sort_sign((t,) + rest)
                    if not s:
                        continue
                    for a in range(p):
                        D[dst.flat(K, a)][src.flat(I, a)] += sgn * s * c
    return tuple(tuple(r) for r in D)


def _insertion_matrix(l: LieAlgebraData, p: int, k: int, x: Sequence) -> list:
    """Rows of iota_x: Hom(wedge^k l, V) -> Hom(wedge^(k-1) l, V)."""
    m = l.dim
    src = _Index(m, k, p)
    dst = _Index(m, k - 1, p)
    rows = []
    for J in dst.keys:
        for a in range(p):
            row = [Fraction(0)] * len(src)
            for t, c in enumerate(x):
                if not c:
                    continue
                s, I = sort_sign((t,) + J)
                if s:
                    row[src.flat(I, a)] += s * c
            rows.append(row)
    return rows


def _lie_derivative_matrix(l: LieAlgebraData, V: FiniteModule, k: int, x: Sequence) -> list:
    """Rows of c -> x . c on Hom(wedge^k l, V)."""
    m = l.dim
    p = V.dim
    idx = _Index(m, k, p)
    X = V.act(x)
    adx = [l.bracket(x, la.unit(m, i)) for i in range(m)]
    rows = []
    for I in idx.keys:
        for a in range(p):
            row = [Fraction(0)] * len(idx)
            for b in range(p):
                if X[a][b]:
                    row[idx.flat(I, b)] += X[a][b]
            for s_pos, i in enumerate(I):
                for t, c in enumerate(adx[i]):
                    if not c:
                        continue
                    s, J = sort_sign(I[:s_pos] + (t,) + I[s_pos + 1:])
                    if s:
                        row[idx.flat(J, a)] -= s * c
            rows.append(row)
    return rows


def _generator_matrix(k: int, p: int, on_l, on_V) -> tuple:
    """Matrix of c -> g_V c(g_l^{-1} -, ..., g_l^{-1} -) on Hom(wedge^k l, V)."""
    m = len(on_l)
    keys = basis_keys(m, k)
    inv = la.inverse(on_l)
    if k == 0:
        M = ((Fraction(1),),)
    else:
        cols = []
        for I in keys:
            img = Multivector(m, k, {I: 1})
            cols.append(linear_extension(inv, img).dense())
        M = la.transpose(cols)   # M[J][I]: coefficient of e_J in g^{-1} e_I
    size = len(keys) * p
    G = [[Fraction(0)] * size for _ in range(size)]
    for ii in range(len(keys)):
        for jj in range(len(keys)):
            mji = M[jj][ii]
            if not mji:
                continue
            for a in range(p):
                for b in range(p):
                    if on_V[a][b]:
                        G[ii * p + a][jj * p + b] += on_V[a][b] * mji
    return tuple(tuple(r) for r in G)


def relative_cochains(l: LieAlgebraData, h: Subspace, V: FiniteModule, k: int) -> tuple:
    """Basis (ambient row vectors) of (wedge^k (l/h)* (x) V)^H."""
    m = l.dim
    p = V.dim
    N = ambient_dim(m, k, p)
    if N == 0:
        return ()
    rows = []
    for x in h.basis:
        if k > 0:
            rows += _insertion_matrix(l, p, k, x)
        rows += _lie_derivative_matrix(l, V, k, x)
    for on_l, on_V in V.component_generators:
        G = _generator_matrix(k, p, on_l, on_V)
        rows += [la.sub(G[i], la.unit(N, i)) for i in range(N)]
    rows = [r for r in rows if not la.is_zero(r)]
    if not rows:
        return la.identity(N)
    return la.nullspace(rows, N)


@dataclass(frozen=True, eq=False)
class RelativeComplex:
    """
    bases[k]: ambient basis of C^k; diff[k]: matrix of d_k from C^k to C^(k+1)
    in basis coordinates (rows index C^(k+1)).
    """
    l: LieAlgebraData
    h: Subspace
    module: FiniteModule
    bases: tuple
    diff: tuple
    ambient_diff: tuple

    @property
    def top(self) -> int:
        return len(self.bases) - 1

    def dim(self, k: int) -> int:
        return len(self.bases[k]) if 0 <= k < len(self.bases) else 0

    def to_ambient(self, k: int, coords: Sequence) -> tuple:
        N = ambient_dim(self.l.dim, k, self.module.dim)
        if not self.bases[k]:
            return la.zero_vec(N)
        return la.lincomb(coords, self.bases[k], N)

    def from_ambient(self, k: int, v: Sequence) -> tuple:
        if not self.bases[k]:
            if not la.is_zero(v):
                raise ComplexError("cochain is not relative")
            return ()
        x = la.solve(la.transpose(self.bases[k]), v, len(self.bases[k]))
        if x is None:
            raise ComplexError("cochain does not lie in C^%d" % k)
        return x

    def d(self, k: int, coords: Sequence) -> tuple:
        if k >= self.top:
            return ()
        if not self.bases[k]:
            return la.zero_vec(self.dim(k + 1))
        return la.matvec(self.diff[k], coords)

    def rank(self, k: int) -> int:
        if k < 0 or k >= self.top or not self.diff[k]:
            return 0
        return la.rank(self.diff[k])


def build_relative_complex(l: LieAlgebraData, h: Subspace, V: FiniteModule,
                           H_generators: Sequence | None = None,
                           check: bool = True) -> RelativeComplex:
    """
    The complex (C_{l,H;V}, d). `H_generators`, if given, replaces the
    module's component generators (pairs of matrices on l and V).
    """
    if h.ambient_dim != l.dim:
        raise DimensionError("h is not a subspace of l")
    ok, where = is_closed(l, h)
    if not ok:
        raise ComplexError("h is not a subalgebra (basis pair %r)" % (where,))
    if H_generators is not None:
        V = FiniteModule(V.dim, V.rho, tuple(H_generators))
    if check:
        rep = validate_module(V, l)
        if not rep.ok:
            v = rep.violations[0]
            raise ComplexError("invalid (l, H)-module: %s at %r" % (v.kind, v.indices))
    top = l.dim - h.dim
    bases = [relative_cochains(l, h, V, k) for k in range(top + 1)]
    diffs = []
    amb = []
    for k in range(top + 1):
        D = ce_differential(l, V, k)
        amb.append(D)
        # C^(top+1) = 0, so d_top must vanish on C^top
        nxt = bases[k + 1] if k < top else ()
        Bt = la.transpose(nxt) if nxt else ()
        cols = []
        for b in bases[k]:
            img = la.matvec(D, b)
            c = la.solve(Bt, img, len(nxt)) if nxt else (() if la.is_zero(img) else None)
            if c is None:
                raise ComplexError("differential leaves the relative subcomplex in degree %d" % k)
            cols.append(c)
        if k < top:
            diffs.append(la.transpose(cols) if bases[k] and nxt else ())
    return RelativeComplex(l, h, V, tuple(bases), tuple(diffs), tuple(amb))


def cohomology_dims(cx: RelativeComplex) -> list:
    return [cx.dim(k) - cx.rank(k) - cx.rank(k - 1) for k in range(cx.top + 1)]


def euler_characteristic(cx: RelativeComplex) -> int:
    return sum((-1) ** k * cx.dim(k) for k in range(cx.top + 1))


def cocycles(cx: RelativeComplex, k: int) -> tuple:
    n = cx.dim(k)
    if n == 0:
        return ()
    if k >= cx.top or not cx.diff[k]:
        return la.identity(n)
    return la.nullspace(cx.diff[k], n)


def coboundaries(cx: RelativeComplex, k: int) -> Subspace:
    n = cx.dim(k)
    if k == 0 or n == 0 or not cx.diff[k - 1]:
        return Subspace.zero(n)
    return Subspace.span(la.transpose(cx.diff[k - 1]), n)


def cohomology_basis(cx: RelativeComplex, k: int) -> tuple:
    """Cocycles (in C^k coordinates) whose classes form a basis of H^k."""
    B = coboundaries(cx, k)
    span = B
    out = []
    for z in cocycles(cx, k):
        if not span.contains(z):
            out.append(z)
            span = Subspace.span(span.basis + (z,), cx.dim(k))
    return tuple(out)


# ---------------------------------------------------------------------------
# products and pairings
# ---------------------------------------------------------------------------

def cup_ambient(m: int, j: int, c1: Sequence, p: int, k: int, c2: Sequence, q: int) -> tuple:
    """(phi (x) u) ^ (psi (x) v) = phi ^ psi (x) u (x) v on ambient coordinates."""
    src1, src2 = _Index(m, j, p), _Index(m, k, q)
    dst = _Index(m, j + k, p * q)
    out = [Fraction(0)] * len(dst)
    for I in src1.keys:
        for J in src2.keys:
            s, K = sort_sign(I + J)
            if not s:
                continue
            for a in range(p):
                x = c1[src1.flat(I, a)]
                if not x:
                    continue
                for b in range(q):
                    y = c2[src2.flat(J, b)]
                    if y:
                        out[dst.flat(K, a * q + b)] += s * x * y
    return tuple(out)


def cup_product(cxU: RelativeComplex, j: int, c1: Sequence,
                cxV: RelativeComplex, k: int, c2: Sequence,
                cxUV: RelativeComplex | None = None):
    """
    Cup product of relative cochains given in basis coordinates. Returns
    coordinates in cxUV (the complex of U (x) V) when supplied, otherwise
    the ambient cochain.
    """
    m = cxU.l.dim
    amb = cup_ambient(m, j, cxU.to_ambient(j, c1), cxU.module.dim,
                      k, cxV.to_ambient(k, c2), cxV.module.dim)
    if cxUV is None:
        return amb
    return cxUV.from_ambient(j + k, amb)


def check_f_zero(nu: Sequence, cxUV: RelativeComplex) -> bool:
    """nu vanishes on d(C^(n-1)) of the U (x) V complex."""
    n = cxUV.top
    if n == 0 or not cxUV.diff[n - 1]:
        return True
    return la.is_zero(la.matvec(la.transpose(cxUV.diff[n - 1]), nu))


def nu_pairing(nu: Sequence, cxU: RelativeComplex, k: int, c1: Sequence,
               cxV: RelativeComplex, c2: Sequence, cxUV: RelativeComplex) -> Fraction:
    """(c1, c2)_nu = nu(c1 (x) c2) for c1 in C^k(U), c2 in C^(n-k)(V), in basis coordinates."""
    n = cxUV.top
    coords = cup_product(cxU, k, la.vec(c1), cxV, n - k, la.vec(c2), cxUV)
    return la.dot(nu, coords)


def descend_pairing(nu: Sequence, cxU, cxV, cxUV, k: int) -> tuple:
    """Matrix of the induced pairing H^k(U) x H^(n-k)(V) -> Q on cohomology bases."""
    if not check_f_zero(nu, cxUV):
        raise ComplexError("nu does not vanish on exact top-degree cochains")
    n = cxUV.top
    A = cohomology_basis(cxU, k)
    B = cohomology_basis(cxV, n - k)
    return tuple(tuple(nu_pairing(nu, cxU, k, a, cxV, b, cxUV) for b in B) for a in A)
