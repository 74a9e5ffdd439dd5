"""Covers, envelopes, resolutions, extension groups and translates.

Projective machinery is primary; everything injective is obtained by
dualizing the projective machinery of the opposite algebra.  Extension
groups are computed in generator coordinates: a map out of a direct sum of
projectives is the tuple of generator images, so Hom(P, n) is a direct sum
of components of n and the differentials become explicit rational matrices.
The public ext_dim runs the computation on both sides of the duality and
insists the answers agree.
"""
from __future__ import annotations

from .errors import CertificateFailure, NotGeneratorCogenerator
from .linalg import F0, F1, Matrix, rank, rref, row_space, left_kernel, solve_linear
from .modules import (
    ModuleMap, direct_sum, dualize, dual_map, decompose,
    hom_basis, iso_test, kernel_of_map, projective_from_vertices,
    projective_map, projective_rep, radical_rows, regular_rep,
    injective_rep, summand_inclusion, cokernel_of_map,
)
from .values import Dim


def projective_cover(m):
    """(P, f) with f: P -> m the minimal surjection from a projective."""
    rad = radical_rows(m)
    verts = []
    images = []
    for v in m.algebra.quiver.vertices:
        _, piv = rref(rad[v])
        pivset = set(piv)
        for c in range(m.dims[v]):
            if c not in pivset:
                verts.append(v)
                row = [F0] * m.dims[v]
                row[c] = F1
                images.append(row)
    P = projective_from_vertices(m.algebra, verts)
    f = projective_map(P, m, images)
    if not f.is_surjective():
        raise CertificateFailure("cover misses part of the module")
    return P, f


class ProjectiveResolution:
    """Minimal resolution, extended lazily; term i is the i-th projective,
    syzygy i the kernel reached after i covers."""

    def __init__(self, m):
        self.module = m
        self.syz = [m]
        self.covers = []
        self.incls = []

    def extend(self, upto):
        while len(self.covers) <= upto:
            P, f = projective_cover(self.syz[-1])
            ker, incl = kernel_of_map(f)
            self.covers.append(f)
            self.incls.append(incl)
            self.syz.append(ker)

    def term(self, i):
        self.extend(i)
        return self.covers[i].source

    def cover(self, i):
        self.extend(i)
        return self.covers[i]

    def syzygy(self, i):
        if i == 0:
            return self.module
        self.extend(i - 1)
        return self.syz[i]

    def differential(self, i):
        if i < 1:
            raise ValueError("differentials start at 1")
        self.extend(i)
        return self.covers[i].then(self.incls[i - 1])


def projective_resolution(m):
    if "projres" not in m._cache:
        m._cache["projres"] = ProjectiveResolution(m)
    return m._cache["projres"]


def syzygy(m, i):
    return projective_resolution(m).syzygy(i)


def is_projective(m):
    if "is_proj" not in m._cache:
        m._cache["is_proj"] = syzygy(m, 1).is_zero()
    return m._cache["is_proj"]


def injective_envelope(m):
    """(I, e) with e: m -> I the minimal embedding into an injective.  I is
    the dual of the opposite-side cover and carries its summand list."""
    P, c = projective_cover(dualize(m))
    return dualize(P), dual_map(c)


def cosyzygy(m, i):
    return dualize(syzygy(dualize(m), i))


def injective_term_vertices(m, i):
    """Vertices of the indecomposable injective summands of the i-th term
    of the minimal injective resolution."""
    res = projective_resolution(dualize(m))
    return list(res.term(i).proj_summand_vertices)


def is_injective_mod(m):
    return is_projective(dualize(m))


# -- extension groups ------------------------------------------------------

def _presentation_elements(d):
    """Generator-to-generator entries of a map between projectives built by
    projective_from_vertices; entry [j1][j0] is an algebra element dict in
    e_{v_j0} A e_{w_j1}."""
    P1, P0 = d.source, d.target
    ents = [[{} for _ in P0.proj_gen] for _ in P1.proj_gen]
    for j1, (w, pos) in enumerate(P1.proj_gen):
        row = d.block(w).data[pos]
        for r, (j0, bi) in enumerate(P0.proj_row_paths[w]):
            c = row[r]
            if c:
                ents[j1][j0][bi] = c
    return ents


def _hom_offsets(P, n):
    offs = []
    total = 0
    for v, _ in P.proj_gen:
        offs.append(total)
        total += n.dims[v]
    return offs, total


def _coord_matrix(P0, P1, d, n):
    """Matrix of composing with d on generator coordinates: a map P0 -> n
    given as a row over the generator components of n goes to the row of
    the composite P1 -> P0 -> n."""
    ents = _presentation_elements(d)
    offs0, h0 = _hom_offsets(P0, n)
    offs1, h1 = _hom_offsets(P1, n)
    out = [[F0] * h1 for _ in range(h0)]
    for j1, (w, _) in enumerate(P1.proj_gen):
        for j0, (v, _) in enumerate(P0.proj_gen):
            elem = ents[j1][j0]
            if not elem:
                continue
            block = n.element_block(elem, v, w)
            for i in range(block.nrows):
                for j in range(block.ncols):
                    c = block.data[i][j]
                    if c:
                        out[offs0[j0] + i][offs1[j1] + j] += c
    return Matrix(out, h0, h1)


def _ext_data(m, n, imax):
    """Coordinate matrices, coordinate-space dimensions and ranks for
    degrees 0..imax, cached per target module."""
    res = projective_resolution(m)
    cache = m._cache.setdefault("extco", {})
    if id(n) not in cache:
        cache[id(n)] = (n, [], [], [])
    _, Bs, hs, ranks = cache[id(n)]
    res.extend(imax + 1)
    while len(Bs) <= imax:
        i = len(Bs)
        P = res.term(i)
        hs.append(_hom_offsets(P, n)[1])
        Bs.append(_coord_matrix(P, res.term(i + 1), res.differential(i + 1), n))
        if i and not (Bs[i - 1] @ Bs[i]).is_zero():
            raise CertificateFailure("coordinate complex fails to compose to zero")
        ranks.append(rank(Bs[i]))
    return Bs, hs, ranks


def ext_dims_proj(m, n, imax):
    """Dimensions of the extension groups of degrees 0..imax, computed on
    the projective side only."""
    if m.is_zero() or n.is_zero():
        return [0] * (imax + 1)
    _, hs, ranks = _ext_data(m, n, imax)
    out = [hs[0] - ranks[0]]
    for i in range(1, imax + 1):
        out.append(hs[i] - ranks[i] - ranks[i - 1])
    return out


def ext_dims(m, n, imax):
    """Dimensions of the extension groups of degrees 0..imax, computed on
    the projective side and again on the injective side through the
    duality; any disagreement is an error."""
    a = ext_dims_proj(m, n, imax)
    b = ext_dims_proj(dualize(n), dualize(m), imax)
    if a != b:
        raise CertificateFailure(
            "extension dimensions disagree across the duality: %r vs %r" % (a, b))
    return a


def ext_dim(m, n, i):
    """dim Ext^i(m, n), verified on both sides of the duality."""
    return ext_dims(m, n, i)[i]


def ext1_cocycles(m, n):
    """One representative map syzygy(m) -> n per basis vector of the first
    extension group."""
    if m.is_zero() or n.is_zero():
        return []
    res = projective_resolution(m)
    Bs, _, _ = _ext_data(m, n, 1)
    P1 = res.term(1)
    B0, B1 = Bs[0], Bs[1]
    ker = left_kernel(B1)
    if ker.nrows == 0:
        return []
    im = row_space(B0)
    reps = []
    seen = im
    for r in range(ker.nrows):
        cand = Matrix([ker.row(r)], 1, ker.ncols)
        grown = row_space(Matrix(seen.data + cand.data, seen.nrows + 1, ker.ncols))
        if grown.nrows > seen.nrows:
            seen = grown
            reps.append(ker.row(r))
    offs1, _ = _hom_offsets(P1, n)
    cover1 = res.cover(1)
    omega = res.syzygy(1)
    out = []
    for row in reps:
        images = []
        for j, (v, _) in enumerate(P1.proj_gen):
            images.append(row[offs1[j]:offs1[j] + n.dims[v]])
        phi = projective_map(P1, n, images)
        blocks = {}
        for v in m.algebra.quiver.vertices:
            sol = solve_linear(cover1.block(v), phi.block(v))
            if sol is None:
                raise CertificateFailure("cocycle does not factor through the syzygy")
            blocks[v] = sol
        out.append(ModuleMap(omega, n, blocks))
    return out


class ShortExact:
    """0 -> sub -> mid -> quot -> 0 with both maps stored."""

    __slots__ = ("sub", "incl", "mid", "proj", "quot")

    def __init__(self, sub, incl, mid, proj, quot):
        self.sub = sub
        self.incl = incl
        self.mid = mid
        self.proj = proj
        self.quot = quot
        if not incl.is_injective() or not proj.is_surjective():
            raise CertificateFailure("not a short exact sequence")
        if not incl.then(proj).is_zero():
            raise CertificateFailure("composite along the sequence is nonzero")
        if mid.total_dim != sub.total_dim + quot.total_dim:
            raise CertificateFailure("middle term has wrong dimension")

    def is_split(self):
        """True iff the projection admits a section."""
        maps = hom_basis(self.quot, self.mid)
        if not maps:
            return self.quot.is_zero()
        cols = []
        for h in maps:
            comp = h.then(self.proj)
            cols.append([x for v in self.quot.algebra.quiver.vertices
                         for row in comp.block(v).data for x in row])
        target = [x for v in self.quot.algebra.quiver.vertices
                  for row in Matrix.identity(self.quot.dims[v]).data for x in row]
        a = Matrix([[cols[j][i] for j in range(len(cols))]
                    for i in range(len(target))], len(target), len(cols))
        b = Matrix([[t] for t in target], len(target), 1)
        return solve_linear(a, b) is not None


def extension_from_cocycle(m, psi):
    """Short exact sequence with quotient m realizing the cocycle psi,
    which maps the syzygy of m to the kernel-side module."""
    res = projective_resolution(m)
    n = psi.target
    omega = res.syzygy(1)
    incl = res.incls[0]
    cover0 = res.cover(0)
    ns = direct_sum([n, res.term(0)])
    g = ModuleMap(omega, ns,
                  {v: Matrix([pr + ir for pr, ir in
                              zip(psi.block(v).data,
                                  incl.block(v).scale(-1).data)],
                             omega.dims[v], ns.dims[v])
                   for v in m.algebra.quiver.vertices})
    mid, pi = cokernel_of_map(g)
    iota = summand_inclusion(ns, [n, res.term(0)], 0).then(pi)
    h = ModuleMap(ns, m,
                  {v: Matrix(
                      [[F0] * m.dims[v] for _ in range(n.dims[v])] + cover0.block(v).data,
                      ns.dims[v], m.dims[v])
                   for v in m.algebra.quiver.vertices})
    blocks = {}
    for v in m.algebra.quiver.vertices:
        sol = solve_linear(pi.block(v), h.block(v))
        if sol is None:
            raise CertificateFailure("quotient map does not descend")
        blocks[v] = sol
    hbar = ModuleMap(mid, m, blocks)
    return ShortExact(n, iota, mid, hbar, m)


# -- transpose and translates ----------------------------------------------

def transpose_of(m):
    """Cokernel of the dual of a minimal presentation; a module over the
    opposite algebra.  Projective summands die."""
    a = m.algebra
    op = a.opposite_algebra()
    res = projective_resolution(m)
    res.extend(1)
    P0, P1 = res.term(0), res.term(1)
    ents = _presentation_elements(res.differential(1))
    P0op = projective_from_vertices(op, [v for v, _ in P0.proj_gen])
    P1op = projective_from_vertices(op, [v for v, _ in P1.proj_gen])
    pos1 = {w: {ji: r for r, ji in enumerate(P1op.proj_row_paths[w])}
            for w in op.quiver.vertices}
    images = []
    for j0, (v, _) in enumerate(P0op.proj_gen):
        row = [F0] * P1op.dims[v]
        for j1 in range(len(P1op.proj_gen)):
            for bi, c in ents[j1][j0].items():
                row[pos1[v][(j1, bi)]] += c
        images.append(row)
    g = projective_map(P0op, P1op, images)
    coker, _ = cokernel_of_map(g)
    return coker


def ar_translate(m):
    """Dual of the transpose; zero for projectives."""
    return dualize(transpose_of(m))


def tau_minus(m):
    """Transpose of the dual; zero for injectives."""
    return transpose_of(dualize(m))


# -- endomorphism-side dominant dimension ----------------------------------

def generator_cogenerator_check(algebra, m):
    """Certify that the regular module plus m contains every injective up
    to isomorphism; raises NotGeneratorCogenerator otherwise."""
    parts = decompose(m) if not m.is_zero() else []
    pool = [projective_rep(algebra, v) for v in algebra.quiver.vertices] + parts
    for v in algebra.quiver.vertices:
        inj = injective_rep(algebra, v)
        hit = False
        undecided = False
        for cand in pool:
            r = iso_test(inj, cand)
            if r.is_iso:
                hit = True
                break
            if not r.certain:
                undecided = True
        if not hit:
            if undecided:
                raise NotGeneratorCogenerator(
                    "could not certify the injective at %r as a summand" % (v,))
            raise NotGeneratorCogenerator(
                "injective at %r is not a summand" % (v,))


def mueller_domdim(algebra, m, bound=16):
    """Dominant dimension of the endomorphism algebra of (regular + m),
    read off from self-extension vanishing of the generator-cogenerator."""
    generator_cogenerator_check(algebra, m)
    g = direct_sum([regular_rep(algebra), m])
    for i in range(1, bound + 1):
        if ext_dims(m, g, i)[i]:
            return Dim.exact(i + 1)
    return Dim.at_least(bound + 2)


def syzygy_periodicity(m, bound):
    """First (onset, period) with syzygy(onset) isomorphic to
    syzygy(onset + period), both nonzero; None if the resolution terminates
    or no repetition appears within the bound."""
    res = projective_resolution(m)
    for j in range(1, bound + 1):
        sj = res.syzygy(j)
        if sj.is_zero():
            return None
        for i in range(1, j):
            if iso_test(res.syzygy(i), sj).is_iso:
                return (i, j - i)
    return None
