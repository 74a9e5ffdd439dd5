"""Right modules over bound quiver algebras, stored as quiver representations.

Row convention throughout: vectors of the component at a vertex are rows, an
arrow with source v and target w acts by right multiplication with a matrix
of shape (dim at v, dim at w), and composing maps f then g multiplies their
matrices in that order.  The total space of a module concatenates the
components in quiver vertex order.

Duality is the vector space dual: it transposes all arrow matrices and
yields a module over the opposite algebra.  Applying it twice returns the
original object, which downstream code relies on.
"""
from __future__ import annotations

import random
from fractions import Fraction

import sympy

from .algebra import Path
from .errors import (
    CertificateFailure, DecompositionInconclusive, InvalidParameters,
)
from .linalg import (
    F0, F1, Matrix, hstack, vstack, rank, rref, right_kernel, left_kernel,
    row_space, solve_xa_b, minimal_polynomial,
)


class Representation:
    """Module given by one space per vertex and one matrix per arrow."""

    def __init__(self, algebra, dims, mats, validate=True):
        self.algebra = algebra
        q = algebra.quiver
        self.dims = {v: int(dims.get(v, 0)) for v in q.vertices}
        self.mats = {}
        for a in q.arrows:
            mat = mats.get(a.index, mats.get(a.name))
            if mat is None:
                mat = Matrix.zeros(self.dims[a.source], self.dims[a.target])
            if mat.shape != (self.dims[a.source], self.dims[a.target]):
                raise InvalidParameters(
                    "arrow %s matrix has shape %s, expected %s"
                    % (a.name, mat.shape, (self.dims[a.source], self.dims[a.target])))
            self.mats[a.index] = mat
        self.offsets = {}
        off = 0
        for v in q.vertices:
            self.offsets[v] = off
            off += self.dims[v]
        self.total_dim = off
        self._dual = None
        self._paths = {}
        self._cache = {}
        self.proj_summand_vertices = None
        self.proj_row_paths = None
        self.proj_gen = None
        if validate:
            self._check_relations()

    def _check_relations(self):
        for r in self.algebra.relations:
            acc = Matrix.zeros(self.dims[r.source], self.dims[r.target])
            for c, p in r.terms:
                acc = acc + self.path_action(p).scale(c)
            if not acc.is_zero():
                raise InvalidParameters("relations do not annihilate this data")

    def dim_vector(self):
        return tuple(self.dims[v] for v in self.algebra.quiver.vertices)

    def is_zero(self):
        return self.total_dim == 0

    def path_action(self, p):
        key = p.key()
        got = self._paths.get(key)
        if got is None:
            m = Matrix.identity(self.dims[p.source])
            for ai in p.word:
                m = m @ self.mats[ai]
            self._paths[key] = got = m
        return got

    def element_block(self, elem, v, w):
        """Action of an algebra element between the components at v and w;
        only its paths from v to w contribute."""
        out = Matrix.zeros(self.dims[v], self.dims[w])
        for i, c in elem.items():
            p = self.algebra.basis[i]
            if p.source == v and p.target == w:
                out = out + self.path_action(p).scale(c)
        return out

    def total_path_action(self, p):
        out = [[F0] * self.total_dim for _ in range(self.total_dim)]
        pa = self.path_action(p)
        ro, co = self.offsets[p.source], self.offsets[p.target]
        for i in range(pa.nrows):
            for j in range(pa.ncols):
                out[ro + i][co + j] = pa.data[i][j]
        return Matrix(out, self.total_dim, self.total_dim)

    def total_element_action(self, elem):
        out = Matrix.zeros(self.total_dim, self.total_dim)
        for i, c in elem.items():
            out = out + self.total_path_action(self.algebra.basis[i]).scale(c)
        return out

    def component_slice(self, v):
        return self.offsets[v], self.offsets[v] + self.dims[v]

    def inject_row(self, v, row):
        out = [F0] * self.total_dim
        off = self.offsets[v]
        for j, c in enumerate(row):
            out[off + j] = c
        return out

    def __repr__(self):
        return "Representation(dim %s)" % (self.dim_vector(),)


class ModuleMap:
    """Homomorphism of representations, one matrix block per vertex."""

    def __init__(self, source, target, blocks, validate=True):
        if source.algebra is not target.algebra:
            raise InvalidParameters("map between modules over different algebras")
        self.source = source
        self.target = target
        q = source.algebra.quiver
        self.blocks = {}
        for v in q.vertices:
            b = blocks.get(v)
            if b is None:
                b = Matrix.zeros(source.dims[v], target.dims[v])
            if b.shape != (source.dims[v], target.dims[v]):
                raise InvalidParameters("block at %r has wrong shape" % (v,))
            self.blocks[v] = b
        if validate:
            for a in q.arrows:
                lhs = source.mats[a.index] @ self.blocks[a.target]
                rhs = self.blocks[a.source] @ target.mats[a.index]
                if lhs != rhs:
                    raise InvalidParameters(
                        "blocks do not commute with arrow %s" % a.name)

    def block(self, v):
        return self.blocks[v]

    def then(self, other):
        if other.source is not self.target:
            raise InvalidParameters("maps do not compose")
        return ModuleMap(self.source, other.target,
                         {v: self.blocks[v] @ other.blocks[v]
                          for v in self.blocks}, validate=False)

    def total_matrix(self):
        q = self.source.algebra.quiver
        out = [[F0] * self.target.total_dim for _ in range(self.source.total_dim)]
        for v in q.vertices:
            b = self.blocks[v]
            ro = self.source.offsets[v]
            co = self.target.offsets[v]
            for i in range(b.nrows):
                for j in range(b.ncols):
                    out[ro + i][co + j] = b.data[i][j]
        return Matrix(out, self.source.total_dim, self.target.total_dim)

    def __add__(self, other):
        return ModuleMap(self.source, self.target,
                         {v: self.blocks[v] + other.blocks[v]
                          for v in self.blocks}, validate=False)

    def __sub__(self, other):
        return ModuleMap(self.source, self.target,
                         {v: self.blocks[v] - other.blocks[v]
                          for v in self.blocks}, validate=False)

    def scale(self, c):
        return ModuleMap(self.source, self.target,
                         {v: self.blocks[v].scale(c) for v in self.blocks},
                         validate=False)

    def is_zero(self):
        return all(b.is_zero() for b in self.blocks.values())

    def is_injective(self):
        return all(rank(b) == self.source.dims[v]
                   for v, b in self.blocks.items())

    def is_surjective(self):
        return all(rank(b) == self.target.dims[v]
                   for v, b in self.blocks.items())

    def is_iso(self):
        return (self.source.dim_vector() == self.target.dim_vector()
                and self.is_injective())

    @classmethod
    def identity(cls, m):
        return cls(m, m, {v: Matrix.identity(m.dims[v]) for v in m.dims},
                   validate=False)

    @classmethod
    def zero(cls, m, n):
        return cls(m, n, {}, validate=False)


# -- basic constructions ---------------------------------------------------

def zero_rep(algebra):
    return Representation(algebra, {}, {}, validate=False)


def simple_rep(algebra, v):
    key = ("simple", v)
    if key not in algebra._cache:
        algebra._cache[key] = Representation(algebra, {v: 1}, {})
    return algebra._cache[key]


def projective_from_vertices(algebra, verts):
    """Direct sum of the projectives at the listed vertices, with the path
    basis recorded row by row so maps out of it can be written down from
    generator images alone."""
    verts = list(verts)
    q = algebra.quiver
    row_paths = {w: [] for w in q.vertices}
    for j, v in enumerate(verts):
        for i in algebra.paths_from(v):
            row_paths[algebra.basis[i].target].append((j, i))
    dims = {w: len(row_paths[w]) for w in q.vertices}
    pos = {w: {ji: r for r, ji in enumerate(row_paths[w])} for w in q.vertices}
    mats = {}
    for a in q.arrows:
        ab = algebra._arrow_basis[a.index]
        rows = []
        for j, i in row_paths[a.source]:
            row = [F0] * dims[a.target]
            prod = algebra.mult[i][ab]
            if prod:
                for k, c in prod.items():
                    row[pos[a.target][(j, k)]] = c
            rows.append(row)
        mats[a.index] = Matrix(rows, dims[a.source], dims[a.target])
    rep = Representation(algebra, dims, mats)
    rep.proj_summand_vertices = tuple(verts)
    rep.proj_row_paths = row_paths
    rep.proj_gen = [(v, pos[v][(j, algebra._idem[v])]) for j, v in enumerate(verts)]
    return rep


def projective_rep(algebra, v):
    key = ("proj", v)
    if key not in algebra._cache:
        algebra._cache[key] = projective_from_vertices(algebra, [v])
    return algebra._cache[key]


def regular_rep(algebra):
    key = ("regular",)
    if key not in algebra._cache:
        algebra._cache[key] = projective_from_vertices(
            algebra, list(algebra.quiver.vertices))
    return algebra._cache[key]


def injective_rep(algebra, v):
    key = ("inj", v)
    if key not in algebra._cache:
        op = algebra.opposite_algebra()
        algebra._cache[key] = dualize(projective_rep(op, v))
    return algebra._cache[key]


def projective_map(proj, target, images):
    """Map out of projective_from_vertices data: images[j] is a row of the
    target component at the j-th generator vertex."""
    blocks = {}
    for w in proj.algebra.quiver.vertices:
        rows = []
        for j, i in proj.proj_row_paths[w]:
            p = proj.algebra.basis[i]
            img = images[j]
            row = [F0] * target.dims[w]
            if img is not None and any(img):
                gm = Matrix.row_vector(img) @ target.path_action(p)
                row = gm.data[0]
            rows.append(row)
        blocks[w] = Matrix(rows, proj.dims[w], target.dims[w])
    return ModuleMap(proj, target, blocks)


def dualize(m):
    """Dual module over the opposite algebra; arrow matrices transpose."""
    if m._dual is not None:
        return m._dual
    op = m.algebra.opposite_algebra()
    mats = {a.index: m.mats[a.index].transpose() for a in m.algebra.quiver.arrows}
    d = Representation(op, dict(m.dims), mats)
    d._dual = m
    m._dual = d
    return d


def dual_map(f):
    """Dual of a map runs in the opposite direction over the opposite
    algebra, with transposed blocks."""
    return ModuleMap(dualize(f.target), dualize(f.source),
                     {v: f.blocks[v].transpose() for v in f.blocks},
                     validate=False)


def direct_sum(reps):
    reps = list(reps)
    if not reps:
        raise InvalidParameters("empty direct sum; use zero_rep")
    algebra = reps[0].algebra
    q = algebra.quiver
    dims = {v: sum(r.dims[v] for r in reps) for v in q.vertices}
    mats = {}
    for a in q.arrows:
        out = [[F0] * dims[a.target] for _ in range(dims[a.source])]
        ro = co = 0
        for r in reps:
            b = r.mats[a.index]
            for i in range(b.nrows):
                for j in range(b.ncols):
                    out[ro + i][co + j] = b.data[i][j]
            ro += r.dims[a.source]
            co += r.dims[a.target]
        mats[a.index] = Matrix(out, dims[a.source], dims[a.target])
    total = Representation(algebra, dims, mats, validate=False)
    slices = []
    start = {v: 0 for v in q.vertices}
    for r in reps:
        sl = {v: (start[v], start[v] + r.dims[v]) for v in q.vertices}
        slices.append(sl)
        for v in q.vertices:
            start[v] += r.dims[v]
    total.summand_slices = slices
    return total


def summand_inclusion(total, reps, idx):
    sl = total.summand_slices[idx]
    r = reps[idx]
    blocks = {}
    for v in total.algebra.quiver.vertices:
        b = Matrix.zeros(r.dims[v], total.dims[v])
        lo, _hi = sl[v]
        rows = [list(row) for row in b.data]
        for i in range(r.dims[v]):
            rows[i][lo + i] = F1
        blocks[v] = Matrix(rows, r.dims[v], total.dims[v])
    return ModuleMap(r, total, blocks, validate=False)


def summand_projection(total, reps, idx):
    sl = total.summand_slices[idx]
    r = reps[idx]
    blocks = {}
    for v in total.algebra.quiver.vertices:
        rows = [[F0] * r.dims[v] for _ in range(total.dims[v])]
        lo, _hi = sl[v]
        for i in range(r.dims[v]):
            rows[lo + i][i] = F1
        blocks[v] = Matrix(rows, total.dims[v], r.dims[v])
    return ModuleMap(total, r, blocks, validate=False)


# -- radical, top, socle ---------------------------------------------------

def radical_rows(m):
    """Row space of the radical at each vertex."""
    q = m.algebra.quiver
    out = {}
    for v in q.vertices:
        pieces = [m.mats[a.index] for a in q.arrows_to(v)]
        if pieces:
            out[v] = row_space(vstack(pieces))
        else:
            out[v] = Matrix.zeros(0, m.dims[v])
    return out


def radical_power_rows(m, k):
    q = m.algebra.quiver
    cur = {v: Matrix.identity(m.dims[v]) for v in q.vertices}
    for _ in range(k):
        nxt = {}
        for v in q.vertices:
            pieces = [cur[a.source] @ m.mats[a.index] for a in q.arrows_to(v)]
            nxt[v] = row_space(vstack(pieces)) if pieces else Matrix.zeros(0, m.dims[v])
        cur = nxt
    return cur


def top_dims(m):
    rad = radical_rows(m)
    return tuple(m.dims[v] - rad[v].nrows for v in m.algebra.quiver.vertices)


def socle_rows(m):
    q = m.algebra.quiver
    out = {}
    for v in q.vertices:
        pieces = [m.mats[a.index] for a in q.arrows_from(v)]
        if pieces:
            out[v] = left_kernel(hstack(pieces))
        else:
            out[v] = Matrix.identity(m.dims[v])
    return out


def socle_dims(m):
    soc = socle_rows(m)
    return tuple(soc[v].nrows for v in m.algebra.quiver.vertices)


# -- sub and quotient objects ----------------------------------------------

def sub_representation(m, rows_by_vertex, close=True):
    """Subrepresentation spanned by the given rows (per vertex), closed
    under the arrow action when close=True.  Returns (sub, inclusion)."""
    q = m.algebra.quiver
    spans = {}
    for v in q.vertices:
        rows = rows_by_vertex.get(v, [])
        mat = rows if isinstance(rows, Matrix) else Matrix(
            [list(r) for r in rows], len(rows), m.dims[v])
        spans[v] = row_space(mat)
    if close:
        changed = True
        while changed:
            changed = False
            for a in q.arrows:
                if spans[a.source].nrows == 0:
                    continue
                img = spans[a.source] @ m.mats[a.index]
                joint = row_space(vstack([spans[a.target], img]))
                if joint.nrows != spans[a.target].nrows:
                    spans[a.target] = joint
                    changed = True
    dims = {v: spans[v].nrows for v in q.vertices}
    mats = {}
    for a in q.arrows:
        img = spans[a.source] @ m.mats[a.index]
        coords = solve_xa_b(spans[a.target], img)
        if coords is None:
            raise CertificateFailure("rows are not closed under the action")
        mats[a.index] = coords
    sub = Representation(m.algebra, dims, mats)
    incl = ModuleMap(sub, m, dict(spans), validate=True)
    return sub, incl


def submodule_from_total_rows(m, total_rows):
    q = m.algebra.quiver
    per = {v: [] for v in q.vertices}
    for row in total_rows:
        for v in q.vertices:
            lo, hi = m.component_slice(v)
            comp = list(row[lo:hi])
            if any(comp):
                per[v].append(comp)
    return sub_representation(m, per, close=True)


def vertex_trace(m, t):
    """Smallest submodule containing the whole component at t; this is the
    image of every map from the projective at t, i.e. M e_t A."""
    rows = {t: Matrix.identity(m.dims[t])}
    return sub_representation(m, rows, close=True)


def cyclic_submodule(m, v, row):
    return sub_representation(m, {v: [list(row)]}, close=True)


def quotient_by_rows(m, rows_by_vertex):
    """Quotient by the subrepresentation spanned by the rows (assumed
    closed).  Returns (quotient, projection)."""
    q = m.algebra.quiver
    red = {}
    npv = {}
    for v in q.vertices:
        rows = rows_by_vertex.get(v)
        if rows is None:
            rows = Matrix.zeros(0, m.dims[v])
        elif not isinstance(rows, Matrix):
            rows = Matrix([list(r) for r in rows], len(rows), m.dims[v])
        R, piv = rref(rows)
        red[v] = (R, piv)
        npv[v] = [c for c in range(m.dims[v]) if c not in piv]
    dims = {v: len(npv[v]) for v in q.vertices}

    def project(v, vec):
        R, piv = red[v]
        vec = list(vec)
        for r, c in enumerate(piv):
            f = vec[c]
            if f:
                row = R.data[r]
                vec = [x - f * y for x, y in zip(vec, row)]
        return [vec[c] for c in npv[v]]

    blocks = {}
    for v in q.vertices:
        blocks[v] = Matrix([project(v, row) for row in
                            Matrix.identity(m.dims[v]).data],
                           m.dims[v], dims[v])
    mats = {}
    for a in q.arrows:
        lift = Matrix([[F1 if j == c else F0 for j in range(m.dims[a.source])]
                       for c in npv[a.source]],
                      dims[a.source], m.dims[a.source])
        mats[a.index] = lift @ m.mats[a.index] @ blocks[a.target]
    quot = Representation(m.algebra, dims, mats)
    proj = ModuleMap(m, quot, blocks, validate=True)
    return quot, proj


def quotient_by_submodule(m, incl):
    return quotient_by_rows(m, {v: incl.blocks[v] for v in incl.blocks})


def kernel_of_map(f):
    """(kernel, inclusion) of a module map."""
    ker_rows = {v: left_kernel(f.blocks[v]) for v in f.blocks}
    return sub_representation(f.source, ker_rows, close=False)


def image_rows(f):
    return {v: row_space(f.blocks[v]) for v in f.blocks}


def cokernel_of_map(f):
    """(cokernel, projection) of a module map."""
    return quotient_by_rows(f.target, image_rows(f))


def top_quotient(m):
    """(top, projection): quotient by the radical."""
    return quotient_by_rows(m, radical_rows(m))


def socle_submodule(m):
    return sub_representation(m, socle_rows(m), close=False)


def radical_submodule(m):
    return sub_representation(m, radical_rows(m), close=False)


def uniserial_quotient(algebra, v, k):
    """Projective at v modulo the k-th radical power."""
    key = ("uniserial", v, k)
    if key not in algebra._cache:
        p = projective_rep(algebra, v)
        quot, _ = quotient_by_rows(p, radical_power_rows(p, k))
        algebra._cache[key] = quot
    return algebra._cache[key]


# -- hom spaces ------------------------------------------------------------

def hom_basis(m, n):
    """Basis of the homomorphism space as a list of maps, deterministic."""
    q = m.algebra.quiver
    offs = {}
    total = 0
    for v in q.vertices:
        offs[v] = total
        total += m.dims[v] * n.dims[v]
    if total == 0:
        return []
    rows = []
    for a in q.arrows:
        v, w = a.source, a.target
        ma, na = m.mats[a.index], n.mats[a.index]
        for i in range(m.dims[v]):
            for k in range(n.dims[w]):
                row = [F0] * total
                for j in range(m.dims[w]):
                    row[offs[w] + j * n.dims[w] + k] += ma.data[i][j]
                for j in range(n.dims[v]):
                    row[offs[v] + i * n.dims[v] + j] -= na.data[j][k]
                if any(row):
                    rows.append(row)
    mat = Matrix(rows, len(rows), total) if rows else Matrix.zeros(0, total)
    ker = right_kernel(mat)
    out = []
    for c in range(ker.ncols):
        col = ker.column(c)
        blocks = {}
        for v in q.vertices:
            data = [[col[offs[v] + i * n.dims[v] + j] for j in range(n.dims[v])]
                    for i in range(m.dims[v])]
            blocks[v] = Matrix(data, m.dims[v], n.dims[v])
        out.append(ModuleMap(m, n, blocks, validate=False))
    return out


def hom_dim(m, n):
    return len(hom_basis(m, n))


def is_faithful(m):
    """True iff no nonzero algebra element acts as zero."""
    a = m.algebra
    if m.total_dim == 0:
        return a.dim == 0
    rows = []
    for i in range(a.dim):
        t = m.total_path_action(a.basis[i])
        rows.append([x for r in t.data for x in r])
    return rank(Matrix(rows, a.dim, m.total_dim ** 2)) == a.dim


# -- isomorphism and decomposition -----------------------------------------

class IsoResult:
    __slots__ = ("kind", "map", "reason")

    def __init__(self, kind, map=None, reason=None):
        self.kind = kind
        self.map = map
        self.reason = reason

    @property
    def is_iso(self):
        return self.kind == "iso"

    @property
    def certain(self):
        return self.kind in ("iso", "not_iso")

    def __repr__(self):
        return "IsoResult(%s)" % self.kind


def _seeded_combinations(items, budget, seed, make):
    out = list(items)
    rng = random.Random(seed)
    while len(out) < budget and items:
        coeffs = [rng.randint(-3, 3) for _ in items]
        out.append(make(coeffs))
    return out


def iso_test(m, n, budget=64, seed=0):
    """Structural negatives are certificates; a found invertible map is a
    certificate; otherwise the search is inconclusive."""
    if m.dim_vector() != n.dim_vector():
        return IsoResult("not_iso", reason="dimension vectors differ")
    if m.total_dim == 0:
        return IsoResult("iso", map=ModuleMap.zero(m, n))
    if top_dims(m) != top_dims(n):
        return IsoResult("not_iso", reason="tops differ")
    if socle_dims(m) != socle_dims(n):
        return IsoResult("not_iso", reason="socles differ")
    fwd = hom_basis(m, n)
    if len(fwd) != len(hom_basis(n, m)) or \
       len(hom_basis(m, m)) != len(hom_basis(n, n)) or \
       len(fwd) != len(hom_basis(m, m)):
        return IsoResult("not_iso", reason="hom dimensions differ")
    if not fwd:
        return IsoResult("not_iso", reason="no nonzero maps")

    def make(coeffs):
        f = ModuleMap.zero(m, n)
        for c, g in zip(coeffs, fwd):
            if c:
                f = f + g.scale(c)
        return f

    for f in _seeded_combinations(fwd, budget, seed, make):
        if f.is_iso():
            return IsoResult("iso", map=f)
    return IsoResult("inconclusive",
                     reason="no invertible combination found in budget")


def _poly_of_map(f, coeffs):
    """Evaluate a polynomial (low degree first) at an endomorphism."""
    blocks = {}
    for v, b in f.blocks.items():
        n = b.nrows
        acc = Matrix.zeros(n, n)
        for c in reversed(coeffs):
            acc = acc @ b
            if c:
                acc = acc + Matrix.identity(n).scale(c)
        blocks[v] = acc
    return ModuleMap(f.source, f.target, blocks, validate=False)


def _sympy_factors(coeffs):
    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator)
                       for c in reversed(coeffs)], x)
    _, facs = poly.factor_list()
    return [(sympy.Poly(f, x), e) for f, e in facs]


def _poly_coeffs(poly):
    cs = list(reversed(poly.all_coeffs()))
    return [Fraction(c.p, c.q) for c in cs]


def decompose(m, budget=64, seed=0):
    """Indecomposable summands, via kernels of polynomials in endomorphisms.

    Splitting only stops with a certificate: either the endomorphism ring is
    one-dimensional, or its trace form has rank one (local endomorphism
    ring).  Otherwise DecompositionInconclusive is raised.
    """
    if m.total_dim == 0:
        return []
    endos = hom_basis(m, m)
    if len(endos) == 1:
        return [m]

    def make(coeffs):
        f = ModuleMap.zero(m, m)
        for c, g in zip(coeffs, endos):
            if c:
                f = f + g.scale(c)
        return f

    for f in _seeded_combinations(endos, budget, seed, make):
        coeffs = minimal_polynomial(f.total_matrix())
        facs = _sympy_factors(coeffs)
        if len(facs) < 2:
            continue
        x = sympy.Symbol("x")
        g1 = facs[0][0] ** facs[0][1]
        g2 = sympy.Poly(1, x)
        for p, e in facs[1:]:
            g2 = g2 * p ** e
        k1, _ = kernel_of_map(_poly_of_map(f, _poly_coeffs(sympy.Poly(g1, x))))
        k2, _ = kernel_of_map(_poly_of_map(f, _poly_coeffs(sympy.Poly(g2, x))))
        if k1.total_dim + k2.total_dim != m.total_dim or k1.total_dim == 0 \
                or k2.total_dim == 0:
            raise CertificateFailure("fitting split does not add up")
        return decompose(k1, budget, seed) + decompose(k2, budget, seed)

    totals = [f.total_matrix() for f in endos]
    gram = [[_trace(totals[i] @ totals[j]) for j in range(len(endos))]
            for i in range(len(endos))]
    if rank(Matrix(gram, len(endos), len(endos))) == 1:
        return [m]
    raise DecompositionInconclusive(
        "no splitting endomorphism found and local certificate failed")


def _trace(mat):
    return sum(mat.data[i][i] for i in range(mat.nrows))


def transport_to_quotient(m, quot):
    """Reinterpret a module with zero components at the removed vertices as
    a module over the quotient algebra (matched by vertex label and arrow
    name)."""
    for v in m.algebra.quiver.vertices:
        if v not in quot.quiver._vindex and m.dims[v]:
            raise InvalidParameters(
                "module has support at removed vertex %r" % (v,))
    dims = {v: m.dims[v] for v in quot.quiver.vertices}
    orig = m.algebra.quiver
    mats = {a.index: m.mats[orig.arrow(a.name).index] for a in quot.quiver.arrows}
    return Representation(quot, dims, mats)
