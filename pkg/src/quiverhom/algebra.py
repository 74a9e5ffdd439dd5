"""Bound quiver algebras with exact rational structure constants.

A quiver is a finite directed graph.  Paths compose left to right: pq means
"p, then q", so a path from v to w followed by a path from w to u gives a
path from v to u.  An algebra is presented by a quiver and a list of
relations, each a rational combination of parallel paths of length at least
two (an admissible presentation).

Construction runs inside truncated path algebras.  For N = 2, 3, ... the
relation ideal is expanded by all padded products u r v of total length at
most N, and N is accepted once every path of length exactly N lies in that
span.  Then the ideal contains all paths of length N, the surviving shorter
paths form a basis, and the multiplication table is tabulated once and for
all.  If no N up to the cap is accepted the presentation is rejected.

Row reduction orders path coordinates by decreasing degree-lexicographic
position (longer first, then larger arrow word), so each eliminated path is
rewritten in terms of strictly smaller ones and the basis is deterministic.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .errors import (
    BoundExceeded, CertificateFailure, InvalidParameters, InvalidSeries,
    QuotientCollapse,
)
from .linalg import F0, F1, Matrix, rank, right_kernel, left_kernel, rref


class Arrow:
    """Directed edge; index is the declaration position in the quiver."""

    __slots__ = ("name", "source", "target", "index")

    def __init__(self, name, source, target, index):
        self.name = name
        self.source = source
        self.target = target
        self.index = index

    def __repr__(self):
        return "Arrow(%s: %s -> %s)" % (self.name, self.source, self.target)


class Path:
    """Composable word of arrows with an explicit source vertex.

    The source is part of the identity so that trivial paths at different
    vertices stay distinct; the word is a tuple of arrow indices.
    """

    __slots__ = ("source", "target", "word")

    def __init__(self, source, target, word):
        self.source = source
        self.target = target
        self.word = word

    def key(self):
        return (self.source, self.word)

    def __len__(self):
        return len(self.word)

    def __eq__(self, other):
        if not isinstance(other, Path):
            return NotImplemented
        return self.source == other.source and self.word == other.word

    def __hash__(self):
        return hash((self.source, self.word))

    def __repr__(self):
        return "Path(%s, %s)" % (self.source, self.word)


class Quiver:
    """Finite quiver with ordered vertices and named arrows."""

    def __init__(self, vertices, arrows):
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidParameters("duplicate vertex labels")
        self._vindex = {v: i for i, v in enumerate(self.vertices)}
        built = []
        names = set()
        for i, spec in enumerate(arrows):
            if isinstance(spec, Arrow):
                name, s, t = spec.name, spec.source, spec.target
            else:
                name, s, t = spec
            if name in names:
                raise InvalidParameters("duplicate arrow name %r" % (name,))
            names.add(name)
            if s not in self._vindex or t not in self._vindex:
                raise InvalidParameters("arrow %r has unknown endpoint" % (name,))
            built.append(Arrow(name, s, t, i))
        self.arrows = tuple(built)
        self._aname = {a.name: a for a in self.arrows}
        self._from = {v: tuple(a for a in self.arrows if a.source == v)
                      for v in self.vertices}
        self._to = {v: tuple(a for a in self.arrows if a.target == v)
                    for v in self.vertices}

    def vertex_index(self, v):
        return self._vindex[v]

    def arrow(self, name):
        return self._aname[name]

    def arrows_from(self, v):
        return self._from[v]

    def arrows_to(self, v):
        return self._to[v]

    def trivial_path(self, v):
        if v not in self._vindex:
            raise InvalidParameters("unknown vertex %r" % (v,))
        return Path(v, v, ())

    def arrow_path(self, a):
        return Path(a.source, a.target, (a.index,))

    def compose(self, p, q):
        if p.target != q.source:
            raise InvalidParameters("paths do not compose")
        return Path(p.source, q.target, p.word + q.word)

    def path_from_names(self, names, source=None):
        if not names:
            if source is None:
                raise InvalidParameters("trivial path needs a vertex")
            return self.trivial_path(source)
        seq = [self.arrow(n) for n in names]
        p = self.arrow_path(seq[0])
        for a in seq[1:]:
            p = self.compose(p, self.arrow_path(a))
        return p

    def paths_by_length(self, max_len):
        """Lists of all paths, one list per length 0 .. max_len."""
        levels = [[self.trivial_path(v) for v in self.vertices]]
        for _ in range(max_len):
            nxt = []
            for p in levels[-1]:
                for a in self._from[p.target]:
                    nxt.append(Path(p.source, a.target, p.word + (a.index,)))
            levels.append(nxt)
        return levels

    def path_str(self, p):
        if not p.word:
            return "e_%s" % (p.source,)
        return "*".join(self.arrows[i].name for i in p.word)

    def opposite(self):
        """Same vertices and arrow names, every arrow reversed."""
        return Quiver(self.vertices,
                      [(a.name, a.target, a.source) for a in self.arrows])

    def subquiver(self, kept):
        kept = [v for v in self.vertices if v in set(kept)]
        ks = set(kept)
        return Quiver(kept, [(a.name, a.source, a.target) for a in self.arrows
                             if a.source in ks and a.target in ks])


def _deglex_key(quiver, p):
    return (len(p.word), p.word, quiver.vertex_index(p.source))


class Relation:
    """Rational combination of parallel paths of length >= 2."""

    __slots__ = ("terms", "source", "target")

    def __init__(self, terms):
        merged = {}
        first = None
        for c, p in terms:
            c = c if isinstance(c, Fraction) else Fraction(c)
            if first is None:
                first = p
            if p.source != first.source or p.target != first.target:
                raise InvalidParameters("relation mixes different endpoints")
            if len(p) < 2:
                raise InvalidParameters("relation path %r too short" % (p,))
            merged[p] = merged.get(p, F0) + c
        kept = [(c, p) for p, c in merged.items() if c]
        kept.sort(key=lambda t: (len(t[1].word), t[1].word))
        self.terms = tuple(kept)
        self.source = first.source if first is not None else None
        self.target = first.target if first is not None else None

    def reversed(self):
        return Relation([(c, Path(p.target, p.source, tuple(reversed(p.word))))
                         for c, p in self.terms])

    def __repr__(self):
        return "Relation(%d terms)" % len(self.terms)


def monomial_relation(quiver, names):
    return Relation([(F1, quiver.path_from_names(names))])


def combination_relation(quiver, combo):
    """combo: iterable of (coeff, list of arrow names)."""
    return Relation([(c, quiver.path_from_names(names)) for c, names in combo])


def relation_str(quiver, rel):
    parts = []
    for c, p in rel.terms:
        s = quiver.path_str(p)
        if c == 1:
            parts.append(s if not parts else "+ " + s)
        elif c == -1:
            parts.append("-" + s if not parts else "- " + s)
        else:
            lead = str(c) if not parts else ("+ " + str(c) if c > 0 else "- " + str(-c))
            parts.append("%s*%s" % (lead, s))
    return " ".join(parts) if parts else "0"


def _reduce_row(vec, R, piv):
    for r, c in enumerate(piv):
        f = vec[c]
        if f:
            row = R.data[r]
            vec = [a - f * b for a, b in zip(vec, row)]
    return vec


def element_add(x, y):
    out = dict(x)
    for k, c in y.items():
        s = out.get(k, F0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def element_scale(x, c):
    c = c if isinstance(c, Fraction) else Fraction(c)
    if not c:
        return {}
    return {k: c * v for k, v in x.items()}


class BoundQuiverAlgebra:
    """Finite-dimensional path algebra modulo an admissible ideal.

    Elements are dicts {basis index: Fraction}.  The basis consists of the
    surviving paths, listed in increasing degree-lexicographic order, so
    trivial paths come first (one per vertex), then arrows, then longer
    paths.  loewy_bound is an accepted truncation level: every path of that
    length is zero in the algebra.
    """

    def __init__(self, quiver, relations, loewy_bound, basis, mult):
        self.quiver = quiver
        self.relations = tuple(relations)
        self.loewy_bound = loewy_bound
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        self.mult = mult
        self._index = {p.key(): i for i, p in enumerate(self.basis)}
        self.max_basis_length = max((len(p) for p in self.basis), default=0)
        self._idem = {v: self._index[(v, ())] for v in quiver.vertices}
        self._arrow_basis = {a.index: self._index[(a.source, (a.index,))]
                             for a in quiver.arrows}
        self._opposite = None
        self._quotients = {}
        self._symform = False  # sentinel: not yet computed
        self._cache = {}

    # -- elements ----------------------------------------------------------

    def idempotent(self, v):
        return {self._idem[v]: F1}

    def one(self):
        return {i: F1 for i in self._idem.values()}

    def arrow_element(self, name):
        a = self.quiver.arrow(name)
        return {self._arrow_basis[a.index]: F1}

    def basis_element(self, i):
        return {i: F1}

    def multiply(self, x, y):
        out = {}
        mult = self.mult
        for i, a in x.items():
            row = mult[i]
            for j, b in y.items():
                prod = row[j]
                if prod:
                    ab = a * b
                    for k, c in prod.items():
                        out[k] = out.get(k, F0) + ab * c
        return {k: v for k, v in out.items() if v}

    def path_normal_form(self, path):
        """Image of an arbitrary quiver path in the algebra."""
        x = self.idempotent(path.source)
        for ai in path.word:
            x = self.multiply(x, {self._arrow_basis[ai]: F1})
            if not x:
                return {}
        return x

    def element_vector(self, x):
        row = [F0] * self.dim
        for k, c in x.items():
            row[k] = c
        return row

    def vector_element(self, row):
        return {i: c for i, c in enumerate(row) if c}

    def element_str(self, x):
        if not x:
            return "0"
        parts = []
        for i in sorted(x):
            c = x[i]
            s = self.quiver.path_str(self.basis[i])
            if c == 1:
                parts.append(s if not parts else "+ " + s)
            elif c == -1:
                parts.append("-" + s if not parts else "- " + s)
            else:
                lead = str(c) if not parts else ("+ " + str(c) if c > 0 else "- " + str(-c))
                parts.append("%s*%s" % (lead, s))
        return " ".join(parts)

    # -- structure ---------------------------------------------------------

    def paths_from(self, v):
        return [i for i, p in enumerate(self.basis) if p.source == v]

    def paths_between(self, v, w):
        return [i for i, p in enumerate(self.basis)
                if p.source == v and p.target == w]

    def cartan_matrix(self):
        """Entry (i, j): dim e_{v_i} A e_{v_j}, the number of basis paths
        from vertex i to vertex j."""
        vs = self.quiver.vertices
        counts = {(v, w): 0 for v in vs for w in vs}
        for p in self.basis:
            counts[(p.source, p.target)] += 1
        return Matrix.from_rows([[counts[(v, w)] for w in vs] for v in vs])

    def opposite_algebra(self):
        """Algebra on the reversed quiver; basis index i corresponds to the
        reversed path of basis element i, so element dicts carry over
        unchanged."""
        if self._opposite is None:
            opq = self.quiver.opposite()
            basis_op = [Path(p.target, p.source, tuple(reversed(p.word)))
                        for p in self.basis]
            mult_op = [[self.mult[j][i] for j in range(self.dim)]
                       for i in range(self.dim)]
            op = BoundQuiverAlgebra(opq, [r.reversed() for r in self.relations],
                                    self.loewy_bound, basis_op, mult_op)
            op._opposite = self
            self._opposite = op
        return self._opposite

    def op_element(self, x):
        """Identity on coordinates; documented hook for moving elements to
        the opposite algebra."""
        return dict(x)

    # -- symmetric structure ----------------------------------------------

    def symmetric_form(self, budget=64, seed=0):
        """Linear functional L with L(xy) = L(yx) and nondegenerate pairing
        (x, y) -> L(xy), or None if the search finds none.

        The symmetric functionals form a linear space; nondegeneracy is an
        open condition, so basis vectors of that space plus a budget of
        seeded integer combinations are tried.  A returned functional is a
        certificate; None is only a failed search.
        """
        if self._symform is not False:
            return self._symform
        n = self.dim
        rows = []
        for i in range(n):
            for j in range(i + 1, n):
                vec = [F0] * n
                prod = self.mult[i][j]
                if prod:
                    for k, c in prod.items():
                        vec[k] += c
                prod = self.mult[j][i]
                if prod:
                    for k, c in prod.items():
                        vec[k] -= c
                if any(vec):
                    rows.append(vec)
        if rows:
            space = right_kernel(Matrix(rows, len(rows), n))
        else:
            space = Matrix.identity(n)
        d = space.ncols
        result = None
        if d:
            cands = [space.column(j) for j in range(d)]
            rng = random.Random(seed)
            while len(cands) < budget:
                coeffs = [rng.randint(-3, 3) for _ in range(d)]
                lam = [sum(Fraction(c) * space.entry(i, j)
                           for j, c in enumerate(coeffs)) for i in range(n)]
                cands.append(lam)
            for lam in cands:
                gram = []
                for i in range(n):
                    row = [F0] * n
                    for j in range(n):
                        prod = self.mult[i][j]
                        if prod:
                            row[j] = sum(c * lam[k] for k, c in prod.items())
                    gram.append(row)
                if rank(Matrix(gram, n, n)) == n:
                    result = tuple(lam)
                    break
        self._symform = result
        return result

    @property
    def is_symmetric(self):
        return self.symmetric_form() is not None

    # -- quotients ---------------------------------------------------------

    def quotient_by_idempotent_ideal(self, killed):
        """Quotient by the two-sided ideal generated by the idempotents of
        the given vertices, rebuilt as a bound quiver algebra on the kept
        vertices.  Cached per vertex set."""
        killed = frozenset(killed)
        unknown = killed - set(self.quiver.vertices)
        if unknown:
            raise InvalidParameters("unknown vertices %r" % (sorted(unknown, key=repr),))
        if not killed:
            return self
        if killed == set(self.quiver.vertices):
            raise QuotientCollapse("all vertices removed")
        if killed in self._quotients:
            return self._quotients[killed]

        n = self.dim
        rows = []
        for k in killed:
            us = [i for i, p in enumerate(self.basis) if p.target == k]
            vs = [j for j, p in enumerate(self.basis) if p.source == k]
            for i in us:
                for j in vs:
                    prod = self.mult[i][j]
                    if prod:
                        rows.append(self.element_vector(prod))
        mat = Matrix(rows, len(rows), n) if rows else Matrix.zeros(0, n)
        R, piv = rref(mat)
        qdim = n - len(piv)

        kept = [v for v in self.quiver.vertices if v not in killed]
        for v in kept:
            res = _reduce_row(self.element_vector(self.idempotent(v)), R, piv)
            if not any(res):
                raise QuotientCollapse("idempotent of %r dies" % (v,))
        sub = self.quiver.subquiver(kept)
        amap = {a.index: self.quiver.arrow(a.name).index for a in sub.arrows}

        by_len = sub.paths_by_length(self.loewy_bound)
        groups = {}
        for level in by_len[2:]:
            for p in level:
                word = tuple(amap[i] for i in p.word)
                x = self.path_normal_form(Path(p.source, p.target, word))
                res = _reduce_row(self.element_vector(x), R, piv)
                groups.setdefault((p.source, p.target), []).append((p, res))
        rels = []
        for key in sorted(groups, key=lambda st: (sub.vertex_index(st[0]),
                                                  sub.vertex_index(st[1]))):
            items = groups[key]
            emat = Matrix([res for _, res in items], len(items), n)
            K = left_kernel(emat)
            for r in range(K.nrows):
                terms = [(K.entry(r, c), items[c][0]) for c in range(K.ncols)
                         if K.entry(r, c)]
                if terms:
                    rels.append(Relation(terms))
        quo = build_algebra(sub, rels, loewy_cap=max(2, self.loewy_bound))
        if quo.dim != qdim:
            raise CertificateFailure(
                "quotient rebuild dimension %d, expected %d" % (quo.dim, qdim))
        self._quotients[killed] = quo
        return quo


def build_algebra(quiver, relations, loewy_cap=12):
    """Construct the algebra presented by the quiver and relations.

    Raises BoundExceeded if no truncation level up to loewy_cap closes the
    relation ideal.
    """
    rels = []
    for r in relations:
        if not isinstance(r, Relation):
            r = Relation(r)
        if r.terms:
            rels.append(r)

    for N in range(2, loewy_cap + 1):
        by_len = quiver.paths_by_length(N)
        cols = [p for level in by_len for p in level]
        cols.sort(key=lambda p: _deglex_key(quiver, p), reverse=True)
        col_of = {p.key(): c for c, p in enumerate(cols)}
        nc = len(cols)

        rows = []
        for r in rels:
            lmin = min(len(p) for _, p in r.terms)
            pad = N - lmin
            lefts = [u for level in by_len[:pad + 1] for u in level
                     if u.target == r.source]
            rights = [v for level in by_len[:pad + 1] for v in level
                      if v.source == r.target]
            for u in lefts:
                for v in rights:
                    if len(u) + lmin + len(v) > N:
                        continue
                    vec = [F0] * nc
                    hit = False
                    for c, p in r.terms:
                        if len(u) + len(p) + len(v) <= N:
                            w = (u.source, u.word + p.word + v.word)
                            vec[col_of[w]] += c
                            hit = True
                    if hit and any(vec):
                        rows.append(vec)
        mat = Matrix(rows, len(rows), nc) if rows else Matrix.zeros(0, nc)
        R, piv = rref(mat)

        closed = True
        for p in by_len[N]:
            vec = [F0] * nc
            vec[col_of[p.key()]] = F1
            if any(_reduce_row(vec, R, piv)):
                closed = False
                break
        if not closed:
            continue

        pivot_keys = {cols[c].key() for c in piv}
        basis = [p for level in by_len[:N] for p in level
                 if p.key() not in pivot_keys]
        basis.sort(key=lambda p: _deglex_key(quiver, p))
        bindex = {p.key(): i for i, p in enumerate(basis)}

        nf = {p.key(): {i: F1} for i, p in enumerate(basis)}
        for r_i, c in enumerate(piv):
            p = cols[c]
            if len(p) >= N:
                continue
            row = R.data[r_i]
            elem = {}
            for c2 in range(nc):
                if c2 != c and row[c2]:
                    elem[bindex[cols[c2].key()]] = -row[c2]
            nf[p.key()] = elem

        dim = len(basis)
        mult = [[None] * dim for _ in range(dim)]
        for i, p in enumerate(basis):
            for j, q in enumerate(basis):
                if p.target != q.source:
                    continue
                if len(p) + len(q) >= N:
                    continue
                prod = nf[(p.source, p.word + q.word)]
                mult[i][j] = prod if prod else None
        return BoundQuiverAlgebra(quiver, rels, N, basis, mult)

    raise BoundExceeded(
        "relation ideal not closed by truncation level %d" % loewy_cap)


# -- canonical families ----------------------------------------------------

def nakayama_from_kupisch(kupisch, cyclic=True, loewy_cap=None):
    """Nakayama algebra with the given Kupisch series.

    Vertices are 0 .. n-1 with arrows i -> i+1 (mod n when cyclic); entry i
    is the composition length of the projective at vertex i, so the path of
    that length starting at i is a relation whenever it exists.
    """
    kup = [int(a) for a in kupisch]
    n = len(kup)
    if n == 0:
        raise InvalidSeries("empty series")
    if any(a < 1 for a in kup):
        raise InvalidSeries("entries must be positive")
    if cyclic:
        if any(a < 2 for a in kup):
            raise InvalidSeries("cyclic series needs all entries >= 2")
        for i in range(n):
            if kup[(i + 1) % n] < kup[i] - 1:
                raise InvalidSeries(
                    "entry %d drops by more than one after position %d"
                    % (kup[(i + 1) % n], i))
    else:
        if kup[n - 1] != 1:
            raise InvalidSeries("linear series must end in 1")
        for i in range(n - 1):
            if kup[i] < 2:
                raise InvalidSeries("linear series needs interior entries >= 2")
            if kup[i] > n - i:
                raise InvalidSeries("entry %d at position %d overruns the quiver"
                                    % (kup[i], i))
            if kup[i + 1] < kup[i] - 1:
                raise InvalidSeries(
                    "entry %d drops by more than one after position %d"
                    % (kup[i + 1], i))

    verts = list(range(n))
    if cyclic:
        arrows = [("a%d" % i, i, (i + 1) % n) for i in range(n)]
    else:
        arrows = [("a%d" % i, i, i + 1) for i in range(n - 1)]
    q = Quiver(verts, arrows)

    rels = []
    for i in range(n):
        a = kup[i]
        if not cyclic and i + a > n - 1:
            continue
        names = ["a%d" % ((i + k) % n if cyclic else i + k) for k in range(a)]
        rels.append(monomial_relation(q, names))
    cap = loewy_cap if loewy_cap is not None else max(kup) + 1
    alg = build_algebra(q, rels, loewy_cap=max(2, cap))
    alg.kupisch = list(kup)
    return alg


def klein_four_like(loewy_cap=4):
    """Local four-dimensional algebra on two commuting square-zero loops."""
    q = Quiver([1], [("x", 1, 1), ("y", 1, 1)])
    rels = [
        monomial_relation(q, ["x", "x"]),
        monomial_relation(q, ["y", "y"]),
        combination_relation(q, [(1, ["x", "y"]), (-1, ["y", "x"])]),
    ]
    return build_algebra(q, rels, loewy_cap=loewy_cap)


def bnlambda_family(m, lams, loewy_cap=4):
    """Two-way chain algebra on m >= 2 vertices with 0/1 twist parameters.

    Arrows a_i: i -> i+1 and b_i: i+1 -> i.  The loop at the last vertex
    vanishes, two-step outward paths vanish, and at each interior vertex i
    the incoming loop b_{i-1}a_{i-1} equals lams[i-2] times the outgoing
    loop a_i b_i.  Dimension 4m - 3.
    """
    if m < 2:
        raise InvalidParameters("family needs at least two vertices")
    lams = list(lams)
    if len(lams) != m - 2:
        raise InvalidParameters("expected %d twist parameters, got %d"
                                % (m - 2, len(lams)))
    if any(l not in (0, 1) for l in lams):
        raise InvalidParameters("twist parameters must be 0 or 1")
    verts = list(range(1, m + 1))
    arrows = [("a%d" % i, i, i + 1) for i in range(1, m)]
    arrows += [("b%d" % i, i + 1, i) for i in range(1, m)]
    q = Quiver(verts, arrows)
    rels = [monomial_relation(q, ["b%d" % (m - 1), "a%d" % (m - 1)])]
    for i in range(2, m):
        combo = [(1, ["b%d" % (i - 1), "a%d" % (i - 1)])]
        if lams[i - 2]:
            combo.append((-1, ["a%d" % i, "b%d" % i]))
        rels.append(combination_relation(q, combo))
        rels.append(monomial_relation(q, ["a%d" % (i - 1), "a%d" % i]))
        rels.append(monomial_relation(q, ["b%d" % i, "b%d" % (i - 1)]))
    return build_algebra(q, rels, loewy_cap=loewy_cap)


def symmetric_chain_family(m, loewy_cap=4):
    """Symmetric radical-cube-zero algebra on a chain of m >= 2 vertices.

    Arrows a_i: i -> i+1 and b_i: i+1 -> i; paths two steps outward vanish,
    the two loops at an interior vertex agree, and the boundary loops square
    to zero against their outgoing arrow.  Dimension 4m - 2.
    """
    if m < 2:
        raise InvalidParameters("chain needs at least two vertices")
    verts = list(range(1, m + 1))
    arrows = [("a%d" % i, i, i + 1) for i in range(1, m)]
    arrows += [("b%d" % i, i + 1, i) for i in range(1, m)]
    q = Quiver(verts, arrows)
    rels = []
    for i in range(1, m - 1):
        rels.append(monomial_relation(q, ["a%d" % i, "a%d" % (i + 1)]))
        rels.append(monomial_relation(q, ["b%d" % (i + 1), "b%d" % i]))
    for i in range(2, m):
        rels.append(combination_relation(
            q, [(1, ["a%d" % i, "b%d" % i]), (-1, ["b%d" % (i - 1), "a%d" % (i - 1)])]))
    rels.append(monomial_relation(q, ["a1", "b1", "a1"]))
    rels.append(monomial_relation(q, ["b%d" % (m - 1), "a%d" % (m - 1), "b%d" % (m - 1)]))
    return build_algebra(q, rels, loewy_cap=loewy_cap)
