"""Independent cross-checks used to freeze expected values in the tests.

word_space_dimension recomputes the dimension of a presented algebra from
scratch: words are enumerated by arrow name, the relation span is padded
inside the truncated word space, and the rank comes from sympy's rref.  The
caller supplies a Loewy bound known from the theory of the family under
test, so nothing here depends on the package's own truncation search.
"""
import sympy


def word_space_dimension(vertices, arrows, relations, loewy):
    """Dimension of the quiver algebra modulo the relations, given that
    words of length >= loewy vanish.

    arrows: list of (name, source, target).
    relations: list of [(coeff, (name, ...)), ...] with nonempty words.
    """
    arr = {name: (s, t) for name, s, t in arrows}

    def w_target(w, s):
        return arr[w[-1]][1] if w else s

    levels = [[(v, ()) for v in vertices]]
    for _ in range(loewy - 1):
        nxt = []
        for s, w in levels[-1]:
            end = w_target(w, s)
            for name in sorted(arr):
                if arr[name][0] == end:
                    nxt.append((s, w + (name,)))
        levels.append(nxt)
    allw = sorted(w for lev in levels for w in lev)
    col = {w: i for i, w in enumerate(allw)}

    rows = []
    for rel in relations:
        rsrc = arr[rel[0][1][0]][0]
        rtgt = w_target(rel[0][1], rsrc)
        for us, uw in allw:
            if w_target(uw, us) != rsrc:
                continue
            for vs, vw in allw:
                if vs != rtgt:
                    continue
                row = [0] * len(allw)
                hit = False
                for c, names in rel:
                    if len(uw) + len(names) + len(vw) <= loewy - 1:
                        row[col[(us, uw + tuple(names) + vw)]] += sympy.Rational(c)
                        hit = True
                if hit and any(row):
                    rows.append(row)
    r = sympy.Matrix(rows).rank() if rows else 0
    return len(allw) - r
