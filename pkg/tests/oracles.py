"""Independent reference computations used to pin expected values.

None of these share code paths with the package beyond the Polytope container.
"""

from __future__ import annotations

import itertools

import networkx as nx
import numpy as np
import sympy


def phi_coefficients(dual_f, n):
    """Expand (t-1)^n + sum f_i (t-1)^(n-1-i) symbolically."""
    t = sympy.symbols("t")
    expr = (t - 1) ** n + sum(f * (t - 1) ** (n - 1 - i) for i, f in enumerate(dual_f))
    poly = sympy.Poly(sympy.expand(expr), t)
    return tuple(int(poly.coeff_monomial(t ** (n - i))) for i in range(n + 1))


def exhaustive_characteristic_count(p) -> int:
    """Scan all (2^n - 1)^F assignments with numpy; F <= 8 keeps this under 6M rows."""
    n, F = p.dim, p.n_facets
    q = (1 << n) - 1
    grid = np.indices((q,) * F, dtype=np.uint8).reshape(F, -1) + 1
    ok = np.ones(grid.shape[1], dtype=bool)
    for v in range(p.n_vertices):
        fs = [i for i, face in enumerate(p.facets) if v in face]
        cols = [grid[i] for i in fs]
        if n == 2:
            a, b = cols
            ok &= a != b
        else:
            a, b, c = cols
            ok &= (a != b) & (a != c) & (b != c) & ((a ^ b ^ c) != 0)
    return int(ok.sum())


def edge_graph(p) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(p.n_vertices))
    for face in p.facets:
        k = len(face)
        for i in range(k):
            g.add_edge(face[i], face[(i + 1) % k])
    return g


def graph_automorphisms(p) -> list[dict[int, int]]:
    """Vertex maps preserving the edge graph (equal to the face-lattice automorphisms of a 3-polytope)."""
    g = edge_graph(p)
    return list(nx.algorithms.isomorphism.GraphMatcher(g, g).isomorphisms_iter())


def facet_permutation(p, vmap) -> tuple[int, ...]:
    index = {frozenset(f): i for i, f in enumerate(p.facets)}
    return tuple(index[frozenset(vmap[v] for v in f)] for f in p.facets)


def all_gl(n):
    """Invertible n x n GF(2) matrices as column-image tuples."""
    out = []
    for cols in itertools.product(range(1, 1 << n), repeat=n):
        span = {0}
        for c in cols:
            span |= {x ^ c for x in span}
        if len(span) == 1 << n:
            out.append(cols)
    return out


def apply_matrix(cols, x):
    y = 0
    for i, c in enumerate(cols):
        if x >> i & 1:
            y ^= c
    return y


def brute_characteristic(p):
    """All characteristic colorings by plain product scan (small F only)."""
    n = p.dim
    out = []
    for colors in itertools.product(range(1, 1 << n), repeat=p.n_facets):
        good = True
        for v in range(p.n_vertices):
            vs = [colors[i] for i, face in enumerate(p.facets) if v in face]
            span = {0}
            for c in vs:
                span |= {x ^ c for x in span}
            if len(span) != 1 << len(vs):
                good = False
                break
        if good:
            out.append(colors)
    return out


def orbit_count(colorings, facet_perms, matrices) -> int:
    """Union-find orbit count under facet permutations and matrix actions (generators suffice)."""
    idx = {c: i for i, c in enumerate(colorings)}
    parent = list(range(len(colorings)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for c, i in idx.items():
        images = []
        for perm in facet_perms:
            moved = [0] * len(c)
            for a, b in enumerate(perm):
                moved[b] = c[a]
            images.append(tuple(moved))
        for m in matrices:
            images.append(tuple(apply_matrix(m, x) for x in c))
        for im in images:
            a, b = find(i), find(idx[im])
            if a != b:
                parent[a] = b
    return len({find(i) for i in range(len(colorings))})


def doubled_edge_graph(p, face) -> nx.Graph:
    """Edge graph of the double of p along face, built by graph surgery.

    Two copies of the edge graph; the vertices of the face are removed and
    each dangling edge x - a (a on the face) becomes x - x'.
    """
    g = edge_graph(p)
    on_face = set(p.facets[face])
    out = nx.Graph()
    for copy in (0, 1):
        for a, b in g.edges:
            if a not in on_face and b not in on_face:
                out.add_edge((copy, a), (copy, b))
    for a in on_face:
        for x in g.neighbors(a):
            if x not in on_face:
                out.add_edge((0, x), (1, x))
    return out
