"""Combinatorial simple polytopes of dimension 2 and 3.

A polytope is stored as a list of facets, each a cyclic list of vertex ids.
For ``dim=3`` the facets are the polygonal faces of a planar map; for
``dim=2`` they are the edges of a polygon, given as vertex pairs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidPolytopeError, PolytopeParseError, SmallCoverError

__all__ = [
    "Polytope",
    "Violation",
    "ValidationReport",
    "FacePermutation",
    "parse_polytope",
    "serialize_polytope",
    "load_polytope",
    "validate",
    "f_vector",
    "dual_f_vector",
    "builtin",
    "builtin_names",
    "automorphism_group",
    "pogorelov_check",
    "relabel",
]


@dataclass(frozen=True)
class Polytope:
    dim: int
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "facets", tuple(tuple(f) for f in self.facets))

    @property
    def n_vertices(self) -> int:
        return 1 + max((v for f in self.facets for v in f), default=-1)

    @property
    def n_facets(self) -> int:
        return len(self.facets)

    @cached_property
    def edge_faces(self) -> dict[frozenset[int], tuple[int, ...]]:
        """Map each edge (vertex pair) to the facets containing it.

        For ``dim=2`` every facet is itself an edge.
        """
        out: dict[frozenset[int], list[int]] = {}
        for fid, face in enumerate(self.facets):
            if self.dim == 2:
                out.setdefault(frozenset(face), []).append(fid)
                continue
            k = len(face)
            for i in range(k):
                e = frozenset((face[i], face[(i + 1) % k]))
                out.setdefault(e, []).append(fid)
        return {e: tuple(fs) for e, fs in out.items()}

    @property
    def edges(self) -> list[frozenset[int]]:
        return sorted(self.edge_faces, key=lambda e: tuple(sorted(e)))

    @cached_property
    def vertex_facets(self) -> tuple[tuple[int, ...], ...]:
        """Facets incident to each vertex, sorted by facet id."""
        inc: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for fid, face in enumerate(self.facets):
            for v in face:
                inc[v].append(fid)
        return tuple(tuple(sorted(x)) for x in inc)

    @cached_property
    def facet_adjacency(self) -> tuple[frozenset[int], ...]:
        """Facets sharing a codimension-two face (an edge for 3-polytopes)."""
        adj: list[set[int]] = [set() for _ in self.facets]
        if self.dim == 2:
            for fs in self.vertex_facets:
                for a, b in combinations(fs, 2):
                    adj[a].add(b)
                    adj[b].add(a)
        else:
            for fs in self.edge_faces.values():
                for a, b in combinations(fs, 2):
                    adj[a].add(b)
                    adj[b].add(a)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def face_lattice(self) -> dict[int, tuple[frozenset[int], ...]]:
        """All faces of the polytope, keyed by dimension.

        In a simple polytope a face is determined by the set of facets
        containing it, and every subset of a vertex's facet set is a face.
        The whole polytope is the empty set.
        """
        n = self.dim
        seen: set[frozenset[int]] = set()
        for fs in self.vertex_facets:
            for r in range(len(fs) + 1):
                for sub in combinations(fs, r):
                    seen.add(frozenset(sub))
        out: dict[int, list[frozenset[int]]] = {d: [] for d in range(n + 1)}
        for s in seen:
            d = n - len(s)
            if 0 <= d <= n:
                out[d].append(s)
        return {d: tuple(sorted(fs, key=sorted)) for d, fs in out.items()}

    @cached_property
    def subfaces(self) -> dict[frozenset[int], tuple[frozenset[int], ...]]:
        """Codimension-one faces of each face, as facet sets."""
        out: dict[frozenset[int], list[frozenset[int]]] = {}
        for d in range(self.dim):
            for t in self.face_lattice[d]:
                for f in t:
                    out.setdefault(t - {f}, []).append(t)
        return {s: tuple(ts) for s, ts in out.items()}

    def to_text(self) -> str:
        return serialize_polytope(self)


@dataclass
class Violation:
    rule: str
    message: str
    ids: tuple[int, ...] = ()


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, rule: str, message: str, ids: Iterable[int] = ()) -> None:
        self.violations.append(Violation(rule, message, tuple(ids)))

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(f"{v.rule}: {v.message}" for v in self.violations)


@dataclass(frozen=True)
class FacePermutation:
    """A combinatorial automorphism: facet ``i`` goes to ``facets[i]``."""

    facets: tuple[int, ...]
    vertices: tuple[int, ...]

    def __matmul__(self, other: FacePermutation) -> FacePermutation:
        # (self @ other)(x) = self(other(x))
        return FacePermutation(
            tuple(self.facets[i] for i in other.facets),
            tuple(self.vertices[i] for i in other.vertices),
        )

    def inverse(self) -> FacePermutation:
        fi = [0] * len(self.facets)
        for i, j in enumerate(self.facets):
            fi[j] = i
        vi = [0] * len(self.vertices)
        for i, j in enumerate(self.vertices):
            vi[j] = i
        return FacePermutation(tuple(fi), tuple(vi))


# ---------------------------------------------------------------- file format

_DIM_RE = re.compile(r"^\s*dim\s*=\s*(\S+)\s*$")
_FACE_RE = re.compile(r"^\s*face\s+(\S+)\s*:(.*)$")


def parse_polytope(text: str) -> Polytope:
    """Parse the ``dim=<n>`` / ``face <id>: v0 v1 ...`` text format.

    Raises PolytopeParseError with a 1-based line and column on malformed
    input. Simplicity is not checked here; use :func:`validate`.
    """
    dim: int | None = None
    faces: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if dim is None:
            m = _DIM_RE.match(line)
            if not m:
                raise PolytopeParseError("expected 'dim=<n>' header", lineno, 1)
            try:
                dim = int(m.group(1))
            except ValueError:
                raise PolytopeParseError(f"bad dimension {m.group(1)!r}", lineno, line.index(m.group(1)) + 1)
            if dim not in (2, 3):
                raise PolytopeParseError(f"unsupported dimension {dim}", lineno, line.index(m.group(1)) + 1)
            continue
        m = _FACE_RE.match(line)
        if not m:
            raise PolytopeParseError("expected 'face <id>: v0 v1 ...'", lineno, len(line) - len(line.lstrip()) + 1)
        try:
            fid = int(m.group(1))
        except ValueError:
            raise PolytopeParseError(f"bad facet id {m.group(1)!r}", lineno, line.index(m.group(1)) + 1)
        if fid in faces:
            raise PolytopeParseError(f"duplicate facet id {fid}", lineno, line.index(m.group(1)) + 1)
        verts: list[int] = []
        offset = m.start(2)
        for tok in re.finditer(r"\S+", m.group(2)):
            col = offset + tok.start() + 1
            try:
                v = int(tok.group())
            except ValueError:
                raise PolytopeParseError(f"bad vertex id {tok.group()!r}", lineno, col)
            if v < 0:
                raise PolytopeParseError(f"negative vertex id {v}", lineno, col)
            if v in verts:
                raise PolytopeParseError(f"vertex {v} repeated in facet {fid}", lineno, col)
            verts.append(v)
        need = 2 if dim == 2 else 3
        if len(verts) < need or (dim == 2 and len(verts) != 2):
            raise PolytopeParseError(f"facet {fid} has {len(verts)} vertices", lineno, 1)
        faces[fid] = tuple(verts)
    if dim is None:
        raise PolytopeParseError("missing 'dim=<n>' header", 1, 1)
    if not faces:
        raise PolytopeParseError("no facets", 1, 1)
    if sorted(faces) != list(range(len(faces))):
        missing = sorted(set(range(max(faces) + 1)) - set(faces))
        raise PolytopeParseError(f"facet id gap: missing {missing}", 1, 1)
    used = {v for f in faces.values() for v in f}
    if used != set(range(len(used))):
        missing = sorted(set(range(max(used) + 1)) - used)
        raise PolytopeParseError(f"vertex id gap: missing {missing}", 1, 1)
    return Polytope(dim, tuple(faces[i] for i in range(len(faces))))


def serialize_polytope(p: Polytope) -> str:
    lines = [f"dim={p.dim}"]
    for fid, face in enumerate(p.facets):
        lines.append(f"face {fid}: " + " ".join(map(str, face)))
    return "\n".join(lines) + "\n"


def load_polytope(path) -> Polytope:
    with open(path, encoding="utf-8") as fh:
        return parse_polytope(fh.read())


# ---------------------------------------------------------------- validation


def _is_connected(n: int, adj: Sequence[Iterable[int]]) -> bool:
    if n == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def vertex_graph(p: Polytope) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(p.n_vertices)]
    for e in p.edge_faces:
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    return adj


def validate(p: Polytope, strict: bool = False) -> ValidationReport:
    """Check the simple-polytope invariants; every failed rule is reported.

    With ``strict=True`` a 3-polytope must also have a 3-connected edge graph
    and any two facets must meet in at most one edge.
    """
    rep = ValidationReport()
    n = p.dim
    if n not in (2, 3):
        rep.add("dimension", f"dimension {n} not in (2, 3)")
        return rep
    if not p.facets:
        rep.add("nonempty", "polytope has no facets")
        return rep
    for fid, face in enumerate(p.facets):
        if len(set(face)) != len(face):
            rep.add("facet-repeat", f"facet {fid} repeats a vertex", [fid])
        if n == 2 and len(face) != 2:
            rep.add("facet-size", f"facet {fid} of a polygon must have 2 vertices", [fid])
        if n == 3 and len(face) < 3:
            rep.add("facet-size", f"facet {fid} has fewer than 3 vertices", [fid])
    V = p.n_vertices
    for v, fs in enumerate(p.vertex_facets):
        if len(fs) == 0:
            rep.add("vertex-unused", f"vertex {v} lies in no facet", [v])
        elif len(fs) != n:
            rep.add("vertex-degree", f"vertex {v} lies in {len(fs)} facets, expected {n}", [v])

    adj = vertex_graph(p)
    if n == 2:
        if any(len(a) != 2 for a in adj) or not _is_connected(V, adj):
            rep.add("polygon-cycle", "edges do not form a single cycle")
        if len(set(p.edge_faces)) != len(p.facets):
            rep.add("facet-repeat", "two facets join the same vertex pair")
        return rep

    E = len(p.edge_faces)
    F = len(p.facets)
    for e, fs in p.edge_faces.items():
        if len(fs) != 2:
            a, b = sorted(e)
            rep.add("edge-faces", f"edge ({a},{b}) in {len(fs)} face(s), expected 2", [a, b])
    if V - E + F != 2:
        rep.add("euler", f"V - E + F = {V - E + F}, expected 2")
    if not _is_connected(V, adj):
        rep.add("connected", "face cycles do not form a connected map")
    if strict:
        for a, b in combinations(range(F), 2):
            common = set(p.facets[a]) & set(p.facets[b])
            if len(common) > 2 or (len(common) == 2 and frozenset(common) not in p.edge_faces):
                rep.add("facet-intersection", f"facets {a} and {b} meet in more than an edge", [a, b])
        if rep.ok:
            import networkx as nx

            g = nx.Graph((a, b) for a in range(V) for b in adj[a] if a < b)
            if nx.node_connectivity(g) < 3:
                rep.add("3-connected", "edge graph is not 3-connected")
    return rep


def _require_valid(p: Polytope) -> None:
    rep = validate(p)
    if not rep.ok:
        raise InvalidPolytopeError(str(rep))


def f_vector(p: Polytope) -> tuple[int, ...]:
    """(V, E, F) for a 3-polytope, (V, E) for a polygon."""
    _require_valid(p)
    if p.dim == 2:
        return (p.n_vertices, p.n_facets)
    return (p.n_vertices, len(p.edge_faces), p.n_facets)


def dual_f_vector(p: Polytope) -> tuple[int, ...]:
    """Face counts in codimension order: facets first, vertices last.

    These are the simplex counts of the dual simplicial sphere.
    """
    return tuple(reversed(f_vector(p)))


# ---------------------------------------------------------------- builtins

_DATA_FILES = ("square", "pentagon", "cube", "dodecahedron")
_PRISM_RE = re.compile(r"^(\d+)-prism$")
_GON_RE = re.compile(r"^(\d+)-gon$")


def polygon(k: int) -> Polytope:
    if k < 3:
        raise SmallCoverError(f"a polygon needs at least 3 sides, got {k}")
    return Polytope(2, tuple((i, (i + 1) % k) for i in range(k)))


def prism(k: int) -> Polytope:
    if k < 3:
        raise SmallCoverError(f"a prism needs a base with at least 3 sides, got {k}")
    faces = [tuple(range(k)), tuple(range(k, 2 * k))]
    for i in range(k):
        j = (i + 1) % k
        faces.append((i, j, k + j, k + i))
    return Polytope(3, tuple(faces))


def builtin_names() -> list[str]:
    return ["triangle", *_DATA_FILES, "<k>-gon", "<k>-prism"]


def builtin(name: str) -> Polytope:
    """Named seed polytopes: square, pentagon, cube, dodecahedron, k-prism, k-gon."""
    if name in _DATA_FILES:
        text = resources.files("smallcovers.data").joinpath(f"{name}.poly").read_text("utf-8")
        p = parse_polytope(text)
    elif name == "triangle":
        p = polygon(3)
    elif m := _PRISM_RE.match(name):
        p = prism(int(m.group(1)))
    elif m := _GON_RE.match(name):
        p = polygon(int(m.group(1)))
    else:
        raise SmallCoverError(f"unknown builtin polytope {name!r}; known: {', '.join(builtin_names())}")
    _require_valid(p)
    return p


def relabel(p: Polytope, facet_perm: Sequence[int], vertex_perm: Sequence[int] | None = None) -> Polytope:
    """Return a copy where old facet ``i`` becomes facet ``facet_perm[i]``."""
    vmap = vertex_perm if vertex_perm is not None else range(p.n_vertices)
    new: list[tuple[int, ...]] = [()] * p.n_facets
    for old, face in enumerate(p.facets):
        new[facet_perm[old]] = tuple(vmap[v] for v in face)
    return Polytope(p.dim, tuple(new))


# ---------------------------------------------------------------- symmetry


def _oriented_cycle(face: Sequence[int], u: int, v: int) -> list[int] | None:
    """Cycle of ``face`` starting at u and continuing to v, or None."""
    k = len(face)
    i = face.index(u)
    if face[(i + 1) % k] == v:
        return [face[(i + j) % k] for j in range(k)]
    if face[(i - 1) % k] == v:
        return [face[(i - j) % k] for j in range(k)]
    return None


def _polygon_cycle(p: Polytope) -> list[int]:
    adj = vertex_graph(p)
    cyc = [0, min(adj[0])]
    while len(cyc) < p.n_vertices:
        cyc.append(next(w for w in adj[cyc[-1]] if w != cyc[-2]))
    return cyc


def _facet_map_from_vertices(p: Polytope, vmap: Sequence[int]) -> tuple[int, ...] | None:
    index = {frozenset(f): i for i, f in enumerate(p.facets)}
    out = []
    for face in p.facets:
        j = index.get(frozenset(vmap[v] for v in face))
        if j is None:
            return None
        out.append(j)
    return tuple(out)


def automorphism_group(p: Polytope) -> list[FacePermutation]:
    """All combinatorial automorphisms, orientation-reversing ones included.

    A root flag (facet 0, its first vertex, its second vertex) is sent to
    every flag of the map; the image is propagated face by face across
    shared edges and kept when the resulting vertex map is consistent.
    """
    _require_valid(p)
    V = p.n_vertices
    results: list[FacePermutation] = []
    if p.dim == 2:
        cyc = _polygon_cycle(p)
        k = len(cyc)
        for s in range(k):
            for d in (1, -1):
                vmap = [0] * V
                for i in range(k):
                    vmap[cyc[i]] = cyc[(s + d * i) % k]
                fmap = _facet_map_from_vertices(p, vmap)
                assert fmap is not None
                results.append(FacePermutation(fmap, tuple(vmap)))
        return sorted(results, key=lambda g: g.facets + g.vertices)

    root = p.facets[0]
    for gid, gface in enumerate(p.facets):
        if len(gface) != len(root):
            continue
        k = len(gface)
        for s in range(k):
            for d in (1, -1):
                target = [gface[(s + d * i) % k] for i in range(k)]
                vmap = _propagate(p, root, target)
                if vmap is None:
                    continue
                fmap = _facet_map_from_vertices(p, vmap)
                if fmap is not None:
                    results.append(FacePermutation(fmap, tuple(vmap)))
    return sorted(results, key=lambda g: g.facets + g.vertices)


def _propagate(p: Polytope, root: Sequence[int], target: Sequence[int]) -> list[int] | None:
    V = p.n_vertices
    vmap = [-1] * V
    used = [False] * V
    for a, b in zip(root, target):
        vmap[a] = b
        used[b] = True
    face_of = {frozenset(f): i for i, f in enumerate(p.facets)}
    done = {face_of[frozenset(root)]}
    queue = [list(root)]
    while queue:
        face = queue.pop()
        k = len(face)
        for i in range(k):
            u, v = face[i], face[(i + 1) % k]
            nb = [f for f in p.edge_faces[frozenset((u, v))] if f not in done]
            if not nb:
                continue
            nid = nb[0]
            src = _oriented_cycle(p.facets[nid], u, v)
            img_faces = p.edge_faces.get(frozenset((vmap[u], vmap[v])))
            if src is None or img_faces is None:
                return None
            # the image face is the one across the image edge not already the image of `face`
            img_self = {vmap[x] for x in face}
            cand = [g for g in img_faces if set(p.facets[g]) != img_self]
            if len(cand) != 1 or len(p.facets[cand[0]]) != len(src):
                return None
            dst = _oriented_cycle(p.facets[cand[0]], vmap[u], vmap[v])
            if dst is None:
                return None
            for a, b in zip(src, dst):
                if vmap[a] == -1:
                    if used[b]:
                        return None
                    vmap[a] = b
                    used[b] = True
                elif vmap[a] != b:
                    return None
            done.add(nid)
            queue.append(src)
    if -1 in vmap:
        return None
    return vmap


# ---------------------------------------------------------------- right angles


def _prismatic_circuits(p: Polytope, length: int) -> list[tuple[int, ...]]:
    """Dual k-cycles whose crossed edges are pairwise vertex-disjoint."""
    adj = p.facet_adjacency
    edge_between: dict[frozenset[int], frozenset[int]] = {}
    for e, fs in p.edge_faces.items():
        if len(fs) == 2:
            edge_between[frozenset(fs)] = e
    found: list[tuple[int, ...]] = []

    def extend(path: list[int]) -> None:
        if len(path) == length:
            if path[0] in adj[path[-1]] and path[1] < path[-1]:
                crossed = [edge_between[frozenset((path[i], path[(i + 1) % length]))] for i in range(length)]
                if all(not (a & b) for a, b in combinations(crossed, 2)):
                    found.append(tuple(path))
            return
        for nxt in sorted(adj[path[-1]]):
            if nxt > path[0] and nxt not in path:
                path.append(nxt)
                extend(path)
                path.pop()

    for start in range(p.n_facets):
        extend([start])
    return found


def pogorelov_check(p: Polytope) -> ValidationReport:
    """Combinatorial test for a compact right-angled hyperbolic realization.

    Requires (a) every vertex trivalent, (b) every face with at least 5 edges,
    (c) no prismatic 3- or 4-circuit. Only (a) follows from the valence
    argument for right-angled polyhedra; (b) and (c) are the standard
    Pogorelov conditions.
    """
    if p.dim != 3:
        raise SmallCoverError("pogorelov_check needs a 3-polytope")
    _require_valid(p)
    rep = ValidationReport()
    rep.notes.append("conditions (b) face size >= 5 and (c) no prismatic 3-/4-circuits are the standard Pogorelov criterion")
    for v, fs in enumerate(p.vertex_facets):
        if len(fs) != 3:
            rep.add("trivalent", f"vertex {v} has valence {len(fs)}", [v])
    for fid, face in enumerate(p.facets):
        if len(face) < 5:
            rep.add("face-size", f"face {fid} has {len(face)} edges, needs at least 5", [fid])
    for k in (3, 4):
        for circ in _prismatic_circuits(p, k):
            rep.add(f"prismatic-{k}-circuit", f"prismatic {k}-circuit through faces {circ}", circ)
    return rep
