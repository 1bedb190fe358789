"""Ground-truth census by explicit construction of a tessellation disk.

This module builds a finite, simply connected piece of {p,q} as a half-edge
planar map and counts vertices by breadth-first search, completely
independently of the generating-function derivations: the builder knows
nothing about vertex classes or recurrences, only the two local rules that
every face has degree p and every vertex degree q.

Construction works face by face along the disk boundary.  A boundary
vertex with f incident closed faces has f + 1 edges (its faces form a fan
with one open gap), so the vertex is finished exactly when it has q faces.
Attaching one p-gon means choosing a maximal run of consecutive boundary
edges to glue along: a boundary vertex interior to the run gains a face
but no edge, hence must have had q - 1 faces (the new face is its last),
while the run's two endpoint vertices gain an edge and a face and must
have had at most q - 2 faces.  Both conditions are forced by the target
degree q, so the glue run is determined by the local face counts and the
resulting disk is the unique {p,q} patch; no global knowledge is used.

Census trust: a vertex is saturated when all q of its faces are closed
(for the tree case p = infinity, when all q edges are present).  The
report covers generation n only if every vertex at distance <= n is
saturated; generation zero is always exact.  Counts past that horizon are
withheld rather than reported partially.

Half-edge conventions: half-edges are allocated in twin pairs, so
twin(h) = h ^ 1.  ``next`` points along the incident face cycle (closed
faces and the outer boundary both form cycles); rotation around a vertex
falls out as twin(prev(h)).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from pqcensus.genfunc import INFINITY, Schlafli

DEFAULT_VERTEX_BUDGET = 200_000

_OPEN = -1  # face id of the unbounded region


class BadSymbol(ValueError):
    """The symbol cannot be built: spherical, or the wrong builder was called."""


class BudgetExceeded(RuntimeError):
    """Vertex budget hit before the requested saturated depth was reached.

    Carries the depth that was certified before the abort and the partial
    (still structurally valid) map, so callers may keep what was verified.
    """

    def __init__(self, achieved_depth: int, vertex_count: int, partial_map: "PlanarMap"):
        self.achieved_depth = achieved_depth
        self.vertex_count = vertex_count
        self.partial_map = partial_map
        super().__init__(
            f"vertex budget reached at {vertex_count} vertices; "
            f"saturated depth achieved: {achieved_depth}"
        )


class StructureViolation(RuntimeError):
    """A saturated vertex does not fit any expected parent/cousin profile.

    Raising this would empirically falsify the classification claims the
    generating functions rest on; it is never expected on admissible symbols.
    """

    def __init__(self, vertex: int, generation: int, profile: "VertexProfile"):
        self.vertex = vertex
        self.generation = generation
        self.profile = profile
        super().__init__(f"vertex {vertex} in generation {generation} has profile {profile}")


@dataclass(frozen=True)
class VertexProfile:
    """Neighbor census of one vertex relative to the generation structure."""

    parents: int
    children: int
    fraternal: int
    consortial: int


@dataclass(frozen=True)
class CensusReport:
    """Per-generation counts up to the trusted horizon.

    ``v[n]`` counts all vertices in generation n; ``a``, ``b``, ``c`` hold
    the per-class counts once ``classify`` has run (None before).
    """

    symbol: Schlafli
    trusted_depth: int
    v: tuple[int, ...]
    a: tuple[int, ...] | None = None
    b: tuple[int, ...] | None = None
    c: tuple[int, ...] | None = None


class PlanarMap:
    """Growable half-edge map of a {p,q} disk (or of the q-regular tree)."""

    def __init__(self, symbol: Schlafli):
        self.symbol = symbol
        self._he_origin: list[int] = []
        self._he_next: list[int] = []
        self._he_prev: list[int] = []
        self._he_face: list[int] = []
        self._faces: list[int] = []  # one half-edge per closed face
        self._adj: list[list[int]] = [[]]
        self._v_deg: list[int] = [0]
        self._v_faces: list[int] = [0]
        self._v_bhe: list[int] = [-1]  # outgoing boundary half-edge, -1 if none
        self._v_half: list[int] = [-1]  # any outgoing half-edge
        self._outer = -1
        self._dist_cache: list[int] | None = None

    # -- read-only surface ------------------------------------------------

    @property
    def origin(self) -> int:
        return 0

    @property
    def vertex_count(self) -> int:
        return len(self._v_deg)

    @property
    def half_edge_count(self) -> int:
        return len(self._he_origin)

    @property
    def face_count(self) -> int:
        return len(self._faces)

    def degree(self, v: int) -> int:
        return self._v_deg[v]

    def closed_face_count(self, v: int) -> int:
        return self._v_faces[v]

    def is_saturated(self, v: int) -> bool:
        if self.symbol.is_tree:
            return self._v_deg[v] == self.symbol.q
        return self._v_faces[v] == self.symbol.q

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(self._adj[v])

    def twin(self, h: int) -> int:
        return h ^ 1

    def origin_of(self, h: int) -> int:
        return self._he_origin[h]

    def head_of(self, h: int) -> int:
        return self._he_origin[h ^ 1]

    def face_of(self, h: int) -> int:
        return self._he_face[h]

    def face_next(self, h: int) -> int:
        return self._he_next[h]

    def rotation(self, v: int) -> tuple[int, ...]:
        """Neighbors of v in cyclic order around it, from the embedding."""
        h0 = self._v_half[v]
        if h0 < 0:
            return ()
        out = []
        h = h0
        while True:
            out.append(self._he_origin[h ^ 1])
            h = self._he_prev[h] ^ 1
            if h == h0:
                break
            if len(out) > self._v_deg[v]:
                raise RuntimeError(f"rotation walk around {v} does not close")
        return tuple(out)

    def face_vertices(self, f: int) -> tuple[int, ...]:
        """Vertices of closed face f in cycle order."""
        h0 = self._faces[f]
        out = []
        h = h0
        while True:
            out.append(self._he_origin[h])
            h = self._he_next[h]
            if h == h0:
                break
            if len(out) > len(self._he_origin):
                raise RuntimeError(f"face walk for {f} does not close")
        return tuple(out)

    def boundary_vertices(self) -> list[int]:
        """Boundary cycle order; empty for trees and the bare origin."""
        if self._outer < 0:
            return []
        out = []
        h = self._outer
        while True:
            out.append(self._he_origin[h])
            h = self._he_next[h]
            if h == self._outer:
                break
            if len(out) > len(self._he_origin):
                raise RuntimeError("boundary walk does not close")
        return out

    def distances(self) -> list[int]:
        """Graph distance from the origin for every vertex (frontier BFS).

        The result is cached until the map grows again; treat it as
        read-only.
        """
        if self._dist_cache is not None and len(self._dist_cache) == self.vertex_count:
            return self._dist_cache
        dist = [-1] * self.vertex_count
        dist[0] = 0
        frontier = [0]
        adj = self._adj
        d = 0
        while frontier:
            d += 1
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if dist[w] < 0:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        self._dist_cache = dist
        return dist

    # -- construction internals -------------------------------------------

    def _new_vertex(self) -> int:
        self._adj.append([])
        self._v_deg.append(0)
        self._v_faces.append(0)
        self._v_bhe.append(-1)
        self._v_half.append(-1)
        return len(self._v_deg) - 1

    def _new_edge(self, u: int, w: int) -> tuple[int, int]:
        h = len(self._he_origin)
        self._he_origin.extend((u, w))
        self._he_next.extend((-1, -1))
        self._he_prev.extend((-1, -1))
        self._he_face.extend((_OPEN, _OPEN))
        self._adj[u].append(w)
        self._adj[w].append(u)
        self._v_deg[u] += 1
        self._v_deg[w] += 1
        if self._v_half[u] < 0:
            self._v_half[u] = h
        if self._v_half[w] < 0:
            self._v_half[w] = h + 1
        return h, h + 1

    def _bootstrap(self):
        """Lay down the first p-gon through the bare origin."""
        p = self.symbol.p
        cyc = [0] + [self._new_vertex() for _ in range(p - 1)]
        cs = []
        for i in range(p):
            h, _ = self._new_edge(cyc[i], cyc[(i + 1) % p])
            cs.append(h)
        self._faces.append(cs[0])
        for i in range(p):
            self._he_next[cs[i]] = cs[(i + 1) % p]
            self._he_prev[cs[(i + 1) % p]] = cs[i]
            self._he_face[cs[i]] = 0
        ts = [h ^ 1 for h in cs]  # ts[i] runs cyc[i+1] -> cyc[i]
        for i in range(p):
            self._he_next[ts[i]] = ts[i - 1]
            self._he_prev[ts[i - 1]] = ts[i]
        for j in range(p):
            self._v_faces[cyc[j]] = 1
            self._v_bhe[cyc[j]] = ts[(j - 1) % p]
        self._outer = ts[0]

    def _attach_face(self, v: int, budget: int | None):
        """Glue one new p-gon into the open gap behind boundary vertex v."""
        p, q = self.symbol.p, self.symbol.q
        faces = self._v_faces
        origin = self._he_origin
        adj = self._adj
        nxt, prv = self._he_next, self._he_prev
        h_out = self._v_bhe[v]
        if h_out < 0:
            raise RuntimeError(f"attach requested at interior vertex {v}")
        run = [prv[h_out]]
        # A vertex with q-1 faces must be swallowed whole by its last face,
        # so the glue run is forced to extend across it.
        while faces[origin[run[-1] ^ 1]] == q - 1:
            run.append(nxt[run[-1]])
            if len(run) >= p:
                raise RuntimeError("glue run exceeded face degree")
        while faces[origin[run[0]]] == q - 1:
            run.insert(0, prv[run[0]])
            if len(run) >= p:
                raise RuntimeError("glue run exceeded face degree")
        k = len(run)
        m = p - k - 1
        verts = [origin[run[0]]] + [origin[e ^ 1] for e in run]
        if len(set(verts)) != k + 1:
            raise RuntimeError("glue run self-intersects; disk invariant broken")
        u0, uk = verts[0], verts[-1]
        if budget is not None and m > 0 and self.vertex_count + m > budget:
            dist = self.distances()
            raise BudgetExceeded(self._trusted(dist), self.vertex_count, self)
        if m == 0 and u0 in adj[uk]:
            raise RuntimeError("closing chord already present; map would lose simplicity")
        before, after = prv[run[0]], nxt[run[-1]]
        f = len(self._faces)
        self._faces.append(run[0])
        # new vertices and edges in one batch: chain = uk, w_1 .. w_m, u0
        nv0 = len(self._v_deg)
        chain = [uk] + list(range(nv0, nv0 + m)) + [u0]
        if m:
            adj.extend([] for _ in range(m))
            self._v_deg.extend([2] * m)
            self._v_faces.extend([1] * m)
            self._v_bhe.extend([-1] * m)
            self._v_half.extend([-1] * m)
        h0 = len(origin)
        n_edges = p - k
        cs = range(h0, h0 + 2 * n_edges, 2)
        origins = []
        for i in range(n_edges):
            a, b = chain[i], chain[i + 1]
            origins.append(a)
            origins.append(b)
            adj[a].append(b)
            adj[b].append(a)
        origin.extend(origins)
        self._he_face.extend([f, _OPEN] * n_edges)
        nxt.extend([-1] * (2 * n_edges))
        prv.extend([-1] * (2 * n_edges))
        self._v_deg[uk] += 1
        self._v_deg[u0] += 1
        cycle = run + list(cs)
        prev_e = cycle[-1]
        for e in cycle:
            nxt[prev_e] = e
            prv[e] = prev_e
            self._he_face[e] = f
            prev_e = e
        ts = [e ^ 1 for e in cs]
        outer_prev = before
        for t in reversed(ts):
            nxt[outer_prev] = t
            prv[t] = outer_prev
            outer_prev = t
        nxt[outer_prev] = after
        prv[after] = outer_prev
        for w in verts:
            faces[w] += 1
        for w in verts[1:-1]:
            if faces[w] != q or self._v_deg[w] != q:
                raise RuntimeError(f"swallowed vertex {w} ended unsaturated")
            self._v_bhe[w] = -1
        self._v_bhe[u0] = ts[-1]
        for j in range(m):
            w = nv0 + j
            self._v_bhe[w] = ts[j]
            self._v_half[w] = ts[j]
        self._outer = ts[0]

    def _trusted(self, dist: list[int]) -> int:
        t = None
        for v, d in enumerate(dist):
            if not self.is_saturated(v) and (t is None or d < t):
                t = d
        if t is None:
            return max(dist)
        return max(0, t - 1)

    def _distances_within(self, cap: int) -> list[int]:
        """BFS truncated past distance cap; farther vertices stay at -1."""
        dist = [-1] * self.vertex_count
        dist[0] = 0
        frontier = [0]
        adj = self._adj
        d = 0
        while frontier and d < cap:
            d += 1
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if dist[w] < 0:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        return dist

    def _grow(self, depth: int, budget: int | None):
        q = self.symbol.q
        if self.half_edge_count == 0:
            if budget is not None and self.symbol.p > budget:
                raise BudgetExceeded(0, self.vertex_count, self)
            self._bootstrap()
        faces = self._v_faces
        for _ in range(depth + 10):
            dist = self._distances_within(depth)
            targets = [
                v for v in range(self.vertex_count)
                if dist[v] >= 0 and faces[v] < q
            ]
            if not targets:
                return
            targets.sort(key=dist.__getitem__)
            for v in targets:
                while faces[v] < q:
                    self._attach_face(v, budget)
        raise RuntimeError("disk growth failed to reach the requested depth")


def build_map(s: Schlafli, min_saturated_depth: int, vertex_budget: int | None = DEFAULT_VERTEX_BUDGET) -> PlanarMap:
    """Build a {p,q} disk saturated out to at least the requested depth.

    Raises BudgetExceeded (carrying the achieved depth and the partial map)
    if the vertex budget would be overrun first; pass ``vertex_budget=None``
    to grow without a cap.
    """
    if s.is_tree:
        raise BadSymbol("infinite faces have no disk construction; use build_tree")
    if not s.admissible():
        raise BadSymbol(f"{s} is spherical; only Euclidean and hyperbolic symbols are built")
    if min_saturated_depth < 0:
        raise ValueError("min_saturated_depth must be >= 0")
    m = PlanarMap(s)
    m._grow(min_saturated_depth, vertex_budget)
    return m


def build_tree(q: int, depth: int) -> PlanarMap:
    """Build the q-regular tree with every vertex at distance <= depth complete.

    Leaves sit at distance depth + 1, so the saturation horizon of the
    result is exactly ``depth``.
    """
    s = Schlafli(INFINITY, q)
    if depth < 0:
        raise ValueError("depth must be >= 0")
    m = PlanarMap(s)
    frontier: list[tuple[int, int]] = [(0, -1)]
    for _ in range(depth + 1):
        grown: list[tuple[int, int]] = []
        for v, ins in frontier:
            for _ in range(q if v == 0 else q - 1):
                w = m._new_vertex()
                a, b = m._new_edge(v, w)
                if ins < 0:
                    m._he_next[a], m._he_prev[b] = b, a
                    m._he_next[b], m._he_prev[a] = a, b
                else:
                    after = m._he_next[ins]
                    m._he_next[ins], m._he_prev[a] = a, ins
                    m._he_next[a], m._he_prev[b] = b, a
                    m._he_next[b], m._he_prev[after] = after, b
                ins = b
                grown.append((w, a))
        frontier = grown
    return m


def bfs_census(m: PlanarMap) -> CensusReport:
    """Count vertices per generation out to the saturation horizon."""
    dist = m.distances()
    trusted = m._trusted(dist)
    counts = [0] * (trusted + 1)
    for d in dist:
        if d <= trusted:
            counts[d] += 1
    return CensusReport(m.symbol, trusted, tuple(counts))


def vertex_profile(m: PlanarMap, v: int, dist: list[int] | None = None) -> VertexProfile:
    """Parent/child/sibling/cousin census of v's neighborhood.

    Same-generation neighbors sharing a parent with v are fraternal
    (siblings); the rest are consortial (cousins).
    """
    if dist is None:
        dist = m.distances()
    adj = m._adj
    d = dist[v]
    parents = children = fraternal = consortial = 0
    pset = None
    for w in adj[v]:
        dw = dist[w]
        if dw < d:
            parents += 1
        elif dw > d:
            children += 1
        else:
            if pset is None:
                pset = {x for x in adj[v] if dist[x] == d - 1}
            if any(x in pset for x in adj[w] if dist[x] == d - 1):
                fraternal += 1
            else:
                consortial += 1
    return VertexProfile(parents, children, fraternal, consortial)


def _type_of(m: PlanarMap, v: int, dist: list[int]) -> str:
    """Classify one saturated non-origin vertex as A, B or C.

    For p = 3 the sibling edges (two per vertex, linking each generation
    into a cycle) are discounted first, so the classes refer to the reduced
    quadrilateral graph.  Unexpected profiles raise StructureViolation.
    """
    prof = vertex_profile(m, v, dist)
    if m.symbol.is_tree:
        if prof == VertexProfile(1, prof.children, 0, 0):
            return "A"
    elif m.symbol.p == 3:
        # every vertex carries exactly two sibling edges; classes refer to
        # the graph with those removed
        if prof.fraternal == 2 and prof.consortial == 0 and prof.parents in (1, 2):
            return "AB"[prof.parents - 1]
    elif m.symbol.p % 2 == 0:
        if prof.fraternal == 0 and prof.consortial == 0 and prof.parents in (1, 2):
            return "AB"[prof.parents - 1]
    else:
        if prof.fraternal == 0:
            if prof.consortial == 0 and prof.parents in (1, 2):
                return "AB"[prof.parents - 1]
            if prof.consortial == 1 and prof.parents == 1:
                return "C"
    raise StructureViolation(v, dist[v], prof)


def classify(m: PlanarMap, report: CensusReport) -> CensusReport:
    """Fill the per-class generation counts of a census report.

    Every non-origin vertex inside the trusted horizon must match one of
    the expected profiles; anything else raises StructureViolation.
    """
    dist = m.distances()
    t = report.trusted_depth
    a = [0] * (t + 1)
    b = [0] * (t + 1)
    c = [0] * (t + 1)
    buckets = {"A": a, "B": b, "C": c}
    for v in range(m.vertex_count):
        d = dist[v]
        if d == 0 or d > t:
            continue
        buckets[_type_of(m, v, dist)][d] += 1
    return replace(report, a=tuple(a), b=tuple(b), c=tuple(c))


def dump_map(m: PlanarMap, report: CensusReport | None = None) -> str:
    """Line-oriented adjacency dump: one vertex per line with generation,
    class tag, degree and neighbors in rotation order."""
    dist = m.distances()
    trusted = report.trusted_depth if report is not None else m._trusted(dist)
    p = "inf" if m.symbol.is_tree else str(m.symbol.p)
    lines = [
        f"# map p={p} q={m.symbol.q} vertices={m.vertex_count} trusted_depth={trusted}",
        "# vertex generation type degree neighbors-in-rotation-order",
    ]
    for v in range(m.vertex_count):
        if v == 0:
            tag = "O"
        elif dist[v] <= trusted:
            try:
                tag = _type_of(m, v, dist)
            except StructureViolation:
                tag = "?"
        else:
            tag = "-"
        rot = " ".join(str(w) for w in m.rotation(v))
        lines.append(f"{v} {dist[v]} {tag} {m.degree(v)} {rot}".rstrip())
    return "\n".join(lines) + "\n"
