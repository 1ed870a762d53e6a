"""Immutable small graphs: generators, products, colorings, enumeration.

Vertices are ids 0..n-1. Product graphs flatten (u, v) row-major to
u * n2 + v and keep the coordinate pair as the vertex label, so structural
checks can inspect coordinates instead of running isomorphism searches.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Iterator, Optional, Sequence


class GraphError(ValueError):
    """Invalid graph data or graph arguments."""


class LimitError(GraphError):
    """A configured size limit was exceeded."""


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on vertices 0..n-1 with symmetric adjacency."""

    n: int
    edges: frozenset[tuple[int, int]]
    labels: Optional[tuple] = None
    adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)
    adj_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for e in self.edges:
            u, v = e
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e} out of range for n={self.n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u > v:
                raise GraphError(f"edge {e} not normalized (store (min,max))")
            nbrs[u].add(v)
            nbrs[v].add(u)
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise GraphError("labels length must equal vertex count")
            if len(set(self.labels)) != self.n:
                raise GraphError("labels must be unique per vertex")
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in nbrs))
        masks = []
        for v in range(self.n):
            m = 0
            for w in nbrs[v]:
                m |= 1 << w
            masks.append(m)
        object.__setattr__(self, "adj_masks", tuple(masks))

    @staticmethod
    def from_edges(n: int, edges: Iterable[Sequence[int]], labels=None) -> "Graph":
        """Build a graph, normalizing edge tuples to (min, max)."""
        norm = frozenset((min(u, v), max(u, v)) for u, v in edges)
        return Graph(n, norm, tuple(labels) if labels is not None else None)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(a) for a in self.adj))

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by minimum id."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack = [s]
            seen[s] = True
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_forest(self) -> bool:
        comps = self.components()
        return self.edge_count == self.n - len(comps)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; labels record the original vertex ids."""
        verts = list(vertices)
        index = {v: i for i, v in enumerate(verts)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return Graph.from_edges(len(verts), edges, labels=verts)

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced([u for u in range(self.n) if u != v])

    def delete_edge(self, u: int, v: int) -> "Graph":
        e = (min(u, v), max(u, v))
        if e not in self.edges:
            raise GraphError(f"no edge {e}")
        return Graph(self.n, self.edges - {e}, self.labels)

    def unlabeled(self) -> "Graph":
        return Graph(self.n, self.edges) if self.labels is not None else self

    def distances_from(self, s: int) -> list[int]:
        """BFS distances; unreachable vertices get -1."""
        dist = [-1] * self.n
        dist[s] = 0
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for v in frontier:
                for w in self.adj[v]:
                    if dist[w] < 0:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        return dist


@dataclass(frozen=True)
class ColorPair:
    """Unordered pair of distinct color indices, stored with c < d."""

    c: int
    d: int

    def __post_init__(self) -> None:
        if self.c == self.d:
            raise GraphError("color pair must use distinct colors")
        if self.c > self.d:
            raise GraphError("color pair must be stored with c < d")

    @staticmethod
    def of(a: int, b: int) -> "ColorPair":
        return ColorPair(min(a, b), max(a, b))


@dataclass(frozen=True)
class ProperColoring:
    """A proper k-coloring of a graph; validated on construction."""

    graph: Graph
    k: int
    color: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.color) != self.graph.n:
            raise GraphError("coloring must assign every vertex")
        for c in self.color:
            if not (0 <= c < self.k):
                raise GraphError(f"color {c} out of range for k={self.k}")
        for u, v in self.graph.edges:
            if self.color[u] == self.color[v]:
                raise GraphError(f"edge ({u},{v}) is monochromatic")

    def pairs(self) -> list[ColorPair]:
        used = sorted(set(self.color))
        return [ColorPair(c, d) for c, d in combinations(used, 2)]

    def class_of(self, c: int) -> list[int]:
        return [v for v in range(self.graph.n) if self.color[v] == c]


@dataclass(frozen=True)
class ProductVertex:
    """Coordinate pair (u, v) of a product-graph vertex."""

    u: int
    v: int


def _product_vertex_labels(n1: int, n2: int) -> tuple[ProductVertex, ...]:
    return tuple(ProductVertex(u, v) for u in range(n1) for v in range(n2))


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Cartesian product: (u,v)~(u',v') iff u=u' and v~v', or v=v' and u~u'."""
    n1, n2 = g1.n, g2.n
    edges = []
    for u in range(n1):
        for v in range(n2):
            a = u * n2 + v
            for w in g2.adj[v]:
                if w > v:
                    edges.append((a, u * n2 + w))
            for x in g1.adj[u]:
                if x > u:
                    edges.append((a, x * n2 + v))
    return Graph.from_edges(n1 * n2, edges, labels=_product_vertex_labels(n1, n2))


def strong_product(g1: Graph, g2: Graph) -> Graph:
    """Strong product: distinct (u,v),(u',v') adjacent iff both coordinates
    are equal or adjacent in their factor."""
    n1, n2 = g1.n, g2.n
    edges = []
    for u in range(n1):
        for v in range(n2):
            a = u * n2 + v
            for up in range(n1):
                if up != u and up not in g1.adj[u]:
                    continue
                for vp in range(n2):
                    if vp != v and vp not in g2.adj[v]:
                        continue
                    b = up * n2 + vp
                    if b > a:
                        edges.append((a, b))
    return Graph.from_edges(n1 * n2, edges, labels=_product_vertex_labels(n1, n2))


def graph_square(g: Graph) -> Graph:
    """Square of a graph: joins distinct vertices at distance at most 2."""
    edges = []
    for v in range(g.n):
        near = set(g.adj[v])
        for w in g.adj[v]:
            near |= g.adj[w]
        for w in near:
            if w > v:
                edges.append((v, w))
    return Graph.from_edges(g.n, edges)


def bicolored_subgraph(g: Graph, coloring: ProperColoring, pair: ColorPair) -> Graph:
    """Induced subgraph on the vertices colored c or d; labels keep the
    original vertex ids."""
    if coloring.graph is not g and coloring.graph != g:
        raise GraphError("coloring does not belong to this graph")
    verts = [v for v in range(g.n) if coloring.color[v] in (pair.c, pair.d)]
    return g.induced(verts)


def product_coloring(
    product: Graph, phi1: ProperColoring, phi2: ProperColoring
) -> ProperColoring:
    """Color product vertex (u, v) with the flattened pair
    (phi1(u), phi2(v)) -> phi1(u)*k2 + phi2(v).

    Raises GraphError when the result is not proper on the supplied product
    graph (the usual cause: the second coloring was taken on the wrong base
    graph for this product kind).
    """
    n1, n2 = phi1.graph.n, phi2.graph.n
    if product.n != n1 * n2:
        raise GraphError("product graph size does not match the factor colorings")
    k = phi1.k * phi2.k
    color = tuple(
        phi1.color[idx // n2] * phi2.k + phi2.color[idx % n2]
        for idx in range(product.n)
    )
    try:
        return ProperColoring(product, k, color)
    except GraphError as exc:
        raise GraphError(
            "pair coloring is not proper on this product; "
            "check which base graph the second coloring was taken on"
        ) from exc


def fiber_lemma_violations(product: Graph, coloring: ProperColoring) -> list[str]:
    """Check, on a Cartesian product colored by a pair coloring, that every
    connected bicolored component lies in a single fiber: all vertices share
    the first coordinate or all share the second.  Returns violations."""
    if product.labels is None:
        raise GraphError("product graph lost its coordinate labels")
    bad = []
    for pair in coloring.pairs():
        sub = bicolored_subgraph(product, coloring, pair)
        back = sub.labels or ()
        for comp in sub.components():
            coords = [product.labels[back[i]] for i in comp]
            firsts = {c.u for c in coords}
            seconds = {c.v for c in coords}
            if len(firsts) > 1 and len(seconds) > 1:
                bad.append(
                    f"pair ({pair.c},{pair.d}): component {sorted(back[i] for i in comp)} "
                    f"spans {len(firsts)} first and {len(seconds)} second coordinates"
                )
    return bad


def strong_case_lemma_violations(product: Graph, coloring: ProperColoring) -> list[str]:
    """Check, on a strong product whose second factor was colored on its
    square, that every connected bicolored component is a single vertex,
    lies in one second-coordinate fiber, or touches exactly two second
    coordinates with every edge crossing between them."""
    if product.labels is None:
        raise GraphError("product graph lost its coordinate labels")
    bad = []
    for pair in coloring.pairs():
        sub = bicolored_subgraph(product, coloring, pair)
        back = sub.labels or ()
        for comp in sub.components():
            if len(comp) == 1:
                continue
            coords = {i: product.labels[back[i]] for i in comp}
            seconds = {c.v for c in coords.values()}
            if len(seconds) == 1:
                continue
            if len(seconds) == 2:
                inside = set(comp)
                crossing = all(
                    coords[u].v != coords[v].v
                    for u, v in sub.edges
                    if u in inside and v in inside
                )
                if crossing:
                    continue
            bad.append(
                f"pair ({pair.c},{pair.d}): component {sorted(back[i] for i in comp)} "
                f"uses second coordinates {sorted(seconds)} with a non-crossing edge"
            )
    return bad


# ---------------------------------------------------------------------------
# generators


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """K_{1,n}: center 0 joined to n leaves."""
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def cocktail_party(n: int) -> Graph:
    """Complete graph on 2n vertices minus the perfect matching (i, n+i)."""
    edges = [
        (u, v)
        for u, v in combinations(range(2 * n), 2)
        if v - u != n
    ]
    return Graph.from_edges(2 * n, edges)


def union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; g2's vertices are shifted by g1.n."""
    edges = list(g1.edges) + [(u + g1.n, v + g1.n) for u, v in g2.edges]
    return Graph.from_edges(g1.n + g2.n, edges)


def add_isolated(g: Graph) -> Graph:
    return Graph(g.n + 1, g.edges)


# ---------------------------------------------------------------------------
# canonical forms and enumeration

MAX_ENUM_GRAPH_N = 7
MAX_ENUM_FOREST_N = 10


def _edge_code(g: Graph, order: Sequence[int]) -> int:
    """Adjacency bits of the relabeled graph, packed in a fixed pair order."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    code = 0
    for u, v in g.edges:
        a, b = pos[u], pos[v]
        if a > b:
            a, b = b, a
        # index of pair (a,b) in lexicographic order over i<j
        idx = a * g.n - a * (a + 1) // 2 + (b - a - 1)
        code |= 1 << idx
    return code


def canonical_key(g: Graph) -> tuple[int, int]:
    """Canonical (n, edge-code) identifying the isomorphism class.

    Permutations are restricted to vertices sharing the same refinement
    invariant (degree plus sorted neighbor degrees), which keeps the search
    small at the n <= 7 scale this is used for.
    """
    if g.n <= 1:
        return (g.n, 0)
    npairs = g.n * (g.n - 1) // 2
    if g.edge_count in (0, npairs):
        # edgeless and complete graphs have a forced code
        return (g.n, (1 << npairs) - 1 if g.edge_count else 0)
    degs = [g.degree(v) for v in range(g.n)]
    inv = [
        (degs[v], tuple(sorted(degs[w] for w in g.adj[v])))
        for v in range(g.n)
    ]
    groups: dict[tuple, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(inv[v], []).append(v)
    ordered_groups = [groups[key] for key in sorted(groups.keys())]

    best: Optional[int] = None
    for perm_parts in _group_permutations(ordered_groups):
        order = [v for part in perm_parts for v in part]
        code = _edge_code(g, order)
        if best is None or code < best:
            best = code
    assert best is not None
    return (g.n, best)


def _group_permutations(groups: list[list[int]]) -> Iterator[list[tuple[int, ...]]]:
    if not groups:
        yield []
        return
    head, rest = groups[0], groups[1:]
    for perm in permutations(head):
        for tail in _group_permutations(rest):
            yield [perm] + tail


def _graph_classes_exactly(n: int) -> list[Graph]:
    """One representative per isomorphism class on exactly n vertices,
    grown vertex-by-vertex with canonical-form dedup."""
    reps: list[Graph] = [empty_graph(1)]
    for m in range(2, n + 1):
        seen: dict[tuple[int, int], Graph] = {}
        for g in reps:
            for nbrs in range(1 << (m - 1)):
                edges = list(g.edges) + [
                    (w, m - 1) for w in range(m - 1) if nbrs >> w & 1
                ]
                cand = Graph.from_edges(m, edges)
                key = canonical_key(cand)
                if key not in seen:
                    seen[key] = cand
        reps = [seen[k] for k in sorted(seen)]
    return reps


def all_graphs_up_to(n: int) -> list[Graph]:
    """Representatives of every isomorphism class on 1..n vertices."""
    if n > MAX_ENUM_GRAPH_N:
        raise LimitError(f"graph enumeration limited to n <= {MAX_ENUM_GRAPH_N}")
    out: list[Graph] = []
    for m in range(1, n + 1):
        out.extend(_graph_classes_exactly(m))
    return out


def all_forests_up_to(n: int) -> list[Graph]:
    """Representatives of every forest isomorphism class on 1..n vertices,
    grown by attaching a new vertex of degree 0 or 1."""
    if n > MAX_ENUM_FOREST_N:
        raise LimitError(f"forest enumeration limited to n <= {MAX_ENUM_FOREST_N}")
    out: list[Graph] = []
    reps: list[Graph] = [empty_graph(1)]
    out.extend(reps)
    for m in range(2, n + 1):
        seen: dict[tuple[int, int], Graph] = {}
        for g in reps:
            for attach in range(-1, m - 1):
                edges = list(g.edges)
                if attach >= 0:
                    edges.append((attach, m - 1))
                cand = Graph.from_edges(m, edges)
                key = canonical_key(cand)
                if key not in seen:
                    seen[key] = cand
        reps = [seen[k] for k in sorted(seen)]
        out.extend(reps)
    return out
