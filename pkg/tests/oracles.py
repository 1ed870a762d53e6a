"""Independent oracle implementations for cross-checking the package.

Everything here is deliberately separate from the library's solvers: plain
recursion with no memoization and no canonical keys, brute-force
enumeration, and direct definitions.  Tests compare library outputs against
these.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from gamecol.graphs import Graph


# -- coloring game, plain full-tree recursion --------------------------------


def coloring_game_oracle(g: Graph, shades: int, first: str = "alice") -> str:
    """Winner by unmemoized search; eager blocked-vertex detection."""

    def blocked(assign: dict[int, int]) -> bool:
        for v in range(g.n):
            if v in assign:
                continue
            around = {assign[w] for w in g.adj[v] if w in assign}
            if len(around) == shades:
                return True
        return False

    def play(assign: dict[int, int], mover: str) -> str:
        if blocked(assign):
            return "bob"
        if len(assign) == g.n:
            return "alice"
        nxt = "bob" if mover == "alice" else "alice"
        outcomes = []
        for v in range(g.n):
            if v in assign:
                continue
            around = {assign[w] for w in g.adj[v] if w in assign}
            for s in range(shades):
                if s in around:
                    continue
                assign[v] = s
                outcomes.append(play(assign, nxt))
                del assign[v]
                if outcomes[-1] == mover:
                    return mover
        assert outcomes, "stuck mover must already be a blocked position"
        return nxt

    return play({}, first)


def coloring_game_oracle_lazy(g: Graph, shades: int, first: str = "alice") -> str:
    """Winner under the lazy convention: the game only ends when the mover
    has no legal move (Bob wins iff anything is left uncolored)."""

    def play(assign: dict[int, int], mover: str) -> str:
        moves = []
        for v in range(g.n):
            if v in assign:
                continue
            around = {assign[w] for w in g.adj[v] if w in assign}
            moves.extend((v, s) for s in range(shades) if s not in around)
        if not moves:
            return "alice" if len(assign) == g.n else "bob"
        nxt = "bob" if mover == "alice" else "alice"
        for v, s in moves:
            assign[v] = s
            result = play(assign, nxt)
            del assign[v]
            if result == mover:
                return mover
        return nxt

    return play({}, first)


# -- marking games, plain recursion tracking the running max ----------------


def marking_game_oracle(g: Graph, mode: str = "standard", first: str = "alice") -> int:
    """Play score (max vertex score + 1) under optimal play, no memo."""

    def play(marked: dict[int, str], mover: str, best: int) -> int:
        if len(marked) == g.n:
            return best
        nxt = "bob" if mover == "alice" else "alice"
        outcomes = []
        for v in range(g.n):
            if v in marked:
                continue
            if mode == "bob-scoring":
                sc = sum(1 for w in g.adj[v] if marked.get(w) == "bob")
            else:
                sc = sum(1 for w in g.adj[v] if w in marked)
            marked[v] = mover
            outcomes.append(play(marked, nxt, max(best, sc)))
            del marked[v]
        return min(outcomes) if mover == "alice" else max(outcomes)

    if g.n == 0:
        return 0
    return play({}, first, 0) + 1


# -- brute-force colorings ----------------------------------------------------


def chromatic_oracle(g: Graph) -> int:
    """Smallest k admitting any proper coloring, by full enumeration."""
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for colors in product(range(k), repeat=g.n):
            if all(colors[u] != colors[v] for u, v in g.edges):
                return k
    raise AssertionError("n colors always suffice")


def proper_colorings(g: Graph, k: int):
    for colors in product(range(k), repeat=g.n):
        if all(colors[u] != colors[v] for u, v in g.edges):
            yield colors


def is_forest_oracle(n: int, edges) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def acyclic_chromatic_oracle(g: Graph) -> int:
    """Smallest k with a proper coloring whose bicolored subgraphs are all
    acyclic, by full enumeration."""
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for colors in proper_colorings(g, k):
            ok = True
            for c, d in combinations(set(colors), 2):
                verts = [v for v in range(g.n) if colors[v] in (c, d)]
                idx = {v: i for i, v in enumerate(verts)}
                sub_edges = [
                    (idx[u], idx[v])
                    for u, v in g.edges
                    if u in idx and v in idx
                ]
                if not is_forest_oracle(len(verts), sub_edges):
                    ok = False
                    break
            if ok:
                return k
    raise AssertionError("rainbow coloring is always acyclic")


# -- brute-force isomorphism classes ------------------------------------------


def _min_code(n: int, edges: frozenset) -> tuple:
    best = None
    for perm in permutations(range(n)):
        relabeled = tuple(
            sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges)
        )
        if best is None or relabeled < best:
            best = relabeled
    return best


def iso_classes_bruteforce(n: int, forests_only: bool = False) -> int:
    """Isomorphism classes on exactly n vertices by exhaustive edge-subset
    enumeration and min-over-all-permutations canonization."""
    pairs = list(combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        edges = frozenset(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
        if forests_only and not is_forest_oracle(n, edges):
            continue
        seen.add(_min_code(n, edges))
    return len(seen)


# -- misc ---------------------------------------------------------------------


def bfs_distances(g: Graph, s: int) -> list[int]:
    dist = [-1] * g.n
    dist[s] = 0
    queue = [s]
    while queue:
        v = queue.pop(0)
        for w in g.adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist
