"""Exact chromatic and acyclic chromatic numbers for desk-scale graphs."""

from __future__ import annotations

from typing import Optional

from .graphs import ColorPair, Graph, GraphError, LimitError, ProperColoring

DEFAULT_CHROMATIC_LIMIT = 16
DEFAULT_ACYCLIC_LIMIT = 10


def chromatic_number_exact(
    g: Graph, limit: int = DEFAULT_CHROMATIC_LIMIT
) -> tuple[int, ProperColoring]:
    """Exact chromatic number by DSATUR-ordered branch and bound, plus one
    witness coloring."""
    if g.n > limit:
        raise LimitError(f"chromatic_number_exact limited to n <= {limit}")
    if g.n == 0:
        return 0, ProperColoring(g, 0, ())

    # greedy DSATUR upper bound, used to prune the exact search
    colors = [-1] * g.n
    nbr_colors: list[set[int]] = [set() for _ in range(g.n)]
    for _ in range(g.n):
        v = max(
            (u for u in range(g.n) if colors[u] < 0),
            key=lambda u: (len(nbr_colors[u]), g.degree(u), -u),
        )
        c = 0
        while c in nbr_colors[v]:
            c += 1
        colors[v] = c
        for w in g.adj[v]:
            nbr_colors[w].add(c)
    best_k = max(colors) + 1
    best = colors[:]

    colors = [-1] * g.n
    nbr_colors = [set() for _ in range(g.n)]

    def backtrack(used: int) -> None:
        nonlocal best_k, best
        if used >= best_k:
            return
        uncolored = [u for u in range(g.n) if colors[u] < 0]
        if not uncolored:
            best_k = used
            best = colors[:]
            return
        v = max(uncolored, key=lambda u: (len(nbr_colors[u]), g.degree(u), -u))
        for c in range(min(used + 1, best_k - 1)):
            if c in nbr_colors[v]:
                continue
            colors[v] = c
            touched = []
            for w in g.adj[v]:
                if colors[w] < 0 and c not in nbr_colors[w]:
                    nbr_colors[w].add(c)
                    touched.append(w)
            backtrack(max(used, c + 1))
            colors[v] = -1
            for w in touched:
                nbr_colors[w].remove(c)

    backtrack(0)
    return best_k, ProperColoring(g, best_k, tuple(best))


def is_acyclic_coloring(g: Graph, coloring: ProperColoring) -> bool:
    """True when every bicolored subgraph is a forest."""
    for pair in coloring.pairs():
        verts = [v for v in range(g.n) if coloring.color[v] in (pair.c, pair.d)]
        sub = g.induced(verts)
        if not sub.is_forest():
            return False
    return True


def acyclic_chromatic_number_exact(
    g: Graph, limit: int = DEFAULT_ACYCLIC_LIMIT
) -> tuple[int, ProperColoring]:
    """Smallest k admitting a proper k-coloring whose bicolored subgraphs
    are all forests, plus a witness."""
    if g.n > limit:
        raise LimitError(f"acyclic_chromatic_number_exact limited to n <= {limit}")
    if g.n == 0:
        return 0, ProperColoring(g, 0, ())

    chi, _ = chromatic_number_exact(g, limit=max(limit, g.n))
    for k in range(chi, g.n + 1):
        witness = _acyclic_witness(g, k)
        if witness is not None:
            return k, ProperColoring(g, k, witness)
    raise AssertionError("coloring each vertex its own color is always acyclic")


def _acyclic_witness(g: Graph, k: int) -> Optional[tuple[int, ...]]:
    """Backtracking over proper colorings with incremental bicolored-cycle
    pruning; colors are introduced in canonical order to cut symmetry."""
    colors = [-1] * g.n

    def creates_bicolored_cycle(v: int) -> bool:
        c = colors[v]
        for d in range(k):
            if d == c:
                continue
            # cycle through v in the (c,d)-subgraph iff two walks meet; BFS
            # from v over colored vertices of colors {c,d} and look for a
            # repeated visit through distinct branches.
            parent = {v: v}
            stack = [v]
            while stack:
                x = stack.pop()
                for y in g.adj[x]:
                    if colors[y] not in (c, d):
                        continue
                    if y not in parent:
                        parent[y] = x
                        stack.append(y)
                    elif parent[x] != y:
                        return True
        return False

    def backtrack(v: int, used: int) -> bool:
        if v == g.n:
            return True
        for c in range(min(used + 1, k)):
            if any(colors[w] == c for w in g.adj[v]):
                continue
            colors[v] = c
            if not creates_bicolored_cycle(v):
                if backtrack(v + 1, max(used, c + 1)):
                    return True
            colors[v] = -1
        return False

    if backtrack(0, 0):
        return tuple(colors)
    return None
