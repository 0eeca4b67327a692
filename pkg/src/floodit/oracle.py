"""Exhaustive ground-truth solvers and structural checks.

`min_moves` is a uniform-cost breadth-first search over colouring vectors:
the first flooded state found is optimal.  It is exact and meant for small
instances; budgets make exhaustion an explicit outcome instead of a silent
wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .engine import ColouredGraph, Move, colours_present, induced_subgraph, replay
from .errors import EnumerationLimitError, InputError

_NO_LIMIT = 10**18


@dataclass(frozen=True)
class SearchBudget:
    max_states: int = 2_000_000
    max_depth: Optional[int] = None

    def __post_init__(self):
        if self.max_states <= 0:
            raise InputError("max_states must be positive")
        if self.max_depth is not None and self.max_depth <= 0:
            raise InputError("max_depth must be positive")


@dataclass
class MinMovesResult:
    status: str  # "exact" or "unknown"
    value: Optional[int]
    witness: Optional[list]
    states_explored: int
    reason: str = ""

    @property
    def is_exact(self) -> bool:
        return self.status == "exact"


def _components_of(colouring, adjacency):
    """Monochromatic components of a raw colouring vector."""
    n = len(colouring)
    comp = [-1] * n
    comps = []
    for v in range(n):
        if comp[v] >= 0:
            continue
        cid = len(comps)
        colour = colouring[v]
        members = [v]
        comp[v] = cid
        stack = [v]
        while stack:
            x = stack.pop()
            for u in adjacency[x]:
                if comp[u] < 0 and colouring[u] == colour:
                    comp[u] = cid
                    members.append(u)
                    stack.append(u)
        comps.append(members)
    return comps, comp


def greedy_upper_bound(
    g: ColouredGraph,
    target: Optional[int] = None,
    allowed_vertices: Optional[Iterable[int]] = None,
) -> list:
    """A valid (not optimal) flooding sequence, used as a pruning bound."""
    allowed = set(range(g.num_vertices)) if allowed_vertices is None else set(allowed_vertices)
    adjacency = g.adjacency
    colouring = list(g.colouring)
    moves = []
    anchor = min(allowed)
    while True:
        comps, comp_of = _components_of(colouring, adjacency)
        if len(comps) == 1:
            break
        # Grow the component holding the anchor by its most common
        # neighbouring colour.
        home = comp_of[anchor]
        counts = {}
        for v in comps[home]:
            for u in adjacency[v]:
                if comp_of[u] != home:
                    counts[colouring[u]] = counts.get(colouring[u], 0) + 1
        colour = max(counts, key=lambda c: (counts[c], -c))
        moves.append(Move(anchor, colour))
        for v in comps[home]:
            colouring[v] = colour
    if target is not None and colouring[0] != target:
        moves.append(Move(anchor, target))
    return moves


def min_moves(
    g: ColouredGraph,
    target: Optional[int] = None,
    allowed_vertices: Optional[Iterable[int]] = None,
    budget: Optional[SearchBudget] = None,
    prune_non_merging: bool = True,
) -> MinMovesResult:
    """Exact minimum number of moves to flood `g` (optionally with a fixed
    final colour, optionally with moves restricted to a vertex set).

    Breadth-first over colouring vectors with dedup; one representative
    move per (component, colour).  `prune_non_merging` drops moves that do
    not merge components, which preserves optimality (a non-merging move can
    always be deferred to the point where it does merge); the final
    recolour-only move of the targeted variant is handled separately.
    """
    if budget is None:
        budget = SearchBudget()
    n = g.num_vertices
    c = len(g.palette)
    if target is not None and not 0 <= target < c:
        raise InputError(f"target colour {target} outside the palette")
    allowed = None
    if allowed_vertices is not None:
        allowed = set(allowed_vertices)
        if not allowed:
            raise InputError("allowed_vertices must be non-empty")
        for v in allowed:
            if not 0 <= v < n:
                raise InputError(f"allowed vertex {v} out of range")
    adjacency = g.adjacency

    ub_moves = greedy_upper_bound(g, target, allowed)
    max_depth = budget.max_depth if budget.max_depth is not None else _NO_LIMIT

    def mono_colour(col):
        first = col[0]
        return first if all(x == first for x in col) else None

    start = tuple(g.colouring)
    start_mono = mono_colour(start)
    if start_mono is not None:
        if target is None or start_mono == target:
            return MinMovesResult("exact", 0, [], 0)
        fix = Move(min(allowed) if allowed else 0, target)
        return MinMovesResult("exact", 1, [fix], 0)

    parents = {start: None}
    frontier = [start]
    depth = 0
    explored = 0
    # The greedy sequence is a real solution; the search only has to look
    # for something strictly shorter.
    best_value = len(ub_moves)
    best_state = None
    best_extra = None  # final recolour move for a wrong-coloured flood

    def build_witness():
        if best_state is None:
            return list(ub_moves)
        moves = []
        cur = best_state
        while parents[cur] is not None:
            prev, mv = parents[cur]
            moves.append(mv)
            cur = prev
        moves.reverse()
        if best_extra is not None:
            moves.append(best_extra)
        return moves

    while frontier:
        if depth + 1 >= best_value:
            break  # deeper layers cannot improve on the best known solution
        if depth + 1 > max_depth:
            return MinMovesResult(
                "unknown", None, None, explored, reason="depth budget exhausted"
            )
        nxt = []
        for state in frontier:
            explored += 1
            if explored > budget.max_states:
                return MinMovesResult(
                    "unknown", None, None, explored, reason="state budget exhausted"
                )
            comps, _comp_of = _components_of(state, adjacency)
            for members in comps:
                if allowed is not None:
                    movers = [v for v in members if v in allowed]
                    if not movers:
                        continue
                    mover = movers[0]
                else:
                    mover = members[0]
                own = state[mover]
                if prune_non_merging:
                    colours = set()
                    for v in members:
                        for u in adjacency[v]:
                            if state[u] != own:
                                colours.add(state[u])
                else:
                    colours = set(range(c)) - {own}
                for colour in colours:
                    nstate = list(state)
                    for v in members:
                        nstate[v] = colour
                    nstate = tuple(nstate)
                    if nstate in parents:
                        continue
                    mono = mono_colour(nstate)
                    if mono is not None:
                        if target is None or mono == target:
                            # Breadth-first order: first hit is optimal.
                            parents[nstate] = (state, Move(mover, colour))
                            best_state = nstate
                            best_extra = None
                            witness = build_witness()
                            return MinMovesResult(
                                "exact", depth + 1, witness, explored
                            )
                        if depth + 2 < best_value:
                            parents[nstate] = (state, Move(mover, colour))
                            best_value = depth + 2
                            best_state = nstate
                            best_extra = Move(
                                min(allowed) if allowed else 0, target
                            )
                        continue
                    # Flooding still needs >= (#colours present - 1) moves.
                    lb = len(set(nstate)) - 1
                    if target is not None and target not in nstate:
                        lb += 1
                    if depth + 1 + lb >= best_value:
                        continue
                    parents[nstate] = (state, Move(mover, colour))
                    nxt.append(nstate)
        frontier = nxt
        depth += 1

    # Search exhausted everything that could beat the best known solution.
    return MinMovesResult("exact", best_value, build_witness(), explored)


class TreeView:
    """A coloured tree with accessors for the leaf-free core and for the
    unique path between two vertices."""

    def __init__(self, graph: ColouredGraph):
        if len(graph.edges()) != graph.num_vertices - 1:
            raise InputError("not a tree: edge count != n - 1")
        self.graph = graph

    def non_leaf_vertices(self) -> frozenset:
        """Vertices remaining after deleting every leaf."""
        g = self.graph
        if g.num_vertices == 1:
            return frozenset({0})
        return frozenset(
            v for v in range(g.num_vertices) if len(g.adjacency[v]) >= 2
        )

    def path_between(self, x: int, y: int) -> list:
        g = self.graph
        prev = {x: None}
        stack = [x]
        while stack:
            v = stack.pop()
            if v == y:
                break
            for u in g.adjacency[v]:
                if u not in prev:
                    prev[u] = v
                    stack.append(u)
        path = [y]
        while prev[path[-1]] is not None:
            path.append(prev[path[-1]])
        path.reverse()
        return path


def spanning_trees(g: ColouredGraph, limit: int = 100_000):
    """Yield every spanning tree of `g` exactly once as a TreeView.

    Include/exclude recursion on the edge list with connectivity pruning;
    meant for small graphs.  Raises EnumerationLimitError past `limit`.
    """
    n = g.num_vertices
    edges = g.edges()
    m = len(edges)
    produced = 0

    def connected_with(edge_subset_flags, from_index):
        # Can the edges chosen so far plus all undecided edges still connect?
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        comps = n
        for i, (a, b) in enumerate(edges):
            if i < from_index and not edge_subset_flags[i]:
                continue
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
                comps -= 1
        return comps == 1

    chosen = [False] * m

    def recurse(i, picked, uf_parent):
        nonlocal produced
        if picked == n - 1:
            produced += 1
            if produced > limit:
                raise EnumerationLimitError(
                    f"more than {limit} spanning trees"
                )
            adj = [[] for _ in range(n)]
            for k, (a, b) in enumerate(edges):
                if chosen[k]:
                    adj[a].append(b)
                    adj[b].append(a)
            yield TreeView(ColouredGraph(adj, g.colouring, g.palette))
            return
        if i == m:
            return

        def find(parent, a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        a, b = edges[i]
        ra, rb = find(uf_parent, a), find(uf_parent, b)
        if ra != rb:
            child = list(uf_parent)
            child[ra] = rb
            chosen[i] = True
            yield from recurse(i + 1, picked + 1, child)
            chosen[i] = False
        if connected_with(chosen, i + 1):
            yield from recurse(i + 1, picked, uf_parent)

    yield from recurse(0, 0, list(range(n)))


def check_spanning_tree_theorem(
    g: ColouredGraph,
    d: int,
    budget: Optional[SearchBudget] = None,
    tree_limit: int = 100_000,
) -> Optional[bool]:
    """Does the graph optimum for target d equal the best optimum over its
    spanning trees?  Returns None when a budget runs out."""
    whole = min_moves(g, target=d, budget=budget)
    if not whole.is_exact:
        return None
    best = None
    for tree in spanning_trees(g, limit=tree_limit):
        res = min_moves(tree.graph, target=d, budget=budget)
        if not res.is_exact:
            return None
        if best is None or res.value < best:
            best = res.value
    return best == whole.value


def check_no_leaf_moves(
    tree: TreeView, budget: Optional[SearchBudget] = None
) -> Optional[bool]:
    """Is the tree optimum achievable with all moves at non-leaf vertices?"""
    g = tree.graph
    if g.num_vertices < 3:
        raise InputError("tree must have at least 3 vertices")
    core = tree.non_leaf_vertices()
    unrestricted = min_moves(g, budget=budget)
    restricted = min_moves(g, allowed_vertices=core, budget=budget)
    if not (unrestricted.is_exact and restricted.is_exact):
        return None
    return unrestricted.value == restricted.value


def check_subadditivity(
    g: ColouredGraph,
    part_a: Iterable[int],
    part_b: Iterable[int],
    d: int,
    budget: Optional[SearchBudget] = None,
) -> Optional[bool]:
    """m(G, d) <= m(G[A], d) + m(G[B], d) for connected covering parts."""
    a = set(part_a)
    b = set(part_b)
    if a | b != set(range(g.num_vertices)):
        raise InputError("parts must cover the vertex set")
    sub_a, _ = induced_subgraph(g, a)
    sub_b, _ = induced_subgraph(g, b)
    whole = min_moves(g, target=d, budget=budget)
    ra = min_moves(sub_a, target=d, budget=budget)
    rb = min_moves(sub_b, target=d, budget=budget)
    if not (whole.is_exact and ra.is_exact and rb.is_exact):
        return None
    return whole.value <= ra.value + rb.value


def validate_witness(g: ColouredGraph, result: MinMovesResult, target=None) -> bool:
    """Replay a search witness: right length and a flooded final state."""
    if not result.is_exact:
        return False
    final, flooded = replay(g, result.witness)
    if not flooded or len(result.witness) != result.value:
        return False
    return target is None or final.colouring[0] == target
