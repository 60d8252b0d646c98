"""Exhaustive and family-restricted search engines.

All engines share one pruning idea: edges are decided one at a time in
lexicographic order, and a branch is cut as soon as a tracked pattern is
present among the decided edges alone, since every completion then contains
it too.  Surviving leaves are exactly the colorings avoiding every tracked
pattern.  Counterexamples are therefore the lexicographically least in
enumeration order (edges lexicographic, colors ascending).

Node and wall-time budgets abort with a partial result attached to a
:class:`CapabilityError` rather than running unbounded.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product

from .coloring import EdgeColoring, pair_iter, pair_rank
from .errors import CapabilityError, DomainError
from .formulas import UNBOUNDED, ValueOrInterval, exact, interval
from .patterns import (
    LinearForestMin,
    Path,
    PatternSpec,
    Star,
    P4_PLUS,
    forest_min_edges_exists,
    format_pattern,
    kipas_exists,
    mono_present,
    pattern_edges,
    pattern_min_edges,
    pattern_order,
    rainbow_star_present,
)

#: color key marking a rainbow (rather than monochromatic) tracked pattern
RAINBOW = 0

DEFAULT_NODE_BUDGET = 20_000_000


@dataclass
class SearchReport:
    """Result of a threshold search."""

    quantity: str
    value: ValueOrInterval
    extremal_witness: EdgeColoring | None
    nodes_explored: int
    wall_time: float
    notes: tuple[str, ...] = ()


@dataclass
class CheckReport:
    """Result of a universal ("every coloring contains ...") check."""

    quantity: str
    holds: bool
    counterexample: EdgeColoring | None
    nodes_explored: int
    wall_time: float
    notes: tuple[str, ...] = ()


class _Budget:
    __slots__ = ("nodes", "limit", "deadline")

    def __init__(self, limit: int, time_limit: float | None = None):
        self.nodes = 0
        self.limit = limit
        self.deadline = None if time_limit is None else time.monotonic() + time_limit

    def spend(self, amount: int = 1) -> None:
        self.nodes += amount
        if self.nodes > self.limit:
            raise CapabilityError(f"search exceeded {self.limit} nodes")
        if self.deadline is not None and self.nodes % 4096 == 0:
            if time.monotonic() > self.deadline:
                raise CapabilityError("search exceeded its time budget")


def _rainbow_present_partial(n: int, ecolor: list[int], pattern: PatternSpec) -> bool:
    """Rainbow copy among decided edges only (undecided edges never match)."""
    if isinstance(pattern, Star):
        return rainbow_star_present(ecolor, n, pattern.leaves)
    order = pattern_order(pattern)
    if order > n:
        return False
    edges = pattern_edges(pattern)
    nbrs: list[list[int]] = [[] for _ in range(order)]
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    mapping = [-1] * order
    used = 0
    taken: set[int] = set()

    def place(i: int) -> bool:
        nonlocal used
        if i == order:
            return True
        for hv in range(n):
            if (used >> hv) & 1:
                continue
            new_cols = []
            ok = True
            for w in nbrs[i]:
                if w < i:
                    a, b = mapping[w], hv
                    c = ecolor[pair_rank(min(a, b), max(a, b), n)]
                    if c == 0 or c in taken or c in new_cols:
                        ok = False
                        break
                    new_cols.append(c)
            if not ok:
                continue
            mapping[i] = hv
            used |= 1 << hv
            taken.update(new_cols)
            if place(i + 1):
                return True
            taken.difference_update(new_cols)
            used &= ~(1 << hv)
            mapping[i] = -1
        return False

    return place(0)


class _Tracked:
    """Per-engine bookkeeping for one tracked (color, pattern) pair."""

    __slots__ = ("key", "pattern", "min_edges", "order")

    def __init__(self, key: int, pattern: PatternSpec):
        self.key = key
        self.pattern = pattern
        self.min_edges = pattern_min_edges(pattern)
        if isinstance(pattern, LinearForestMin):
            # a forest with m edges needs at least m+1 vertices
            self.order = pattern.min_edges + 1
        else:
            self.order = pattern_order(pattern)


def _full_scan(
    n: int,
    k: int,
    tracked: list[tuple[int, PatternSpec]],
    surjective: bool,
    budget: _Budget,
    threads: int = 1,
) -> list[int] | None:
    """First full coloring of K_n (colors 1..k) avoiding every tracked pattern.

    A tracked pair (color, pattern) prunes a branch once the pattern shows up
    in that color class of the decided edges; the RAINBOW key tracks rainbow
    copies instead.  ``surjective`` keeps only colorings using all k colors.
    """
    m = n * (n - 1) // 2
    edges = list(pair_iter(n))
    specs = [_Tracked(key, p) for key, p in tracked]
    # patterns too large to ever appear never prune anything
    specs = [s for s in specs if s.key == RAINBOW or s.order <= n]
    mono_by_color: dict[int, list[_Tracked]] = {}
    rainbow_specs: list[_Tracked] = []
    for s in specs:
        if s.key == RAINBOW:
            rainbow_specs.append(s)
        else:
            mono_by_color.setdefault(s.key, []).append(s)

    # patterns present in the empty graph (single-vertex paths) hold everywhere
    for s in specs:
        if s.key != RAINBOW and s.min_edges == 0:
            return None

    def run_branch(first_color: int | None) -> list[int] | None:
        ecolor = [0] * m
        adj: list[list[int]] = [[0] * n for _ in range(k + 1)]
        class_edges = [0] * (k + 1)

        def assign(idx: int, c: int) -> bool:
            """Returns False when the branch is pruned by a tracked pattern."""
            u, v = edges[idx]
            ecolor[idx] = c
            adj[c][u] |= 1 << v
            adj[c][v] |= 1 << u
            class_edges[c] += 1
            for s in mono_by_color.get(c, ()):
                if class_edges[c] >= s.min_edges and mono_present(n, adj[c], s.pattern):
                    return False
            for s in rainbow_specs:
                if _rainbow_present_partial(n, ecolor, s.pattern):
                    return False
            return True

        def unassign(idx: int, c: int) -> None:
            u, v = edges[idx]
            ecolor[idx] = 0
            adj[c][u] &= ~(1 << v)
            adj[c][v] &= ~(1 << u)
            class_edges[c] -= 1

        def dfs(idx: int) -> list[int] | None:
            if idx == m:
                if surjective and any(class_edges[c] == 0 for c in range(1, k + 1)):
                    return None
                return list(ecolor)
            for c in range(1, k + 1):
                budget.spend()
                ok = assign(idx, c)
                if ok:
                    got = dfs(idx + 1)
                    if got is not None:
                        return got
                unassign(idx, c)
            return None

        if first_color is None:
            return dfs(0)
        budget.spend()
        if m == 0:
            return dfs(0)
        ok = assign(0, first_color)
        result = dfs(1) if ok else None
        unassign(0, first_color)
        return result

    if threads <= 1 or m == 0:
        return run_branch(None)
    with ThreadPoolExecutor(max_workers=min(threads, k)) as pool:
        futures = [pool.submit(run_branch, c) for c in range(1, k + 1)]
        results = [f.result() for f in futures]
    for res in results:  # branches are in enumeration order already
        if res is not None:
            return res
    return None


def _size_multisets(total: int, count: int, min_size: int):
    """Ascending size tuples of ``count`` parts, each >= min_size, summing to total."""

    def rec(remaining: int, parts_left: int, floor: int):
        if parts_left == 1:
            if remaining >= floor:
                yield (remaining,)
            return
        for first in range(floor, remaining // parts_left + 1):
            for rest in rec(remaining - first, parts_left - 1, first):
                yield (first,) + rest

    yield from rec(total, count, min_size)


def _family_counterexample(
    n: int,
    k: int,
    parts: list[range],
    cross_color: dict[tuple[int, int], int],
    internal_choices: list[tuple[int, int]],
    target: PatternSpec,
    surjective: bool,
    budget: _Budget,
) -> list[int] | None:
    """First member of a structured family avoiding a monochromatic target.

    ``cross_color`` maps part-index pairs to the fixed cross color;
    ``internal_choices[i]`` is the ordered color pair allowed inside part i.
    Internal edges are decided by DFS with the same early-prune rule.
    """
    m = n * (n - 1) // 2
    ecolor = [0] * m
    adj: list[list[int]] = [[0] * n for _ in range(k + 1)]
    class_edges = [0] * (k + 1)
    where = {}
    for i, rng in enumerate(parts):
        for v in rng:
            where[v] = i
    t_order = pattern_order(target) if not isinstance(target, LinearForestMin) else 0
    t_min_edges = pattern_min_edges(target)

    def put(u: int, v: int, c: int):
        ecolor[pair_rank(u, v, n)] = c
        adj[c][u] |= 1 << v
        adj[c][v] |= 1 << u
        class_edges[c] += 1

    def drop(u: int, v: int, c: int):
        ecolor[pair_rank(u, v, n)] = 0
        adj[c][u] &= ~(1 << v)
        adj[c][v] &= ~(1 << u)
        class_edges[c] -= 1

    internal_edges: list[tuple[int, int, tuple[int, int]]] = []
    for i, rng in enumerate(parts):
        verts = list(rng)
        for a in range(len(verts)):
            for b in range(a + 1, len(verts)):
                internal_edges.append((verts[a], verts[b], internal_choices[i]))
    for u, v in pair_iter(n):
        pu, pv = where[u], where[v]
        if pu != pv:
            put(u, v, cross_color[(min(pu, pv), max(pu, pv))])

    def present(c: int) -> bool:
        return (
            t_order <= n
            and class_edges[c] >= t_min_edges
            and mono_present(n, adj[c], target)
        )

    # the fixed cross edges may already force the target everywhere
    for c in set(cross_color.values()):
        budget.spend()
        if present(c):
            return None

    def dfs(idx: int) -> list[int] | None:
        if idx == len(internal_edges):
            if surjective and any(class_edges[c] == 0 for c in range(1, k + 1)):
                return None
            return list(ecolor)
        u, v, choices = internal_edges[idx]
        for c in choices:
            budget.spend()
            put(u, v, c)
            if not present(c):
                got = dfs(idx + 1)
                if got is not None:
                    return got
            drop(u, v, c)
        return None

    return dfs(0)


def _as_coloring(n: int, k: int, ecolor: list[int]) -> EdgeColoring:
    c = EdgeColoring(n, k, ecolor)
    if c.colors_used() == frozenset(range(1, k + 1)):
        c = EdgeColoring(n, k, ecolor, exact_flag=True)
    return c


def _bk_counterexample(
    k: int, n: int, target: PatternSpec, surjective: bool, budget: _Budget
) -> EdgeColoring | None:
    """First bk member of K_n avoiding the target in every color."""
    if n < 2 * (k - 1):
        return None  # the family is empty at this size
    for sizes in _size_multisets(n, k - 1, 2):
        parts = []
        base = 0
        for s in sizes:
            parts.append(range(base, base + s))
            base += s
        cross = {
            (i, j): 1 for i in range(k - 1) for j in range(i + 1, k - 1)
        }
        internal = [(1, i + 2) for i in range(k - 1)]
        got = _family_counterexample(
            n, k, parts, cross, internal, target, surjective, budget
        )
        if got is not None:
            return _as_coloring(n, k, got)
    return None


def _t_counterexample(
    n: int, target: PatternSpec, surjective: bool, budget: _Budget
) -> EdgeColoring | None:
    """First t member of K_n avoiding the target in every color."""
    if n < 3:
        return None
    cross = {(0, 1): 1, (1, 2): 2, (0, 2): 3}
    internal = [(1, 3), (1, 2), (2, 3)]
    for sizes in _size_multisets(n, 3, 1):
        parts = []
        base = 0
        for s in sizes:
            parts.append(range(base, base + s))
            base += s
        got = _family_counterexample(
            n, 3, parts, cross, internal, target, surjective, budget
        )
        if got is not None:
            return _as_coloring(n, 3, got)
    return None


def brute_force_ramsey(
    red: PatternSpec,
    blue: PatternSpec,
    max_n: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    threads: int = 1,
) -> SearchReport:
    """Smallest N <= max_n forcing a red or blue copy in every 2-coloring.

    Full enumeration with pruning; the extremal witness is the counterexample
    found on N-1 vertices.  Returns the interval [max_n+1, unbounded] when
    max_n does not suffice.
    """
    if max_n > 9:
        raise DomainError("full 2-color enumeration supports max_n <= 9")
    for p in (red, blue):
        if not isinstance(p, LinearForestMin) and pattern_order(p) > max_n:
            raise DomainError(
                f"pattern {format_pattern(p)} does not fit in K_{max_n}"
            )
    start = time.monotonic()
    budget = _Budget(node_budget)
    quantity = f"ramsey({format_pattern(red)}, {format_pattern(blue)})"
    witness: EdgeColoring | None = None
    try:
        for n in range(1, max_n + 1):
            got = _full_scan(
                n, 2, [(1, red), (2, blue)], surjective=False, budget=budget, threads=threads
            )
            if got is None:
                return SearchReport(
                    quantity,
                    exact(n),
                    witness,
                    budget.nodes,
                    time.monotonic() - start,
                )
            witness = _as_coloring(n, 2, got)
    except CapabilityError as err:
        lo = witness.n_vertices + 1 if witness is not None else 1
        raise CapabilityError(
            str(err),
            partial=SearchReport(
                quantity,
                interval(lo, UNBOUNDED, caveat="aborted on budget"),
                witness,
                budget.nodes,
                time.monotonic() - start,
            ),
        ) from None
    return SearchReport(
        quantity,
        interval(max_n + 1, UNBOUNDED, caveat=f"not forced by K_{max_n}"),
        witness,
        budget.nodes,
        time.monotonic() - start,
    )


def compute_bk(
    k: int,
    target: PatternSpec,
    max_n: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> SearchReport:
    """Smallest N <= max_n such that every bk member of K_N has a mono target.

    The scan starts at 2(k-1), the least size where the family is nonempty.
    """
    if k < 3:
        raise DomainError("need k >= 3")
    if max_n > 14:
        raise DomainError("family-restricted enumeration supports max_n <= 14")
    start = time.monotonic()
    budget = _Budget(node_budget)
    quantity = f"bk(k={k}, {format_pattern(target)})"
    witness: EdgeColoring | None = None
    try:
        for n in range(2 * (k - 1), max_n + 1):
            cex = _bk_counterexample(k, n, target, surjective=False, budget=budget)
            if cex is None:
                return SearchReport(
                    quantity, exact(n), witness, budget.nodes, time.monotonic() - start
                )
            witness = cex
    except CapabilityError as err:
        lo = witness.n_vertices + 1 if witness is not None else 2 * (k - 1)
        raise CapabilityError(
            str(err),
            partial=SearchReport(
                quantity,
                interval(lo, UNBOUNDED, caveat="aborted on budget"),
                witness,
                budget.nodes,
                time.monotonic() - start,
            ),
        ) from None
    return SearchReport(
        quantity,
        interval(max_n + 1, UNBOUNDED, caveat=f"not forced by size {max_n}"),
        witness,
        budget.nodes,
        time.monotonic() - start,
    )


def compute_t(
    target: PatternSpec,
    max_n: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> SearchReport:
    """Smallest N <= max_n such that every t member of K_N has a mono target."""
    if max_n > 12:
        raise DomainError("t-family enumeration supports max_n <= 12")
    start = time.monotonic()
    budget = _Budget(node_budget)
    quantity = f"t({format_pattern(target)})"
    witness: EdgeColoring | None = None
    try:
        for n in range(3, max_n + 1):
            cex = _t_counterexample(n, target, surjective=False, budget=budget)
            if cex is None:
                return SearchReport(
                    quantity, exact(n), witness, budget.nodes, time.monotonic() - start
                )
            witness = cex
    except CapabilityError as err:
        lo = witness.n_vertices + 1 if witness is not None else 3
        raise CapabilityError(
            str(err),
            partial=SearchReport(
                quantity,
                interval(lo, UNBOUNDED, caveat="aborted on budget"),
                witness,
                budget.nodes,
                time.monotonic() - start,
            ),
        ) from None
    return SearchReport(
        quantity,
        interval(max_n + 1, UNBOUNDED, caveat=f"not forced by size {max_n}"),
        witness,
        budget.nodes,
        time.monotonic() - start,
    )


def randomized_kipas_forest_refutation(
    n: int, a: int, samples: int, seed: int
) -> EdgeColoring | None:
    """Sample 2-colorings of K_{n+a} hunting one with no red kipas of path
    order n and no blue order-3 linear forest with >= 2a edges.

    A sampling search, not a proof: the instances this targets sit beyond
    the exhaustive engines, so absence of a counterexample is only evidence.
    """
    size = n + a
    m = size * (size - 1) // 2
    edges = list(pair_iter(size))
    rng = random.Random(seed)
    need = 2 * a
    for _ in range(samples):
        bits = rng.getrandbits(m)
        blue = [0] * size
        for i, (u, v) in enumerate(edges):
            if (bits >> i) & 1:
                blue[u] |= 1 << v
                blue[v] |= 1 << u
        if forest_min_edges_exists(size, blue, need, 3):
            continue
        red = [((1 << size) - 1) & ~(1 << v) & ~blue[v] for v in range(size)]
        if kipas_exists(size, red, n):
            continue
        colors = [2 if (bits >> i) & 1 else 1 for i in range(m)]
        return EdgeColoring(size, 2, colors, exact_flag=len(set(colors)) == 2)
    return None


def universal_check(
    n: int,
    forbidden: list[tuple[int, PatternSpec]],
    required: list[tuple[int, PatternSpec]],
    node_budget: int = DEFAULT_NODE_BUDGET,
    threads: int = 1,
    time_limit: float | None = None,
) -> CheckReport:
    """Does every 2-coloring of K_n avoiding ``forbidden`` contain a ``required``?

    Both lists prune identically (a coloring with a forbidden pattern is
    outside the hypothesis, one with a required pattern satisfies the claim),
    so a surviving leaf is exactly a counterexample.
    """
    if n > 11:
        raise DomainError("universal checks support at most 11 vertices")
    start = time.monotonic()
    budget = _Budget(node_budget, time_limit)
    desc = "universal(n={}, avoid {}, need {})".format(
        n,
        ",".join(f"{c}:{format_pattern(p)}" for c, p in forbidden),
        ",".join(f"{c}:{format_pattern(p)}" for c, p in required),
    )
    try:
        got = _full_scan(
            n, 2, list(forbidden) + list(required), surjective=False,
            budget=budget, threads=threads,
        )
    except CapabilityError as err:
        raise CapabilityError(
            str(err),
            partial=CheckReport(
                desc, False, None, budget.nodes, time.monotonic() - start,
                notes=("aborted on budget; no conclusion",),
            ),
        ) from None
    cex = None if got is None else _as_coloring(n, 2, got)
    return CheckReport(
        desc, cex is None, cex, budget.nodes, time.monotonic() - start
    )


# --- desk-scale Gallai-Ramsey verification -------------------------------------


def _rainbow_context(pattern: PatternSpec) -> str:
    if isinstance(pattern, Star) and pattern.leaves == 3:
        return "k13"
    if isinstance(pattern, Path) and pattern.order == 5:
        return "p5"
    if pattern == P4_PLUS:
        return "p4plus"
    raise CapabilityError(
        f"no structure case list for rainbow {format_pattern(pattern)};"
        " use full enumeration"
    )


def _shape_clique_plus_vertex(n: int, k: int, target: PatternSpec, budget: _Budget):
    """Members where all but the last vertex induce color 1."""
    m = n * (n - 1) // 2
    base = [0] * m
    for u, v in pair_iter(n):
        if v < n - 1:
            base[pair_rank(u, v, n)] = 1
    a = n - 1
    star_ranks = [pair_rank(u, a, n) for u in range(n - 1)]
    # the bare clique sits inside color 1 of every member, so if it already
    # contains the target there is nothing to enumerate
    adj_clique = [((1 << (n - 1)) - 1) & ~(1 << u) for u in range(n - 1)] + [0]
    budget.spend()
    if mono_present(n, adj_clique, target):
        return
    for assignment in product(range(1, k + 1), repeat=n - 1):
        budget.spend()
        if set(assignment) | {1} != set(range(1, k + 1)):
            continue
        ecolor = list(base)
        for r, c in zip(star_ranks, assignment):
            ecolor[r] = c
        yield EdgeColoring(n, k, ecolor, exact_flag=True)


def _shape_hub_triple(n: int, target: PatternSpec, budget: _Budget):
    """k=4 members: E2={ab}, E3={ac}, E4 = {bc} + a subset of a's other edges."""
    if n < 4:
        return
    m = n * (n - 1) // 2
    for extra in product((1, 4), repeat=n - 3):
        budget.spend()
        ecolor = [1] * m
        ecolor[pair_rank(0, 1, n)] = 2
        ecolor[pair_rank(0, 2, n)] = 3
        ecolor[pair_rank(1, 2, n)] = 4
        for j, c in zip(range(3, n), extra):
            ecolor[pair_rank(0, j, n)] = c
        yield EdgeColoring(n, 4, ecolor, exact_flag=True)


def _shape_matched_quad(n: int, budget: _Budget):
    """k=4 members on special vertices 0..3; two choices for the color-2 class."""
    if n < 5:
        return  # color 1 would be empty, so never an exact 4-coloring
    m = n * (n - 1) // 2
    for with_cd in (False, True):
        budget.spend()
        ecolor = [1] * m
        ecolor[pair_rank(0, 1, n)] = 2
        if with_cd:
            ecolor[pair_rank(2, 3, n)] = 2
        ecolor[pair_rank(0, 2, n)] = 3
        ecolor[pair_rank(1, 3, n)] = 3
        ecolor[pair_rank(0, 3, n)] = 4
        ecolor[pair_rank(1, 2, n)] = 4
        yield EdgeColoring(n, 4, ecolor, exact_flag=True)


def _shape_sporadic_5(budget: _Budget):
    budget.spend()
    assignment = {
        (0, 3): 1, (0, 4): 1, (1, 2): 1,
        (1, 3): 2, (1, 4): 2, (0, 2): 2,
        (2, 3): 3, (2, 4): 3, (0, 1): 3,
        (3, 4): 4,
    }
    yield EdgeColoring.from_pairs(5, 4, assignment, exact_flag=True)


def _structure_members(
    k: int, context: str, n: int, target: PatternSpec, budget: _Budget
):
    """Exceptional-shape members for a rainbow context, beyond the bk family."""
    if context == "p5":
        yield from _shape_clique_plus_vertex(n, k, target, budget)
        if k == 4:
            yield from _shape_hub_triple(n, target, budget)
            yield from _shape_matched_quad(n, budget)
            if n == 5:
                yield from _shape_sporadic_5(budget)
    elif context == "p4plus":
        if k == 4:
            if n >= 4:
                from .constructions import g2_coloring, g3_coloring

                budget.spend(2)
                yield g2_coloring(n)
                yield g3_coloring(n)
    # k13 adds the t family, handled separately for pruning


def gr_desk_verify(
    k: int,
    rainbow: PatternSpec,
    target: PatternSpec,
    n: int,
    mode: str = "structure",
    node_budget: int = DEFAULT_NODE_BUDGET,
    threads: int = 1,
) -> CheckReport:
    """Verify that every exact k-coloring of K_n has a rainbow copy of
    ``rainbow`` or a monochromatic ``target``.

    Full mode enumerates all surjective colorings.  Structure mode instead
    runs over the families that rainbow-free colorings are known to form
    (the certificate is relative to that case list): the bk family plus the
    context's exceptional shapes, and for rainbow stars with k=3 the t family.
    """
    start = time.monotonic()
    budget = _Budget(node_budget)
    quantity = (
        f"gr(k={k}, rainbow {format_pattern(rainbow)} : {format_pattern(target)}, n={n}, {mode})"
    )
    if mode == "full":
        feasible = k ** (n * (n - 1) // 2)
        if feasible > 10 ** 9:
            raise CapabilityError(
                f"full enumeration of {k}^{n * (n - 1) // 2} colorings is out of budget"
            )
        tracked = [(RAINBOW, rainbow)] + [(c, target) for c in range(1, k + 1)]
        try:
            got = _full_scan(n, k, tracked, surjective=True, budget=budget, threads=threads)
        except CapabilityError as err:
            raise CapabilityError(
                str(err),
                partial=CheckReport(
                    quantity, False, None, budget.nodes, time.monotonic() - start,
                    notes=("aborted on budget; no conclusion",),
                ),
            ) from None
        cex = None if got is None else _as_coloring(n, k, got)
        return CheckReport(quantity, cex is None, cex, budget.nodes, time.monotonic() - start)
    if mode != "structure":
        raise DomainError("mode must be 'full' or 'structure'")
    context = _rainbow_context(rainbow)
    if context == "k13" and k < 3 or context != "k13" and k < 4:
        raise DomainError(f"context {context} needs k >= {3 if context == 'k13' else 4}")
    notes = (f"relative to the rainbow-free case list for {format_pattern(rainbow)}",)
    try:
        cex = _bk_counterexample(k, n, target, surjective=True, budget=budget)
        if cex is None and context == "k13" and k == 3:
            cex = _t_counterexample(n, target, surjective=True, budget=budget)
        if cex is None:
            for member in _structure_members(k, context, n, target, budget):
                if not any(
                    mono_present(n, member.adjacency(c), target)
                    for c in range(1, k + 1)
                ):
                    cex = member
                    break
    except CapabilityError as err:
        raise CapabilityError(
            str(err),
            partial=CheckReport(
                quantity, False, None, budget.nodes, time.monotonic() - start,
                notes=notes + ("aborted on budget; no conclusion",),
            ),
        ) from None
    return CheckReport(
        quantity, cex is None, cex, budget.nodes, time.monotonic() - start, notes=notes
    )
