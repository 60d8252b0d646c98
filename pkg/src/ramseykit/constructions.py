"""Generators for coloring families and explicit lower-bound witnesses.

Families
--------
bk        k-1 disjoint parts of size >= 2; edges between parts get color 1,
          edges inside part i get color 1 or i+1.
t         three nonempty parts; edges between parts i<j get the color of the
          pair (1 for 1-2, 2 for 2-3, 3 for 1-3) and internal edges pick one
          of the two cross colors meeting their part.
g1        like t, but at most one part may be empty.
g2        one edge xy of color 2, the other x-edges color 3, the other
          y-edges color 4, everything else color 1.
g3        one triangle abc with colors 2, 3, 4, everything else color 1.

Part-to-vertex assignment is deterministic: parts occupy consecutive vertex
ranges in declaration order, so generated files are stable test fixtures.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .coloring import EdgeColoring, pair_iter
from .errors import DescriptorError, DomainError, RamseykitError
from . import patterns
from .patterns import Kipas, Path


@dataclass
class FamilyDescriptor:
    """A parse/classification result placing a coloring inside a family."""

    family: str
    n_vertices: int
    parts: tuple[tuple[int, ...], ...] | None = None
    internal_choices: dict[tuple[int, int], int] | None = None
    special: tuple[int, ...] | None = None
    # classification extras for the dominant-color form
    dominant_color: int | None = None
    part_colors: tuple[int, ...] | None = None


# internal color pairs per part for the three-part families
_T_INTERNAL = ({1, 3}, {1, 2}, {2, 3})
_T_CROSS = {(0, 1): 1, (1, 2): 2, (0, 2): 3}


def _check_partition(d: FamilyDescriptor, min_size: int, n_parts: int, allow_empty: int) -> None:
    if d.parts is None:
        raise DescriptorError(f"{d.family}: partition required")
    if len(d.parts) != n_parts:
        raise DescriptorError(f"{d.family}: expected {n_parts} parts, got {len(d.parts)}")
    seen: set[int] = set()
    empty = 0
    for part in d.parts:
        if not part:
            empty += 1
            continue
        if len(part) < min_size:
            raise DescriptorError(f"{d.family}: part {part} smaller than {min_size}")
        for v in part:
            if not 0 <= v < d.n_vertices:
                raise DescriptorError(f"{d.family}: vertex {v} out of range")
            if v in seen:
                raise DescriptorError(f"{d.family}: vertex {v} in two parts")
            seen.add(v)
    if empty > allow_empty:
        raise DescriptorError(f"{d.family}: {empty} empty parts, at most {allow_empty} allowed")
    if len(seen) != d.n_vertices:
        raise DescriptorError(f"{d.family}: parts do not cover all vertices")


def _apply_internal(
    assignment: dict[tuple[int, int], int],
    part: tuple[int, ...],
    allowed: set[int],
    choices: Mapping[tuple[int, int], int] | None,
    family: str,
) -> None:
    for i, u in enumerate(part):
        for v in part[i + 1:]:
            e = (min(u, v), max(u, v))
            c = None if choices is None else choices.get(e)
            if c is None:
                raise DescriptorError(f"{family}: internal edge {e} has no color choice")
            if c not in allowed:
                raise DescriptorError(
                    f"{family}: internal edge {e} colored {c}, allowed {sorted(allowed)}"
                )
            assignment[e] = c


def build_family(d: FamilyDescriptor) -> EdgeColoring:
    """Build the coloring a descriptor determines; cross colors are fixed."""
    n = d.n_vertices
    assignment: dict[tuple[int, int], int] = {}
    if d.family == "bk":
        if d.parts is None or len(d.parts) < 2:
            raise DescriptorError("bk: needs at least 2 parts (k >= 3)")
        k = len(d.parts) + 1
        _check_partition(d, min_size=2, n_parts=len(d.parts), allow_empty=0)
        for u, v in pair_iter(n):
            assignment[(u, v)] = 1
        for i, part in enumerate(d.parts):
            _apply_internal(assignment, part, {1, i + 2}, d.internal_choices, "bk")
        return _exactified(EdgeColoring.from_pairs(n, k, assignment))
    if d.family in ("t", "g1"):
        allow_empty = 0 if d.family == "t" else 1
        _check_partition(d, min_size=1, n_parts=3, allow_empty=allow_empty)
        where = {}
        for i, part in enumerate(d.parts):
            for v in part:
                where[v] = i
        for u, v in pair_iter(n):
            pu, pv = where[u], where[v]
            if pu != pv:
                assignment[(u, v)] = _T_CROSS[(min(pu, pv), max(pu, pv))]
        for i, part in enumerate(d.parts):
            _apply_internal(assignment, part, set(_T_INTERNAL[i]), d.internal_choices, d.family)
        return _exactified(EdgeColoring.from_pairs(n, 3, assignment))
    if d.family == "g2":
        if d.special is None or len(d.special) != 2:
            raise DescriptorError("g2: needs special vertices (x, y)")
        x, y = d.special
        if x == y or not (0 <= x < n and 0 <= y < n):
            raise DescriptorError("g2: x, y must be distinct vertices")
        if n < 3:
            raise DescriptorError("g2: needs at least 3 vertices")
        for u, v in pair_iter(n):
            if {u, v} == {x, y}:
                assignment[(u, v)] = 2
            elif x in (u, v):
                assignment[(u, v)] = 3
            elif y in (u, v):
                assignment[(u, v)] = 4
            else:
                assignment[(u, v)] = 1
        return _exactified(EdgeColoring.from_pairs(n, 4, assignment))
    if d.family == "g3":
        if d.special is None or len(d.special) != 3:
            raise DescriptorError("g3: needs special vertices (a, b, c)")
        a, b, c = d.special
        if len({a, b, c}) != 3 or not all(0 <= v < n for v in (a, b, c)):
            raise DescriptorError("g3: a, b, c must be distinct vertices")
        for u, v in pair_iter(n):
            assignment[(u, v)] = 1
        assignment[(min(a, b), max(a, b))] = 2
        assignment[(min(b, c), max(b, c))] = 3
        assignment[(min(a, c), max(a, c))] = 4
        return _exactified(EdgeColoring.from_pairs(n, 4, assignment))
    raise DescriptorError(f"unknown family {d.family!r}")


def _exactified(coloring: EdgeColoring) -> EdgeColoring:
    """Copy with exact_flag set iff every declared color appears."""
    exact = coloring.colors_used() == frozenset(range(1, coloring.n_colors + 1))
    if exact == coloring.exact_flag:
        return coloring
    return EdgeColoring(coloring.n_vertices, coloring.n_colors, coloring.colors, exact_flag=exact)


def _ranges(sizes: list[int]) -> tuple[tuple[int, ...], ...]:
    parts = []
    base = 0
    for s in sizes:
        parts.append(tuple(range(base, base + s)))
        base += s
    return tuple(parts)


def _complete_internal(parts, colors_per_part) -> dict[tuple[int, int], int]:
    choices: dict[tuple[int, int], int] = {}
    for part, c in zip(parts, colors_per_part):
        for i, u in enumerate(part):
            for v in part[i + 1:]:
                choices[(min(u, v), max(u, v))] = c
    return choices


def g2_coloring(n: int, x: int = 0, y: int = 1) -> EdgeColoring:
    return build_family(FamilyDescriptor("g2", n, special=(x, y)))


def g3_coloring(n: int, a: int = 0, b: int = 1, c: int = 2) -> EdgeColoring:
    return build_family(FamilyDescriptor("g3", n, special=(a, b, c)))


def witness_kipas_linear(n: int, m: int, verify: bool = False) -> EdgeColoring:
    """Red clique of size n, all other edges blue, on n + ceil(m/2) - 1 vertices.

    Contains no red kipas of path order n and no blue linear forest with m or
    more edges.  The construction is valid for any m >= 2; the matching
    Ramsey formula additionally needs m <= n/2.
    """
    if m < 2 or n < 2:
        raise DomainError("need n, m >= 2")
    extra = (m + 1) // 2 - 1
    size = n + extra
    assignment: dict[tuple[int, int], int] = {}
    for u, v in pair_iter(size):
        assignment[(u, v)] = 1 if v < n else 2
    coloring = _exactified(EdgeColoring.from_pairs(size, 2, assignment))
    if verify:
        _assert_free(coloring, [(1, Kipas(n))], f"kipas-linear witness ({n}, {m})")
        edges, _ = patterns.max_linear_forest(coloring, 2)
        if edges >= m:
            raise RamseykitError(
                f"kipas-linear witness ({n}, {m}) admits a blue forest with {edges} edges"
            )
    return coloring


def witness_bk_path(k: int, n: int, verify: bool = False) -> EdgeColoring:
    """A bk member on ceil((3n-3)/2) - 1 vertices with no monochromatic P_n.

    k-2 parts of size 2 carry one edge each of colors 2..k-1; the last part
    splits into two cliques of color k (the smaller one may be empty), with
    color 1 everywhere else.
    """
    if k < 3:
        raise DomainError("need k >= 3")
    if n <= 4 * (k - 2) + 1:
        raise DomainError("need n > 4(k-2)+1")
    total = -((3 * n - 3) // -2) - 1
    sizes = [2] * (k - 2) + [total - 2 * (k - 2)]
    parts = _ranges(sizes)
    big = parts[-1]
    h2 = big[len(big) - (n - 1):]
    h1 = big[: len(big) - (n - 1)]
    choices: dict[tuple[int, int], int] = {}
    for i, part in enumerate(parts[:-1]):
        choices[(part[0], part[1])] = i + 2
    for i, u in enumerate(big):
        for v in big[i + 1:]:
            same_clique = (u in h1 and v in h1) or (u in h2 and v in h2)
            choices[(u, v)] = k if same_clique else 1
    coloring = build_family(FamilyDescriptor("bk", total, parts=parts, internal_choices=choices))
    if verify:
        _assert_free(coloring, [(c, Path(n)) for c in range(1, k + 1)], f"bk path witness ({k}, {n})")
    return coloring


def witness_t_path(n: int, verify: bool = False) -> EdgeColoring:
    """A t member with part i complete in color i and no monochromatic P_n."""
    if n < 3:
        raise DomainError("need n >= 3")
    if n % 2 == 0:
        if n < 4:
            raise DomainError("need n >= 4 when n is even")
        sizes = [n // 2, n // 2 - 1, n // 2 - 1]
    else:
        sizes = [(n - 1) // 2] * 3
    parts = _ranges(sizes)
    choices = _complete_internal(parts, [1, 2, 3])
    coloring = build_family(
        FamilyDescriptor("t", sum(sizes), parts=parts, internal_choices=choices)
    )
    if verify:
        _assert_free(coloring, [(c, Path(n)) for c in (1, 2, 3)], f"t path witness ({n})")
    return coloring


def witness_b3_kipas(n: int, verify: bool = False) -> EdgeColoring:
    """A b3 member avoiding a monochromatic kipas of path order n in every color.

    One part A of size n is complete in color 3; the rest splits into three
    groups internally colored 1, pairwise colored 2, and joined to A by 1.
    """
    if n < 5:
        raise DomainError("need n >= 5")
    if n % 2 == 1:
        b_sizes = [(n - 1) // 2] * 3
    else:
        b_sizes = [n // 2, n // 2 - 1, n // 2 - 1]
    sizes = [n] + b_sizes
    total = sum(sizes)
    groups = _ranges(sizes)
    a_part = groups[0]
    assignment: dict[tuple[int, int], int] = {}
    where = {}
    for gi, g in enumerate(groups):
        for v in g:
            where[v] = gi
    for u, v in pair_iter(total):
        gu, gv = where[u], where[v]
        if gu == 0 and gv == 0:
            assignment[(u, v)] = 3
        elif gu == 0 or gv == 0:
            assignment[(u, v)] = 1
        elif gu == gv:
            assignment[(u, v)] = 1
        else:
            assignment[(u, v)] = 2
    coloring = _exactified(EdgeColoring.from_pairs(total, 3, assignment))
    if verify:
        _assert_free(coloring, [(c, Kipas(n)) for c in (1, 2, 3)], f"b3 kipas witness ({n})")
    return coloring


def witness_small_kipas(n: int, verify: bool = False) -> EdgeColoring:
    """Tiny kipas-free b3 members: color 1 a balanced complete bipartite graph,
    colors 2 and 3 the two sides (an edge each for n=2, triangles for n=3)."""
    if n not in (2, 3):
        raise DomainError("only n in {2, 3}")
    side = n  # bipartition sides {0..n-1} and {n..2n-1}
    total = 2 * side
    assignment: dict[tuple[int, int], int] = {}
    for u, v in pair_iter(total):
        if u < side and v >= side:
            assignment[(u, v)] = 1
        elif v < side:
            assignment[(u, v)] = 2
        else:
            assignment[(u, v)] = 3
    coloring = _exactified(EdgeColoring.from_pairs(total, 3, assignment))
    if verify:
        _assert_free(coloring, [(c, Kipas(n)) for c in (1, 2, 3)], f"small kipas witness ({n})")
    return coloring


def _assert_free(coloring: EdgeColoring, targets, label: str) -> None:
    for c, pattern in targets:
        if patterns.has_mono_pattern(coloring, c, pattern) is not None:
            raise RamseykitError(
                f"{label} contains {patterns.format_pattern(pattern)} in color {c}"
            )
