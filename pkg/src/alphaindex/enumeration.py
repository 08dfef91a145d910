"""Isomorph-free generation, canonical forms, and graph6 stream ingestion.

Canonical forms are exact: two graphs receive the same form precisely when
they are isomorphic.  The labeling is found by individualization-refinement
over the equitable degree partition, comparing adjacency bitstrings in
graph6 column order and keeping the minimum.  A homogeneity shortcut
collapses the search on cells whose internal and pairwise adjacency is
complete or empty (complete multipartite-like situations), which is where
naive backtracking degenerates.

Two generators are provided:

* by order - canonical augmentation: every class on ``n`` vertices arises
  from a class on ``n - 1`` vertices plus one new vertex with some
  neighbourhood, de-duplicated by canonical form.
* by size - for minimally 2-connected targets only.  Every minimally
  2-connected non-cycle graph is a cycle plus a sequence of open ears of
  length >= 2 between non-adjacent endpoints, and every intermediate graph
  of such a decomposition is itself minimally 2-connected (subgraphs of
  chord-free graphs are chord-free).  Growing ears from all cycles and
  keeping the chord-free results therefore reaches every class of the
  target size, regardless of order, which is what the size-indexed
  theorems quantify over.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from .connectivity import (
    is_connected,
    is_minimally_two_connected_by_chords,
    is_minimally_two_connected_by_deletion,
    is_two_connected,
)
from .graphs import Graph, Graph6Error, GraphError, emit_graph6, parse_graph6

MAX_CANONICAL_ORDER = 13
MAX_BUILTIN_ORDER = 8
MAX_GATED_ORDER = 10
MAX_SIZE = 13

_FILTERS: dict[str, Callable[[Graph], bool]] = {
    "all": lambda g: True,
    "two_connected": is_two_connected,
    "minimally_two_connected": is_minimally_two_connected_by_chords,
}


class EnumerationLimitError(GraphError):
    """Requested order or size beyond the builtin generator limits."""


@dataclass(frozen=True)
class EnumerationSpec:
    """What to enumerate: ``by_order``/``by_size``, a filter, and a source."""

    mode: str  # "by_order" | "by_size"
    value: int  # order n or size m
    filter: str = "all"
    source: str = "builtin"  # "builtin" | "graph6_stream"
    allow_slow: bool = False

    def __post_init__(self):
        if self.mode not in ("by_order", "by_size"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.filter not in _FILTERS:
            raise ValueError(f"unknown filter {self.filter!r}")


# -- canonical labeling ----------------------------------------------------


def canonical_form(g: Graph) -> str:
    """Canonical graph6 string; equal for two graphs iff they are isomorphic."""
    return emit_graph6(canonical_relabel(g))


def canonical_relabel(g: Graph) -> Graph:
    """The canonically labeled copy of ``g``."""
    if g.n > MAX_CANONICAL_ORDER:
        raise EnumerationLimitError(
            f"canonical form supports n <= {MAX_CANONICAL_ORDER}, got {g.n}"
        )
    order = _canonical_order(g.n, g.rows)
    perm = [0] * g.n
    for position, v in enumerate(order):
        perm[v] = position
    return g.relabel(tuple(perm))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_form(g) == canonical_form(h)


def _canonical_order(n: int, rows: tuple[int, ...]) -> list[int]:
    """Vertex order minimizing the column-major adjacency bitstring over the
    refinement-consistent search tree."""
    if n == 1:
        return [0]
    degree_keys = sorted(set(r.bit_count() for r in rows))
    rank = {d: i for i, d in enumerate(degree_keys)}
    cells = [[] for _ in degree_keys]
    for v in range(n):
        cells[rank[rows[v].bit_count()]].append(v)
    cells = _refine(n, rows, [c for c in cells if c])

    best: dict[str, object] = {"cols": None, "order": None}

    def column(v: int, order: list[int]) -> int:
        code = 0
        for u in order:
            code = (code << 1) | ((rows[v] >> u) & 1)
        return code

    def descend(cells: list[list[int]], order: list[int], cols: list[int], beats: bool):
        # Consume forced (singleton) cells, pruning against the incumbent.
        idx = 0
        while idx < len(cells) and len(cells[idx]) == 1:
            v = cells[idx][0]
            cols.append(column(v, order))
            order.append(v)
            if not beats and best["cols"] is not None:
                ref = best["cols"][len(cols) - 1]
                if cols[-1] > ref:
                    return
                if cols[-1] < ref:
                    beats = True
            idx += 1
        remaining = cells[idx:]
        if not remaining:
            tup = tuple(cols)
            if best["cols"] is None or tup < best["cols"]:
                best["cols"] = tup
                best["order"] = list(order)
            return
        if _homogeneous(rows, remaining):
            # Any consistent completion yields the same bitstring.
            for cell in remaining:
                for v in cell:
                    cols.append(column(v, order))
                    order.append(v)
                    if not beats and best["cols"] is not None:
                        ref = best["cols"][len(cols) - 1]
                        if cols[-1] > ref:
                            return
                        if cols[-1] < ref:
                            beats = True
            tup = tuple(cols)
            if best["cols"] is None or tup < best["cols"]:
                best["cols"] = tup
                best["order"] = list(order)
            return
        target = remaining[0]
        rest = remaining[1:]
        base_len = len(order)
        for v in target:
            split = [[v], [u for u in target if u != v]] + [list(c) for c in rest]
            refined = _refine(n, rows, [c for c in split if c])
            descend(refined, list(order[:base_len]), list(cols[:base_len]), beats)

    descend(cells, [], [], False)
    return best["order"]


def _refine(n: int, rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Split cells in place by neighbour-colour multisets until equitable."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        color = [0] * n
        for i, cell in enumerate(cells):
            for v in cell:
                color[v] = i
        for i, cell in enumerate(cells):
            if len(cell) == 1:
                continue
            keyed: dict[tuple, list[int]] = {}
            for v in cell:
                mask = rows[v]
                key = []
                while mask:
                    low = mask & -mask
                    key.append(color[low.bit_length() - 1])
                    mask ^= low
                key.sort()
                keyed.setdefault(tuple(key), []).append(v)
            if len(keyed) > 1:
                parts = [keyed[k] for k in sorted(keyed)]
                cells[i:i + 1] = parts
                changed = True
                break
    return cells


def _homogeneous(rows: tuple[int, ...], cells: list[list[int]]) -> bool:
    masks = [_mask(c) for c in cells]
    for cell, mask in zip(cells, masks):
        if len(cell) > 1:
            want = None
            for v in cell:
                d = (rows[v] & mask).bit_count()
                if d not in (0, len(cell) - 1):
                    return False
                if want is None:
                    want = d
                elif d != want:
                    return False
    for i in range(len(cells)):
        for j in range(i + 1, len(cells)):
            size = len(cells[j])
            want = None
            for v in cells[i]:
                d = (rows[v] & masks[j]).bit_count()
                if d not in (0, size):
                    return False
                if want is None:
                    want = d
                elif d != want:
                    return False
    return True


def _mask(cell: list[int]) -> int:
    mask = 0
    for v in cell:
        mask |= 1 << v
    return mask


# -- by-order generation ---------------------------------------------------


@lru_cache(maxsize=None)
def _all_classes(n: int) -> tuple[Graph, ...]:
    """All isomorphism classes on ``n`` vertices, canonically labeled."""
    if n == 1:
        return (Graph.from_rows([0]),)
    seen: dict[str, Graph] = {}
    for parent in _all_classes(n - 1):
        for mask in range(1 << (n - 1)):
            child = parent.add_vertex(mask)
            key = canonical_form(child)
            if key not in seen:
                seen[key] = parse_graph6(key)
    return tuple(seen[key] for key in sorted(seen))


def graphs_by_order(n: int, filter: str = "all", allow_slow: bool = False) -> list[Graph]:
    """One canonically labeled representative per class, sorted by form.

    Orders 9 and 10 are supported behind ``allow_slow`` (the augmentation
    sweep is minutes at n=9 and impractically long at n=10).
    """
    if filter not in _FILTERS:
        raise ValueError(f"unknown filter {filter!r}")
    if n < 1:
        raise EnumerationLimitError("order must be at least 1")
    if n > MAX_GATED_ORDER:
        raise EnumerationLimitError(
            f"builtin by-order generation stops at n = {MAX_GATED_ORDER}; "
            "supply a graph6 stream for larger orders"
        )
    if n > MAX_BUILTIN_ORDER and not allow_slow:
        raise EnumerationLimitError(
            f"n = {n} requires allow_slow=True (runtime grows steeply past "
            f"n = {MAX_BUILTIN_ORDER})"
        )
    predicate = _FILTERS[filter]
    return [g for g in _all_classes(n) if predicate(g)]


# -- by-size generation (minimally 2-connected) -----------------------------

_SWEEP: dict[str, object] = {"max_m": 0, "by_size": {}}


def _min2c_by_size(m_max: int) -> dict[int, list[Graph]]:
    if m_max > int(_SWEEP["max_m"]):
        _SWEEP["by_size"] = _ear_sweep(m_max)
        _SWEEP["max_m"] = m_max
    table: dict[int, list[Graph]] = _SWEEP["by_size"]
    return table


def _ear_sweep(m_max: int) -> dict[int, list[Graph]]:
    """All minimally 2-connected classes with size <= m_max, grouped by size."""
    seen: dict[str, Graph] = {}
    frontier: list[Graph] = []
    for girth in range(3, m_max + 1):
        cycle = Graph.from_edges(girth, [(i, (i + 1) % girth) for i in range(girth)])
        key = canonical_form(cycle)
        rep = parse_graph6(key)
        seen[key] = rep
        frontier.append(rep)
    while frontier:
        g = frontier.pop()
        budget = m_max - g.m
        if budget < 2:
            continue
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if g.adjacent(u, v):
                    continue
                for length in range(2, budget + 1):
                    child = _add_ear(g, u, v, length)
                    if child.n > MAX_CANONICAL_ORDER:
                        continue
                    if not is_minimally_two_connected_by_chords(child):
                        continue
                    key = canonical_form(child)
                    if key not in seen:
                        rep = parse_graph6(key)
                        seen[key] = rep
                        frontier.append(rep)
    table: dict[int, list[Graph]] = {}
    for key in sorted(seen):
        g = seen[key]
        table.setdefault(g.m, []).append(g)
    return table


def _add_ear(g: Graph, u: int, v: int, length: int) -> Graph:
    """Open ear: a u-v path with ``length`` edges through new vertices."""
    edges = list(g.edges())
    inner = list(range(g.n, g.n + length - 1))
    chain = [u] + inner + [v]
    edges.extend(zip(chain, chain[1:]))
    return Graph.from_edges(g.n + length - 1, edges)


def graphs_by_size(m: int) -> list[Graph]:
    """Minimally 2-connected classes of size ``m``, sorted by canonical form.

    The order window follows from the edge bound (m <= 2n - 4 for n >= 4)
    and 2-connectivity (m >= n); the ear sweep covers it in one pass.
    """
    if m < 3:
        raise EnumerationLimitError("no 2-connected graph has fewer than 3 edges")
    if m > MAX_SIZE:
        raise EnumerationLimitError(
            f"builtin by-size generation stops at m = {MAX_SIZE}; "
            "supply a graph6 stream for larger sizes"
        )
    return list(_min2c_by_size(m).get(m, []))


def enumerate_graphs(spec: EnumerationSpec) -> Iterator[Graph]:
    if spec.source != "builtin":
        raise ValueError("stream enumeration goes through ingest_graph6")
    if spec.mode == "by_order":
        yield from graphs_by_order(spec.value, spec.filter, spec.allow_slow)
    else:
        if spec.filter != "minimally_two_connected":
            raise EnumerationLimitError(
                "by-size enumeration is defined for the minimally_two_connected filter"
            )
        yield from graphs_by_size(spec.value)


# -- graph6 stream ingestion -------------------------------------------------


def ingest_graph6(lines: Iterable[str], filter: str = "all") -> Iterator[Graph]:
    """Parse, filter, and de-duplicate a graph6 stream.

    De-duplication uses canonical forms up to the canonical-order cap;
    larger graphs pass through untouched (the generator is trusted).
    Parse errors carry the 1-based line number.
    """
    predicate = _FILTERS[filter]
    seen: set[str] = set()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc.message}", exc.offset) from exc
        if not predicate(g):
            continue
        if g.n <= MAX_CANONICAL_ORDER:
            key = canonical_form(g)
            if key in seen:
                continue
            seen.add(key)
        yield g


__all__ = [
    "EnumerationLimitError",
    "EnumerationSpec",
    "MAX_BUILTIN_ORDER",
    "MAX_CANONICAL_ORDER",
    "MAX_GATED_ORDER",
    "MAX_SIZE",
    "canonical_form",
    "canonical_relabel",
    "enumerate_graphs",
    "graphs_by_order",
    "graphs_by_size",
    "ingest_graph6",
    "is_isomorphic",
]
