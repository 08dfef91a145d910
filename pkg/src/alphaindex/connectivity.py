"""Connectivity predicates and the structure of minimally 2-connected graphs.

Two independent recognizers are provided on purpose.  The deletion-based
one is the definition (2-connected, and removing any edge breaks that);
the chord-based one rests on the classical equivalence with "no cycle has
a chord".  Their agreement on every small graph is a standing cross-check
exercised by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, iter_bits


class LemmaViolationError(RuntimeError):
    """A structural implication that must hold was observed to fail.

    This signals an implementation bug, never bad input: the implications
    asserted by :func:`structural_report` are theorems about minimally
    2-connected graphs.
    """


@dataclass(frozen=True)
class StructuralReport:
    is_connected: bool
    is_two_connected: bool
    is_minimally_two_connected: bool
    min_degree_is_two: bool
    triangle_free: bool
    edge_bound_slack: int  # 2n - 4 - m
    has_chorded_cycle: bool


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        reach = seen
        for v in iter_bits(frontier):
            reach |= g.rows[v]
        frontier = reach & ~seen
        seen = reach
    return seen == (1 << g.n) - 1


def articulation_points(g: Graph) -> set[int]:
    """Cut vertices via an iterative depth-first low-link sweep."""
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    cuts: set[int] = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        root_children = 0
        stack = [(root, iter(list(iter_bits(g.rows[root]))))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    parent[u] = v
                    if v == root:
                        root_children += 1
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, iter(list(iter_bits(g.rows[u])))))
                    advanced = True
                    break
                elif u != parent[v]:
                    if disc[u] < low[v]:
                        low[v] = disc[u]
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if p != root and low[v] >= disc[p]:
                        cuts.add(p)
        if root_children > 1:
            cuts.add(root)
    return cuts


def is_two_connected(g: Graph) -> bool:
    if g.n < 3:
        return False
    if not is_connected(g):
        return False
    return not articulation_points(g)


def is_minimally_two_connected_by_deletion(g: Graph) -> bool:
    if not is_two_connected(g):
        return False
    for u, v in g.edges():
        if is_two_connected(g.remove_edge(u, v)):
            return False
    return True


def has_chorded_cycle(g: Graph) -> bool:
    """Whether some cycle of ``g`` has a chord.

    An edge uv is a chord of some cycle exactly when g - uv still carries
    two internally disjoint u-v paths (the cycle through u and v that
    avoids the edge).  With the edge removed, both paths have length >= 2
    automatically, so the test reduces to u and v sharing a biconnected
    block of g - uv.
    """
    for u, v in g.edges():
        if _share_block(g.remove_edge(u, v), u, v):
            return True
    return False


def is_minimally_two_connected_by_chords(g: Graph) -> bool:
    if not is_two_connected(g):
        return False
    return not has_chorded_cycle(g)


def triangle_free(g: Graph) -> bool:
    for u, v in g.edges():
        if g.rows[u] & g.rows[v]:
            return False
    return True


def structural_report(g: Graph) -> StructuralReport:
    min2c = is_minimally_two_connected_by_deletion(g)
    report = StructuralReport(
        is_connected=is_connected(g),
        is_two_connected=is_two_connected(g),
        is_minimally_two_connected=min2c,
        min_degree_is_two=min(g.degrees()) == 2,
        triangle_free=triangle_free(g),
        edge_bound_slack=2 * g.n - 4 - g.m,
        has_chorded_cycle=has_chorded_cycle(g),
    )
    if report.is_minimally_two_connected and g.n >= 4:
        if not report.min_degree_is_two:
            raise LemmaViolationError("minimally 2-connected graph with min degree != 2")
        if not report.triangle_free:
            raise LemmaViolationError("minimally 2-connected graph with a triangle")
        if report.edge_bound_slack < 0:
            raise LemmaViolationError("minimally 2-connected graph with more than 2n-4 edges")
        if report.has_chorded_cycle:
            raise LemmaViolationError("minimally 2-connected graph with a chorded cycle")
    if report.is_minimally_two_connected and not report.is_two_connected:
        raise LemmaViolationError("minimal 2-connectivity without 2-connectivity")
    return report


def _share_block(g: Graph, s: int, t: int) -> bool:
    """True when ``s`` and ``t`` lie on a common cycle of ``g``.

    Tarjan block decomposition with an edge stack; returns as soon as one
    biconnected block contains both endpoints.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    edge_stack: list[tuple[int, int]] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, iter(list(iter_bits(g.rows[root]))))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    parent[u] = v
                    disc[u] = low[u] = timer
                    timer += 1
                    edge_stack.append((v, u))
                    stack.append((u, iter(list(iter_bits(g.rows[u])))))
                    advanced = True
                    break
                elif u != parent[v] and disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    if disc[u] < low[v]:
                        low[v] = disc[u]
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] >= disc[p]:
                        members = 0
                        while edge_stack:
                            a, b = edge_stack.pop()
                            members |= (1 << a) | (1 << b)
                            if (a, b) == (p, v):
                                break
                        if (members >> s) & 1 and (members >> t) & 1:
                            return True
    return False
