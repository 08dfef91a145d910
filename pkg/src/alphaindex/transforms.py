"""Neighbour rotation: move a set of edges at v over to u.

Given N inside N(v) with N disjoint from N(u) and u itself, the rotation
replaces each edge vw (w in N) by uw.  Size is preserved edge-for-edge.
When the Perron coordinate of u is at least that of v, the spectral
radius strictly increases; the monotonicity check measures exactly that
and is exercised as a property over seeded corpora.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError
from .spectral import alpha_index, lambda_max

PRECONDITION_TOL = 1e-12


class RotationError(GraphError):
    """Rotation invariants violated against the given graph."""


@dataclass(frozen=True)
class Rotation:
    u: int
    v: int
    moved: frozenset[int]


@dataclass(frozen=True)
class RotationCheck:
    increase: float
    perron_precondition: bool


def rotate(g: Graph, r: Rotation) -> Graph:
    """Apply the rotation, validating its invariants against ``g``."""
    if r.u == r.v:
        raise RotationError("rotation endpoints must differ")
    if not (0 <= r.u < g.n and 0 <= r.v < g.n):
        raise RotationError("rotation endpoints outside the vertex range")
    if not r.moved:
        raise RotationError("moved set must be nonempty")
    for w in r.moved:
        if not (0 <= w < g.n):
            raise RotationError(f"moved vertex {w} outside the vertex range")
        if w == r.u:
            raise RotationError("moved set may not contain u")
        if not g.adjacent(r.v, w):
            raise RotationError(f"moved vertex {w} is not a neighbour of v")
        if g.adjacent(r.u, w):
            raise RotationError(f"moved vertex {w} is already a neighbour of u")
    out = g
    for w in sorted(r.moved):
        out = out.remove_edge(r.v, w).add_edge(r.u, w)
    return out


def valid_moved_candidates(g: Graph, u: int, v: int) -> list[int]:
    """N(v) minus N(u) and u: the vertices a rotation at (u, v) may move."""
    mask = g.rows[v] & ~g.rows[u] & ~(1 << u)
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def rotation_monotonicity_check(g: Graph, r: Rotation, alpha: float) -> RotationCheck:
    """Perron precondition (x_u >= x_v up to 1e-12) and the rho change.

    The rotated graph may be disconnected, so its spectral radius is taken
    over components.
    """
    result = alpha_index(g, alpha)
    precondition = result.perron[r.u] >= result.perron[r.v] - PRECONDITION_TOL
    rotated = rotate(g, r)
    increase = lambda_max(rotated, alpha) - result.rho
    return RotationCheck(increase=increase, perron_precondition=bool(precondition))
