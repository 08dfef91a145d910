"""A_alpha matrices, the alpha-index, Perron vectors, bounds, and certificates.

The matrix of interest is alpha*D + (1-alpha)*A.  For a connected graph it
is irreducible and nonnegative, so its largest eigenvalue is the Perron
root with a unique positive eigenvector.  The primary solver is power
iteration on A_alpha + I (the shift makes the iteration matrix primitive
even at alpha = 0 on bipartite graphs, whose adjacency is periodic);
Rayleigh quotients and residuals are taken on A_alpha itself.  A cyclic
Jacobi full-spectrum solver of a different algorithm class serves as the
test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .connectivity import is_connected
from .graphs import Graph, GraphError, iter_bits

POWER_TOL = 1e-12
POWER_MAX_ITERATIONS = 10**6
JACOBI_OFFDIAG_NORM = 1e-13
COLUMN_SUM_CROSS_TOL = 1e-9


class SpectralError(RuntimeError):
    pass


class DisconnectedGraphError(ValueError):
    """Perron guarantees need a connected graph; split into components first."""


class ConvergenceError(SpectralError):
    """Power iteration hit its cap; carries the last residual for diagnosis."""

    def __init__(self, residual: float, iterations: int):
        super().__init__(
            f"power iteration stalled at residual {residual:.3e} "
            f"after {iterations} iterations"
        )
        self.residual = residual
        self.iterations = iterations


@dataclass(frozen=True, eq=False)
class AlphaMatrix:
    alpha: float
    entries: np.ndarray


@dataclass(frozen=True, eq=False)
class SpectralResult:
    alpha: float
    rho: float
    perron: np.ndarray  # positive, unit sum
    residual: float
    iterations: int


def alpha_matrix(g: Graph, alpha: float) -> AlphaMatrix:
    """alpha*D + (1-alpha)*A; row sums equal the degrees."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    n = g.n
    entries = np.zeros((n, n))
    for v in range(n):
        entries[v, v] = alpha * g.degree(v)
        for u in iter_bits(g.rows[v]):
            entries[v, u] = 1.0 - alpha
    return AlphaMatrix(alpha, entries)


def alpha_index(
    g: Graph,
    alpha: float,
    tol: float = POWER_TOL,
    max_iterations: int = POWER_MAX_ITERATIONS,
) -> SpectralResult:
    """Largest eigenvalue of A_alpha with its unit-sum Perron vector.

    Relative residual tolerance ``tol`` is measured as
    max|A_alpha x - rho x| <= tol * max(rho, 1).
    """
    if not 0.0 <= alpha < 1.0:
        raise ValueError(f"alpha must lie in [0, 1) for the Perron pair, got {alpha}")
    if not is_connected(g):
        raise DisconnectedGraphError("alpha_index needs a connected graph")
    a = alpha_matrix(g, alpha).entries
    x = np.full(g.n, 1.0 / g.n)
    rho = 0.0
    residual = float("inf")
    stall_reference = float("inf")
    for iteration in range(1, max_iterations + 1):
        ax = a @ x
        rho = float(x @ ax) / float(x @ x)
        residual = float(np.max(np.abs(ax - rho * x)))
        if residual <= tol * max(rho, 1.0):
            perron = x / x.sum()
            if g.n > 1 and perron.min() <= 0.0:
                raise SpectralError("Perron vector lost positivity")
            return SpectralResult(alpha, rho, perron, residual, iteration)
        if iteration % 50 == 0:
            # Contraction is gap-limited; near-degenerate second eigenvalues
            # (clustered degrees as alpha -> 1) stall the plain iteration.
            if iteration >= 200 and residual > 0.25 * stall_reference:
                refined = _shifted_inverse_refine(a, x, rho, residual, tol)
                if refined is not None:
                    rho_r, perron, residual_r, solves = refined
                    return SpectralResult(alpha, rho_r, perron, residual_r, iteration + solves)
            stall_reference = residual
        y = ax + x  # (A_alpha + I) x, primitive for every alpha in [0, 1)
        x = y / y.sum()
    raise ConvergenceError(residual, max_iterations)


def _shifted_inverse_refine(
    a: np.ndarray, x0: np.ndarray, rho0: float, res0: float, tol: float
):
    """Rayleigh-shift inverse iteration from a stalled power iterate.

    Accepts only a vector that passes the same residual test and is
    positive after orientation; an eigenvector of any non-Perron
    eigenvalue has O(1) negative mass, so a second-eigenvalue landing is
    rejected and retried with an upward-biased starting shift.
    """
    n = a.shape[0]
    eye = np.eye(n)
    for bias in (0.0, 1.0, 4.0, 16.0, 64.0):
        sigma = rho0 + bias * res0
        z = x0 / np.linalg.norm(x0)
        rho = rho0
        residual = res0
        solves = 0
        for _ in range(60):
            try:
                w = np.linalg.solve(a - sigma * eye, z)
            except np.linalg.LinAlgError:
                sigma += max(1e-13, 1e-12 * abs(sigma))
                continue
            solves += 1
            z = w / np.linalg.norm(w)
            az = a @ z
            rho = float(z @ az)
            residual = float(np.max(np.abs(az - rho * z)))
            if residual <= tol * max(rho, 1.0):
                break
            sigma = rho
        if residual > tol * max(rho, 1.0):
            continue
        if z.sum() < 0:
            z = -z
        if rho < rho0 - 10.0 * res0 or z.min() <= -1e-12 * z.max():
            continue
        if z.min() <= 0.0:
            # Tiny entries rounded nonpositive: a few primitive-matrix
            # applications restore strict positivity without leaving the
            # converged eigenspace beyond tolerance.
            for _ in range(n):
                z = a @ z + z
                z /= np.linalg.norm(z)
            az = a @ z
            rho = float(z @ az)
            residual = float(np.max(np.abs(az - rho * z)))
            if residual > tol * max(rho, 1.0) or z.min() <= 0.0:
                continue
        return rho, z / z.sum(), residual, solves
    return None


def lambda_max(g: Graph, alpha: float) -> float:
    """Largest A_alpha eigenvalue of a possibly disconnected graph."""
    best = 0.0
    for comp in components(g):
        rho = alpha_index(induced_subgraph(g, comp), alpha).rho
        if rho > best:
            best = rho
    return best


def components(g: Graph) -> list[list[int]]:
    out: list[list[int]] = []
    unseen = (1 << g.n) - 1
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            reach = seen
            for v in iter_bits(frontier):
                reach |= g.rows[v]
            frontier = reach & ~seen
            seen = reach
        out.append(list(iter_bits(seen)))
        unseen &= ~seen
    return out


def induced_subgraph(g: Graph, vertices: list[int]) -> Graph:
    index = {v: i for i, v in enumerate(vertices)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges()
        if u in index and v in index
    ]
    return Graph.from_edges(len(vertices), edges)


def jacobi_eigenvalues(matrix: np.ndarray, tol: float = JACOBI_OFFDIAG_NORM) -> np.ndarray:
    """All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps until the off-diagonal Frobenius norm drops below ``tol``.
    Used as an independent oracle against power iteration.
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if n == 1:
        return a[0, :1].copy()
    for _ in range(100):
        offdiag = a - np.diag(np.diag(a))
        off = float(np.sqrt(np.sum(offdiag**2)))
        if off <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 0.1 * tol / (n * n):
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.hypot(1.0, tau))
                else:
                    t = -1.0 / (-tau + np.hypot(1.0, tau))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                rot = np.array([[c, s], [-s, c]])
                a[[p, q], :] = rot.T @ a[[p, q], :]
                a[:, [p, q]] = a[:, [p, q]] @ rot
    else:
        raise SpectralError("Jacobi sweep limit reached before convergence")
    return np.sort(np.diag(a))


def closed_form_complete_bipartite(a: int, b: int, alpha: float) -> float:
    """Largest A_alpha eigenvalue of K_{a,b} in closed form."""
    if not (a >= b >= 1):
        raise ValueError("complete bipartite closed form needs a >= b >= 1")
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    s = a + b
    return 0.5 * (alpha * s + np.sqrt((alpha * s) ** 2 + 4 * a * b * (1 - 2 * alpha)))


def upper_bound_degree_average(g: Graph, alpha: float) -> float:
    """max_u of alpha*d(u) + (1-alpha)/d(u) * sum of neighbour degrees."""
    degs = g.degrees()
    if min(degs) == 0:
        raise GraphError("degree-average bound needs no isolated vertices")
    best = -np.inf
    for u in range(g.n):
        s = sum(degs[v] for v in iter_bits(g.rows[u]))
        value = alpha * degs[u] + (1.0 - alpha) * s / degs[u]
        if value > best:
            best = value
    return float(best)


def lower_bound_max_degree(g: Graph, alpha: float) -> float:
    """alpha*(Delta+1) below alpha=1/2, alpha*Delta + (1-alpha)^2/alpha above."""
    if not 0.0 <= alpha < 1.0:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    delta = max(g.degrees())
    if alpha < 0.5:
        return alpha * (delta + 1)
    return alpha * delta + (1.0 - alpha) ** 2 / alpha


@dataclass(frozen=True)
class CertificateColumnSums:
    variant: str  # "order" | "size"
    alpha: float
    parameter: int  # n for the order variant, m for the size variant
    column_sums: tuple[float, ...]


def column_sum_certificate(g: Graph, alpha: float, variant: str) -> CertificateColumnSums:
    """Column sums of the proof matrix B, by closed expansion.

    order: B = A_alpha^2 - alpha*n*A_alpha + 2(2alpha-1)(n-2) I
    size:  B = 2 A_alpha^2 - (m+4)*alpha*A_alpha + 2(2alpha-1)*m I

    Since column sums of A_alpha are the degrees and c_u(A_alpha^2) =
    alpha*d(u)^2 + (1-alpha) * sum_{uv in E} d(v), the order variant
    collapses to

        c_u = alpha*d(u)^2 + (1-alpha)*S(u) - alpha*n*d(u) + 2(2alpha-1)(n-2)

    and the size variant to its doubled analogue with -(m+4)*alpha*d(u)
    + 2(2alpha-1)*m.  The expansion is cross-checked against the literal
    matrix column sums; on K_{2,n-2} every c_u vanishes identically,
    which is the equality case of the order claim.
    """
    if variant not in ("order", "size"):
        raise ValueError(f"unknown certificate variant {variant!r}")
    degs = g.degrees()
    n, m = g.n, g.m
    sums = []
    for u in range(n):
        s = sum(degs[v] for v in iter_bits(g.rows[u]))
        if variant == "order":
            c = (
                alpha * degs[u] ** 2
                + (1.0 - alpha) * s
                - alpha * n * degs[u]
                + 2.0 * (2.0 * alpha - 1.0) * (n - 2)
            )
        else:
            c = (
                2.0 * alpha * degs[u] ** 2
                + 2.0 * (1.0 - alpha) * s
                - (m + 4) * alpha * degs[u]
                + 2.0 * (2.0 * alpha - 1.0) * m
            )
        sums.append(c)
    a = alpha_matrix(g, alpha).entries
    if variant == "order":
        b = a @ a - alpha * n * a + 2.0 * (2.0 * alpha - 1.0) * (n - 2) * np.eye(n)
        parameter = n
    else:
        b = 2.0 * (a @ a) - (m + 4) * alpha * a + 2.0 * (2.0 * alpha - 1.0) * m * np.eye(n)
        parameter = m
    literal = b.sum(axis=0)
    if np.max(np.abs(literal - np.array(sums))) > COLUMN_SUM_CROSS_TOL:
        raise SpectralError("column-sum expansion disagrees with the literal matrix")
    return CertificateColumnSums(variant, alpha, parameter, tuple(sums))


def perron_symmetry_check(g: Graph, orbits, alpha: float, tol: float = 1e-9) -> bool:
    """Whether Perron coordinates agree within each orbit block."""
    perron = alpha_index(g, alpha).perron
    for block in orbits.blocks:
        values = [perron[v] for v in block]
        if max(values) - min(values) > tol:
            return False
    return True
