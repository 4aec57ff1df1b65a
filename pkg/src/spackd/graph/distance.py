"""
Distances in G(k, t).

exact_distance solves min |a| + |b| subject to a*k + b*t = delta over the
residue class of a modulo t. bfs_distance is an independent oracle that
walks a finite window of Z with networkx.
"""

import networkx as nx

from .distance_graph import DistanceGraphSpec, GridPoint, checked


def exact_distance(a: int, b: int, spec: DistanceGraphSpec) -> int:
    """
    Graph distance between integers a and b in a connected G(k, t).

    Walks are pairs (alpha, beta) with alpha*k + beta*t = delta, costing
    |alpha| + |beta|, and alpha runs over the class delta * k^-1 (mod t).
    Along that class the cost |alpha| + |delta - alpha*k| / t is convex with
    its real minimum at alpha = 0 (k < t), so the optimum is one of the two
    class members bracketing 0.
    """
    delta = checked(b - a)
    if delta == 0:
        return 0
    k, t = spec.k, spec.t
    alpha0 = (delta * spec.k_inverse) % t
    return min(abs(alpha) + abs((delta - alpha * k) // t) for alpha in (alpha0, alpha0 - t))


def bfs_distance(a: int, b: int, spec: DistanceGraphSpec) -> int:
    """
    Graph distance by breadth-first search on a finite window of Z.

    A shortest walk can be ordered so that it never leaves
    [min(a, b) - t, max(a, b) + t]; the window adds one more t on each side.
    """
    spec.require_connected()
    lo = min(a, b) - 2 * spec.t
    hi = max(a, b) + 2 * spec.t
    graph = nx.Graph()
    graph.add_nodes_from(range(lo, hi + 1))
    for jump in (spec.k, spec.t):
        graph.add_edges_from((n, n + jump) for n in range(lo, hi - jump + 1))
    return nx.shortest_path_length(graph, a, b)


def grid_distance(p: GridPoint, q: GridPoint, spec: DistanceGraphSpec) -> int:
    """
    Distance between canonical grid points through the direct or wrapped strip.

    Minimum of the direct L1 distance and the two wrap terms (through the
    seam in either direction). Never below exact_distance; equal to it when
    the result is at most 2 and t >= 3.
    """
    p = p.canonical(spec)
    q = q.canonical(spec)
    x, y = p.i, p.j
    u, v = q.i, q.j
    t, k = spec.t, spec.k
    return min(
        abs(x - u) + abs(y - v),
        x + (t - u) + abs((y - k) - v),
        u + (t - x) + abs((v - k) - y),
    )


def ball_offsets(spec: DistanceGraphSpec, radius: int) -> dict[int, int]:
    """
    Positive offsets within graph distance `radius` of 0.

    Returns:
        Mapping offset -> exact distance, sorted by offset.
    """
    spec.require_connected()
    found = set()
    for alpha in range(-radius, radius + 1):
        rest = radius - abs(alpha)
        for beta in range(-rest, rest + 1):
            delta = alpha * spec.k + beta * spec.t
            if delta > 0:
                found.add(delta)
    return {delta: exact_distance(0, delta, spec) for delta in sorted(found)}
