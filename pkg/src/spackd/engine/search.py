"""
Exact search for S-packing colorings of a finite window of G(k, t).

A window [0, N) of the integers is colored with L colors by depth-first
search in vertex order. Domains are bitmasks (bit c set = color c still
possible). Assigning a color removes it from every vertex within its
packing radius, and vertices left with one color propagate in turn.

Symmetry: colors with equal s_i are interchangeable, so within each such
run a color may be used only after the previous one has been used. In
particular vertex 0 only tries the first color of each run.

Every tried (vertex, color) pair is one node. When the node count passes
the budget the search reports a timeout, never unsat.

The parallel mode enumerates all prefixes of length split_depth, searches
each subtree in a worker, and merges the counts in prefix order. It
returns exactly what the sequential search returns for any worker count.
"""

import logging
from dataclasses import dataclass, field
from multiprocessing import Pool

from ..graph.distance import ball_offsets
from ..graph.distance_graph import DistanceGraphSpec
from ..ir.schema import LowerBoundCertificate, SearchOutcome, SearchStatus
from ..parser.sequence import PackingSequence, parse_sequence
from ..utils.errors import InvalidArgumentError, SearchError
from .verifier import verify_explicit

logger = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 10**9
DEFAULT_SPLIT_DEPTH = 6


class _BudgetExhausted(Exception):
    pass


@dataclass
class _Frame:
    vertex: int
    candidates: int
    mark: int = 0
    color: int = 0


@dataclass
class _Branch:
    prefix: tuple[int, ...]
    lead: int


@dataclass
class _SplitPlan:
    branches: list[_Branch] = field(default_factory=list)
    trailing: int = 0


class WindowSearch:
    """
    One search over [0, window) with L colors.

    Attributes:
        nodes: Nodes explored so far
    """

    def __init__(
        self,
        seq: PackingSequence,
        spec: DistanceGraphSpec,
        num_colors: int,
        window: int,
        node_budget: int = DEFAULT_NODE_BUDGET,
    ):
        spec.require_connected()
        if num_colors < 1:
            raise InvalidArgumentError(f"num_colors must be >= 1, got {num_colors}")
        if window < 1:
            raise InvalidArgumentError(f"window must be >= 1, got {window}")
        self.seq = seq
        self.spec = spec
        self.num_colors = num_colors
        self.window = window
        self.node_budget = node_budget

        radii = (0,) + seq.radii(num_colors)
        offsets = ball_offsets(spec, max(radii))
        self._conflicts = [()] + [
            tuple(d for d, dist in offsets.items() if dist <= radii[c] and d < window)
            for c in range(1, num_colors + 1)
        ]
        self._class_starts = 0
        for run in seq.color_classes(num_colors):
            self._class_starts |= 1 << run.start
        full = (1 << (num_colors + 1)) - 2

        self.domains = [full] * window
        self.assigned = [0] * window
        self.used = [0] * (num_colors + 2)
        self.trail: list[tuple[int, int]] = []
        self.nodes = 0

    # -- state ---------------------------------------------------------------

    def _assign(self, vertex: int, color: int) -> bool:
        """Assign and propagate; False on a wipe-out (state must then be undone)."""
        self.trail.append((vertex, self.domains[vertex]))
        self.domains[vertex] = 1 << color
        self.assigned[vertex] = color
        self.used[color] += 1

        window = self.window
        queue = [vertex]
        while queue:
            u = queue.pop()
            c = self.assigned[u] or self.domains[u].bit_length() - 1
            bit = 1 << c
            for d in self._conflicts[c]:
                for w in (u - d, u + d):
                    if w < 0 or w >= window or self.assigned[w]:
                        continue
                    mask = self.domains[w]
                    if not mask & bit:
                        continue
                    self.trail.append((w, mask))
                    mask &= ~bit
                    self.domains[w] = mask
                    if not mask:
                        return False
                    if not mask & (mask - 1):
                        queue.append(w)
        return True

    def _unassign(self, frame: _Frame) -> None:
        while len(self.trail) > frame.mark:
            w, mask = self.trail.pop()
            self.domains[w] = mask
        self.assigned[frame.vertex] = 0
        self.used[frame.color] -= 1
        frame.color = 0

    def _frame(self, vertex: int) -> _Frame:
        allowed = self._class_starts
        for c in range(2, self.num_colors + 1):
            if self.used[c - 1]:
                allowed |= 1 << c
        return _Frame(vertex, self.domains[vertex] & allowed)

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise _BudgetExhausted

    def replay(self, prefix: tuple[int, ...]) -> bool:
        """Re-apply a prefix assignment without counting nodes."""
        for vertex, color in enumerate(prefix):
            if not self._assign(vertex, color):
                return False
        return True

    def witness(self) -> dict[int, int]:
        return dict(enumerate(self.assigned))

    # -- search --------------------------------------------------------------

    def run(self, start: int = 0, stop: int | None = None, on_leaf=None) -> SearchStatus:
        """
        Depth-first search from vertex `start`.

        With `stop`, the search does not descend past vertex stop-1: each
        consistent assignment of [0, stop) is reported to on_leaf and the
        search continues. Raises _BudgetExhausted past the budget.
        """
        if start >= self.window:
            return SearchStatus.SAT
        stack = [self._frame(start)]
        while stack:
            frame = stack[-1]
            if frame.color:
                self._unassign(frame)
            if not frame.candidates:
                stack.pop()
                continue
            low = frame.candidates & -frame.candidates
            frame.candidates ^= low
            self._tick()
            frame.mark = len(self.trail)
            frame.color = low.bit_length() - 1
            if not self._assign(frame.vertex, frame.color):
                continue
            following = frame.vertex + 1
            if following == self.window:
                return SearchStatus.SAT
            if stop is not None and following == stop:
                on_leaf()
                continue
            stack.append(self._frame(following))
        return SearchStatus.UNSAT

    def split(self, depth: int) -> _SplitPlan:
        """All consistent prefixes of length depth, with node counts between them."""
        plan = _SplitPlan()
        counted = 0

        def record() -> None:
            nonlocal counted
            plan.branches.append(_Branch(tuple(self.assigned[:depth]), self.nodes - counted))
            counted = self.nodes

        self.run(0, stop=depth, on_leaf=record)
        plan.trailing = self.nodes - counted
        return plan


def _solve_branch(task: tuple) -> tuple[SearchStatus, int, dict[int, int] | None]:
    """Worker entry point: search the subtree below one prefix."""
    seq_text, k, t, num_colors, window, budget, prefix = task
    seq, spec = parse_sequence(seq_text), DistanceGraphSpec(k, t)
    search = WindowSearch(seq, spec, num_colors, window, budget)
    if not search.replay(prefix):
        return SearchStatus.UNSAT, 0, None
    try:
        status = search.run(start=len(prefix))
    except _BudgetExhausted:
        return SearchStatus.TIMEOUT, search.nodes, None
    witness = search.witness() if status is SearchStatus.SAT else None
    return status, search.nodes, witness


def _sequential(seq, spec, num_colors, window, node_budget) -> SearchOutcome:
    search = WindowSearch(seq, spec, num_colors, window, node_budget)
    try:
        status = search.run()
    except _BudgetExhausted:
        return SearchOutcome(SearchStatus.TIMEOUT, window, node_budget)
    witness = search.witness() if status is SearchStatus.SAT else None
    return SearchOutcome(status, window, search.nodes, witness)


def _parallel(seq, spec, num_colors, window, node_budget, workers, split_depth) -> SearchOutcome:
    planner = WindowSearch(seq, spec, num_colors, window, node_budget)
    try:
        plan = planner.split(split_depth)
    except _BudgetExhausted:
        # The sequential search may stop before the full prefix tree is counted
        return _sequential(seq, spec, num_colors, window, node_budget)

    timeout = SearchOutcome(SearchStatus.TIMEOUT, window, node_budget)
    tasks = [
        (seq.format(), spec.k, spec.t, num_colors, window, node_budget, branch.prefix)
        for branch in plan.branches
    ]
    logger.info("Split search into %d subtrees over %d workers", len(tasks), workers)

    total = 0
    with Pool(processes=workers) as pool:
        for branch, (status, nodes, witness) in zip(plan.branches, pool.imap(_solve_branch, tasks)):
            total += branch.lead
            if total > node_budget:
                return timeout
            total += nodes
            if status is SearchStatus.TIMEOUT or total > node_budget:
                return timeout
            if status is SearchStatus.SAT:
                return SearchOutcome(SearchStatus.SAT, window, total, witness)
    total += plan.trailing
    if total > node_budget:
        return timeout
    return SearchOutcome(SearchStatus.UNSAT, window, total)


def search_window(
    seq: PackingSequence,
    spec: DistanceGraphSpec,
    num_colors: int,
    window: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    workers: int = 1,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
) -> SearchOutcome:
    """
    Decide whether [0, window) has an S-packing L-coloring.

    A sat witness is re-checked with verify_explicit before it is returned.

    Raises:
        NotConnectedError: gcd(k, t) != 1
        SearchError: A witness failed explicit verification
    """
    if workers > 1 and split_depth < window:
        outcome = _parallel(seq, spec, num_colors, window, node_budget, workers, split_depth)
    else:
        outcome = _sequential(seq, spec, num_colors, window, node_budget)

    logger.info(
        "search %s %s L=%d N=%d: %s after %d nodes",
        seq, spec, num_colors, window, outcome.status.value, outcome.nodes_explored,
    )
    if outcome.status is SearchStatus.SAT:
        report = verify_explicit(outcome.witness, spec, seq)
        if not report.is_valid:
            raise SearchError(
                f"search witness fails verification: {report.to_json()}", outcome.witness
            )
    return outcome


def certify_lower_bound(
    seq: PackingSequence,
    spec: DistanceGraphSpec,
    target: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    start_factor: int = 2,
    max_factor: int = 16,
    workers: int = 1,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
) -> LowerBoundCertificate:
    """
    Try to prove chi_S(G(k, t)) >= target.

    Searches for (target - 1)-colorings of windows of size f * (k + t) for
    f = start_factor, doubled up to max_factor. The first unsat window
    certifies the bound; the budget is shared across windows.
    """
    if target < 2:
        raise InvalidArgumentError(f"target must be >= 2, got {target}")
    certificate = LowerBoundCertificate(status="inconclusive", target=target)
    remaining = node_budget
    factor = start_factor
    while factor <= max_factor and remaining > 0:
        window = factor * (spec.k + spec.t)
        outcome = search_window(seq, spec, target - 1, window, remaining, workers, split_depth)
        certificate.windows_tried.append(window)
        certificate.nodes += outcome.nodes_explored
        remaining -= outcome.nodes_explored
        if outcome.status is SearchStatus.UNSAT:
            certificate.status = "certified"
            certificate.window = window
            return certificate
        if outcome.status is SearchStatus.TIMEOUT:
            break
        factor *= 2
    return certificate
