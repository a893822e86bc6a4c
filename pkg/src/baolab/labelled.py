"""Complete edge-labelled graphs over a base graph, the admissibility class,
and a deterministic greedy saturation loop that realizes one-node extension
tasks.

Labels are pairs (first, colour): first is a base-graph vertex or the extra
marker RHO, colour is below the colour count.  A complete labelled graph is
admissible when every node triple satisfies one of four rules: at least two
distinct colours; three base vertices spanning at least one base edge; exactly
one marker with the other two vertices adjacent; or two or more markers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PreconditionError
from .graphs import Graph

RHO = -1

Label = tuple[int, int]


def label_order(lab: Label) -> tuple[int, int, int]:
    # base-vertex labels first, marker labels last
    first, colour = lab
    if first == RHO:
        return (1, 0, colour)
    return (0, first, colour)


def label_pool(base: Graph, colors: int) -> list[Label]:
    pool = [(v, c) for v in range(base.vertex_count) for c in range(colors)]
    pool += [(RHO, c) for c in range(colors)]
    pool.sort(key=label_order)
    return pool


def admissible_triple(base: Graph, la: Label, lb: Label, lc: Label) -> bool:
    (a, i), (b, j), (c, l) = la, lb, lc
    if len({i, j, l}) > 1:
        return True
    firsts = (a, b, c)
    markers = sum(1 for f in firsts if f == RHO)
    if markers >= 2:
        return True
    if markers == 1:
        other = [f for f in firsts if f != RHO]
        return other[0] != other[1] and base.adjacent(other[0], other[1])
    vs = set(firsts)
    return any(base.adjacent(p, q) for p in vs for q in vs if p < q)


@dataclass(frozen=True)
class LabelledGraph:
    """Completely labelled graph; immutable, extended by copying."""
    base: Graph
    colors: int
    node_count: int
    labels: tuple[tuple[int, int, int, int], ...]  # (i, j, first, colour), i<j

    def __post_init__(self) -> None:
        seen = set()
        for (i, j, first, colour) in self.labels:
            if not (0 <= i < j < self.node_count):
                raise PreconditionError(f"bad edge ({i},{j})")
            if (i, j) in seen:
                raise PreconditionError(f"duplicate label for ({i},{j})")
            if not (0 <= colour < self.colors):
                raise PreconditionError(f"colour {colour} out of range")
            if first != RHO and not (0 <= first < self.base.vertex_count):
                raise PreconditionError(f"label vertex {first} out of range")
            seen.add((i, j))
        expected = self.node_count * (self.node_count - 1) // 2
        if len(seen) != expected:
            raise PreconditionError("labelling not complete")

    @staticmethod
    def empty(base: Graph, colors: int) -> LabelledGraph:
        return LabelledGraph(base, colors, 0, ())

    @staticmethod
    def from_label_map(base: Graph, colors: int, node_count: int,
                       labs: dict[tuple[int, int], Label]) -> LabelledGraph:
        rows = tuple(sorted((i, j, f, c) for (i, j), (f, c) in labs.items()))
        return LabelledGraph(base, colors, node_count, rows)

    def label_map(self) -> dict[tuple[int, int], Label]:
        return {(i, j): (f, c) for (i, j, f, c) in self.labels}

    def label(self, x: int, y: int) -> Label:
        if x == y:
            raise PreconditionError("no label on a self pair")
        i, j = min(x, y), max(x, y)
        for (a, b, f, c) in self.labels:
            if a == i and b == j:
                return (f, c)
        raise PreconditionError(f"pair ({i},{j}) unlabelled")

    def with_node(self, new_labels: dict[int, Label]) -> LabelledGraph:
        """Add one node labelled against every existing node."""
        if set(new_labels) != set(range(self.node_count)):
            raise PreconditionError("new node must be labelled to all nodes")
        labs = self.label_map()
        w = self.node_count
        for u, lab in new_labels.items():
            labs[(u, w)] = lab
        return LabelledGraph.from_label_map(self.base, self.colors, w + 1, labs)


def gg_membership(graph: LabelledGraph) -> tuple[bool, dict | None]:
    """Admissibility of a complete labelled graph; a violating triple is
    returned on failure."""
    labs = graph.label_map()
    n = graph.node_count
    for x in range(n):
        for y in range(x + 1, n):
            for z in range(y + 1, n):
                la = labs[(x, y)]
                lb = labs[(y, z)]
                lc = labs[(x, z)]
                if not admissible_triple(graph.base, la, lb, lc):
                    return False, {"nodes": [x, y, z],
                                   "labels": [la, lb, lc]}
    return True, None


@dataclass(frozen=True)
class ExtensionTask:
    """Demand: some node carrying these labels toward the anchor nodes."""
    anchor: tuple[int, ...]
    wanted: tuple[Label, ...]


@dataclass
class SaturationResult:
    graph: LabelledGraph
    processed: list[ExtensionTask]
    realizations: list[int]
    unrealized: list[ExtensionTask] = field(default_factory=list)
    tasks_spent: int = 0

    @property
    def ok(self) -> bool:
        return not self.unrealized


def _anchor_extension_admissible(graph: LabelledGraph, anchor: tuple[int, ...],
                                 wanted: tuple[Label, ...]) -> bool:
    labs = graph.label_map()
    for p in range(len(anchor)):
        for q in range(p + 1, len(anchor)):
            u, v = anchor[p], anchor[q]
            la = labs[(min(u, v), max(u, v))]
            if not admissible_triple(graph.base, la, wanted[q], wanted[p]):
                return False
    return True


def task_realized_by(graph: LabelledGraph, task: ExtensionTask) -> int | None:
    """Least node carrying the wanted labels toward the anchor, if any."""
    for w in range(graph.node_count):
        if w in task.anchor:
            continue
        if all(graph.label(u, w) == lab
               for u, lab in zip(task.anchor, task.wanted)):
            return w
    return None


def _fill_in_labels(graph: LabelledGraph, anchor: tuple[int, ...],
                    wanted: tuple[Label, ...]) -> dict[int, Label] | None:
    """Labels for the fresh node: prescribed on the anchor, greedy lex-least
    elsewhere, keeping every new triple admissible.

    When the greedy pass deadlocks it falls back to an all-marker fill,
    which succeeds whenever fewer anchors than colours constrain a node:
    marker-vs-marker pairs are always admissible, so only the anchor edges
    exclude colours, at most one each."""
    new_labels: dict[int, Label] = dict(zip(anchor, wanted))
    pool = label_pool(graph.base, graph.colors)
    labs = graph.label_map()
    for u in range(graph.node_count):
        if u in new_labels:
            continue
        chosen = None
        for cand in pool:
            ok = True
            for v, lv in new_labels.items():
                la = labs[(min(u, v), max(u, v))]
                if not admissible_triple(graph.base, la, lv, cand):
                    ok = False
                    break
            if ok:
                chosen = cand
                break
        if chosen is None:
            return _marker_fill(graph, anchor, wanted)
        new_labels[u] = chosen
    return new_labels


def _marker_fill(graph: LabelledGraph, anchor: tuple[int, ...],
                 wanted: tuple[Label, ...]) -> dict[int, Label] | None:
    """Every non-anchor edge of the fresh node gets a marker label.

    A colour clash with an anchor only arises when both the existing edge
    label and the prescribed label are base labels of one colour (two
    markers are admissible outright), so each anchor excludes at most one
    colour for the node."""
    labs = graph.label_map()
    new_labels: dict[int, Label] = dict(zip(anchor, wanted))
    for u in range(graph.node_count):
        if u in new_labels:
            continue
        excluded = set()
        for v, lv in zip(anchor, wanted):
            la = labs[(min(u, v), max(u, v))]
            if la[0] != RHO and lv[0] != RHO and la[1] == lv[1]:
                excluded.add(la[1])
        colour = next((c for c in range(graph.colors) if c not in excluded),
                      None)
        if colour is None:
            return None
        new_labels[u] = (RHO, colour)
    return new_labels


def enumerate_tasks(graph: LabelledGraph, max_anchor: int
                    ) -> list[ExtensionTask]:
    """All admissible one-node extension demands over anchors of bounded
    size, in deterministic order (anchor size, anchor, labels)."""
    pool = label_pool(graph.base, graph.colors)
    nodes = list(range(graph.node_count))
    anchors: list[tuple[int, ...]] = [()]
    for size in range(1, max_anchor + 1):
        anchors += _sorted_subsets(nodes, size)
    out = []
    for anchor in anchors:
        for wanted in _label_tuples(pool, len(anchor)):
            if _anchor_extension_admissible(graph, anchor, wanted):
                out.append(ExtensionTask(anchor, wanted))
    return out


def _sorted_subsets(nodes: list[int], size: int) -> list[tuple[int, ...]]:
    import itertools
    return sorted(itertools.combinations(nodes, size))


def _label_tuples(pool: list[Label], k: int):
    import itertools
    return itertools.product(pool, repeat=k)


def saturate_labelled_model(seed: LabelledGraph, size_bound: int,
                            extension_budget: int,
                            max_anchor: int | None = None) -> SaturationResult:
    """Greedy saturation: sweep the extension demands against the current
    node set, reuse a realizing node when one exists, otherwise add a fresh
    node with deterministically filled-in labels.

    Sweeps repeat (new nodes generate new demands) until a sweep realizes
    everything without growth or the budget runs out.  An unrealizable demand
    is recorded, never dropped.
    """
    ok, witness = gg_membership(seed)
    if not ok:
        raise PreconditionError(f"seed not admissible: {witness}")
    if max_anchor is None:
        max_anchor = seed.colors - 1
    result = SaturationResult(graph=seed, processed=[], realizations=[])
    while result.tasks_spent < extension_budget:
        snapshot_nodes = result.graph.node_count
        progressed = False
        for task in enumerate_tasks(result.graph, max_anchor):
            if any(u >= snapshot_nodes for u in task.anchor):
                continue
            if result.tasks_spent >= extension_budget:
                break
            result.tasks_spent += 1
            w = task_realized_by(result.graph, task)
            if w is None:
                if result.graph.node_count < size_bound:
                    fill = _fill_in_labels(result.graph, task.anchor,
                                           task.wanted)
                    if fill is None:
                        result.unrealized.append(task)
                        continue
                    result.graph = result.graph.with_node(fill)
                    w = result.graph.node_count - 1
                    progressed = True
                else:
                    result.unrealized.append(task)
                    continue
            result.processed.append(task)
            result.realizations.append(w)
        if not progressed:
            break
    return result
