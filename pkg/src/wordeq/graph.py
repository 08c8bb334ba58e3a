"""
Solution-graph construction: depth-first unfolding of system states with
folding back to an equal-labelled ancestor, under node/depth budgets.

A node whose label textually equals the label of one of its ancestors is
closed by a back edge to that ancestor instead of being expanded; its
subtree would repeat the ancestor's.  Equal labels on *different* paths
are deliberately not merged (the default), so back edges always point to
proper ancestors.  A global memoizing mode is available behind a flag; it
changes the graph shape but not the verdict or the accepted programs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .core import Equation, Narrowing, SystemState
from .narrow import compatible_narrowings, step
from .parse import serialize_equation
from .rewrite import Scheme, simplify

INTERNAL = "internal"
TLEAF = "tleaf"
FLEAF = "fleaf"

FOLD_ANCESTOR = "ancestor"
FOLD_MEMO = "memo"


@dataclass(frozen=True)
class Budget:
    max_nodes: int = 1_000_000
    max_depth: int = 10_000

    def __post_init__(self) -> None:
        if self.max_nodes < 1 or self.max_depth < 1:
            raise ValueError("budget limits must be positive")


@dataclass
class Node:
    id: int
    label: SystemState
    kind: str
    depth: int


@dataclass
class SolutionGraph:
    root: int
    nodes: List[Node]
    tree_edges: List[Tuple[int, Narrowing, int]]
    back_edges: List[Tuple[int, int]]
    system: Tuple[Equation, ...]
    scheme: Scheme
    children: Dict[int, List[Tuple[Narrowing, int]]] = field(default_factory=dict)
    fold_target: Dict[int, int] = field(default_factory=dict)

    def node(self, node_id: int) -> Node:
        return self.nodes[node_id]

    def edges_from(self, node_id: int) -> List[Tuple[Optional[Narrowing], int]]:
        """Outgoing walkable edges: tree edges (with narrowing), then the
        back edge (without) if the node is folded."""
        out: List[Tuple[Optional[Narrowing], int]] = list(self.children.get(node_id, ()))
        if node_id in self.fold_target:
            out.append((None, self.fold_target[node_id]))
        return out

    def t_leaves(self) -> List[Node]:
        return [n for n in self.nodes if n.kind == TLEAF]

    def f_leaves(self) -> List[Node]:
        return [n for n in self.nodes if n.kind == FLEAF]

    def folded_nodes(self) -> List[Node]:
        return [self.nodes[src] for src, _ in self.back_edges]

    def internal_nodes(self) -> List[Node]:
        """Expanded internal nodes, i.e. those with outgoing tree edges."""
        return [n for n in self.nodes if self.children.get(n.id)]

    def max_depth(self) -> int:
        return max(n.depth for n in self.nodes)


@dataclass
class BuildOutcome:
    graph: SolutionGraph
    complete: bool
    reason: Optional[str] = None  # why expansion stopped, when incomplete


SAT = "SAT"
UNSAT = "UNSAT"
UNKNOWN = "UNKNOWN"


def build(
    system: List[Equation],
    scheme: Scheme,
    budget: Budget = Budget(),
    *,
    early_stop: bool = False,
    fold: str = FOLD_ANCESTOR,
    timeout_ms: Optional[float] = None,
) -> BuildOutcome:
    """Build the (partial) solution graph of an equation system.

    The root is the simplified input; expansion is depth first, children
    in narrowing order, so node numbering and the serialized graph are
    deterministic.  Exceeding the budget (or the optional cooperative
    timeout, checked per expansion) stops expansion and is reported in the
    outcome, not raised.  With ``early_stop`` the build halts at the first
    accepting leaf.
    """
    if not system:
        raise ValueError("empty system")
    if fold not in (FOLD_ANCESTOR, FOLD_MEMO):
        raise ValueError(f"unknown fold mode {fold!r}")
    deadline = time.monotonic() + timeout_ms / 1000.0 if timeout_ms is not None else None

    root_label = simplify(scheme, SystemState.of(system))
    nodes = [Node(0, root_label, _kind_of(root_label), 0)]
    graph = SolutionGraph(0, nodes, [], [], tuple(system), scheme)
    reason: Optional[str] = None
    halted = False

    ENTER, EXIT = 0, 1
    stack: List[Tuple[int, object]] = [(ENTER, 0)]
    on_path: Dict[SystemState, int] = {}
    memo: Dict[SystemState, int] = {}

    while stack:
        op, arg = stack.pop()
        if op == EXIT:
            del on_path[arg]
            continue
        node = nodes[arg]
        if node.kind != INTERNAL:
            continue
        label = node.label
        if fold == FOLD_ANCESTOR:
            target = on_path.get(label)
            if target is not None:
                graph.back_edges.append((node.id, target))
                graph.fold_target[node.id] = target
                continue
        else:
            target = memo.get(label)
            if target is not None:
                graph.back_edges.append((node.id, target))
                graph.fold_target[node.id] = target
                continue
            memo[label] = node.id
        if halted:
            reason = reason or "early_stop"
            continue
        if deadline is not None and time.monotonic() > deadline:
            halted = True
            reason = reason or "timeout"
            continue
        if node.depth >= budget.max_depth:
            reason = reason or "max_depth"
            continue
        narrowings = compatible_narrowings(label)
        if not narrowings:
            node.kind = FLEAF
            continue
        if len(nodes) + len(narrowings) > budget.max_nodes:
            halted = True
            reason = reason or "max_nodes"
            continue
        children: List[int] = []
        for n in narrowings:
            child_label = step(label, n, scheme)
            child = Node(len(nodes), child_label, _kind_of(child_label), node.depth + 1)
            nodes.append(child)
            graph.tree_edges.append((node.id, n, child.id))
            graph.children.setdefault(node.id, []).append((n, child.id))
            children.append(child.id)
            if early_stop and child.kind == TLEAF:
                halted = True
        on_path[label] = node.id
        stack.append((EXIT, label))
        for child_id in reversed(children):
            stack.append((ENTER, child_id))

    return BuildOutcome(graph, complete=reason is None, reason=reason)


def _kind_of(label: SystemState) -> str:
    if label.is_accepted:
        return TLEAF
    if label.is_contradiction:
        return FLEAF
    return INTERNAL


def verdict(outcome: BuildOutcome) -> str:
    """SAT as soon as an accepting leaf exists (valid even when the graph
    is partial); UNSAT only for complete graphs without one."""
    if outcome.graph.t_leaves():
        return SAT
    return UNSAT if outcome.complete else UNKNOWN


def _node_dot(node: Node) -> str:
    if node.kind == TLEAF:
        return f'  n{node.id} [shape=doublecircle, label="T"];'
    if node.label.is_contradiction:
        return f'  n{node.id} [shape=diamond, label="F"];'
    text = "\\n".join(serialize_equation(e) for e in node.label.equations)
    if node.kind == FLEAF:
        return f'  n{node.id} [shape=diamond, label="F: {text}"];'
    return f'  n{node.id} [shape=box, label="{text}"];'


def to_dot(graph: SolutionGraph, prune: bool = False) -> str:
    """Deterministic DOT text; back edges are dashed.

    With ``prune``, nodes from which no accepting leaf is reachable are
    dropped for readability.
    """
    keep = set(range(len(graph.nodes)))
    if prune:
        reverse: Dict[int, List[int]] = {}
        for parent, _, child in graph.tree_edges:
            reverse.setdefault(child, []).append(parent)
        for src, dst in graph.back_edges:
            reverse.setdefault(dst, []).append(src)
        keep = {n.id for n in graph.t_leaves()}
        frontier = list(keep)
        while frontier:
            nid = frontier.pop()
            for prev in reverse.get(nid, ()):
                if prev not in keep:
                    keep.add(prev)
                    frontier.append(prev)
    lines = ["digraph solution_graph {", "  rankdir=TB;"]
    for node in graph.nodes:
        if node.id in keep:
            lines.append(_node_dot(node))
    for parent, narrowing, child in graph.tree_edges:
        if parent in keep and child in keep:
            lines.append(f'  n{parent} -> n{child} [label="{narrowing}"];')
    for src, dst in graph.back_edges:
        if src in keep and dst in keep:
            lines.append(f"  n{src} -> n{dst} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"
