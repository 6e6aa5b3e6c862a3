"""
Maximum flow by shortest augmenting paths (Edmonds-Karp).

Each run works on a private copy of the capacity matrix as its residual
network, so a FlowNetwork can be shared between runs.
"""

from collections import deque
from typing import FrozenSet, List, NamedTuple, Optional

import numpy as np

from ..errors import UsageError
from .network import FlowNetwork


class FlowResult(NamedTuple):
    """Max-flow value, number of augmenting paths, and the residual source side."""
    value: int
    augmentations: int
    source_side: FrozenSet[str]


def _bfs(residual: np.ndarray, source: int, sink: int, parent: List[int]) -> bool:
    visited = [False] * len(residual)
    queue = deque([source])
    visited[source] = True
    while queue:
        u = queue.popleft()
        for v in np.nonzero(residual[u] > 0)[0]:
            v = int(v)
            if not visited[v]:
                visited[v] = True
                parent[v] = u
                if v == sink:
                    return True
                queue.append(v)
    return False


def _reachable(residual: np.ndarray, source: int) -> List[int]:
    seen = {source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in np.nonzero(residual[u] > 0)[0]:
            v = int(v)
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return sorted(seen)


def max_flow(net: FlowNetwork, source: str, sink: str) -> FlowResult:
    """
    Exact maximum flow value from ``source`` to ``sink``.

    Args:
        net: The network
        source: Label of the source node
        sink: Label of the sink node

    Returns:
        FlowResult; ``source_side`` is the set of nodes reachable from the
        source in the final residual network, the source side of a minimum cut

    Raises:
        UsageError: If either label is unknown or they coincide
    """
    s = net.node_index(source)
    t = net.node_index(sink)
    if s == t:
        raise UsageError(f"Source and sink are the same node {source!r}")

    residual = net.capacity_matrix()
    parent: List[Optional[int]] = [None] * len(net.nodes)
    value = 0
    augmentations = 0
    while _bfs(residual, s, t, parent):
        path_flow = None
        v = t
        while v != s:
            u = parent[v]
            capacity = int(residual[u, v])
            path_flow = capacity if path_flow is None else min(path_flow, capacity)
            v = u
        v = t
        while v != s:
            u = parent[v]
            residual[u, v] -= path_flow
            residual[v, u] += path_flow
            v = u
        value += path_flow
        augmentations += 1

    side = frozenset(net.nodes[index] for index in _reachable(residual, s))
    return FlowResult(value=value, augmentations=augmentations, source_side=side)
