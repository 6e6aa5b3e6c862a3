"""
Auxiliary flow networks for weak-security verification.

For an excluded source i0 the network has a source ``s``, one packet node
``p<j>`` per relay, and for each of the k-1 remaining sources a coding
node ``r<i>``, a broadcast node ``b<i>`` and a sink ``t<i>`` (numbered
1..k-1 in increasing order of the original source index). Infinite
capacities are replaced by a finite surrogate, n + 1 by default: any cut
crossing such an arc already exceeds the threshold n, so decisions are
unchanged while capacities stay integral.
"""

from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from ..errors import UsageError
from ..sman.network import Sman, mask_members

SOURCE = "s"


class Arc(NamedTuple):
    tail: str
    head: str
    capacity: int


@dataclass(frozen=True)
class FlowNetwork:
    """
    A directed network with integer capacities.

    ``coding_sources[i]`` is the original (0-based) source index behind
    coding node ``r<i+1>``; it is empty for networks not built from a SMAN.
    """
    nodes: Tuple[str, ...]
    arcs: Tuple[Arc, ...]
    excluded_source: Optional[int] = None
    coding_sources: Tuple[int, ...] = ()
    _index: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {label: position for position, label in enumerate(self.nodes)}
        if len(index) != len(self.nodes):
            raise UsageError("Duplicate node labels in flow network")
        for arc in self.arcs:
            if arc.tail not in index or arc.head not in index:
                raise UsageError(f"Arc {arc.tail}->{arc.head} references an unknown node")
            if arc.capacity < 0:
                raise UsageError(f"Arc {arc.tail}->{arc.head} has negative capacity")
        object.__setattr__(self, "_index", index)

    def node_index(self, label: str) -> int:
        if label not in self._index:
            raise UsageError(f"Unknown node {label!r}")
        return self._index[label]

    def capacity_matrix(self) -> np.ndarray:
        """Dense capacity matrix; parallel arcs add up."""
        size = len(self.nodes)
        capacity = np.zeros((size, size), dtype=np.int64)
        for arc in self.arcs:
            capacity[self._index[arc.tail], self._index[arc.head]] += arc.capacity
        return capacity

    def sinks(self) -> List[str]:
        return [label for label in self.nodes if label.startswith("t")]


def build_flow_network(s: Sman, i0: int, infinity: Optional[int] = None) -> FlowNetwork:
    """
    Build the verification network with source ``i0`` excluded.

    Args:
        s: The SMAN
        i0: Excluded source (0-based)
        infinity: Surrogate for infinite capacities; defaults to n + 1 and
            must exceed n

    Returns:
        FlowNetwork with 1 + n + 3(k-1) nodes

    Raises:
        UsageError: If ``i0`` is not a source or the surrogate is too small
    """
    if not 0 <= i0 < s.k:
        raise UsageError(f"Excluded source {i0} outside [0, {s.k})")
    big = s.n + 1 if infinity is None else infinity
    if big <= s.n:
        raise UsageError(f"Capacity surrogate {big} must exceed n = {s.n}")

    coding_sources = tuple(i for i in range(s.k) if i != i0)
    labels = range(1, len(coding_sources) + 1)
    nodes = (
        [SOURCE]
        + [f"p{j + 1}" for j in range(s.n)]
        + [f"r{i}" for i in labels]
        + [f"b{i}" for i in labels]
        + [f"t{i}" for i in labels]
    )

    arcs = [Arc(SOURCE, f"p{j + 1}", 1) for j in range(s.n)]
    for label, source in zip(labels, coding_sources):
        arcs.extend(Arc(f"p{j + 1}", f"r{label}", big) for j in mask_members(s.rows[source]))
    arcs.extend(Arc(f"r{i}", f"b{i}", 1) for i in labels)
    arcs.extend(Arc(f"r{i}", f"t{i}", big) for i in labels)
    arcs.extend(Arc(f"b{i}", f"t{j}", big) for i in labels for j in labels)

    return FlowNetwork(
        nodes=tuple(nodes),
        arcs=tuple(arcs),
        excluded_source=i0,
        coding_sources=coding_sources,
    )


def dump_flow_network(net: FlowNetwork) -> str:
    """One ``<from> <to> <capacity>`` line per arc."""
    return "".join(f"{arc.tail} {arc.head} {arc.capacity}\n" for arc in net.arcs)
