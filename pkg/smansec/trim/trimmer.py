"""
Sparsification of a weakly securable SMAN.

Links are removed one at a time while the Weak Security Condition keeps
holding, until every source reaches exactly n - k + 2 relays. The row
form of the condition with I = {i} forces |R_i| >= n - k + 2, so the
result cannot be thinned any further.

Sources are processed in increasing index, each to completion; candidate
relays in increasing index; the first removal the verifier accepts is
taken. A greedy pass can still reach a dead end, mostly when n = k: the
source being trimmed has surplus links but every removal breaks the
condition. The search then backtracks over earlier removals. Within one
source only relays above the last removed one are tried, so each subset
of removals is visited at most once. Adding links never breaks the
condition, so every trimmed SMAN inside ``s`` is reachable this way.
"""

import logging
from dataclasses import dataclass
from typing import Callable, List, NamedTuple, Optional, Tuple

from ..errors import ConsistencyError, InfeasibleError, UsageError
from ..flowverify.verifier import check_min_cut_condition
from ..sman.conditions import check_weak_security_condition
from ..sman.network import Sman, mask_members
from ..types.verdict import Verdict

log = logging.getLogger(__name__)

Verifier = Callable[[Sman], Verdict]


class TrimStep(NamedTuple):
    """A SMAN with one link removed and the verifier's verdict on it."""
    sman: Sman
    verdict: Verdict


@dataclass(frozen=True)
class TrimResult:
    """
    Outcome of trimming.

    ``removals`` lists committed (source, relay) removals in order, 0-based.
    ``verifier_calls`` counts every tentative removal checked, and
    ``backtracks`` every accepted removal later undone.
    """
    sman: Sman
    removals: Tuple[Tuple[int, int], ...]
    verifier_calls: int
    backtracks: int = 0

    def removal_log(self) -> str:
        """One ``removed <source> <relay>`` line per removal, 1-based."""
        return "".join(f"removed {i + 1} {j + 1}\n" for i, j in self.removals)


def target_degree(s: Sman) -> int:
    """Links per source in a fully trimmed SMAN."""
    return s.n - s.k + 2


def trim_step(s: Sman, i: int, j: int, verifier: Verifier = check_min_cut_condition) -> TrimStep:
    """
    Remove link (i, j) and verify the result.

    Args:
        s: The SMAN; not modified
        i: Source index
        j: Relay index
        verifier: Weak-security checker applied to the result

    Raises:
        UsageError: If the link is absent
    """
    if not s.entry(i, j):
        raise UsageError(f"Source {i + 1} has no link to relay {j + 1}")
    reduced = s.without_link(i, j)
    return TrimStep(reduced, verifier(reduced))


class _TrimSearch:
    """Depth-first search over removals in trimming order."""

    def __init__(self, verifier: Verifier, target: int, audit: bool):
        self.verifier = verifier
        self.target = target
        self.audit = audit
        self.removals: List[Tuple[int, int]] = []
        self.calls = 0
        self.backtracks = 0

    def _next_source(self, s: Sman) -> Optional[int]:
        for i in range(s.k):
            if s.rows[i].bit_count() > self.target:
                return i
        return None

    def descend(self, current: Sman) -> Optional[Sman]:
        source = self._next_source(current)
        if source is None:
            return current
        floor = 0
        if self.removals and self.removals[-1][0] == source:
            floor = self.removals[-1][1] + 1

        for relay in mask_members(current.rows[source]):
            if relay < floor:
                continue
            step = trim_step(current, source, relay, self.verifier)
            self.calls += 1
            if not step.verdict.holds:
                continue
            if self.audit and not check_weak_security_condition(step.sman).holds:
                raise ConsistencyError(
                    f"Audit: removing ({source + 1}, {relay + 1}) broke the condition "
                    f"although the verifier accepted it"
                )
            self.removals.append((source, relay))
            log.debug("removed link source=%d relay=%d", source + 1, relay + 1)
            found = self.descend(step.sman)
            if found is not None:
                return found
            self.removals.pop()
            self.backtracks += 1
            log.debug("restored link source=%d relay=%d", source + 1, relay + 1)
        return None


def trim(s: Sman, verifier: Verifier = check_min_cut_condition, audit: bool = False) -> TrimResult:
    """
    Thin ``s`` to the sparsest weakly securable SMAN contained in it.

    Args:
        s: A SMAN satisfying the Weak Security Condition
        verifier: Checker used for every tentative removal
        audit: Re-check every accepted intermediate with the brute-force
            checker as well

    Returns:
        TrimResult whose SMAN has n - k + 2 links per source (k >= 2)

    Raises:
        InfeasibleError: If ``s`` violates the condition; carries the witness
        ConsistencyError: If the search exhausts every removal order, or the
            audit disagrees with the verifier
    """
    verdict = verifier(s)
    if not verdict.holds:
        raise InfeasibleError(
            f"Weak Security Condition fails: {verdict}; nothing to trim",
            verdict=verdict,
        )

    search = _TrimSearch(verifier, target_degree(s), audit)
    trimmed = search.descend(s)
    if trimmed is None:
        raise ConsistencyError(
            f"No removal order reaches {target_degree(s)} links per source "
            f"after {search.calls} verifier calls"
        )

    log.info("Trimmed %d links in %d verifier calls (%d backtracks)",
             len(search.removals), search.calls, search.backtracks)
    return TrimResult(
        sman=trimmed,
        removals=tuple(search.removals),
        verifier_calls=search.calls,
        backtracks=search.backtracks,
    )
