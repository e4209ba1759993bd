"""Operation counters and structural check reports.

Counting conventions, applied identically by every structure and backend so
cross-structure numbers are comparable:

* ``comparisons``  - one per key-vs-key ordering test, wherever it happens
  (sift walks, boundary tests, consolidation links, max scans).
* ``entry_moves``  - one per element that changes slot.  A swap of two
  elements counts 2; writing the replacement key into the root on pop
  counts 1; appending a brand-new element counts 0.
* ``value_swaps``  - one per key exchange across a group boundary (the
  layered structure's parent/child-top swaps, and the faithful variant's
  k-parent swaps).  Local in-group swaps do not count here.
* ``link_fixes``   - one per child back-link updated because the entry
  owning that child moved.  The Fibonacci heap reuses this tally for
  consolidation links.

All counts are monotone between explicit resets.
"""

from dataclasses import dataclass
from typing import NamedTuple, Optional


class OpCounters(NamedTuple):
    comparisons: int
    entry_moves: int
    value_swaps: int
    link_fixes: int


#: Violation tuple layout used by CheckReport: (kind, group, slot, detail).
#: Kinds: local_order, boundary_order, backlink, count, shape.
@dataclass(frozen=True)
class CheckReport:
    ok: bool
    violations: tuple = ()

    def kinds(self):
        return [v[0] for v in self.violations]


#: Shared instance returned on the (hot) all-clear path.
CHECK_OK = CheckReport(True, ())


@dataclass(frozen=True)
class ViolationReport:
    """First layout violation found in a faithful-variant array, if any.

    ``first_violation`` is ``(kind, slot)`` with kind one of
    group_local_order, parent_vs_group_root, max_not_at_root.
    """

    ok: bool
    first_violation: Optional[tuple] = None


VIOLATION_OK = ViolationReport(True, None)
