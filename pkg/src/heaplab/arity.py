"""Fan-out formula and the slot geometry of nested in-group heap orders.

A layered heap with ``layers`` = M stores its keys in groups of ``k`` slots,
where k doubles as the fan-out of the group tree.  Inside a group the
occupied prefix is kept heap-ordered by a *local discipline*:

* M = 1 or 2: the implicit binary order (parent of slot l is (l-1)//2).
* M >= 3: a nested layered order.  Slots form an implicit a-ary forest
  (a = compute_arity(M-1, k)): slot l's k-parent is (l-1)//a and the a
  slots of one sibling block are ordered by the (M-2)-level discipline,
  bottoming out at binary.

Every discipline is described here by its *arity chain*: the per-level
fan-outs, outermost first, with the implicit binary order after the last
entry.  M = 1 and M = 2 have an empty chain.
"""

import math


def _round_half_away(x: float) -> int:
    f = math.floor(x)
    return int(f) + 1 if x - f >= 0.5 else int(f)


def compute_arity(layers: int, capacity: int) -> int:
    """Group fan-out k for a ``layers``-level heap sized for ``capacity`` keys.

    k = round(2 ** ((log2 capacity) ** ((layers - 1) / layers))), clamped to
    at least 2; a 1-level heap is plain binary, so k = 2.  Rounding is to the
    nearest integer, half away from zero; k is deliberately not forced to a
    power of two.
    """
    if layers < 1:
        raise ValueError(f"layers must be >= 1, got {layers}")
    if capacity < 1:
        raise ValueError(f"capacity must be >= 1, got {capacity}")
    if layers == 1:
        return 2
    exponent = math.log2(capacity) ** ((layers - 1) / layers)
    return max(2, _round_half_away(2.0 ** exponent))


def arity_chain(layers: int, group_capacity: int) -> tuple:
    """Per-level fan-outs of the in-group discipline for an M-layer heap.

    Empty for M <= 2 (plain binary).  For M >= 3 the first entry is the
    fan-out of the (M-1)-level order over ``group_capacity`` slots, the next
    is the fan-out one level further in, and so on down to the implicit
    binary bottom.
    """
    chain = []
    cap = group_capacity
    for m in range(layers - 1, 1, -1):
        a = compute_arity(m, cap)
        chain.append(a)
        cap = a
    return tuple(chain)


def local_parent(chain: tuple, slot: int, _level: int = 0) -> int:
    """Parent of ``slot`` in the discipline tree; -1 for slot 0."""
    if slot <= 0:
        return -1
    if _level == len(chain):
        return (slot - 1) >> 1
    a = chain[_level]
    p = (slot - 1) // a
    base = p * a + 1
    lam = slot - base
    if lam == 0:
        return p
    return base + local_parent(chain, lam, _level + 1)


def local_children(chain: tuple, slot: int, count: int, _level: int = 0) -> list:
    """Children of ``slot`` in the discipline tree, restricted to [0, count)."""
    out = []
    if _level == len(chain):
        c = 2 * slot + 1
        if c < count:
            out.append(c)
            if c + 1 < count:
                out.append(c + 1)
        return out
    a = chain[_level]
    c0 = slot * a + 1
    if c0 < count:
        out.append(c0)
    if slot > 0:
        p = (slot - 1) // a
        base = p * a + 1
        extent = min(a, count - base)
        for sub in local_children(chain, slot - base, extent, _level + 1):
            out.append(base + sub)
    return out


def local_height(chain: tuple, capacity: int) -> int:
    """Longest parent-walk, in edges, over a full group of ``capacity`` slots."""
    best = 0
    for slot in range(1, capacity):
        edges = 0
        l = slot
        while l > 0:
            l = local_parent(chain, l)
            edges += 1
        if edges > best:
            best = edges
    return best
