"""Pure-Python queue kernels.

This module is the portable fallback for the compiled extension
``heaplab._core``; the two expose identical classes, identical results and
identical operation counters.  Keys are 64-bit signed integers.

Structures:

* ``LayeredHeap``   - the repaired layered (heap-of-heaps) max-heap.
* ``FaithfulHeap``  - a literal flat-array transcription of the original
  two-layer insert/pop procedure, kept for adjudication; it promises
  bookkeeping only, not heap order.
* ``BinaryHeap``    - classic implicit binary max-heap baseline.
* ``FibHeap``       - Fibonacci max-heap baseline (insert is at most one
  comparison; pop consolidates by degree).
"""

import math

from .arity import arity_chain, compute_arity, local_children, local_parent
from .counters import (
    CHECK_OK,
    VIOLATION_OK,
    CheckReport,
    OpCounters,
    ViolationReport,
)
from .errors import HeapEmpty, HeapFull

BACKEND_NAME = "pure"


class _Group:
    """One fixed-capacity block of entries: keys plus per-slot child links.

    ``links[i]`` is the id of the group owned by the entry at slot i, or -1.
    Links travel with entries whenever entries move; ``parent_group`` /
    ``parent_slot`` is the back-link to this group's owning entry.
    A 1-layer heap uses a single group with ``links is None``.
    """

    __slots__ = ("keys", "links", "count", "parent_group", "parent_slot")

    def __init__(self, capacity, parent_group, parent_slot):
        if capacity is None:
            self.keys = []
            self.links = None
        else:
            self.keys = [0] * capacity
            self.links = [-1] * capacity
        self.count = 0
        self.parent_group = parent_group
        self.parent_slot = parent_slot


class LayeredHeap:
    """Layered max-heap: a tree of groups, each group locally heap-ordered.

    Groups are created in breadth-first order and filled as a prefix, so
    the last group (the frontier) is the only partially filled one and its
    entries never own child groups.  Inserts append at the frontier, sift
    up inside the group, then climb group boundaries by swapping keys only
    (child links stay attached to their entries).  Pops replace the root
    entry's key with the frontier's last key and walk it down the group
    tree the same way.  With ``layers=1`` this degenerates to exactly the
    implicit binary heap.
    """

    __slots__ = (
        "_layers",
        "_arity",
        "_arity_forced",
        "_capacity",
        "_size",
        "_groups",
        "_chain",
        "_cmp",
        "_moves",
        "_swaps",
        "_fixes",
    )

    def __init__(self, layers, capacity, arity=None):
        if layers < 1:
            raise ValueError(f"layers must be >= 1, got {layers}")
        if capacity < 1:
            raise ValueError(f"capacity must be >= 1, got {capacity}")
        if arity is not None and arity < 2:
            raise ValueError(f"arity override must be >= 2, got {arity}")
        self._layers = layers
        # A 1-layer heap is the plain binary discipline; overrides apply
        # only to the grouped (layers >= 2) shape.
        if layers == 1:
            self._arity = 2
            self._arity_forced = False
        elif arity is not None:
            self._arity = arity
            self._arity_forced = True
        else:
            self._arity = compute_arity(layers, capacity)
            self._arity_forced = False
        self._capacity = capacity
        self._size = 0
        self._groups = []
        self._chain = arity_chain(layers, self._arity)
        self._cmp = 0
        self._moves = 0
        self._swaps = 0
        self._fixes = 0

    # -- public surface ----------------------------------------------------

    @property
    def layers(self):
        return self._layers

    @property
    def arity(self):
        return self._arity

    @property
    def capacity(self):
        return self._capacity

    def __len__(self):
        return self._size

    def is_empty(self):
        return self._size == 0

    def peek_max(self):
        if self._size == 0:
            raise HeapEmpty("peek on empty heap")
        return self._groups[0].keys[0]

    def counters(self):
        return OpCounters(self._cmp, self._moves, self._swaps, self._fixes)

    def reset_counters(self):
        self._cmp = self._moves = self._swaps = self._fixes = 0

    def comparisons_and_moves(self):
        return self._cmp, self._moves

    def insert(self, key):
        if self._size == self._capacity:
            self._grow(pending=1)
        groups = self._groups
        if not groups:
            groups.append(_Group(None if self._layers == 1 else self._arity, -1, -1))
        grp = groups[-1]
        if self._layers > 1 and grp.count == self._arity:
            grp = self._new_group()
        slot = grp.count
        if grp.links is None:
            grp.keys.append(key)
        else:
            grp.keys[slot] = key
            grp.links[slot] = -1
        grp.count += 1
        self._size += 1
        gid = len(groups) - 1
        slot = self._sift_up(gid, slot)
        # Boundary ascent: while the new key tops its group and beats the
        # owning entry one group up, swap keys only and re-sift the owner.
        while slot == 0:
            grp = groups[gid]
            pg = grp.parent_group
            if pg < 0:
                break
            ps = grp.parent_slot
            parent = groups[pg]
            self._cmp += 1
            if grp.keys[0] > parent.keys[ps]:
                grp.keys[0], parent.keys[ps] = parent.keys[ps], grp.keys[0]
                self._swaps += 1
                slot = self._sift_up(pg, ps)
                gid = pg
            else:
                break

    def pop_max(self):
        if self._size == 0:
            raise HeapEmpty("pop from empty heap")
        groups = self._groups
        saved = groups[0].keys[0]
        y = self._remove_last()
        if self._size == 0:
            return saved
        root = groups[0]
        root.keys[0] = y
        self._moves += 1
        gid = 0
        slot = self._sift_down(0, 0)
        # Boundary descent: while the replacement key is beaten by the top
        # of its entry's child group, swap keys across the boundary, re-sift
        # the enriched entry up, and chase the key down into the child.
        while True:
            grp = groups[gid]
            links = grp.links
            c = -1 if links is None else links[slot]
            if c < 0:
                break
            child = groups[c]
            self._cmp += 1
            if child.keys[0] > grp.keys[slot]:
                grp.keys[slot], child.keys[0] = child.keys[0], grp.keys[slot]
                self._swaps += 1
                self._sift_up(gid, slot)
                gid = c
                slot = self._sift_down(c, 0)
            else:
                break
        return saved

    def grow(self):
        """Double capacity (at least 4) and restructure if the fan-out changes."""
        self._grow(pending=0)

    def check_structure(self):
        """Exhaustively verify every structural invariant; read-only."""
        v = []
        groups = self._groups
        k = self._arity
        chain = self._chain
        total = 0
        for grp in groups:
            total += grp.count
        if total != self._size:
            v.append(("count", -1, -1, f"size {self._size} != sum of group counts {total}"))
        if self._layers == 1 and len(groups) > 1:
            v.append(("shape", 1, -1, "1-layer heap must hold a single group"))
        last = len(groups) - 1
        for j, grp in enumerate(groups):
            cap = len(grp.keys) if grp.links is None else k
            if not 0 <= grp.count <= cap:
                v.append(("count", j, -1, f"count {grp.count} outside [0, {cap}]"))
                continue
            if grp.links is not None and j < last and grp.count != k:
                v.append(("shape", j, -1, f"non-frontier group holds {grp.count} < {k}"))
            if j == 0:
                if grp.parent_group != -1:
                    v.append(("shape", j, -1, "root group has a parent"))
            else:
                want = (j - 1) // k
                if grp.parent_group != want:
                    v.append(("shape", j, -1, f"parent group {grp.parent_group}, expected {want}"))
                pg = grp.parent_group
                if 0 <= pg < len(groups):
                    parent = groups[pg]
                    ps = grp.parent_slot
                    if not 0 <= ps < parent.count:
                        v.append(("backlink", j, ps, "owner slot not occupied"))
                    elif parent.links[ps] != j:
                        v.append(("backlink", j, ps, f"owner slot links {parent.links[ps]}"))
                    elif parent.keys[ps] < grp.keys[0]:
                        v.append(
                            (
                                "boundary_order",
                                j,
                                0,
                                f"group top {grp.keys[0]} exceeds owner key {parent.keys[ps]}",
                            )
                        )
            keys = grp.keys
            for l in range(1, grp.count):
                lp = local_parent(chain, l)
                if keys[lp] < keys[l]:
                    v.append(
                        ("local_order", j, l, f"key {keys[l]} exceeds local parent slot {lp}")
                    )
            links = grp.links
            if links is not None:
                for l in range(grp.count):
                    c = links[l]
                    if c < 0:
                        continue
                    if not 0 <= c < len(groups):
                        v.append(("backlink", j, l, f"link {c} out of range"))
                    elif groups[c].parent_group != j or groups[c].parent_slot != l:
                        v.append(("backlink", j, l, f"group {c} does not point back"))
                for l in range(grp.count, cap):
                    if links[l] != -1:
                        v.append(("backlink", j, l, "stale link past occupied prefix"))
        if groups:
            seen = [False] * len(groups)
            seen[0] = True
            stack = [0]
            reached = 1
            while stack:
                g = stack.pop()
                links = groups[g].links
                if links is None:
                    continue
                for l in range(groups[g].count):
                    c = links[l]
                    if c >= 0 and 0 <= c < len(groups) and not seen[c]:
                        seen[c] = True
                        reached += 1
                        stack.append(c)
            if reached != len(groups):
                v.append(("shape", -1, -1, f"only {reached} of {len(groups)} groups reachable"))
        if not v:
            return CHECK_OK
        return CheckReport(False, tuple(v))

    def memory_bytes(self):
        """Modeled footprint: 8B keys, 4B links, 16B header per group."""
        if self._layers == 1:
            slots = max(self._capacity, self._size)
            return 16 + 8 * slots if self._groups else 0
        return sum(16 + 12 * self._arity for _ in self._groups)

    # -- internals ----------------------------------------------------------

    def _swap_entries(self, grp, i, j):
        keys = grp.keys
        keys[i], keys[j] = keys[j], keys[i]
        self._moves += 2
        links = grp.links
        if links is not None:
            links[i], links[j] = links[j], links[i]
            groups = self._groups
            if links[i] >= 0:
                groups[links[i]].parent_slot = i
                self._fixes += 1
            if links[j] >= 0:
                groups[links[j]].parent_slot = j
                self._fixes += 1

    def _sift_up(self, gid, slot):
        grp = self._groups[gid]
        keys = grp.keys
        chain = self._chain
        while slot > 0:
            lp = local_parent(chain, slot)
            self._cmp += 1
            if keys[slot] > keys[lp]:
                self._swap_entries(grp, slot, lp)
                slot = lp
            else:
                break
        return slot

    def _sift_down(self, gid, slot):
        grp = self._groups[gid]
        keys = grp.keys
        chain = self._chain
        count = grp.count
        while True:
            kids = local_children(chain, slot, count)
            if not kids:
                break
            best = kids[0]
            for c in kids[1:]:
                self._cmp += 1
                if keys[c] > keys[best]:
                    best = c
            self._cmp += 1
            if keys[best] > keys[slot]:
                self._swap_entries(grp, slot, best)
                slot = best
            else:
                break
        return slot

    def _new_group(self):
        groups = self._groups
        j = len(groups)
        k = self._arity
        parent = groups[(j - 1) // k]
        ps = (j - 1) % k
        if parent.links[ps] >= 0:
            # The designated slot's entry already owns an earlier child
            # (entries permute inside groups); attach to the first free one.
            ps = next(i for i in range(parent.count) if parent.links[i] < 0)
        parent.links[ps] = j
        grp = _Group(k, (j - 1) // k, ps)
        groups.append(grp)
        return grp

    def _remove_last(self):
        groups = self._groups
        grp = groups[-1]
        last = grp.count - 1
        key = grp.keys[last]
        if grp.links is None:
            grp.keys.pop()
        grp.count -= 1
        self._size -= 1
        if grp.count == 0:
            pg, ps = grp.parent_group, grp.parent_slot
            groups.pop()
            if pg >= 0:
                groups[pg].links[ps] = -1
        return key

    def _grow(self, pending):
        new_capacity = max(4, 2 * (self._size + pending))
        if self._layers == 1:
            # Plain binary storage extends in place: no re-sift, identical
            # comparison counts to the flat binary baseline.
            self._capacity = new_capacity
            return
        if self._arity_forced:
            self._capacity = new_capacity
            return
        new_arity = compute_arity(self._layers, new_capacity)
        self._capacity = new_capacity
        if new_arity == self._arity:
            return
        keys = [grp.keys[i] for grp in self._groups for i in range(grp.count)]
        self._arity = new_arity
        self._chain = arity_chain(self._layers, new_arity)
        self._groups = []
        self._size = 0
        for key in keys:
            self.insert(key)

    def _corrupt_swap_keys(self, gid, i, j):
        # Test hook: raw key swap with no counting or link maintenance.
        keys = self._groups[gid].keys
        keys[i], keys[j] = keys[j], keys[i]


class FaithfulHeap:
    """Flat-array transcription of the original two-layer procedure.

    0-based index map: the k-parent of slot n is (n-1)//k and the sibling
    block of n is [p*k+1, p*k+k].  Insert places the key at the end, then
    repeatedly swaps with the k-parent while strictly greater; on the first
    failed test it sifts the key up inside its sibling block's binary order
    and stops.  Pop moves the last key to the root and swaps it down with
    each block's top slot while beaten; ``mode`` selects whether the
    displaced value is re-sifted inside the block it lands in ("sift") or
    left at the top slot ("nosift").

    No heap-order invariant is promised.  ``check()`` reports whether one
    currently holds; the differential harness decides what the procedure
    actually maintains.
    """

    __slots__ = ("_keys", "_capacity", "_size", "_arity", "_mode",
                 "_cmp", "_moves", "_swaps", "_fixes")

    def __init__(self, capacity, arity=None, mode="sift"):
        if capacity < 1:
            raise ValueError(f"capacity must be >= 1, got {capacity}")
        if arity is not None and arity < 2:
            raise ValueError(f"arity override must be >= 2, got {arity}")
        if mode not in ("sift", "nosift"):
            raise ValueError(f"mode must be 'sift' or 'nosift', got {mode!r}")
        self._keys = [0] * capacity
        self._capacity = capacity
        self._size = 0
        self._arity = arity if arity is not None else compute_arity(2, capacity)
        self._mode = mode
        self._cmp = 0
        self._moves = 0
        self._swaps = 0
        self._fixes = 0

    @property
    def arity(self):
        return self._arity

    @property
    def capacity(self):
        return self._capacity

    @property
    def mode(self):
        return self._mode

    def __len__(self):
        return self._size

    def is_empty(self):
        return self._size == 0

    def counters(self):
        return OpCounters(self._cmp, self._moves, self._swaps, self._fixes)

    def reset_counters(self):
        self._cmp = self._moves = self._swaps = self._fixes = 0

    def comparisons_and_moves(self):
        return self._cmp, self._moves

    def peek_max(self):
        if self._size == 0:
            raise HeapEmpty("peek on empty heap")
        return self._keys[0]

    def insert(self, key):
        if self._size == self._capacity:
            raise HeapFull(f"capacity {self._capacity} reached")
        keys = self._keys
        k = self._arity
        n = self._size
        keys[n] = key
        self._size += 1
        while n > 0:
            p = (n - 1) // k
            self._cmp += 1
            if keys[n] > keys[p]:
                keys[n], keys[p] = keys[p], keys[n]
                self._moves += 2
                self._swaps += 1
                n = p
            else:
                base = p * k + 1
                lam = n - base
                while lam > 0:
                    pl = base + ((lam - 1) >> 1)
                    self._cmp += 1
                    if keys[n] > keys[pl]:
                        keys[n], keys[pl] = keys[pl], keys[n]
                        self._moves += 2
                        n = pl
                        lam = (lam - 1) >> 1
                    else:
                        break
                break

    def pop_max(self):
        if self._size == 0:
            raise HeapEmpty("pop from empty heap")
        keys = self._keys
        saved = keys[0]
        self._size -= 1
        size = self._size
        if size == 0:
            return saved
        keys[0] = keys[size]
        self._moves += 1
        k = self._arity
        s = 0
        while True:
            top = s * k + 1
            if top >= size:
                break
            self._cmp += 1
            if keys[top] > keys[s]:
                keys[top], keys[s] = keys[s], keys[top]
                self._moves += 2
                self._swaps += 1
                s = self._sift_in_block(top) if self._mode == "sift" else top
            else:
                break
        return saved

    def _sift_in_block(self, n):
        # Binary sift-down of the value at n (its block's top) within the
        # occupied part of its sibling block; returns the landing slot.
        keys = self._keys
        k = self._arity
        base = ((n - 1) // k) * k + 1
        extent = min(k, self._size - base)
        lam = n - base
        while True:
            c = 2 * lam + 1
            if c >= extent:
                break
            if c + 1 < extent:
                self._cmp += 1
                if keys[base + c + 1] > keys[base + c]:
                    c += 1
            self._cmp += 1
            if keys[base + c] > keys[base + lam]:
                keys[base + c], keys[base + lam] = keys[base + lam], keys[base + c]
                self._moves += 2
                lam = c
            else:
                break
        return base + lam

    def check(self):
        """Scan for the first violated layout property.

        Order: a key larger than the root anywhere, then per-slot checks in
        slot order (block-top slots against their k-parent, other slots
        against their in-block binary parent).
        """
        keys = self._keys
        size = self._size
        k = self._arity
        for n in range(1, size):
            if keys[n] > keys[0]:
                return ViolationReport(False, ("max_not_at_root", n))
        for n in range(1, size):
            p = (n - 1) // k
            base = p * k + 1
            if n == base:
                if keys[n] > keys[p]:
                    return ViolationReport(False, ("parent_vs_group_root", n))
            else:
                lam = n - base
                pl = base + ((lam - 1) >> 1)
                if keys[n] > keys[pl]:
                    return ViolationReport(False, ("group_local_order", n))
        return VIOLATION_OK


class BinaryHeap:
    """Implicit binary max-heap over a flat array, with counted comparisons."""

    __slots__ = ("_keys", "_alloc", "_cmp", "_moves", "_swaps", "_fixes")

    def __init__(self, capacity=0):
        self._keys = []
        self._alloc = max(capacity, 4)
        self._cmp = 0
        self._moves = 0
        self._swaps = 0
        self._fixes = 0

    def __len__(self):
        return len(self._keys)

    def is_empty(self):
        return not self._keys

    def counters(self):
        return OpCounters(self._cmp, self._moves, self._swaps, self._fixes)

    def reset_counters(self):
        self._cmp = self._moves = self._swaps = self._fixes = 0

    def comparisons_and_moves(self):
        return self._cmp, self._moves

    def peek_max(self):
        if not self._keys:
            raise HeapEmpty("peek on empty heap")
        return self._keys[0]

    def insert(self, key):
        keys = self._keys
        if len(keys) == self._alloc:
            self._alloc *= 2
        keys.append(key)
        n = len(keys) - 1
        while n > 0:
            p = (n - 1) >> 1
            self._cmp += 1
            if keys[n] > keys[p]:
                keys[n], keys[p] = keys[p], keys[n]
                self._moves += 2
                n = p
            else:
                break

    def pop_max(self):
        keys = self._keys
        if not keys:
            raise HeapEmpty("pop from empty heap")
        saved = keys[0]
        last = keys.pop()
        size = len(keys)
        if size:
            keys[0] = last
            self._moves += 1
            n = 0
            while True:
                c = 2 * n + 1
                if c >= size:
                    break
                if c + 1 < size:
                    self._cmp += 1
                    if keys[c + 1] > keys[c]:
                        c += 1
                self._cmp += 1
                if keys[c] > keys[n]:
                    keys[c], keys[n] = keys[n], keys[c]
                    self._moves += 2
                    n = c
                else:
                    break
        return saved

    def memory_bytes(self):
        return 16 + 8 * max(self._alloc, len(self._keys))


_NIL = -1
_LOG_PHI = math.log((1.0 + math.sqrt(5.0)) / 2.0)


class FibHeap:
    """Fibonacci max-heap over an index arena (no per-node objects).

    Nodes live in parallel arrays addressed by integer id; freed ids are
    recycled.  ``mark`` is kept for structural fidelity but never set:
    decrease-key is not part of the public surface, so no cuts happen.
    """

    __slots__ = ("_key", "_deg", "_par", "_child", "_left", "_right", "_mark",
                 "_free", "_max", "_size", "_cmp", "_moves", "_swaps", "_fixes")

    def __init__(self):
        self._key = []
        self._deg = []
        self._par = []
        self._child = []
        self._left = []
        self._right = []
        self._mark = []
        self._free = []
        self._max = _NIL
        self._size = 0
        self._cmp = 0
        self._moves = 0
        self._swaps = 0
        self._fixes = 0

    def __len__(self):
        return self._size

    def is_empty(self):
        return self._size == 0

    def counters(self):
        return OpCounters(self._cmp, self._moves, self._swaps, self._fixes)

    def reset_counters(self):
        self._cmp = self._moves = self._swaps = self._fixes = 0

    def comparisons_and_moves(self):
        return self._cmp, self._moves

    def peek_max(self):
        if self._size == 0:
            raise HeapEmpty("peek on empty heap")
        return self._key[self._max]

    def _alloc(self, key):
        if self._free:
            n = self._free.pop()
            self._key[n] = key
            self._deg[n] = 0
            self._par[n] = _NIL
            self._child[n] = _NIL
            self._left[n] = n
            self._right[n] = n
            self._mark[n] = False
            return n
        n = len(self._key)
        self._key.append(key)
        self._deg.append(0)
        self._par.append(_NIL)
        self._child.append(_NIL)
        self._left.append(n)
        self._right.append(n)
        self._mark.append(False)
        return n

    def insert(self, key):
        n = self._alloc(key)
        m = self._max
        if m == _NIL:
            self._max = n
        else:
            r = self._right[m]
            self._right[m] = n
            self._left[n] = m
            self._right[n] = r
            self._left[r] = n
            self._cmp += 1
            if key > self._key[m]:
                self._max = n
        self._size += 1

    def pop_max(self):
        if self._size == 0:
            raise HeapEmpty("pop from empty heap")
        m = self._max
        saved = self._key[m]
        roots = []
        x = self._right[m]
        while x != m:
            roots.append(x)
            x = self._right[x]
        c = self._child[m]
        if c != _NIL:
            x = c
            while True:
                roots.append(x)
                self._par[x] = _NIL
                x = self._right[x]
                if x == c:
                    break
        self._free.append(m)
        self._size -= 1
        if not roots:
            self._max = _NIL
            return saved
        self._consolidate(roots)
        return saved

    def _consolidate(self, roots):
        # Pairwise-link roots of equal degree (smaller key goes under the
        # larger), then rebuild the root ring from the degree table.
        key = self._key
        deg = self._deg
        table = [_NIL] * (self._max_degree() + 2)
        for w in roots:
            self._left[w] = w
            self._right[w] = w
        for w in roots:
            x = w
            d = deg[x]
            while True:
                if d >= len(table):
                    table.extend([_NIL] * (d + 1 - len(table)))
                u = table[d]
                if u == _NIL:
                    break
                table[d] = _NIL
                self._cmp += 1
                if key[u] > key[x]:
                    u, x = x, u
                self._link(u, x)
                d = deg[x]
            table[d] = x
        self._max = _NIL
        for x in table:
            if x == _NIL:
                continue
            if self._max == _NIL:
                self._left[x] = x
                self._right[x] = x
                self._max = x
            else:
                m = self._max
                r = self._right[m]
                self._right[m] = x
                self._left[x] = m
                self._right[x] = r
                self._left[r] = x
                self._cmp += 1
                if key[x] > key[m]:
                    self._max = x

    def _link(self, u, x):
        # u becomes a child of x.
        self._par[u] = x
        self._mark[u] = False
        c = self._child[x]
        if c == _NIL:
            self._child[x] = u
            self._left[u] = u
            self._right[u] = u
        else:
            r = self._right[c]
            self._right[c] = u
            self._left[u] = c
            self._right[u] = r
            self._left[r] = u
        self._deg[x] += 1
        self._fixes += 1

    def _max_degree(self):
        # floor(log_phi(size)); without decrease-key degrees stay <= log2(size).
        n = max(self._size, 2)
        return int(math.log(n) / _LOG_PHI)

    def _scan(self):
        """Structural snapshot for tests: root degrees, node count, order check."""
        if self._max == _NIL:
            return {"root_degrees": [], "nodes": 0, "order_ok": True, "max_ok": True}
        key = self._key
        root_degrees = []
        nodes = 0
        order_ok = True
        stack = []
        m = self._max
        x = m
        while True:
            root_degrees.append(self._deg[x])
            stack.append((x, None))
            x = self._right[x]
            if x == m:
                break
        max_ok = all(key[self._max] >= key[r] for r, _ in stack)
        while stack:
            node, parent = stack.pop()
            nodes += 1
            if parent is not None and key[node] > key[parent]:
                order_ok = False
            c = self._child[node]
            if c != _NIL:
                y = c
                while True:
                    if self._par[y] != node:
                        order_ok = False
                    stack.append((y, node))
                    y = self._right[y]
                    if y == c:
                        break
        return {
            "root_degrees": root_degrees,
            "nodes": nodes,
            "order_ok": order_ok,
            "max_ok": max_ok,
        }
