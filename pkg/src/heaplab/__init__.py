"""Layered heap-of-heaps priority queues, baselines, and a test/bench harness.

The default import surface binds the selected kernel backend (compiled
Cython extension when built, pure Python otherwise); see
``heaplab.backend`` for explicit control.
"""

from .arity import arity_chain, compute_arity, local_children, local_height, local_parent
from .backend import backend_name, load
from .counters import CheckReport, OpCounters, ViolationReport
from .errors import HeapEmpty, HeapFull

_kernels = load()

BACKEND = backend_name(_kernels)
LayeredHeap = _kernels.LayeredHeap
FaithfulHeap = _kernels.FaithfulHeap
BinaryHeap = _kernels.BinaryHeap
FibHeap = _kernels.FibHeap

__all__ = [
    "BACKEND",
    "BinaryHeap",
    "CheckReport",
    "FaithfulHeap",
    "FibHeap",
    "HeapEmpty",
    "HeapFull",
    "LayeredHeap",
    "OpCounters",
    "ViolationReport",
    "arity_chain",
    "backend_name",
    "compute_arity",
    "load",
    "local_children",
    "local_height",
    "local_parent",
]
