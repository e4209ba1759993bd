"""Exception types shared by every queue structure in the package."""


class HeapEmpty(IndexError):
    """Raised by pop/peek on an empty queue."""


class HeapFull(ValueError):
    """Raised by insert on a fixed-capacity structure that is full."""
