"""Exception types shared across the package.

Every error carries a short machine-readable ``kind`` so the CLI can emit a
structured message without string matching.
"""


class WeakQFSError(Exception):
    kind = "Error"


class ParseError(WeakQFSError, ValueError):
    kind = "ParseError"


class DegreeMismatch(WeakQFSError, ValueError):
    kind = "DegreeMismatch"


class CapExceeded(WeakQFSError):
    kind = "CapExceeded"

    def __init__(self, order, cap):
        super().__init__(f"group order {order} exceeds enumeration cap {cap}")
        self.order = order
        self.cap = cap


class TrivialGroup(WeakQFSError, ValueError):
    kind = "TrivialGroup"


class NotTransitive(WeakQFSError, ValueError):
    kind = "NotTransitive"


class SizeMismatch(WeakQFSError, ValueError):
    kind = "SizeMismatch"


class NoSuchClass(WeakQFSError, ValueError):
    kind = "NoSuchClass"


class BadParameters(WeakQFSError, ValueError):
    kind = "BadParameters"


class OddDegree(BadParameters):
    kind = "OddDegree"


class RaggedRows(ParseError):
    kind = "RaggedRows"


class DependentRows(ParseError):
    kind = "DependentRows"
