"""Exceptions raised by permdual"""


class PermDualError(ValueError):
    """Base class for the errors on invalid input"""


class DimensionMismatch(PermDualError):
    """Two objects live on different ground sets [n]"""


class EmptyInput(PermDualError):
    """An operation needs at least one element"""


class LabelOutOfRange(PermDualError):
    """A label is not in [n]"""


class NotATree(PermDualError):
    """The graph of a sequence is not a spanning tree"""


class WrongProduct(PermDualError):
    """A sequence does not multiply to the expected long cycle"""


class InvalidCover(PermDualError):
    """A set of trails is not a Trail Double Cover"""


class CrossingChords(PermDualError):
    """Two chords of a circle chord diagram cross"""


class NotInFdown(PermDualError):
    """A tree fails the chord-diagram properties of the factorizations of (n,...,2,1)"""


class ResourceCapExceeded(PermDualError):
    """An enumeration was requested above the configured cap"""


class ParseError(PermDualError):
    """A text input does not follow the expected format"""
