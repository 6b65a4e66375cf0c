"""Exception hierarchy shared by every module of the package."""


class M0nFlagError(Exception):
    """Base class for all errors raised by m0nflag."""


class TaxonCountTooSmall(M0nFlagError, ValueError):
    pass


class TaxonCountTooLarge(M0nFlagError, ValueError):
    """n exceeds the 64-label bitmask ceiling."""


class TaxonCountMismatch(M0nFlagError, ValueError):
    pass


class LabelOutOfRange(M0nFlagError, ValueError):
    pass


class EmptyOrFullSubset(M0nFlagError, ValueError):
    pass


class NotStable(M0nFlagError, ValueError):
    """A split with a side of size < 2 was given where a boundary divisor is needed."""


class ParseError(M0nFlagError, ValueError):
    pass


class InvalidTree(M0nFlagError, ValueError):
    pass


class DegreeViolation(InvalidTree):
    """A degree-2 vertex was met while suppression was disabled."""


class IncompatibleSplit(M0nFlagError, ValueError):
    """No vertex of the tree separates the split; it cannot be popped."""


class IncompatibleSystem(M0nFlagError, ValueError):
    """A split system is not pairwise compatible.

    Attributes
    ----------
    pair : tuple[Split, Split]
        The first incompatible pair in canonical order.
    """

    def __init__(self, message, pair):
        super().__init__(message)
        self.pair = pair


class EnumerationTooLarge(M0nFlagError, ValueError):
    pass
