"""Exception types raised across the package."""


class GroupError(Exception):
    """Base class for every error raised by normlat."""


class ParseError(GroupError, ValueError):
    """A group specification string could not be parsed."""


class UnknownName(ParseError):
    pass


class InvalidPermutation(ParseError):
    pass


class ClosureCapExceeded(GroupError):
    pass


class CapExceeded(GroupError):
    pass


class TrivialGroup(GroupError):
    """The operation needs a group of order at least 2."""


class NotNormal(GroupError):
    pass


class NotElementaryAbelian(GroupError):
    pass


class NotSemisimple(GroupError):
    """The radical is nontrivial, so the group is not a product of simple groups."""


class NotComparable(GroupError):
    pass


class NotInLattice(GroupError):
    pass


class DomainError(GroupError, ValueError):
    pass


class BudgetExceeded(GroupError):
    pass


class PrimeSearchFailed(GroupError):
    pass


class KernelNotNormal(GroupError):
    pass


class PreconditionViolated(GroupError):
    pass


class InternalInconsistency(GroupError):
    """An internal cross-check between two computations failed."""
