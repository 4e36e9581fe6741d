"""Exception hierarchy for the root cluster toolkit"""


class RootClusterError(Exception):
    """Base class; ``exit_code`` is what the CLI returns for it"""

    exit_code = 2


class InputError(RootClusterError, ValueError):
    """Caller supplied something the calculus cannot accept"""

    exit_code = 2


class DegreeMismatch(InputError):
    pass


class InvalidPermutation(InputError):
    pass


class NotASubgroup(InputError):
    pass


class ParentMismatch(InputError):
    pass


class InvalidRootPair(InputError):
    pass


class InvalidExtensionPair(InputError):
    pass


class NotAnExtension(InputError):
    """U_M ≤ U_L ≤ Γ does not hold"""


class BadOrdering(InputError):
    """Tower ordering is not a system of cluster representatives"""


class BadParameter(InputError):
    pass


class DegreeTooSmall(InputError):
    pass


class SpecFormatError(InputError):
    pass


class UnknownFixture(InputError):
    pass


class GroupTooLarge(RootClusterError, RuntimeError):
    """An enumeration went past a configured resource cap"""

    exit_code = 3

    def __init__(self, cap: int, what: str = "elements"):
        self.cap = cap
        self.what = what
        super().__init__(f"Enumeration exceeded cap of {cap} {what}")


class InvariantViolation(RootClusterError, RuntimeError):
    """A cross-check that must hold did not"""

    exit_code = 1
