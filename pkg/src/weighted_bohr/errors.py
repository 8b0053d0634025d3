"""Exception hierarchy shared by all modules."""


class BohrError(Exception):
    """Base class for errors raised by this package."""


class DomainError(BohrError, ValueError):
    """A numeric argument lies outside the operation's domain."""


class CapabilityError(BohrError):
    """The operation cannot produce a rigorous answer for this input."""


class PreconditionError(BohrError, ValueError):
    """A structural hypothesis on the inputs does not hold."""


class NoRadiusError(BohrError):
    """The radius equation has no sign change on (0, 1 - 1e-6).

    ``holds_everywhere`` is set when G stays positive on the whole interval,
    i.e. the condition never fails inside the disk.
    """

    def __init__(self, message: str, holds_everywhere: bool = False):
        super().__init__(message)
        self.holds_everywhere = holds_everywhere


class ToolingError(BohrError):
    """A violation did not survive recomputation at doubled truncation order."""
