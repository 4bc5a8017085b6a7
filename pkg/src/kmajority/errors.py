"""Exception types shared across the package."""


class KMajorityError(Exception):
    """Base class for all errors raised by this package."""


class BuildError(KMajorityError, ValueError):
    """Invalid graph construction input (self-loop, duplicate edge, bad index)."""


class InputError(KMajorityError, ValueError):
    """An operation received an argument outside its contract."""


class FormatError(KMajorityError, ValueError):
    """Malformed graph or colouring text file."""


class PreconditionError(KMajorityError):
    """A theorem hypothesis (degree bound, bipartiteness, ...) does not hold."""


class InternalInvariantError(KMajorityError):
    """A certified invariant failed post-hoc: a bug or a hypothesis breach."""


class SelectorExhaustedError(InternalInvariantError):
    """No admissible bad vertex was available for an Euler split."""
