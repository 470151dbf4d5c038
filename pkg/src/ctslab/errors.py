"""Exception types shared across the package."""


class CtsLabError(Exception):
    """Base class for every error raised by this package."""


class InvalidSpec(CtsLabError):
    """Malformed action-set description."""


class EnumerationTooLarge(CtsLabError):
    """Action set exceeds the configured enumeration cap."""


class InvalidWeights(CtsLabError):
    """Weight vector has the wrong length or non-finite entries."""


class UncoverableItem(CtsLabError):
    """Some item belongs to no action, so no covering sequence exists."""


class NonUniqueOptimum(CtsLabError):
    """Two actions attain the maximal expected reward."""


class NotInitialized(CtsLabError):
    """Gaussian-posterior agent asked to sample before every item was observed."""


class NonBinaryObservation(CtsLabError):
    """Beta-posterior agent received a reward outside {0, 1}."""


class MaskViolation(CtsLabError):
    """Observed reward vector is nonzero outside the played action."""


class UnsupportedAgent(CtsLabError):
    """Diagnostics requested for an agent kind they do not support."""


class InsufficientReps(CtsLabError):
    """Replication count too small for the bound being checked."""


class InvalidDelta(CtsLabError):
    """Deviation parameter outside the valid range for a tail bound."""


class DegenerateGap(CtsLabError):
    """Minimal gap is zero or negative."""


class DomainError(CtsLabError):
    """Argument outside the mathematical domain of a schedule function."""
