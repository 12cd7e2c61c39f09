"""Exception types shared across the package."""


class NbhdError(Exception):
    """Base class for every error raised by nbhdpoly."""


class GraphError(NbhdError, ValueError):
    """Invalid graph construction, query, or edge-list input."""


class PreconditionError(NbhdError, ValueError):
    """A decomposition rule was called on an instance it does not cover."""


class LimitExceeded(NbhdError):
    """A computation was refused because it would exceed a configured bound."""


class OracleLimitExceeded(LimitExceeded):
    pass


class CostGuardExceeded(LimitExceeded):
    pass
