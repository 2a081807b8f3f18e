"""Exception hierarchy and warnings."""


class BiharmError(Exception):
    """Base class for all library errors."""


class DomainError(BiharmError):
    """A point lies outside the domain an operation is defined on."""


class SingularityError(BiharmError):
    """Evaluation requested at a singular point of a kernel."""


class ConfigError(BiharmError):
    """Invalid configuration (resolutions, tolerances, node counts)."""


class ContractError(BiharmError):
    """Structured input violates its wire-format contract."""


class AccuracyWarning(UserWarning):
    """Result is returned but resolution limits its accuracy."""
