"""Exception types shared across the package."""


class SchedOptError(Exception):
    """Base class for all schedopt errors."""


class ConfigurationError(SchedOptError):
    """Invalid configuration value (CLI exit code 2)."""


class ParameterError(ConfigurationError):
    """Invalid tunable-parameter value; carries the offending field name."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class OffGridError(ParameterError):
    """Value does not lie on the parameter's quantization grid."""


class OutOfRangeError(ParameterError):
    """Value lies outside the parameter's allowed range."""


class DegenerateIblerError(ParameterError):
    """IBLER target of 1.0 is representable but rejected (outer-loop step-size division guard)."""

    def __init__(self):
        super().__init__("ibler_target", "value 1.0 is rejected (OLLA step ratio diverges)")


class SessionTooShortError(SchedOptError):
    """Session produced zero complete aggregation bins."""


class MissingKpiError(SchedOptError):
    """Objective references a KPI that the KPI vector does not provide."""


class EnvironmentInfeasibleError(SchedOptError):
    """Baseline session cannot satisfy the scheduling constraints (CLI exit code 3)."""


class BaselineInfeasibleError(SchedOptError):
    """No baseline session satisfied the scheduling constraints (CLI exit code 3)."""
