"""Exception types shared across the toolkit."""

from __future__ import annotations


class ToolkitError(Exception):
    """Base class for all toolkit errors."""


class SupportOutsideWindow(ToolkitError):
    """A sequence has coefficients outside the window a space is defined on."""


class InvalidSpaceParams(ToolkitError):
    """Space or weight parameters violate their constraints."""


class NonUnimodularZ(ToolkitError):
    """Modulation parameter z is not on the unit circle."""


class ModularDivergesForAllT(ToolkitError):
    """No finite bracket for the Luxemburg infimum after bounded doubling."""


class WindowTooSmall(ToolkitError):
    """Requested shift power does not fit inside the evaluation window."""


class UnboundedShift(ToolkitError):
    """Shift could not be certified bounded; carries the classification verdict."""

    def __init__(self, direction: str, verdict=None):
        super().__init__(f"shift ({direction}) not certified bounded")
        self.direction = direction
        self.verdict = verdict


class BothShiftsUnbounded(ToolkitError):
    """Both shift directions unbounded; the spectrum fills the plane."""

    def __init__(self, diagnostic: str = "spec(S) = C"):
        super().__init__(diagnostic)
        self.diagnostic = diagnostic


class BandwidthExceedsWindow(ToolkitError):
    """Symbol bandwidth too large for the requested finite section."""


class MethodSpaceMismatch(ToolkitError):
    """Operator-norm method is incompatible with the section's space."""


class ZeroWithNegativePowers(ToolkitError):
    """Symbol with negative powers evaluated at z = 0."""


class NegativeSupportInput(ToolkitError):
    """Half-line operation received a sequence with negative support."""


class BandExceedsBlackBox(ToolkitError):
    """Requested extraction band exceeds the operator's declared band limit."""


class MatrixTooLargeForOracle(ToolkitError):
    """Dense search oracle only accepts small matrices."""


class ConfigParseError(ToolkitError):
    """Config text could not be parsed at all."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class ConfigValidationError(ToolkitError):
    """Config parsed but failed validation; carries every error found."""

    def __init__(self, errors: list[str]):
        super().__init__("; ".join(errors))
        self.errors = list(errors)
