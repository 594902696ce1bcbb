"""Exception types shared across the toolkit."""


class ShapeError(ValueError):
    """Tensor dimensions are incompatible with the requested operation."""


class FormatError(ValueError):
    """Serialized bytes are malformed, truncated, or inconsistent."""


class CalibrationError(RuntimeError):
    """Calibration input is degenerate (e.g. all-zero data)."""


class ConfigError(ValueError):
    """A configuration value is invalid or inconsistent."""


class TrainingError(RuntimeError):
    """Training diverged or was driven into an invalid state."""


class StageError(RuntimeError):
    """A pipeline stage failed; the message names the stage."""
