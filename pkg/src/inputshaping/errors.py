"""Exception hierarchy for the inputshaping package."""


class InputShapingError(Exception):
    """Base class for all library-specific failures."""


class InvalidModelError(InputShapingError):
    """Model parameters violate their physical constraints."""


class OverdampedError(InvalidModelError):
    """Damping ratio >= 1; only underdamped systems are supported."""


class StepSizeError(InputShapingError):
    """Integration step too large for the model's natural frequency."""


class InvalidShaperError(InputShapingError):
    """Impulse sequence violates the shaper invariants."""


class InvalidProfileError(InputShapingError):
    """Segment table violates the profile invariants."""


class InsufficientOscillationError(InputShapingError):
    """Trace does not contain enough qualifying peaks to identify."""


class NonDecayingError(InputShapingError):
    """Second peak exceeds the first beyond noise tolerance."""


class InvalidPeakError(InputShapingError):
    """Peak values unusable for logarithmic-decrement identification."""


class InsufficientTraceError(InputShapingError):
    """Trace ends before the window the metric needs."""


class ParseError(InputShapingError):
    """Input file could not be parsed; message carries file and line."""
