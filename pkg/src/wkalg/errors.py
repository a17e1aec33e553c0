"""Exception types shared across the package."""


class WkalgError(Exception):
    """Base class for all package-specific errors."""


class UnsupportedType(WkalgError):
    """Cartan type outside the supported catalog."""


class RankMismatch(WkalgError):
    """Weights over root systems of different ranks were mixed."""


class IndexOutOfRange(WkalgError):
    """A simple-reflection index outside 1..rank (or 0..rank affinely)."""


class CriticalLevel(WkalgError):
    """Operation undefined at the critical level k = -h_check."""


class WindowTooSmall(WkalgError):
    """An integral-root enumeration window cannot certify its answer."""


class NotAdmissible(WkalgError):
    """Weight is not regular dominant for its integral root system."""


class TruncationUnsound(WkalgError):
    """The alternating-sum truncation bound could not be certified."""


class SectorViolation(WkalgError):
    """Mixed-sector bracket request outside the closed subalgebra."""


class StraighteningOverflow(WkalgError):
    """An intermediate mode escaped the truncation window."""


class CriticalSpecialization(WkalgError):
    """Specialization at the critical level without the explicit flag."""


class NotDominantIntegral(WkalgError):
    """A finite-dimensional simple module was requested for a bad weight."""


class Unstabilized(WkalgError):
    """Truncated Verma covariant dimensions disagreed between windows."""
