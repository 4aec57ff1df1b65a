class SpackdError(Exception):
    """Base exception for spackd."""
    pass

class InvalidSpecError(SpackdError, ValueError):
    """Distance pair (k, t) violates 1 <= k < t."""
    pass

class NotConnectedError(SpackdError, ValueError):
    """Operation needs gcd(k, t) = 1."""
    pass

class InvalidPointError(SpackdError, ValueError):
    """Grid point outside the strip {0..t} x Z."""
    pass

class GridOverflowError(SpackdError, OverflowError):
    """Integer left the signed 64-bit range."""
    pass

class MalformedSequenceError(SpackdError, ValueError):
    """Sequence text does not follow the `INT`, `INT^INT`, `INT^inf` grammar."""
    pass

class SequenceIndexError(SpackdError, IndexError):
    """Sequence index below 1."""
    pass

class UnsupportedSequenceError(SpackdError, ValueError):
    """Sequence outside the {1,2} families handled here."""
    pass

class InvalidColorError(SpackdError, ValueError):
    """Color below 1."""
    pass

class WrongFamilyError(SpackdError, ValueError):
    """(k, t) residues do not match the schema family."""
    pass

class FamilyTooSmallError(SpackdError, ValueError):
    """t is below the minimum the schema family supports."""
    pass

class UnsupportedFamilyError(SpackdError, ValueError):
    """Family shape cannot be verified symbolically."""
    pass

class CertificateError(SpackdError, ValueError):
    """Malformed certificate or explicit assignment file."""
    pass

class ConfigError(SpackdError, ValueError):
    """Configuration value that is not an integer."""
    pass

class InvalidArgumentError(SpackdError, ValueError):
    """Count or size argument out of range (colors, window, rows, target)."""
    pass

class ConstructiveOutOfScopeError(SpackdError):
    """No coloring construction available (k < 3)."""
    pass

class TorusSizeError(SpackdError, ValueError):
    """Torus enumeration state space above the configured cap."""
    pass


class SearchError(SpackdError):
    """
    Internal consistency failure in the exact search.

    Raised when a witness produced by the search does not pass explicit
    verification, which would mean the propagation is unsound.
    """
    def __init__(self, message: str, witness: dict[int, int] | None = None):
        super().__init__(message)
        self.witness = witness
