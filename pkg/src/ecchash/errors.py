"""Exception types raised across the package.

Every error the library raises on purpose derives from EccHashError, so
callers (the CLI in particular) can map failure classes to exit codes
without catching bare Exception.
"""


class EccHashError(Exception):
    """Base class for all errors raised by this package."""


class InvalidModulusError(EccHashError):
    """Field modulus is not a usable prime modulus (< 2)."""


class IncompatibleModuliError(EccHashError):
    """Arithmetic attempted between field elements of different moduli."""


class NonInvertibleError(EccHashError):
    """Multiplicative inverse requested for the zero element."""


class UnknownCurveError(EccHashError):
    """Curve name not present in the registry."""


class IncompatibleCurvesError(EccHashError):
    """Group operation attempted between points on different curves."""


class InvalidPointError(EccHashError):
    """Affine coordinates do not satisfy the curve equation."""


class PointDecodeError(EccHashError):
    """Serialized point is malformed, has the wrong length, or is off-curve."""


class DegenerateRecordError(EccHashError):
    """Record value is congruent to zero modulo the group order, so its
    hash would be the identity point, which has no affine encoding."""


class DegenerateAggregateError(EccHashError):
    """Aggregated sum landed on the identity point and cannot be encoded."""


class EmptyAggregateError(EccHashError):
    """Aggregation requested over an empty collection."""


class RecordParseError(EccHashError):
    """A record file line could not be parsed as a non-negative integer."""


class LedgerError(EccHashError):
    """Base class for ledger storage failures."""


class DuplicateEntryError(LedgerError):
    """Record id already present in the ledger file."""


class LedgerParseError(LedgerError):
    """A ledger line is structurally malformed."""


class LedgerIntegrityError(LedgerError):
    """A ledger line parsed but its stored point failed validation."""
