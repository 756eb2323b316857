"""Additively homomorphic hashing of integer records onto a curve group.

A record value v hashes to the curve point v*G.  Because scalar
multiplication distributes over addition, the group sum of individual
hashes equals the hash of the summed plaintexts:

    hash(v1) + hash(v2) + ... + hash(vn) == hash(v1 + v2 + ... + vn)

so an untrusted store holding only hash points can aggregate them in place
of the plaintexts, and the holder of the plaintexts can verify the result.

Record values are reduced modulo the group order before multiplication;
values congruent modulo the order collide by construction.  Values
congruent to zero are rejected: their hash would be the identity point,
which has no affine encoding.

Security caveat: recovering v from v*G is the elliptic-curve discrete
logarithm problem, but that hardness only applies to high-entropy scalars
comparable in size to the group order.  Hashes of small or low-entropy
values (counters, 24-bit fields, enum codes) can be inverted by exhaustive
search of the scalar space.  Do not treat this construction as
preimage-resistant for such inputs.
"""

from dataclasses import dataclass

from .curve import (
    IDENTITY,
    Point,
    get_curve,
    is_on_curve,
    point_add,
    scalar_mul,
)
from .errors import (
    DegenerateAggregateError,
    DegenerateRecordError,
    EmptyAggregateError,
    IncompatibleCurvesError,
    InvalidPointError,
    PointDecodeError,
    RecordParseError,
)
from .fieldarith import FieldElement, parse_int


@dataclass(frozen=True)
class HashPoint:
    """A hash value: a non-identity affine point, validated on construction."""

    point: Point

    def __post_init__(self):
        if self.point.is_identity:
            raise InvalidPointError("a hash point cannot be the identity")
        params = get_curve(self.point.curve)
        if not is_on_curve(self.point, params):
            raise InvalidPointError(f"hash point is off-curve: {self.point!r}")

    @property
    def curve(self):
        return self.point.curve


def parse_record(text):
    """Parse one record value: decimal, or hexadecimal with an 0x prefix.

    Negative values are rejected; records are non-negative integers.
    """
    try:
        value = parse_int(text)
    except ValueError:
        raise RecordParseError(f"not an integer record: {text.strip()!r}") from None
    if value < 0:
        raise RecordParseError(f"record must be non-negative: {text.strip()!r}")
    return value


def parse_records(lines):
    """Parse an iterable of record lines, skipping blank lines.

    Raises RecordParseError naming the 1-based line number on bad input.
    """
    records = []
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            records.append(parse_record(line))
        except RecordParseError as exc:
            raise RecordParseError(f"line {lineno}: {exc}") from None
    return records


def record_from_bytes(data):
    """Interpret a byte string as a big-endian unsigned record value."""
    return int.from_bytes(data, "big")


def hash_record(value, params):
    """Hash one record value to the point (value mod order) * G."""
    value = int(value)
    if value < 0:
        raise DegenerateRecordError(f"record must be non-negative: {value}")
    k = value % params.order
    if k == 0:
        raise DegenerateRecordError(
            f"record value {value} is congruent to 0 mod the {params.name} group "
            "order; its hash would be the identity, which cannot be encoded"
        )
    return HashPoint(scalar_mul(k, params.g))


def aggregate(hashes):
    """Group sum of hash points, folded left to right.

    The result is independent of input order.  Raises on an empty
    collection, on mixed curves, and when the total lands on the identity
    (which has no encoding).
    """
    hashes = list(hashes)
    if not hashes:
        raise EmptyAggregateError("cannot aggregate zero hash points")
    curve_names = {h.curve for h in hashes}
    if len(curve_names) > 1:
        raise IncompatibleCurvesError(
            f"cannot aggregate across curves: {', '.join(sorted(curve_names))}"
        )
    total = IDENTITY
    for h in hashes:
        total = point_add(total, h.point)
    if total.is_identity:
        raise DegenerateAggregateError(
            "aggregate is the identity point and cannot be encoded"
        )
    return HashPoint(total)


def hash_of_sum(records, params):
    """Hash of the summed plaintexts: (sum of records mod order) * G."""
    records = list(records)
    if not records:
        raise EmptyAggregateError("cannot hash an empty record collection")
    return hash_record(sum(int(r) for r in records), params)


def verify_homomorphism(records, claimed, params):
    """Whether the claimed aggregate equals the hash of the summed records.

    Comparison is exact on both coordinates.
    """
    return hash_of_sum(records, params) == claimed


def encode_point(h):
    """Canonical encoding: lowercase hex of the uncompressed octet string
    0x04 || X || Y, each coordinate zero-padded to the field byte length."""
    params = get_curve(h.curve)
    n = params.coordinate_bytes
    octets = (
        b"\x04"
        + int(h.point.x).to_bytes(n, "big")
        + int(h.point.y).to_bytes(n, "big")
    )
    return octets.hex()


def display_tuple(h):
    """Uppercase unpadded "(X,Y)" coordinate tuple for human output."""
    return f"({int(h.point.x):X},{int(h.point.y):X})"


def decode_point(text, params):
    """Decode a hash point from either supported text form.

    Accepts the canonical uncompressed hex string and the "(X,Y)" display
    tuple.  Validates coordinate range and curve membership; decoding the
    output of encode_point returns an equal HashPoint.
    """
    text = text.strip()
    if text.startswith("("):
        if not text.endswith(")") or text.count(",") != 1:
            raise PointDecodeError(f"malformed coordinate tuple: {text!r}")
        xs, ys = text[1:-1].split(",")
        try:
            x, y = int(xs.strip(), 16), int(ys.strip(), 16)
        except ValueError:
            raise PointDecodeError(f"malformed coordinate tuple: {text!r}") from None
    else:
        n = params.coordinate_bytes
        expected_len = 2 * (1 + 2 * n)
        if len(text) != expected_len:
            raise PointDecodeError(
                f"expected {expected_len} hex chars for {params.name}, got {len(text)}"
            )
        try:
            octets = bytes.fromhex(text)
        except ValueError:
            raise PointDecodeError(f"invalid hex: {text!r}") from None
        if octets[0] != 0x04:
            raise PointDecodeError(
                f"expected uncompressed-point prefix 04, got {octets[0]:02x}"
            )
        x = int.from_bytes(octets[1 : 1 + n], "big")
        y = int.from_bytes(octets[1 + n :], "big")
    if not (0 <= x < params.p and 0 <= y < params.p):
        raise PointDecodeError(f"coordinate out of field range for {params.name}")
    pt = Point(params.name, FieldElement(x, params.p), FieldElement(y, params.p))
    if not is_on_curve(pt, params):
        raise PointDecodeError(f"point is not on {params.name}")
    return HashPoint(pt)
