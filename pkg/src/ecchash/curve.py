"""Short-Weierstrass group law over the five NIST prime curves.

Curve equation: y^2 = x^3 + a*x + b (mod p).  Points are affine pairs or
the identity (point at infinity); group operations use the textbook slope
formulas with one field inversion per operation.  Scalar multiplication is
plain left-to-right double-and-add.

Domain parameters are the NIST SP 800-186 values, embedded as decimal
strings and checked by the registry validation tests (base point on curve,
order * G == identity).
"""

from dataclasses import dataclass

from gmpy2 import mpz

from .errors import (
    IncompatibleCurvesError,
    InvalidPointError,
    UnknownCurveError,
)
from .fieldarith import FieldElement, inv_mod


@dataclass(frozen=True)
class Point:
    """A curve group element: affine coordinates, or the identity.

    The identity carries no coordinates and no curve tag; affine points are
    tagged with the name of the curve they live on.
    """

    curve: str | None
    x: FieldElement | None
    y: FieldElement | None

    @property
    def is_identity(self):
        return self.x is None

    def __repr__(self):
        if self.is_identity:
            return "Point(identity)"
        return f"Point({self.curve}, x={int(self.x):#x}, y={int(self.y):#x})"


IDENTITY = Point(None, None, None)


@dataclass(frozen=True)
class CurveParams:
    """Domain parameters for one named curve."""

    name: str
    p: int
    a: int
    b: int
    g: Point
    order: int
    security_strength: int

    @property
    def coordinate_bytes(self):
        """Byte length of one zero-padded field element."""
        return (int(self.p).bit_length() + 7) // 8


def _curve(name, security_strength, p, a, b, gx, gy, order):
    p, a, b = mpz(p), mpz(a), mpz(b)
    g = Point(name, FieldElement(mpz(gx), p), FieldElement(mpz(gy), p))
    return CurveParams(
        name=name,
        p=p,
        a=a,
        b=b,
        g=g,
        order=mpz(order),
        security_strength=security_strength,
    )


# NIST SP 800-186 domain parameters, decimal.
_REGISTRY = {
    c.name: c
    for c in (
        _curve(
            "P-192",
            security_strength=80,
            p="6277101735386680763835789423207666416083908700390324961279",
            a="6277101735386680763835789423207666416083908700390324961276",
            b="2455155546008943817740293915197451784769108058161191238065",
            gx="602046282375688656758213480587526111916698976636884684818",
            gy="174050332293622031404857552280219410364023488927386650641",
            order="6277101735386680763835789423176059013767194773182842284081",
        ),
        _curve(
            "P-224",
            security_strength=112,
            p="26959946667150639794667015087019630673557916260026308143510066298881",
            a="26959946667150639794667015087019630673557916260026308143510066298878",
            b="18958286285566608000408668544493926415504680968679321075787234672564",
            gx="19277929113566293071110308034699488026831934219452440156649784352033",
            gy="19926808758034470970197974370888749184205991990603949537637343198772",
            order="26959946667150639794667015087019625940457807714424391721682722368061",
        ),
        _curve(
            "P-256",
            security_strength=128,
            p="115792089210356248762697446949407573530086143415290314195533631308867097853951",
            a="115792089210356248762697446949407573530086143415290314195533631308867097853948",
            b="41058363725152142129326129780047268409114441015993725554835256314039467401291",
            gx="48439561293906451759052585252797914202762949526041747995844080717082404635286",
            gy="36134250956749795798585127919587881956611106672985015071877198253568414405109",
            order="115792089210356248762697446949407573529996955224135760342422259061068512044369",
        ),
        _curve(
            "P-384",
            security_strength=192,
            p="39402006196394479212279040100143613805079739270465446667948293404245721771496870329047266088258938001861606973112319",
            a="39402006196394479212279040100143613805079739270465446667948293404245721771496870329047266088258938001861606973112316",
            b="27580193559959705877849011840389048093056905856361568521428707301988689241309860865136260764883745107765439761230575",
            gx="26247035095799689268623156744566981891852923491109213387815615900925518854738050089022388053975719786650872476732087",
            gy="8325710961489029985546751289520108179287853048861315594709205902480503199884419224438643760392947333078086511627871",
            order="39402006196394479212279040100143613805079739270465446667946905279627659399113263569398956308152294913554433653942643",
        ),
        _curve(
            "P-521",
            security_strength=256,
            p="6864797660130609714981900799081393217269435300143305409394463459185543183397656052122559640661454554977296311391480858037121987999716643812574028291115057151",
            a="6864797660130609714981900799081393217269435300143305409394463459185543183397656052122559640661454554977296311391480858037121987999716643812574028291115057148",
            b="1093849038073734274511112390766805569936207598951683748994586394495953116150735016013708737573759623248592132296706313309438452531591012912142327488478985984",
            gx="2661740802050217063228768716723360960729859168756973147706671368418802944996427808491545080627771902352094241225065558662157113545570916814161637315895999846",
            gy="3757180025770020463545507224491183603594455134769762486694567779615544477440556316691234405012945539562144444537289428522585666729196580810124344277578376784",
            order="6864797660130609714981900799081393217269435300143305409394463459185543183397655394245057746333217197532963996371363321113864768612440380340372808892707005449",
        ),
    )
}

CURVE_NAMES = tuple(_REGISTRY)

_ALIASES = {name.replace("-", "").upper(): name for name in CURVE_NAMES}


def get_curve(name):
    """Look up registered curve parameters by name.

    Accepts the canonical form ("P-224") and relaxed spellings ("p224",
    "P224").  Raises UnknownCurveError for anything else.
    """
    key = str(name).strip().upper().replace("-", "")
    try:
        return _REGISTRY[_ALIASES[key]]
    except KeyError:
        raise UnknownCurveError(
            f"unknown curve {name!r}; registered: {', '.join(CURVE_NAMES)}"
        ) from None


# Internal group law on raw mpz pairs; None stands for the identity.  These
# run inside scalar multiplication and aggregation loops, so they avoid
# FieldElement allocation.


def _on_curve_raw(x, y, params):
    return (y * y - (x * x * x + params.a * x + params.b)) % params.p == 0


def _add_raw(pt1, pt2, a, p):
    if pt1 is None:
        return pt2
    if pt2 is None:
        return pt1
    x1, y1 = pt1
    x2, y2 = pt2
    if x1 == x2:
        if (y1 + y2) % p == 0:
            # opposite points, or doubling a point with y == 0
            return None
        lam = (3 * x1 * x1 + a) * inv_mod(2 * y1, p) % p
    else:
        lam = (y2 - y1) * inv_mod(x2 - x1, p) % p
    x3 = (lam * lam - x1 - x2) % p
    return x3, (lam * (x1 - x3) - y1) % p


def _double_raw(pt, a, p):
    if pt is None:
        return None
    x1, y1 = pt
    if y1 == 0:
        # tangent is vertical
        return None
    lam = (3 * x1 * x1 + a) * inv_mod(2 * y1, p) % p
    x3 = (lam * lam - 2 * x1) % p
    return x3, (lam * (x1 - x3) - y1) % p


def _mul_raw(k, pt, a, p):
    """Left-to-right double-and-add; k >= 0."""
    if k == 0 or pt is None:
        return None
    acc = None
    for bit in bin(k)[2:]:
        acc = _double_raw(acc, a, p)
        if bit == "1":
            acc = _add_raw(acc, pt, a, p)
    return acc


def _unwrap(pt):
    return pt.x.value, pt.y.value


def _wrap(raw, params):
    if raw is None:
        return IDENTITY
    x, y = raw
    return Point(params.name, FieldElement(x, params.p), FieldElement(y, params.p))


def _require_on_curve(pt, params):
    if not _on_curve_raw(pt.x.value, pt.y.value, params):
        raise InvalidPointError(f"point is not on {params.name}: {pt!r}")


def is_on_curve(pt, params):
    """Whether pt satisfies y^2 == x^3 + a*x + b on the given curve.

    The identity is on every curve by convention; an affine point tagged
    with a different curve name is not on this one.
    """
    if pt.is_identity:
        return True
    if pt.curve != params.name:
        return False
    return _on_curve_raw(pt.x.value, pt.y.value, params)


def point_neg(pt):
    """Group inverse: (x, y) -> (x, -y); identity maps to itself."""
    if pt.is_identity:
        return pt
    return Point(pt.curve, pt.x, -pt.y)


def point_add(pt1, pt2):
    """Full group addition, covering identity, inverse, and doubling cases."""
    if pt1.is_identity:
        return pt2
    if pt2.is_identity:
        return pt1
    if pt1.curve != pt2.curve:
        raise IncompatibleCurvesError(f"cannot add {pt1.curve} point to {pt2.curve} point")
    params = get_curve(pt1.curve)
    _require_on_curve(pt1, params)
    _require_on_curve(pt2, params)
    return _wrap(_add_raw(_unwrap(pt1), _unwrap(pt2), params.a, params.p), params)


def point_double(pt):
    """Tangent-line doubling; identity and y == 0 double to the identity."""
    if pt.is_identity:
        return pt
    params = get_curve(pt.curve)
    _require_on_curve(pt, params)
    return _wrap(_double_raw(_unwrap(pt), params.a, params.p), params)


def scalar_mul(k, pt):
    """k-fold group sum of pt, by left-to-right double-and-add."""
    k = int(k)
    if k < 0:
        raise ValueError(f"scalar must be non-negative, got {k}")
    if pt.is_identity:
        return pt
    params = get_curve(pt.curve)
    _require_on_curve(pt, params)
    return _wrap(_mul_raw(k, _unwrap(pt), params.a, params.p), params)
