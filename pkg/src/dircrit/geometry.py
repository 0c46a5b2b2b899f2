"""Exact planar geometry over Q(sqrt D), witness families and rotational sweeps.

Coordinates live in a single quadratic field ``Q(sqrt D)`` with D in
{1, 2, 5}; every comparison is decided exactly.  A configuration's circular
sequence is computed by sorting its connecting-line directions by angle and
ordering the points by projection just after each direction, so no epsilon
ever enters the computation.

Regular polygons are the exception: their vertices do not fit in one fixed
quadratic field, so :func:`polygon_sequence` sweeps them with rational
multiples of pi instead.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
import math

from .core import validate
from .errors import (
    AllCollinear,
    DivisionByZero,
    InvalidParams,
    MixedDiscriminants,
)

FIELDS = (1, 2, 5)


def _sign(x):
    return (x > 0) - (x < 0)


@total_ordering
class FieldScalar:
    """Exact number ``a + b*sqrt(D)`` with rational a, b.

    A zero ``b`` always normalizes D to 1, so rationals mix freely with any
    field.  Operands with two different irrational D raise MixedDiscriminants.

    >>> tau = FieldScalar(Fraction(1, 2), Fraction(1, 2), 5)
    >>> tau * tau == tau + 1
    True
    """

    __slots__ = ("a", "b", "D")

    def __init__(self, a=0, b=0, D=1):
        if D not in FIELDS:
            raise InvalidParams(f"unsupported discriminant D={D}")
        a, b = Fraction(a), Fraction(b)
        if D == 1:
            a, b = a + b, Fraction(0)
        if b == 0:
            D = 1
        self.a, self.b, self.D = a, b, D

    @classmethod
    def of(cls, x):
        return x if isinstance(x, FieldScalar) else cls(x)

    def _common(self, other):
        other = FieldScalar.of(other)
        if self.D != 1 and other.D != 1 and self.D != other.D:
            raise MixedDiscriminants(f"sqrt{self.D} mixed with sqrt{other.D}")
        return other, max(self.D, other.D)

    def __add__(self, other):
        if not isinstance(other, (FieldScalar, int, Fraction)):
            return NotImplemented
        o, D = self._common(other)
        return FieldScalar(self.a + o.a, self.b + o.b, D)

    __radd__ = __add__

    def __neg__(self):
        return FieldScalar(-self.a, -self.b, self.D)

    def __sub__(self, other):
        if not isinstance(other, (FieldScalar, int, Fraction)):
            return NotImplemented
        return self + (-FieldScalar.of(other))

    def __rsub__(self, other):
        return FieldScalar.of(other) - self

    def __mul__(self, other):
        if not isinstance(other, (FieldScalar, int, Fraction)):
            return NotImplemented
        o, D = self._common(other)
        return FieldScalar(self.a * o.a + self.b * o.b * D, self.a * o.b + self.b * o.a, D)

    __rmul__ = __mul__

    def conjugate(self):
        return FieldScalar(self.a, -self.b, self.D)

    def norm(self):
        """Field norm ``a^2 - D b^2`` (rational, zero only for zero)."""
        return self.a * self.a - self.D * self.b * self.b

    def __truediv__(self, other):
        if not isinstance(other, (FieldScalar, int, Fraction)):
            return NotImplemented
        o, _ = self._common(other)
        if o.sign() == 0:
            raise DivisionByZero("division by zero in Q(sqrt D)")
        num = self * o.conjugate()
        nrm = o.norm()
        return FieldScalar(num.a / nrm, num.b / nrm, num.D)

    def __rtruediv__(self, other):
        return FieldScalar.of(other) / self

    def sign(self):
        """Exact sign of ``a + b sqrt D``."""
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: whichever of a^2 and D b^2 is larger wins
        return sa * _sign(self.a * self.a - self.D * self.b * self.b)

    def __eq__(self, other):
        if not isinstance(other, (FieldScalar, int, Fraction)):
            return NotImplemented
        o = FieldScalar.of(other)
        return (self.a, self.b, self.D) == (o.a, o.b, o.D)

    def __lt__(self, other):
        if not isinstance(other, (FieldScalar, int, Fraction)):
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self):
        return hash(self.a) if self.b == 0 else hash((self.a, self.b, self.D))

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.D)

    def __repr__(self):
        if self.b == 0:
            return f"FieldScalar({self.a})"
        return f"FieldScalar({self.a}, {self.b}, {self.D})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a}{'+' if self.b > 0 else '-'}{abs(self.b)}*sqrt{self.D}"


GOLDEN = FieldScalar(Fraction(1, 2), Fraction(1, 2), 5)


def _fs(x):
    return FieldScalar.of(x)


# -- configurations -----------------------------------------------------------

@dataclass(frozen=True)
class Configuration:
    """Finite planar point set with coordinates in ``Q(sqrt D)``."""

    D: int
    points: tuple

    def __post_init__(self):
        if self.D not in FIELDS:
            raise InvalidParams(f"unsupported discriminant D={self.D}")
        pts = tuple((_fs(x), _fs(y)) for x, y in self.points)
        for x, y in pts:
            for c in (x, y):
                if c.D not in (1, self.D):
                    raise MixedDiscriminants(f"coordinate {c} outside Q(sqrt{self.D})")
        if len(set(pts)) != len(pts):
            raise InvalidParams("configuration points must be distinct")
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    def is_centrally_symmetric(self):
        pts = set(self.points)
        return all((-x, -y) in pts for x, y in self.points)

    def transformed(self, matrix, offset=(0, 0)):
        """Image under the affine map ``p -> matrix @ p + offset``."""
        (a, b), (c, d) = matrix
        ox, oy = offset
        return Configuration(self.D, tuple(
            (a * x + b * y + ox, c * x + d * y + oy) for x, y in self.points))


def direction(p, q):
    """Canonical direction of the line pq: ``(dx/dy, 1)``, or ``(1, 0)`` if horizontal.

    Two segments are parallel exactly when their canonical directions are equal.
    """
    dx, dy = q[0] - p[0], q[1] - p[1]
    if dy.sign() == 0:
        if dx.sign() == 0:
            raise InvalidParams("coincident points have no direction")
        return (_fs(1), _fs(0))
    return (dx / dy, _fs(1))


def _angle_key(u):
    # angle in [0, pi): horizontal first, then cot(theta) = dx/dy decreasing
    return (0, _fs(0)) if u[1].sign() == 0 else (1, -u[0])


def directions(cfg):
    """Distinct directions of ``cfg`` sorted by angle in [0, pi)."""
    pts = cfg.points
    found = {direction(pts[i], pts[j]) for i in range(len(pts)) for j in range(i + 1, len(pts))}
    return sorted(found, key=_angle_key)


def direction_count(cfg):
    """Number of distinct slopes determined by the configuration."""
    if len(cfg) < 2:
        raise AllCollinear("need at least two points")
    dirs = directions(cfg)
    if len(dirs) == 1:
        raise AllCollinear("all points lie on one line")
    return len(dirs)


def _dot(p, v):
    return p[0] * v[0] + p[1] * v[1]


def circular_sequence(cfg):
    """Halfperiod of the circular sequence of ``cfg``.

    Labels are 1-based indices into ``cfg.points``.  Row ``i`` orders the
    points by projection onto the normal of direction ``theta_i`` with ties
    broken along the direction itself, which is the order just after the
    line sweeps past ``theta_i``; row 0 uses the opposite tie-break for the
    order just before ``theta_1``.
    """
    dirs = directions(cfg)
    if len(dirs) < 2:
        raise AllCollinear("all points lie on one line")
    pts = cfg.points
    idx = range(len(pts))

    def order(u, after):
        nrm = (u[1], -u[0])
        s = 1 if after else -1
        return tuple(i + 1 for i in sorted(idx, key=lambda i: (_dot(pts[i], nrm), s * _dot(pts[i], u))))

    rows = [order(dirs[0], after=False)]
    rows.extend(order(u, after=True) for u in dirs)
    return validate(rows)


# -- regular polygons by rational angles -----------------------------------------

def _angular_distance(x):
    """Distance of ``x * pi`` from 0 on the circle, in units of pi."""
    r = x % 2
    return min(r, 2 - r)


def polygon_sequence(m):
    """Circular sequence of the regular 2m-gon.

    Vertex ``k`` sits at angle ``k*pi/m``; every chord direction is a multiple
    of ``pi/(2m)``, so sampling the projection direction at the midpoints
    ``(2i+1) pi/(4m)`` visits each cell once.  Points are ordered by
    decreasing angular distance to the projection direction, i.e. by
    increasing projection.
    """
    if not isinstance(m, int) or m < 2:
        raise InvalidParams(f"regular 2m-gon needs integer m >= 2, got {m!r}")
    rows = []
    for i in range(2 * m + 1):
        phi = Fraction(2 * i + 1, 4 * m)
        dist = [_angular_distance(Fraction(k, m) - phi) for k in range(2 * m)]
        rows.append(tuple(k + 1 for k in sorted(range(2 * m), key=lambda k: -dist[k])))
    return validate(rows)


# -- witness families -----------------------------------------------------------

@dataclass(frozen=True)
class Polygon:
    """Vertices of the regular polygon with ``sides`` (even) vertices."""

    sides: int

    def __str__(self):
        return f"Polygon({self.sides})"


@dataclass(frozen=True)
class ExpCross:
    """Exponential cross without its center: ``(+-lam^i, 0), (0, +-lam^j)``."""

    lam: Fraction
    s: int
    t: int

    def __str__(self):
        return f"ExpCross({self.lam},{self.s},{self.t})"


@dataclass(frozen=True)
class Tricolumnar:
    """``(0, +-k)`` for k in 1..d1 together with ``(+-1, 0)`` and ``+-(1, 1)``."""

    d1: int

    def __str__(self):
        return f"Tricolumnar({self.d1})"


@dataclass(frozen=True)
class Bipencil:
    """``(0, +-k)`` for k in 1..d1 together with ``(+-1, 0)``."""

    d1: int

    def __str__(self):
        return f"Bipencil({self.d1})"


@dataclass(frozen=True)
class Z5_12:
    """Twelve golden-ratio points on three lines through the origin."""

    def __str__(self):
        return "Z5_12"


@dataclass(frozen=True)
class Z5_13:
    """:class:`Z5_12` together with the origin."""

    def __str__(self):
        return "Z5_13"


@dataclass(frozen=True)
class RegularPolygon:
    """Regular 2m-gon described by vertex angles ``k*pi/m`` instead of coordinates."""

    m: int

    def __len__(self):
        return 2 * self.m

    def float_points(self):
        return [(math.cos(k * math.pi / self.m), math.sin(k * math.pi / self.m))
                for k in range(2 * self.m)]


def _symmetric(pts):
    out = []
    for x, y in pts:
        out.append((x, y))
        out.append((-x, -y))
    return out


def gen_family(spec):
    """Configuration for a family spec (a :class:`RegularPolygon` for polygons)."""
    if isinstance(spec, Polygon):
        if spec.sides < 4 or spec.sides % 2:
            raise InvalidParams(f"polygon needs an even number >= 4 of sides, got {spec.sides}")
        return RegularPolygon(spec.sides // 2)
    if isinstance(spec, ExpCross):
        lam = Fraction(spec.lam)
        if lam <= 1 or spec.s < 1 or spec.t < 1:
            raise InvalidParams(f"ExpCross needs lam > 1 and s, t >= 1: {spec}")
        pts = [(lam ** i, 0) for i in range(spec.s + 1)]
        pts += [(0, lam ** j) for j in range(spec.t + 1)]
        return Configuration(1, tuple(_symmetric(pts)))
    if isinstance(spec, (Tricolumnar, Bipencil)):
        if spec.d1 < 2:
            raise InvalidParams(f"{type(spec).__name__} needs d1 >= 2: {spec}")
        pts = [(0, k) for k in range(1, spec.d1 + 1)] + [(1, 0)]
        if isinstance(spec, Tricolumnar):
            pts.append((1, 1))
        return Configuration(1, tuple(_symmetric(pts)))
    if isinstance(spec, (Z5_12, Z5_13)):
        one, tau = _fs(1), GOLDEN
        zero = _fs(0)
        pts = [(zero, tau), (zero, one), (tau, zero), (one, zero), (tau, tau), (one, one)]
        pts = _symmetric(pts)
        if isinstance(spec, Z5_13):
            pts.append((zero, zero))
        return Configuration(5, tuple(pts))
    raise InvalidParams(f"unknown family spec {spec!r}")


def sweep(obj):
    """Circular sequence of a Configuration, RegularPolygon or family spec."""
    if isinstance(obj, (Polygon, ExpCross, Tricolumnar, Bipencil, Z5_12, Z5_13)):
        obj = gen_family(obj)
    if isinstance(obj, RegularPolygon):
        return polygon_sequence(obj.m)
    return circular_sequence(obj)
