"""Exact quaternions with golden-field components; the unit icosians.

The 120 unit icosians coincide, as 4-tuples (w, x, y, z), with the H4
roots; their integer span is the icosian ring, whose membership test
delegates to the H4 quasilattice constraint machinery.
"""

from __future__ import annotations

from functools import lru_cache

from .ring import DomainError, QuadraticRingElement
from .roots import H4, roots
from .vectors import ExactVector


class GoldenQuaternion:
    """Quaternion w + x*i + y*j + z*k over Q(sqrt(5))."""

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w, x, y, z):
        conv = lambda c: c if isinstance(c, QuadraticRingElement) else \
            QuadraticRingElement.rational(c)
        self.w, self.x, self.y, self.z = conv(w), conv(x), conv(y), conv(z)

    @staticmethod
    def from_vector(v: ExactVector) -> "GoldenQuaternion":
        return GoldenQuaternion(*v.coords)

    def as_vector(self) -> ExactVector:
        return ExactVector((self.w, self.x, self.y, self.z))

    def components(self):
        return (self.w, self.x, self.y, self.z)

    def __eq__(self, other):
        return isinstance(other, GoldenQuaternion) and \
            self.components() == other.components()

    def __hash__(self):
        return hash(self.components())

    def __add__(self, other):
        return GoldenQuaternion(self.w + other.w, self.x + other.x,
                                self.y + other.y, self.z + other.z)

    def __sub__(self, other):
        return GoldenQuaternion(self.w - other.w, self.x - other.x,
                                self.y - other.y, self.z - other.z)

    def __neg__(self):
        return GoldenQuaternion(-self.w, -self.x, -self.y, -self.z)

    def scale(self, s):
        return GoldenQuaternion(self.w * s, self.x * s, self.y * s, self.z * s)

    def __mul__(self, other):
        return qmul(self, other)

    def __repr__(self):
        return f"GoldenQuaternion{self.components()!r}"


def qmul(a: GoldenQuaternion, b: GoldenQuaternion) -> GoldenQuaternion:
    """Hamilton product."""
    return GoldenQuaternion(
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    )


def qconj(a: GoldenQuaternion) -> GoldenQuaternion:
    return GoldenQuaternion(a.w, -a.x, -a.y, -a.z)


def qnorm(a: GoldenQuaternion) -> QuadraticRingElement:
    """a * qconj(a), a scalar of the golden field."""
    return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z


@lru_cache(maxsize=1)
def unit_icosians() -> tuple[GoldenQuaternion, ...]:
    """The 120 unit icosians (the H4 roots as quaternions)."""
    return tuple(GoldenQuaternion.from_vector(v) for v in roots(H4))


def is_in_icosian_ring(q: GoldenQuaternion) -> bool:
    """True iff q lies in the integer span of the unit icosians."""
    from .modules import membership, ql

    return membership(ql("H4"), q.as_vector()).member


def left_matrix(a: GoldenQuaternion):
    """Matrix (rows of column images) of Q -> a*Q on (w,x,y,z) columns."""
    basis = _basis_quaternions()
    cols = [qmul(a, e).components() for e in basis]
    return tuple(tuple(cols[j][i] for j in range(4)) for i in range(4))


def right_matrix(b: GoldenQuaternion):
    """Matrix of Q -> Q*b."""
    basis = _basis_quaternions()
    cols = [qmul(e, b).components() for e in basis]
    return tuple(tuple(cols[j][i] for j in range(4)) for i in range(4))


def _basis_quaternions():
    one = QuadraticRingElement(1)
    zero = QuadraticRingElement(0)
    return (
        GoldenQuaternion(one, zero, zero, zero),
        GoldenQuaternion(zero, one, zero, zero),
        GoldenQuaternion(zero, zero, one, zero),
        GoldenQuaternion(zero, zero, zero, one),
    )


def require_unit(q: GoldenQuaternion) -> None:
    if qnorm(q) != QuadraticRingElement(1):
        raise DomainError("quaternion is not a unit icosian (norm != 1)")
