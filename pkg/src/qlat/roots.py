"""The non-crystallographic root systems I2(n), H3 and H4.

H3 and H4 use exact Cartesian golden coordinates.  The 2D systems are
exact for n in {5, 8, 10, 12}: their roots are written in the oblique
basis {1, zeta} (zeta a primitive root of unity), where all coordinates
lie in a real quadratic ring and the Gram matrix [[1, c/2], [c/2, 1]]
with c = 2*cos(angle) makes inner products exact.  Other I2(n) are
emitted as float vectors only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional

import numpy as np

from .ring import DomainError, QuadraticRingElement, tau
from .vectors import ExactVector, reflect

#: I2(n) whose coordinate ring is a real quadratic ring, keyed to kappa.
QUADRATIC_I2 = {5: 5, 8: 2, 10: 5, 12: 3}

_EVEN_PERMS_3 = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
_EVEN_PERMS_4 = (
    (0, 1, 2, 3), (0, 2, 3, 1), (0, 3, 1, 2),
    (1, 0, 3, 2), (1, 2, 0, 3), (1, 3, 2, 0),
    (2, 0, 1, 3), (2, 1, 3, 0), (2, 3, 0, 1),
    (3, 0, 2, 1), (3, 1, 0, 2), (3, 2, 1, 0),
)


@dataclass(frozen=True)
class RootSystemId:
    family: str  # "I2" | "H3" | "H4"
    n: Optional[int] = None

    def __post_init__(self):
        if self.family in ("H3", "H4"):
            if self.n is not None:
                raise DomainError(f"{self.family} takes no index n")
        elif self.family == "I2":
            if self.n is None or self.n < 5 or self.n == 6:
                raise DomainError(
                    "I2(n) needs n >= 5, n != 6 (smaller n are crystallographic)"
                )
        else:
            raise DomainError(f"unknown family {self.family!r}")

    @property
    def rank(self) -> int:
        return {"I2": 2, "H3": 3, "H4": 4}[self.family]

    @staticmethod
    def parse(text: str) -> "RootSystemId":
        text = text.strip()
        if text in ("H3", "H4"):
            return RootSystemId(text)
        if text.startswith("I2"):
            tail = text[2:].lstrip("-(").rstrip(")")
            try:
                return RootSystemId("I2", int(tail))
            except ValueError:
                pass
        raise DomainError(f"cannot parse root system {text!r}")

    def __str__(self):
        return self.family if self.n is None else f"I2-{self.n}"


H3 = RootSystemId("H3")
H4 = RootSystemId("H4")


def I2(n: int) -> RootSystemId:
    return RootSystemId("I2", n)


def is_quadratic(system: RootSystemId) -> bool:
    return system.family in ("H3", "H4") or system.n in QUADRATIC_I2


def kappa_of(system: RootSystemId) -> int:
    if system.family in ("H3", "H4"):
        return 5
    if system.n in QUADRATIC_I2:
        return QUADRATIC_I2[system.n]
    raise DomainError(f"{system} has no quadratic coordinate ring")


def _i2_params(system: RootSystemId):
    """(zeta order m, ring count, c = 2*cos(2*pi/m) exact) for quadratic I2(n)."""
    n = system.n
    if n % 2 == 1:
        m = 2 * n  # roots are the 2n-th roots of unity
    else:
        m = n
    k = kappa_of(system)
    # c = 2*cos(2*pi/m) for the supported m in {8, 10, 12, 20?}
    if m == 10:
        c = tau()
    elif m == 8:
        c = QuadraticRingElement(0, 1, 2)
    elif m == 12:
        c = QuadraticRingElement(0, 1, 3)
    else:
        raise DomainError(f"no exact arithmetic for I2({n})")
    return m, c, k


def gram(system: RootSystemId):
    """Gram matrix of the coordinate basis (None = orthonormal)."""
    if system.family in ("H3", "H4"):
        return None
    m, c, k = _i2_params(system)
    one = QuadraticRingElement(1, 0, k)
    half_c = c / 2
    return ((one, half_c), (half_c, one))


def basis_matrix_float(system: RootSystemId) -> Optional[np.ndarray]:
    """Columns of the oblique basis {1, zeta} in the Euclidean plane."""
    if system.family in ("H3", "H4"):
        return None
    m, _, _ = _i2_params(system)
    theta = 2 * math.pi / m
    return np.array([[1.0, math.cos(theta)], [0.0, math.sin(theta)]])


def embed_float(system: RootSystemId, v: ExactVector) -> np.ndarray:
    """Euclidean float coordinates of an exact vector of this system."""
    b = basis_matrix_float(system)
    x = v.to_floats()
    return x if b is None else b @ x


def _signed_even_perms(pattern, perms):
    out = set()
    nonzero = [i for i, c in enumerate(pattern) if c]
    for perm in perms:
        base = [pattern[i] for i in perm]
        for signs in product((1, -1), repeat=len(nonzero)):
            it = iter(signs)
            vec = tuple(c * next(it) if c else c for c in base)
            out.add(vec)
    return out


@lru_cache(maxsize=None)
def roots(system: RootSystemId):
    """All roots, exact where the coordinate ring is quadratic.

    H3: 30 vectors; H4: 120; I2(n): 2n.  Non-quadratic I2(n) come back
    as a list of float numpy arrays.
    """
    if system.family == "H3":
        one = QuadraticRingElement(1)
        zero = QuadraticRingElement(0)
        t = tau()
        half = QuadraticRingElement(1, 0, 5, 2)
        vecs = _signed_even_perms((one, zero, zero), _EVEN_PERMS_3)
        vecs |= _signed_even_perms(
            (t * half, half, (t - 1) * half), _EVEN_PERMS_3
        )
        out = [ExactVector(v) for v in vecs]
    elif system.family == "H4":
        one = QuadraticRingElement(1)
        zero = QuadraticRingElement(0)
        t = tau()
        half = QuadraticRingElement(1, 0, 5, 2)
        vecs = _signed_even_perms((one, zero, zero, zero), _EVEN_PERMS_4)
        vecs |= _signed_even_perms((half, half, half, half), _EVEN_PERMS_4)
        vecs |= _signed_even_perms(
            (zero, t * half, half, (t - 1) * half), _EVEN_PERMS_4
        )
        out = [ExactVector(v) for v in vecs]
    elif system.n in QUADRATIC_I2:
        m, c, k = _i2_params(system)
        powers = _zeta_powers(m, c, k)
        if system.n % 2 == 1:
            out = list(powers)
        else:
            out = list(powers) + [
                powers[i] + powers[(i + 1) % m] for i in range(m)
            ]
    else:
        n = system.n
        angles = (
            [math.pi * k / n for k in range(2 * n)]
            if n % 2 == 1
            else [2 * math.pi * k / n for k in range(n)]
        )
        out = [np.array([math.cos(a), math.sin(a)]) for a in angles]
        if n % 2 == 0:
            out += [
                np.array([
                    math.cos(2 * math.pi * k / n) + math.cos(2 * math.pi * (k + 1) / n),
                    math.sin(2 * math.pi * k / n) + math.sin(2 * math.pi * (k + 1) / n),
                ])
                for k in range(n)
            ]
        return out
    out.sort(key=lambda v: v.sort_key())
    return out


def _zeta_powers(m: int, c: QuadraticRingElement, k: int):
    """zeta^j for j < m in the oblique basis, via zeta^2 = c*zeta - 1."""
    one = QuadraticRingElement(1, 0, k)
    zero = QuadraticRingElement(0, 0, k)
    powers = [ExactVector((one, zero)), ExactVector((zero, one))]
    for _ in range(m - 2):
        prev, cur = powers[-2], powers[-1]
        powers.append(cur.scale(c) - prev)
    return powers


@lru_cache(maxsize=None)
def simple_roots(system: RootSystemId):
    """d roots whose reflections generate the full group.

    Chosen by exact Coxeter-diagram angles (first match in sorted root
    order); validated against the generated group order in the tests.
    """
    if system.family == "I2":
        m, c, k = _i2_params(system)
        powers = _zeta_powers(m, c, k)
        if system.n % 2 == 1:
            return [powers[0], powers[1]]
        return [powers[0], powers[0] + powers[1]]

    rs = roots(system)
    g = gram(system)
    t = tau()
    half = QuadraticRingElement(1, 0, 5, 2)
    m_angle = {5: -(t * half), 3: -half, 2: QuadraticRingElement(0)}
    if system.family == "H3":
        diagram = {(0, 1): 5, (1, 2): 3, (0, 2): 2}
        d = 3
    else:
        diagram = {(0, 1): 5, (1, 2): 3, (2, 3): 3,
                   (0, 2): 2, (0, 3): 2, (1, 3): 2}
        d = 4

    chosen: list[ExactVector] = []

    def extend(depth: int) -> bool:
        if depth == d:
            return True
        for r in rs:
            ok = all(
                chosen[i].dot(r, g) == m_angle[diagram[(i, depth)]]
                for i in range(depth)
            )
            if ok:
                chosen.append(r)
                if extend(depth + 1):
                    return True
                chosen.pop()
        return False

    if not extend(0):
        raise DomainError(f"no simple system found for {system}")
    return list(chosen)


def root_count_decomposition(system: RootSystemId) -> tuple[int, ...]:
    """Sizes of the sign/permutation families making up the root list."""
    if system.family == "H3":
        return (6, 24)
    if system.family == "H4":
        return (8, 16, 96)
    n = system.n
    return (2 * n,) if n % 2 == 1 else (n, n)
