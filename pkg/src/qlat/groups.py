"""Finite reflection groups as exact matrices over the quadratic field.

H3 and H4 are generated by breadth-first closure of the simple-root
reflections; the hot inner loop (batched matrix products in the
(x + y*sqrt(5))/2 integer encoding) runs through qlat.kernels.  The 2D
groups are tiny and use plain object arithmetic.

The H4 group is also realized through unit-icosian pairs q1, q2 acting
as Q -> conj(q1) Q q2 (optionally with quaternion conjugation of Q).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from . import kernels
from .quaternions import (
    GoldenQuaternion,
    left_matrix,
    qconj,
    require_unit,
    right_matrix,
)
from .ring import DomainError, QuadraticRingElement
from .roots import RootSystemId, gram, is_quadratic, simple_roots
from .vectors import ExactVector


class GroupElement:
    """Exact d x d matrix over the coordinate field of its root system."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(tuple(row) for row in entries)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        d = self.dim
        return GroupElement(
            tuple(
                tuple(
                    sum(
                        (self.entries[i][k] * other.entries[k][j] for k in range(d)),
                        QuadraticRingElement(0),
                    )
                    for j in range(d)
                )
                for i in range(d)
            )
        )

    def apply(self, v: ExactVector) -> ExactVector:
        d = self.dim
        return ExactVector(
            sum((self.entries[i][k] * v.coords[k] for k in range(d)),
                QuadraticRingElement(0))
            for i in range(d)
        )

    def transpose(self) -> "GroupElement":
        d = self.dim
        return GroupElement(
            tuple(tuple(self.entries[j][i] for j in range(d)) for i in range(d))
        )

    def det(self) -> QuadraticRingElement:
        d = self.dim
        if d == 2:
            e = self.entries
            return e[0][0] * e[1][1] - e[0][1] * e[1][0]
        total = QuadraticRingElement(0)
        for j in range(d):
            minor = GroupElement(
                tuple(row[:j] + row[j + 1:] for row in self.entries[1:])
            )
            term = self.entries[0][j] * minor.det()
            total = total + (term if j % 2 == 0 else -term)
        return total

    def is_orthogonal(self, g=None) -> bool:
        """M^T G M == G exactly (G = identity when g is None)."""
        d = self.dim
        mt = self.transpose()
        prod = mt @ self if g is None else mt @ GroupElement(g) @ self
        target = (
            identity_element(d) if g is None else GroupElement(g)
        )
        return prod == target

    def __repr__(self):
        return f"GroupElement(dim={self.dim})"


def identity_element(d: int) -> GroupElement:
    one = QuadraticRingElement(1)
    zero = QuadraticRingElement(0)
    return GroupElement(
        tuple(tuple(one if i == j else zero for j in range(d)) for i in range(d))
    )


def reflection_matrix(r: ExactVector, g=None) -> GroupElement:
    """Matrix of the reflection in the hyperplane normal to root r."""
    d = r.dim
    if r.is_zero():
        raise DomainError("cannot reflect in a zero root")
    if g is None:
        gr = list(r.coords)
        rr = r.dot(r)
    else:
        gr = [
            sum((g[i][j] * r.coords[j] for j in range(d)), QuadraticRingElement(0))
            for i in range(d)
        ]
        rr = sum((r.coords[i] * gr[i] for i in range(d)), QuadraticRingElement(0))
    ident = identity_element(d)
    return GroupElement(
        tuple(
            tuple(
                ident.entries[i][j] - (r.coords[i] * gr[j] * 2) / rr
                for j in range(d)
            )
            for i in range(d)
        )
    )


# -- compact (m + n*tau)/2 integer encoding -----------------------------

def _elem_to_pair(c: QuadraticRingElement) -> tuple[int, int]:
    from .ring import golden_parts

    a, b = golden_parts(c)
    m, n = 2 * a, 2 * b
    if m.denominator != 1 or n.denominator != 1:
        raise DomainError("entry is not a half golden integer")
    return (m.numerator, n.numerator)


def _pair_to_elem(m: int, n: int, kappa: int) -> QuadraticRingElement:
    # (m + n*tau)/2 = (2m + n + n*sqrt(5)) / 4
    return QuadraticRingElement(2 * m + n, n, kappa, 4)


def matrix_to_compact(m: GroupElement) -> np.ndarray:
    d = m.dim
    out = np.empty((d, d, 2), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            out[i, j] = _elem_to_pair(m.entries[i][j])
    return out


def compact_to_matrix(arr: np.ndarray, kappa: int) -> GroupElement:
    d = arr.shape[0]
    return GroupElement(
        tuple(
            tuple(_pair_to_elem(int(arr[i, j, 0]), int(arr[i, j, 1]), kappa)
                  for j in range(d))
            for i in range(d)
        )
    )


@dataclass
class ReflectionGroup:
    system: RootSystemId
    elements: list[GroupElement]

    def __post_init__(self):
        self._index = {g: i for i, g in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: GroupElement) -> bool:
        return g in self._index

    def __iter__(self):
        return iter(self.elements)

    def compact_byte_set(self) -> frozenset:
        return frozenset(
            matrix_to_compact(g).tobytes() for g in self.elements
        )


def _bfs_compact(gens: list[GroupElement]) -> list[np.ndarray]:
    d = gens[0].dim
    gen_arrs = [matrix_to_compact(g) for g in gens]
    ident = matrix_to_compact(identity_element(d))
    seen = {ident.tobytes(): ident}
    frontier = [ident]
    while frontier:
        stack = np.stack(frontier)
        frontier = []
        for ga in gen_arrs:
            prods = kernels.quad_matmul_batch(stack, ga, 1, 1)
            for i in range(prods.shape[0]):
                key = prods[i].tobytes()
                if key not in seen:
                    seen[key] = prods[i]
                    frontier.append(prods[i])
    return list(seen.values())


def _bfs_objects(gens: list[GroupElement]) -> list[GroupElement]:
    ident = identity_element(gens[0].dim)
    seen = {ident}
    order = [ident]
    frontier = [ident]
    while frontier:
        new = []
        for m in frontier:
            for g in gens:
                prod = m @ g
                if prod not in seen:
                    seen.add(prod)
                    order.append(prod)
                    new.append(prod)
        frontier = new
    return order


@lru_cache(maxsize=None)
def generate(system: RootSystemId) -> ReflectionGroup:
    """The full reflection group by closure of simple-root reflections."""
    if not is_quadratic(system):
        raise DomainError(
            f"{system} has no quadratic coordinate ring; exact group "
            "generation is unsupported"
        )
    g = gram(system)
    gens = [reflection_matrix(r, g) for r in simple_roots(system)]
    if system.family in ("H3", "H4"):
        arrs = _bfs_compact(gens)
        elements = [compact_to_matrix(a, 5) for a in arrs]
    else:
        elements = _bfs_objects(gens)
    return ReflectionGroup(system, elements)


def orbit(group: ReflectionGroup, v: ExactVector) -> frozenset:
    return frozenset(g.apply(v) for g in group)


# -- the quaternion-pair realization of the H4 group --------------------

def h4_element_from_quaternions(
    q1: GoldenQuaternion, q2: GoldenQuaternion, conjugating: bool = False
) -> GroupElement:
    """Matrix of Q -> conj(q1) Q q2, or conj(q1) conj(Q) q2."""
    require_unit(q1)
    require_unit(q2)
    m = GroupElement(left_matrix(qconj(q1))) @ GroupElement(right_matrix(q2))
    if conjugating:
        m = m @ _quaternion_conjugation_matrix()
    return m


def _quaternion_conjugation_matrix() -> GroupElement:
    one = QuadraticRingElement(1)
    zero = QuadraticRingElement(0)
    rows = []
    for i in range(4):
        rows.append(tuple(
            (one if i == 0 else -one) if i == j else zero for j in range(4)
        ))
    return GroupElement(rows)


def enumerate_h4_quaternion_maps():
    """All 120*120*2 parameterized maps, deduplicated exactly.

    Returns (raw_parameterization_count, frozenset of compact matrix bytes).
    """
    from .quaternions import unit_icosians

    units = unit_icosians()
    right_arrs = np.stack(
        [matrix_to_compact(GroupElement(right_matrix(u))) for u in units]
    )
    conj = matrix_to_compact(_quaternion_conjugation_matrix())
    seen = set()
    raw = 0
    for u in units:
        left = matrix_to_compact(GroupElement(left_matrix(qconj(u))))
        # left- and right-multiplication matrices commute, so the batch
        # runs over right factors with a fixed trailing left factor
        prods = kernels.quad_matmul_batch(right_arrs, left, 1, 1)
        conj_prods = kernels.quad_matmul_batch(prods, conj, 1, 1)
        raw += 2 * prods.shape[0]
        for i in range(prods.shape[0]):
            seen.add(prods[i].tobytes())
            seen.add(conj_prods[i].tobytes())
    return raw, frozenset(seen)
