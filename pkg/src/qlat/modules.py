"""Reflection quasilattices as finite-rank integer modules.

Each quasilattice is represented by its conventional generating frame
(six icosahedron vertex vectors for H3, the eight half/half-tau unit
vectors for H4, the first four zeta powers for the 2D rows) plus a
coefficient rule, together with a true Z-basis of the coefficient
lattice used for exact membership, rescaling and index computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Optional

from . import linalg
from .ring import DomainError, QuadraticRingElement, fundamental_unit, golden, tau
from .roots import (
    _EVEN_PERMS_4,
    H3,
    H4,
    I2,
    RootSystemId,
    gram,
    roots,
)
from .vectors import ExactVector

QL_NAMES = (
    "I2-5", "I2-8", "I2-12",
    "H3-primitive", "H3-fcc", "H3-bcc",
    "H4",
)

_CONSTRAINTS = {
    "I2-5": "unrestricted",
    "I2-8": "unrestricted",
    "I2-12": "unrestricted",
    "H3-primitive": "unrestricted",
    "H3-fcc": "even-sum",
    "H3-bcc": "all-int-or-all-half",
    "H4": "h4-parity",
}

_SYSTEMS = {
    "I2-5": I2(5),
    "I2-8": I2(8),
    "I2-12": I2(12),
    "H3-primitive": H3,
    "H3-fcc": H3,
    "H3-bcc": H3,
    "H4": H4,
}


def parse_ql_name(text: str) -> str:
    t = text.strip()
    aliases = {"H3-1": "H3-primitive", "H3-2": "H3-fcc", "H3-3": "H3-bcc",
               "I2-10": "I2-5"}
    t = aliases.get(t, t)
    if t not in QL_NAMES:
        raise DomainError(f"unknown quasilattice {text!r}; choose from {QL_NAMES}")
    return t


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    coefficients: Optional[tuple[Fraction, ...]] = None  # frame coefficients
    reason: Optional[str] = None


@dataclass(frozen=True)
class ScaleClassification:
    verdict: str  # "invariant" | "proper-sublattice" | "not-closed"
    index: Optional[int] = None
    action_matrix: Optional[tuple[tuple[int, ...], ...]] = None


@dataclass(frozen=True)
class H4Residue:
    m: tuple[int, int, int, int]
    n: tuple[int, int, int, int]


class QLModule:
    """A reflection quasilattice as a rank-2d integer module."""

    def __init__(self, name: str):
        self.name = name
        self.system: RootSystemId = _SYSTEMS[name]
        self.constraint = _CONSTRAINTS[name]
        self.dim = self.system.rank
        self.rank = 2 * self.dim
        self.gram = gram(self.system)
        self.frame = _frame(name)
        self.kappa = self.frame[0].kappa
        # rational 2d x r matrix with frame vectors as columns
        cols = [v.expand() for v in self.frame]
        self._frame_matrix = [
            [cols[j][i] for j in range(self.rank)] for i in range(self.rank)
        ]
        self._frame_inv = linalg.mat_inverse(self._frame_matrix)
        self.member_basis_coeffs = _member_basis_coeffs(name, self.frame)
        self.member_basis = [
            _combine(self.frame, row) for row in self.member_basis_coeffs
        ]
        bcols = [v.expand() for v in self.member_basis]
        self._basis_matrix = [
            [bcols[j][i] for j in range(self.rank)] for i in range(self.rank)
        ]
        self._basis_inv = linalg.mat_inverse(self._basis_matrix)

    # -- coordinates ---------------------------------------------------

    def frame_coefficients(self, v: ExactVector) -> tuple[Fraction, ...]:
        if v.dim != self.dim:
            raise DomainError("dimension mismatch")
        if any(c.q for c in v.coords) and v.kappa != self.kappa:
            raise DomainError(
                f"vector ring sqrt({v.kappa}) does not match QL ring sqrt({self.kappa})"
            )
        return tuple(linalg.mat_vec(self._frame_inv, v.expand()))

    def basis_coefficients(self, v: ExactVector) -> tuple[Fraction, ...]:
        if v.dim != self.dim:
            raise DomainError("dimension mismatch")
        if any(c.q for c in v.coords) and v.kappa != self.kappa:
            raise DomainError(
                f"vector ring sqrt({v.kappa}) does not match QL ring sqrt({self.kappa})"
            )
        return tuple(linalg.mat_vec(self._basis_inv, v.expand()))

    def from_basis_coefficients(self, coeffs) -> ExactVector:
        return _combine(self.member_basis, [Fraction(c) for c in coeffs])

    def __repr__(self):
        return f"QLModule({self.name})"


@lru_cache(maxsize=None)
def ql(name: str) -> QLModule:
    return QLModule(parse_ql_name(name))


def _combine(vectors, coeffs) -> ExactVector:
    out = None
    for v, c in zip(vectors, coeffs):
        term = v.scale(QuadraticRingElement.rational(c, v.kappa))
        out = term if out is None else out + term
    return out


def _frame(name: str) -> list[ExactVector]:
    t = tau()
    one = QuadraticRingElement(1)
    zero = QuadraticRingElement(0)
    if name.startswith("H3"):
        # the six icosahedron vertex vectors from {1, +-tau, 0}, even perms
        pats = [(one, t, zero), (one, -t, zero)]
        vecs = []
        for p in pats:
            for perm in ((0, 1, 2), (2, 0, 1), (1, 2, 0)):
                vecs.append(ExactVector(tuple(p[i] for i in perm)))
        # order: v1..v6 pairing each +tau vector with its -tau partner
        return [vecs[0], vecs[3], vecs[1], vecs[4], vecs[2], vecs[5]]
    if name == "H4":
        half = QuadraticRingElement(1, 0, 5, 2)
        th = t * half
        frame = []
        for s in (half, th):
            for i in range(4):
                coords = [zero] * 4
                coords[i] = s
                frame.append(ExactVector(coords))
        return frame
    # 2D rows: first four powers of the relevant root of unity
    system = _SYSTEMS[name]
    from .roots import _i2_params, _zeta_powers

    m, c, k = _i2_params(system)
    powers = _zeta_powers(m, c, k)
    if name == "I2-5":
        # Z[zeta_5] basis: zeta_5^j = zeta_10^(2j)
        return [powers[0], powers[2], powers[4], powers[6]]
    return powers[:4]


def _member_basis_coeffs(name: str, frame) -> list[list[Fraction]]:
    r = len(frame)
    if _CONSTRAINTS[name] == "unrestricted":
        return [[Fraction(int(i == j)) for j in range(r)] for i in range(r)]
    if name == "H3-fcc":
        rows = [[0] * 6 for _ in range(6)]
        for i in range(5):
            rows[i][i], rows[i][i + 1] = 1, -1
        rows[5][4], rows[5][5] = 1, 1
        return [[Fraction(x) for x in row] for row in rows]
    if name == "H3-bcc":
        rows = [[Fraction(0)] * 6 for _ in range(6)]
        for i in range(5):
            rows[i][i] = Fraction(1)
        rows[5] = [Fraction(1, 2)] * 6
        return rows
    # H4: HNF basis of the integer span of the 120 root coefficient vectors
    cols = [v.expand() for v in frame]
    mat = [[cols[j][i] for j in range(r)] for i in range(r)]
    inv = linalg.mat_inverse(mat)
    gen_rows = []
    for root in roots(H4):
        coeffs = linalg.mat_vec(inv, root.expand())
        assert all(c.denominator == 1 for c in coeffs)
        gen_rows.append([c.numerator for c in coeffs])
    basis = linalg.hnf_rows(gen_rows)
    assert len(basis) == r
    return [[Fraction(x) for x in row] for row in basis]


# -- membership --------------------------------------------------------

def h4_parity_ok(m, n) -> bool:
    """The three mod-2 constraints over all even index permutations."""
    if sum(m) % 2 or sum(n) % 2:
        return False
    for a, b, c, d in _EVEN_PERMS_4:
        if (m[a] + n[a] + m[b] + n[c]) % 2:
            return False
    return True


def membership(qlm: QLModule, v: ExactVector) -> MembershipResult:
    """Exact membership with frame coefficients on success."""
    try:
        coeffs = qlm.frame_coefficients(v)
    except DomainError as exc:
        return MembershipResult(False, reason=str(exc))
    tag = qlm.constraint
    ints = all(c.denominator == 1 for c in coeffs)
    if tag == "unrestricted":
        if ints:
            return MembershipResult(True, coeffs)
        return MembershipResult(False, reason="non-integer coefficients")
    if tag == "even-sum":
        if ints and sum(c.numerator for c in coeffs) % 2 == 0:
            return MembershipResult(True, coeffs)
        return MembershipResult(
            False, reason="coefficients not integers of even sum"
        )
    if tag == "all-int-or-all-half":
        halves = all(c.denominator == 2 for c in coeffs)
        if ints or halves:
            return MembershipResult(True, coeffs)
        return MembershipResult(
            False, reason="coefficients neither all integer nor all half-integer"
        )
    # h4-parity
    if not ints:
        return MembershipResult(
            False, reason="coordinates not half golden integers"
        )
    m = tuple(coeffs[i].numerator for i in range(4))
    n = tuple(coeffs[i].numerator for i in range(4, 8))
    if h4_parity_ok(m, n):
        return MembershipResult(True, coeffs)
    return MembershipResult(False, reason="mod-2 residue class not allowed")


def random_member(qlm: QLModule, rng, bound: int = 6) -> ExactVector:
    coeffs = [rng.randint(-bound, bound) for _ in range(qlm.rank)]
    return qlm.from_basis_coefficients(coeffs)


# -- the 16 allowed H4 residues ----------------------------------------

@lru_cache(maxsize=1)
def enumerate_h4_residues() -> frozenset[H4Residue]:
    """Brute-force all 256 mod-2 classes against the parity constraints."""
    out = set()
    for bits in product((0, 1), repeat=8):
        m, n = bits[:4], bits[4:]
        if h4_parity_ok(m, n):
            out.add(H4Residue(m, n))
    return frozenset(out)


def h4_residue_of(v: ExactVector) -> H4Residue:
    qlm = ql("H4")
    coeffs = qlm.frame_coefficients(v)
    if any(c.denominator != 1 for c in coeffs):
        raise DomainError("vector is not half golden integral")
    return H4Residue(
        tuple(coeffs[i].numerator % 2 for i in range(4)),
        tuple(coeffs[i].numerator % 2 for i in range(4, 8)),
    )


def residue_representative(r: H4Residue) -> ExactVector:
    half = QuadraticRingElement(1, 0, 5, 2)
    t = tau()
    return ExactVector(
        tuple((QuadraticRingElement(r.m[i]) + t * r.n[i]) * half for i in range(4))
    )


def residue_is_golden_multiple_of_root(r: H4Residue) -> bool:
    """Check the canonical representative is (golden integer) * (H4 root)."""
    if r not in enumerate_h4_residues():
        raise DomainError("residue class is not allowed")
    rep = residue_representative(r)
    if rep.is_zero():
        return True
    for a in range(-3, 4):
        for b in range(-3, 4):
            g = golden(a, b)
            if not g:
                continue
            for root in roots(H4):
                if root.scale(g) == rep:
                    return True
    return False


# -- discrete scale invariance -----------------------------------------

def scale_classification(qlm: QLModule, factor: QuadraticRingElement,
                         power: int = 1) -> ScaleClassification:
    """Classify multiplication by factor**power on the module."""
    if factor.q != 0 and factor.kappa != qlm.kappa:
        raise DomainError(
            f"factor ring sqrt({factor.kappa}) does not match QL ring sqrt({qlm.kappa})"
        )
    if abs(factor.norm()) != 1:
        raise DomainError("scale factor must be a unit (|norm| = 1)")
    eta = factor ** power
    rows = []
    for b in qlm.member_basis:
        coeffs = qlm.basis_coefficients(b.scale(eta))
        if any(c.denominator != 1 for c in coeffs):
            return ScaleClassification("not-closed")
        rows.append([c.numerator for c in coeffs])
    d = linalg.det([[Fraction(x) for x in row] for row in rows])
    matrix = tuple(tuple(row) for row in rows)
    if abs(d) == 1:
        return ScaleClassification("invariant", index=1, action_matrix=matrix)
    return ScaleClassification(
        "proper-sublattice", index=abs(int(d)), action_matrix=matrix
    )


_TABLE1 = {
    # name -> (kappa of 1D sublattice ring, expected minimal invariance power)
    "I2-5": (5, 1),
    "I2-8": (2, 1),
    "I2-12": (3, 1),
    "H3-primitive": (5, 3),
    "H3-fcc": (5, 1),
    "H3-bcc": (5, 1),
    "H4": (5, 1),
}


@dataclass(frozen=True)
class Table1Row:
    ql: str
    expected_factor: str
    derived_factor: tuple[int, int, int]
    minimal_power: Optional[int]
    expected_power: int
    ok: bool


@dataclass(frozen=True)
class Table1Report:
    rows: tuple[Table1Row, ...]

    @property
    def passed(self) -> int:
        return sum(r.ok for r in self.rows)

    @property
    def total(self) -> int:
        return len(self.rows)

    @property
    def all_ok(self) -> bool:
        return self.passed == self.total

    def summary(self) -> str:
        return f"{self.passed}/{self.total}"


def _factor_text(u: QuadraticRingElement, power: int) -> str:
    v = u ** power
    p, q, den = v.to_triple()
    if v.kappa == 5:
        from .ring import golden_parts

        m, n = golden_parts(v)
        tpart = "tau" if n == 1 else f"{n}tau"
        if m == 0:
            return tpart
        return f"{m}+{tpart}"
    label = {2: "sqrt(2)", 3: "sqrt(3)"}[v.kappa]
    spart = label if q == 1 else f"{q}{label}"
    body = f"{p}+{spart}" if p else spart
    return body if den == 1 else f"({body})/{den}"


def verify_table1(max_power: int = 8) -> Table1Report:
    """Re-derive every scale-factor table row from the Pell-equation
    fundamental unit."""
    rows = []
    for name in QL_NAMES:
        kappa, expected_power = _TABLE1[name]
        u = fundamental_unit(kappa).unit
        qlm = ql(name)
        minimal = None
        for k in range(1, max_power + 1):
            if scale_classification(qlm, u, k).verdict == "invariant":
                minimal = k
                break
        ok = minimal == expected_power
        rows.append(Table1Row(
            ql=name,
            expected_factor=_factor_text(u, expected_power),
            derived_factor=u.to_triple(),
            minimal_power=minimal,
            expected_power=expected_power,
            ok=ok,
        ))
    return Table1Report(tuple(rows))


# -- root containment ---------------------------------------------------

def contains_root_copy(qlm: QLModule) -> bool:
    """True iff some golden-scaled copy of the root system lies in the QL."""
    rs = roots(qlm.system)

    def all_roots_member(c) -> bool:
        return all(membership(qlm, r.scale(c)).member for r in rs)

    one = QuadraticRingElement(1, 0, qlm.kappa)
    if all_roots_member(one):
        return True
    # otherwise try scaling by twice a member coordinate
    for b in qlm.member_basis:
        for w in b.coords:
            if w and all_roots_member(w * 2):
                return True
    return False
