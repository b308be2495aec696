"""Exact arithmetic on the numerical lattice U + E8(-1) of an Enriques surface.

Classes are stored as 10 integer coordinates in the basis
(e, f, a1, ..., a8).  The hyperbolic plane U is spanned by e, f with
e^2 = f^2 = 0 and e.f = 1; the a_i are simple roots of E8 with the
form negated.  Throughout, e and f are the half-fibres E1 and E2.

Effectivity is modelled on an unnodal surface: a class of non-negative
square is effective exactly when it pairs positively with a fixed
polarization h.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce, total_ordering
from typing import NamedTuple, Optional, Sequence

from .errors import InvariantViolation, PreconditionError

RANK = 10
LABELS = ("E1", "E2", "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8")

# Unordered pairs of adjacent E8 nodes (1-based, a5 trivalent).
E8_EDGES = ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8))

INT64_MAX = 2**63 - 1


def _build_gram():
    g = [[0] * RANK for _ in range(RANK)]
    g[0][1] = g[1][0] = 1
    for i in range(8):
        g[2 + i][2 + i] = -2
    for i, j in E8_EDGES:
        g[1 + i][1 + j] = g[1 + j][1 + i] = 1
    return tuple(tuple(row) for row in g)


GRAM = _build_gram()


def _check_int64(value):
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise OverflowError(f"value {value} exceeds the 64-bit coordinate range")
    return value


@total_ordering
@dataclass(frozen=True, eq=False)
class DivisorClass:
    """A numerical divisor class; immutable, hashable, ordered lexicographically."""

    coords: tuple

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != RANK:
            raise PreconditionError(f"a divisor class has {RANK} coordinates, got {len(coords)}")
        for c in coords:
            _check_int64(c)
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls):
        return cls((0,) * RANK)

    def __eq__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self.coords == other.coords

    def __lt__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self.coords < other.coords

    def __hash__(self):
        return hash(self.coords)

    def __add__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return DivisorClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return DivisorClass(tuple(-a for a in self.coords))

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return DivisorClass(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return f"DivisorClass({list(self.coords)})"

    def dot(self, other):
        return pairing(self, other)

    @property
    def square(self):
        return pairing(self, self)


def _unit(i):
    v = [0] * RANK
    v[i] = 1
    return DivisorClass(tuple(v))


E1, E2, A1, A2, A3, A4, A5, A6, A7, A8 = (_unit(i) for i in range(RANK))
BASIS = (E1, E2, A1, A2, A3, A4, A5, A6, A7, A8)


def as_class(x):
    if isinstance(x, DivisorClass):
        return x
    return DivisorClass(tuple(x))


def pairing(a, b):
    """Intersection number a.b = a^T Gram b."""
    a = as_class(a).coords
    b = as_class(b).coords
    total = 0
    for i in range(RANK):
        if a[i]:
            row = GRAM[i]
            total += a[i] * sum(row[j] * b[j] for j in range(RANK) if row[j])
    return _check_int64(total)


def genus(c):
    """Arithmetic genus C^2/2 + 1 of a curve class."""
    sq = pairing(c, c)
    if sq % 2:
        raise InvariantViolation(f"odd self-intersection {sq}: the lattice is even")
    if sq < 0:
        raise PreconditionError(f"genus needs C^2 >= 0, got C^2 = {sq}")
    return sq // 2 + 1


def chi(d):
    """Euler characteristic of O(D) by Riemann-Roch with chi(O_S) = 1."""
    sq = pairing(d, d)
    if sq % 2:
        raise InvariantViolation(f"odd self-intersection {sq}: the lattice is even")
    return sq // 2 + 1


@dataclass(frozen=True)
class Polarization:
    """Reference class h with h^2 > 0 used to pick the effective side."""

    h: DivisorClass

    def __post_init__(self):
        h = as_class(self.h)
        object.__setattr__(self, "h", h)
        if pairing(h, h) <= 0:
            raise PreconditionError(f"a polarization needs h^2 > 0, got {pairing(h, h)}")


DEFAULT_POLARIZATION = Polarization(E1 + E2)


def _h(h):
    if h is None:
        return DEFAULT_POLARIZATION.h
    if isinstance(h, Polarization):
        return h.h
    return Polarization(as_class(h)).h


def is_positive_cone(d, h=None):
    d = as_class(d)
    return pairing(d, d) > 0 and pairing(d, _h(h)) > 0


def is_nef(d, h=None):
    """Nef test on an unnodal surface: the closure of the positive cone."""
    d = as_class(d)
    if not d:
        return True
    return pairing(d, d) >= 0 and pairing(d, _h(h)) > 0


def dim_linear_system(d, h=None):
    d = as_class(d)
    sq = pairing(d, d)
    if not (is_nef(d, h) and sq > 0):
        raise PreconditionError(f"property-B inapplicable: need D nef with D^2 > 0 (D^2 = {sq})")
    return sq // 2


def ample_by_criterion(d, h=None):
    """'ample', 'not-ample' or 'unknown-by-criterion' (nef with 0 < D^2 < 6)."""
    d = as_class(d)
    sq = pairing(d, d)
    if not is_nef(d, h) or sq <= 0:
        return "not-ample"
    if sq >= 6:
        return "ample"
    return "unknown-by-criterion"


def content(d):
    """gcd of the coordinates (0 for the zero class)."""
    return reduce(math.gcd, as_class(d).coords, 0)


def is_primitive(d):
    d = as_class(d)
    if not d:
        raise PreconditionError("primitivity is undefined for the zero class")
    return content(d) == 1


def primitive_part(d):
    d = as_class(d)
    k = content(d)
    if k == 0:
        raise PreconditionError("the zero class has no primitive part")
    return k, DivisorClass(tuple(c // k for c in d.coords))


class SystemType(NamedTuple):
    kind: str  # "big-irreducible" | "isotropic" | "invalid"
    dim: Optional[int] = None
    multiplicity: Optional[int] = None
    primitive: Optional[DivisorClass] = None


def classify_system(d, h=None):
    d = as_class(d)
    if not is_nef(d, h):
        raise PreconditionError(f"classify_system needs a nef class, got {list(d.coords)}")
    if not d:
        return SystemType("invalid")
    sq = pairing(d, d)
    if sq > 0:
        return SystemType("big-irreducible", dim=sq // 2)
    m, p0 = primitive_part(d)
    return SystemType("isotropic", multiplicity=m, primitive=p0)


# -- whole-form checks ---------------------------------------------------

def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free Bareiss determinant of an integer matrix."""
    a = [list(row) for row in matrix]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inertia(matrix: Sequence[Sequence[int]]):
    """(n_plus, n_minus, n_zero) of a symmetric rational matrix, exactly.

    Symmetric elimination; a zero pivot with a nonzero off-diagonal entry is
    repaired by the congruence row_i += t*row_j, t = +-1.
    """
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    plus = minus = 0
    active = list(range(n))
    while active:
        i = active[0]
        if a[i][i] == 0:
            j = next((j for j in active[1:] if a[i][j] != 0), None)
            if j is None:
                active.pop(0)
                continue
            t = 1 if a[i][i] + 2 * a[i][j] + a[j][j] != 0 else -1
            for k in range(n):
                a[i][k] += t * a[j][k]
            for k in range(n):
                a[k][i] += t * a[k][j]
        p = a[i][i]
        if p > 0:
            plus += 1
        else:
            minus += 1
        rest = active[1:]
        for r in rest:
            f = a[r][i] / p
            if f:
                for c in rest:
                    a[r][c] -= f * a[i][c]
            a[r][i] = Fraction(0)
        for c in rest:
            a[i][c] = Fraction(0)
        active = rest
    return plus, minus, n - plus - minus
