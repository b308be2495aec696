"""Complete enumeration of lattice vectors on hyperplane slices {x : x.C = m}.

For C with C^2 > 0 the orthogonal complement C^perp is negative definite,
so each slice meets the region nmin <= x^2 <= nmax in finitely many
points.  Writing x = t*b + K y with w.b = delta and K a basis of C^perp,
the condition x^2 >= nmin becomes an ellipsoid condition on y that is
enumerated exactly with Fincke-Pohst after LLL-reducing K.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from ._rational import Fraction
from functools import lru_cache
from typing import List, NamedTuple, Optional

from . import reduction
from .errors import InvariantViolation, PreconditionError
from .lattice import (
    GRAM,
    RANK,
    DivisorClass,
    _h,
    as_class,
    is_positive_cone,
    is_primitive,
    pairing,
    primitive_part,
)

log = logging.getLogger(__name__)


class IsotropicClass(DivisorClass):
    """Primitive isotropic class on the effective side: a half-fibre E of |2E|."""

    def __post_init__(self):
        super().__post_init__()
        if pairing(self, self) != 0 or not is_primitive(self):
            raise PreconditionError(f"{list(self.coords)} is not primitive isotropic")

    def degree_vs(self, c):
        return pairing(self, c)

    def __repr__(self):
        return f"IsotropicClass({list(self.coords)})"


def half_fiber(x, h=None):
    e = IsotropicClass(as_class(x).coords)
    if pairing(e, _h(h)) <= 0:
        raise PreconditionError(f"{list(e.coords)} is not on the effective side of h")
    return e


@dataclass(frozen=True)
class SliceQuery:
    C: DivisorClass
    m: int
    nmin: int
    nmax: int
    effective_only: bool = True
    h: Optional[DivisorClass] = None

    def __post_init__(self):
        object.__setattr__(self, "C", as_class(self.C))
        sq = pairing(self.C, self.C)
        if sq <= 0:
            raise PreconditionError(f"slice enumeration needs C^2 > 0, got {sq}")
        if self.m < 1:
            raise PreconditionError(f"slice index m must be >= 1, got {self.m}")
        if self.nmin > self.nmax:
            raise PreconditionError(f"empty norm range [{self.nmin}, {self.nmax}]")


class _SliceFrame(NamedTuple):
    delta: int
    csq: int
    pre: tuple
    kernel: tuple
    q: tuple
    mu: tuple
    kinv_v: tuple  # A^{-1} v, where v = K^T G pre and A = -K^T G K


_GRAM_ROWS = tuple(tuple((j, g) for j, g in enumerate(row) if g) for row in GRAM)


def _form(u, v):
    # raw-vector pairing; callers wrap results in DivisorClass where overflow matters
    return sum(u[i] * sum(g * v[j] for j, g in _GRAM_ROWS[i]) for i in range(RANK) if u[i])


@lru_cache(maxsize=256)
def _frame(coords):
    c = DivisorClass(coords)
    w = [sum(GRAM[i][j] * c[j] for j in range(RANK)) for i in range(RANK)]
    delta, pre, kernel = reduction.split_functional(w)
    kernel = reduction.lll_reduce(kernel, lambda u, v: -_form(u, v))
    a = [[-x for x in row] for row in reduction.gram_of(kernel, _form)]
    q, mu = reduction.ldl(a)
    v = [_form(k, pre) for k in kernel]
    kinv_v = reduction.ldl_solve(q, mu, v)
    return _SliceFrame(delta, pairing(c, c), tuple(pre), tuple(map(tuple, kernel)),
                       tuple(q), tuple(map(tuple, mu)), tuple(kinv_v))


def divisibility(c):
    """div(C) = gcd of C.x over the lattice."""
    return _frame(as_class(c).coords).delta


def enumerate_slice(query: SliceQuery) -> List[DivisorClass]:
    """Every x with x.C = m and nmin <= x^2 <= nmax, sorted and duplicate-free.

    With effective_only, x must also satisfy x^2 >= 0 and x.h > 0.
    """
    c, m = query.C, query.m
    fr = _frame(c.coords)
    if m % fr.delta:
        return []
    nmin = max(query.nmin, 0) if query.effective_only else query.nmin
    if nmin > query.nmax:
        return []
    t = m // fr.delta
    # x^2 = m^2/C^2 - (y - center)^T A (y - center), center = t A^{-1} v
    top = Fraction(m * m, fr.csq)
    pre_sq = _form(fr.pre, fr.pre)
    vav = sum(Fraction(_form(k, fr.pre)) * z for k, z in zip(fr.kernel, fr.kinv_v))
    if t * t * (pre_sq + vav) != top:
        raise InvariantViolation("slice frame inconsistent with C^2")
    center = [t * z for z in fr.kinv_v]
    h = _h(query.h)
    out = set()
    for y in reduction.fincke_pohst(fr.q, fr.mu, center, top - nmin):
        coords = [t * p for p in fr.pre]
        for yi, k in zip(y, fr.kernel):
            if yi:
                for j in range(RANK):
                    coords[j] += yi * k[j]
        x = DivisorClass(tuple(coords))
        sq = pairing(x, x)
        if pairing(x, c) != m:
            raise InvariantViolation("enumerated vector left its slice")
        if not nmin <= sq <= query.nmax:
            continue
        if query.effective_only and pairing(x, h) <= 0:
            continue
        out.add(x)
    return sorted(out)


def lemma_ceiling(c):
    """floor(sqrt(2g - 2)) = floor(sqrt(C^2)), the a priori bound on phi."""
    sq = pairing(c, c)
    if sq < 0:
        raise PreconditionError(f"need C^2 >= 0, got {sq}")
    return math.isqrt(sq)


class PhiResult(NamedTuple):
    value: int
    minimizers: List[IsotropicClass]


def phi(c, h=None, ceiling=None):
    """min C.E over half-fibres E, with all minimizers in decreasing order (E1 before E2).

    Slices m = 1, 2, ... are scanned up to floor(sqrt(C^2)); `ceiling`
    can only raise that bound.
    """
    c = as_class(c)
    if not is_positive_cone(c, h):
        raise PreconditionError(f"phi needs C in the positive cone, got {list(c.coords)}")
    default = lemma_ceiling(c)
    top = max(default, ceiling or 0)
    for m in range(1, top + 1):
        found = [x for x in enumerate_slice(SliceQuery(c, m, 0, 0, True, _h(h)))
                 if is_primitive(x)]
        if found:
            if m > default:
                log.warning("phi(%s) = %d exceeds the ceiling %d", list(c.coords), m, default)
            return PhiResult(m, [IsotropicClass(x.coords) for x in sorted(found, reverse=True)])
    raise InvariantViolation(
        f"no half-fibre E with C.E <= {top} for C = {list(c.coords)}; contradicts phi(C)^2 <= C^2")


class PairDecomposition(NamedTuple):
    kind: str  # "two-half-fibers" | "doubled-half-fiber" | "neither"
    pairs: list  # list of (E', E'') for two-half-fibers
    primitive: Optional[DivisorClass] = None
    multiplicity: Optional[int] = None


def isotropic_pair_decompositions(L, h=None):
    """Split L^2 = 2 classes as E' + E'' and recognise L^2 = 0 classes 2E."""
    L = as_class(L)
    sq = pairing(L, L)
    hh = _h(h)
    if sq not in (0, 2) or not L or pairing(L, hh) <= 0:
        raise PreconditionError(f"need L effective with L^2 in {{0, 2}}, got L^2 = {sq}")
    if sq == 0:
        m, p0 = primitive_part(L)
        kind = "doubled-half-fiber" if m == 2 else "neither"
        return PairDecomposition(kind, [], p0, m)
    # E'.L = E'.E'' = 1 for a split L = E' + E''
    pairs = []
    for e in enumerate_slice(SliceQuery(L, 1, 0, 0, True, hh)):
        rest = L - e
        if pairing(rest, rest) == 0 and pairing(rest, hh) > 0 and rest and is_primitive(rest) \
                and e <= rest:
            pairs.append((IsotropicClass(e.coords), IsotropicClass(rest.coords)))
    kind = "two-half-fibers" if pairs else "neither"
    return PairDecomposition(kind, pairs)
