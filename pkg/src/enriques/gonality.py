"""Gonality and Clifford-index bounds for curve classes on an unnodal Enriques surface.

A pencil of minimal degree d <= (g-1)/2 on a smooth C forces a splitting
C = L + M of the class with

    strict   (2d < g-1):  M^2 > L.M = d > L^2 >= 0,  (M-L)^2 > 0
    boundary (2d = g-1):  M^2 >= L.M = d >= L^2 >= 0, (M-L)^2 >= 0

and |L|, |M| free of fixed components.  `decompositions` lists every such
splitting up to a degree bound; its minimum is reported as a *candidate*
for the minimal gonality in |C|, never as the gonality itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import List, NamedTuple, Optional

from .errors import PreconditionError
from .lattice import (
    DivisorClass,
    _h,
    as_class,
    dim_linear_system,
    genus,
    is_nef,
    is_positive_cone,
    pairing,
    primitive_part,
)
from .slices import IsotropicClass, SliceQuery, enumerate_slice, isotropic_pair_decompositions, phi

STRICT = "strict"
BOUNDARY = "boundary"

DOUBLED_HALF_FIBER = "DoubledHalfFiber"
TWO_HALF_FIBERS = "TwoHalfFibers"
OTHER = "Other"


class Flags(NamedTuple):
    L_sq_nonneg: bool
    M_sq_gt_d: bool
    M_sq_ge_d: bool
    d_gt_L_sq: bool
    d_ge_L_sq: bool
    diff_sq_pos: bool
    diff_sq_nonneg: bool
    L_moving: bool  # nef, nonzero, and a pencil without fixed part: L^2 > 0 or L = 2k E
    M_positive: bool
    diff_positive: bool
    diff_nef: bool  # M - L in the closed cone (zero allowed)


@dataclass(frozen=True)
class Decomposition:
    L: DivisorClass
    M: DivisorClass
    d: int
    mode: str
    L_sq: int
    M_sq: int
    diff_sq: int
    flags: Flags
    L_type: str
    minimal: bool = False


def _mode(g, d):
    if 2 * d < g - 1:
        return STRICT
    if 2 * d == g - 1:
        return BOUNDARY
    return None


def _l_moving(L, h):
    if not L or not is_nef(L, h):
        return False
    if pairing(L, L) > 0:
        return True
    k, _ = primitive_part(L)
    return k % 2 == 0


def l_type(L, h=None):
    sq = pairing(L, L)
    if sq not in (0, 2):
        return OTHER
    kind = isotropic_pair_decompositions(L, h).kind
    return {"two-half-fibers": TWO_HALF_FIBERS, "doubled-half-fiber": DOUBLED_HALF_FIBER}.get(kind, OTHER)


def evaluate_split(c, L, h=None):
    """Evaluate C = L + (C - L) against the inequality chain of its mode.

    Returns a Decomposition when the split is valid, else None.
    """
    c, L = as_class(c), as_class(L)
    hh = _h(h)
    M = c - L
    diff = M - L
    d = pairing(L, M)
    mode = _mode(genus(c), d)
    lsq, msq, dsq = pairing(L, L), pairing(M, M), pairing(diff, diff)
    flags = Flags(
        L_sq_nonneg=lsq >= 0,
        M_sq_gt_d=msq > d,
        M_sq_ge_d=msq >= d,
        d_gt_L_sq=d > lsq,
        d_ge_L_sq=d >= lsq,
        diff_sq_pos=dsq > 0,
        diff_sq_nonneg=dsq >= 0,
        L_moving=_l_moving(L, hh),
        M_positive=is_positive_cone(M, hh),
        diff_positive=is_positive_cone(diff, hh),
        diff_nef=is_nef(diff, hh),
    )
    if mode == STRICT:
        ok = (flags.L_sq_nonneg and flags.M_sq_gt_d and flags.d_gt_L_sq and flags.diff_sq_pos
              and flags.L_moving and flags.M_positive and flags.diff_positive)
    elif mode == BOUNDARY:
        ok = (flags.L_sq_nonneg and flags.M_sq_ge_d and flags.d_ge_L_sq and flags.diff_sq_nonneg
              and flags.L_moving and flags.M_positive and flags.diff_nef)
    else:
        ok = False
    if not ok:
        return None
    return Decomposition(L, M, d, mode, lsq, msq, dsq, flags, l_type(L, hh))


def _require_curve_class(c, h):
    c = as_class(c)
    if not is_positive_cone(c, h):
        raise PreconditionError(f"need C in the positive cone, got {list(c.coords)} (C^2 = {pairing(c, c)})")
    return c


def _even_ceil(x):
    return x + (x % 2)


def _even_floor(x):
    return x - (x % 2)


def decompositions(c, d_max=None, h=None):
    """All valid splittings C = L + M with L.M <= d_max, sorted by (d, L).

    L.C = d + L^2 <= 2d, so only the slices L.C = 1 .. 2*d_max are searched;
    on each, L^2 lies in [max(0, L.C - C^2/4), L.C/2] because (M-L)^2 >= 0
    and L^2 <= d.
    """
    hh = _h(h)
    c = _require_curve_class(c, hh)
    g = genus(c)
    csq = pairing(c, c)
    if d_max is None:
        d_max = gon_ceiling(g)
    cap = min(d_max, (g - 1) // 2)
    found = []
    for m in range(1, 2 * cap + 1):
        # ceil((4m - C^2) / 4)
        nmin = _even_ceil(max(0, -((csq - 4 * m) // 4)))
        nmax = _even_floor(m // 2)
        if nmin > nmax:
            continue
        for L in enumerate_slice(SliceQuery(c, m, nmin, nmax, True, hh)):
            if m - pairing(L, L) > cap:
                continue
            dec = evaluate_split(c, L, hh)
            if dec is not None:
                found.append(dec)
    found.sort(key=lambda x: (x.d, x.L))
    if found:
        low = found[0].d
        found = [replace(x, minimal=x.d == low) for x in found]
    return found


def classify_minimal_L(dec):
    if not dec.minimal:
        return "not-applicable"
    if dec.L_type in (DOUBLED_HALF_FIBER, TWO_HALF_FIBERS):
        return "conforms"
    return "violates"


class BundleInvariants(NamedTuple):
    rank: int
    c1: DivisorClass
    c2: int
    bogomolov_unstable: bool
    chi_endo: int


def bundle_invariants(c, d):
    """Numerical invariants of the rank-2 bundle attached to a degree-d pencil on C."""
    c = as_class(c)
    if d < 1:
        raise PreconditionError(f"pencil degree must be >= 1, got {d}")
    csq = pairing(c, c)
    return BundleInvariants(2, c, d, 4 * d < csq, 4 + csq - 4 * d)


class SteinerReport(NamedTuple):
    L: DivisorClass
    M: DivisorClass
    C: DivisorClass
    base_points_L: int
    base_points_M: int
    gon_upper: int
    cliff_candidate: int
    dim_C: int
    stratum_codim: int


def steiner_report(L, M, h=None):
    """Lattice-level data of a curve swept out by pencils in |L| and |M|."""
    L, M = as_class(L), as_class(M)
    hh = _h(h)
    if not (L and M and is_nef(L, hh) and is_nef(M, hh)):
        raise PreconditionError("Steiner construction needs nonzero nef L and M")
    d = pairing(L, M)
    if d < 1:
        raise PreconditionError(f"Steiner construction needs L.M >= 1, got {d}")
    c = L + M
    dim_c = dim_linear_system(c, hh)
    codim = pairing(L, L)
    if codim > dim_c:
        raise PreconditionError(f"stratum codimension {codim} exceeds dim|C| = {dim_c}")
    return SteinerReport(L, M, c, pairing(L, L), pairing(M, M), d, d - 2, dim_c, codim)


def gon_ceiling(g):
    """Brill-Noether: gon(C) <= [(g-1)/2] + 2."""
    return (g - 1) // 2 + 2


@dataclass
class GonalityReport:
    C: DivisorClass
    g: int
    phi: int
    phi_minimizers: List[IsotropicClass]
    bn_cliff_ceiling: Optional[int]
    bn_gon_ceiling: int
    half_genus_gon_ceiling: int  # [(g-2)/2] + 2; one below bn_gon_ceiling when g is odd
    lemma_cliff_upper: Optional[int] = None
    gon_upper_from_pencil: Optional[int] = None
    candidate_gon_linear_system: Optional[int] = None
    window: Optional[tuple] = None
    decompositions: List[Decomposition] = field(default_factory=list)
    steiner: Optional[SteinerReport] = None
    notes: List[str] = field(default_factory=list)


def bounds(c, h=None, ceiling=None):
    hh = _h(h)
    c = _require_curve_class(c, hh)
    g = genus(c)
    ph = phi(c, hh, ceiling)
    rep = GonalityReport(
        C=c, g=g, phi=ph.value, phi_minimizers=ph.minimizers,
        bn_cliff_ceiling=(g - 1) // 2 if g >= 4 else None,
        bn_gon_ceiling=gon_ceiling(g),
        half_genus_gon_ceiling=(g - 2) // 2 + 2,
    )
    if g < 4:
        rep.notes.append(f"g = {g} < 4: Clifford index undefined, Clifford fields absent")
    elif 2 * ph.value <= g - 1:
        rep.lemma_cliff_upper = 2 * ph.value - 2
        rep.gon_upper_from_pencil = 2 * ph.value
    else:
        rep.notes.append(f"2*phi = {2 * ph.value} > g - 1 = {g - 1}: the pencil |2E| restricted to C "
                         "need not contribute to the Clifford index")
    return rep


def gon_window(c, h=None, ceiling=None):
    """Bounds plus the decomposition candidate for gon(|C|) and the window [cand, cand + 2]."""
    hh = _h(h)
    rep = bounds(c, hh, ceiling)
    decs = decompositions(rep.C, rep.bn_gon_ceiling, hh)
    rep.decompositions = decs
    if decs:
        cand = decs[0].d
        rep.candidate_gon_linear_system = cand
        rep.window = (cand, min(cand + 2, rep.bn_gon_ceiling))
        best = decs[0]
        rep.steiner = steiner_report(best.L, best.M, hh)
    else:
        rep.window = (None, rep.bn_gon_ceiling)
        rep.notes.append(f"no splitting C = L + M with L.M <= (g-1)/2; only the Brill-Noether "
                         f"ceiling {rep.bn_gon_ceiling} applies")
    return rep
