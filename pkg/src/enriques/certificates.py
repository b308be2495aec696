"""Inequality-chain certificates, evaluated step by step in exact arithmetic.

A certificate never assumes its chain: each step records both sides as
exact integers or Fractions, the relation, and whether it holds.  Where a
step depends on the true phi of a hypothetical curve, one step is emitted
per admissible phi value.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Optional

from .errors import PreconditionError
from .lattice import _h, as_class, genus, pairing
from .slices import lemma_ceiling, phi

RELATIONS = {
    "<": operator.lt,
    "<=": operator.le,
    "=": operator.eq,
    ">=": operator.ge,
    ">": operator.gt,
}

ALL_HOLD = "all-steps-hold"
OUT_OF_SCOPE = "out-of-numeric-scope"
INVARIANT_VIOLATION = "invariant-violation"


@dataclass(frozen=True)
class Step:
    desc: str
    anchor: str
    lhs: object
    rel: str
    rhs: object
    holds: bool
    phi: Optional[int] = None


def step(desc, anchor, lhs, rel, rhs, phi=None):
    return Step(desc, anchor, lhs, rel, rhs, RELATIONS[rel](lhs, rhs), phi)


@dataclass
class Certificate:
    name: str
    parameters: dict
    steps: list
    verdict: str = ALL_HOLD
    notes: list = field(default_factory=list)

    def failing(self):
        return [i for i, s in enumerate(self.steps) if not s.holds]


def _verdict(steps):
    bad = next((i for i, s in enumerate(steps) if not s.holds), None)
    return ALL_HOLD if bad is None else f"step-fails({bad})"


def recheck(cert):
    """Re-evaluate every relation; True iff all recorded truth values are right."""
    return all(RELATIONS[s.rel](s.lhs, s.rhs) == s.holds for s in cert.steps)


def plane_curve_certificate(d):
    """Can a smooth plane curve of degree d lie on an Enriques surface?

    Walks the argument: g from the plane adjunction formula, the phi
    ceiling, applicability of the pencil bound, then per phi whether
    2*phi - 2 <= d - 4 closes the Clifford chain.
    """
    if d < 5:
        raise PreconditionError(f"plane-curve certificate needs d >= 5, got {d}")
    g = d * (d - 3) // 2 + 1
    ceiling = isqrt(d * (d - 3))
    steps = [
        step("2g - 2 = d(d-3) for a smooth plane curve", "plane-adjunction", 2 * g - 2, "=", d * (d - 3)),
        step("floor(sqrt(d(d-3))) <= d - 2", "phi-ceiling", ceiling, "<=", d - 2),
        step("d - 2 <= d(d-3)/4", "lemma-applicability", d - 2, "<=", Fraction(d * (d - 3), 4)),
        step("d(d-3)/4 = (g-1)/2", "genus-identity", Fraction(d * (d - 3), 4), "=", Fraction(g - 1, 2)),
    ]
    params = {"d": d, "g": g, "cliff": d - 4, "phi_ceiling": ceiling}
    if d == 5:
        cert = Certificate("plane-curve", params, steps, OUT_OF_SCOPE)
        cert.notes.append("d = 5 needs a separate argument that is not numerical")
        return cert
    for ph in range(1, ceiling + 1):
        steps.append(step(f"2*phi - 2 <= d - 4 at phi = {ph}", "clifford-chain",
                          2 * ph - 2, "<=", d - 4, phi=ph))
    params["phi_closing_chain"] = [s.phi for s in steps if s.phi is not None and s.holds]
    return Certificate("plane-curve", params, steps, _verdict(steps))


def cliffdim_case1_certificate(r):
    """Curves of genus 4r - 2 and Clifford index 2r - 3 against the pencil bound."""
    if r < 3:
        raise PreconditionError(f"Clifford dimension r must be >= 3, got {r}")
    g = 4 * r - 2
    cliff = 2 * r - 3
    ceiling = isqrt(2 * g - 2)
    steps = [
        step("cliff = [(g-1)/2] - 1", "clifford-index", cliff, "=", (g - 1) // 2 - 1),
        step("2*ceiling <= g - 1", "lemma-applicability", 2 * ceiling, "<=", g - 1),
        step("(g-1)/2 - 2 < cliff", "chain-target", Fraction(g - 1, 2) - 2, "<", cliff),
    ]
    for ph in range(1, ceiling + 1):
        steps.append(step(f"2*phi - 2 < cliff at phi = {ph}", "clifford-chain",
                          2 * ph - 2, "<", cliff, phi=ph))
    params = {
        "r": r, "g": g, "cliff": cliff, "phi_ceiling": ceiling,
        "phi_with_contradiction": [s.phi for s in steps if s.phi is not None and s.holds],
        "ceiling_suffices": 2 * ceiling - 2 < cliff,
    }
    return Certificate("cliffdim-case1", params, steps, _verdict(steps))


def cliffdim_case2_bounds(r, g=None):
    """Genus threshold and admissible degrees for Clifford dimension r >= 10."""
    if r < 10:
        raise PreconditionError(f"the exceptional case needs r >= 10, got {r}")
    g_min = 2 * (r - 1) ** 2 + 1
    steps = [
        step("(2r-2)^2 = 2*g_min - 2", "genus-threshold", (2 * r - 2) ** 2, "=", 2 * g_min - 2),
        step("g_min >= 163", "genus-threshold", g_min, ">=", 163),
    ]
    params = {"r": r, "g_min": g_min, "d_min": 6 * r - 6}
    if g is not None:
        root = isqrt(2 * g - 2) if g >= 1 else 0
        lo, hi = 6 * r - 6, 2 * r - 2 + 2 * root
        steps += [
            step("g >= g_min", "genus-threshold", g, ">=", g_min),
            step("floor(sqrt(2g-2)) >= 2r - 2", "phi-ceiling", root, ">=", 2 * r - 2),
            step("6r - 6 <= 2r - 2 + 2 floor(sqrt(2g-2))", "degree-interval", lo, "<=", hi),
        ]
        params.update({"g": g, "d_interval": [lo, hi], "interval_empty": lo > hi})
    return Certificate("cliffdim-case2", params, steps, _verdict(steps))


def lemma_bound_certificate(c, h=None, ceiling=None):
    """The phi ceiling and the pencil bound on cliff(C), evaluated on an actual class."""
    c = as_class(c)
    hh = _h(h)
    res = phi(c, hh, ceiling)
    g = genus(c)
    top = lemma_ceiling(c)
    steps = [
        step("phi(C) <= floor(sqrt(2g-2))", "phi-ceiling", res.value, "<=", top),
        step("2*phi(C) <= g - 1", "lemma-applicability", 2 * res.value, "<=", g - 1),
    ]
    for e in res.minimizers:
        steps.append(step(f"(2E - C).E < 0 for E = {list(e.coords)}", "non-effectivity",
                          pairing(2 * e - c, e), "<", 0))
    applicable = steps[1].holds and g >= 4
    params = {
        "C": c, "g": g, "phi": res.value, "phi_ceiling": top,
        "lemma_ii_asserted": applicable,
        "cliff_upper": 2 * res.value - 2 if applicable else None,
    }
    verdict = INVARIANT_VIOLATION if not steps[0].holds else _verdict(steps)
    return Certificate("phi-lemma", params, steps, verdict)
