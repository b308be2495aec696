"""Theorem-backed invariant suites, runnable without pytest (`enriques selftest`)."""

from __future__ import annotations

import random
from typing import List, NamedTuple

from . import certificates as cert
from .gonality import bundle_invariants, classify_minimal_L, gon_window
from .lattice import (
    BASIS, E1, E2, GRAM, RANK, DivisorClass, determinant, inertia, is_positive_cone, pairing,
)
from .oracle import brute_oracle_phi
from .slices import lemma_ceiling, phi


class SuiteResult(NamedTuple):
    name: str
    ok: bool
    detail: str


def _random_cone_classes(rng, n, box=5):
    out = []
    while len(out) < n:
        c = DivisorClass(tuple(rng.randint(-box, box) for _ in range(RANK)))
        if is_positive_cone(c):
            out.append(c)
    return out


def lattice_suite(rng):
    det, sig = determinant(GRAM), inertia(GRAM)
    odd = 0
    for _ in range(200):
        x = DivisorClass(tuple(rng.randint(-9, 9) for _ in range(RANK)))
        odd += pairing(x, x) % 2
    ok = det == -1 and sig == (1, 9, 0) and not odd and all(pairing(b, b) in (0, -2) for b in BASIS)
    return ok, f"det={det} inertia={sig} odd_squares={odd}"


def phi_ceiling_suite(rng):
    bad = [c for c in _random_cone_classes(rng, 25) if phi(c).value > lemma_ceiling(c)]
    closed = [(a, b) for a in range(1, 9) for b in range(1, 9) if phi(a * E1 + b * E2).value != min(a, b)]
    return not bad and not closed, f"ceiling_violations={len(bad)} closed_form_mismatches={len(closed)}"


def oracle_suite(rng):
    mism = 0
    for a, b in [(1, 1), (2, 3), (3, 3), (4, 3), (2, 5)]:
        c = a * E1 + b * E2
        fast, slow = phi(c), brute_oracle_phi(c, 3)
        mism += slow is None or fast.value != slow.value or fast.minimizers != slow.minimizers
    return not mism, f"mismatches={mism}"


def gonality_suite(rng):
    r1, r2 = gon_window(3 * E1 + 3 * E2), gon_window(4 * E1 + 3 * E2)
    ok = r1.window == (4, 6) and r2.window == (5, 7)
    ok &= all(classify_minimal_L(d) == "conforms" for d in r1.decompositions + r2.decompositions if d.minimal)
    ok &= r1.steiner.stratum_codim == 2
    chi_bad = [d for d in range(1, 26) if bundle_invariants(DivisorClass((2 * d, 1) + (0,) * 8), d).chi_endo != 4]
    return ok and not chi_bad, f"windows={r1.window},{r2.window} chi_endo_failures={chi_bad}"


def certificate_suite(rng):
    certs = [cert.plane_curve_certificate(d) for d in range(5, 15)]
    certs += [cert.cliffdim_case1_certificate(r) for r in range(3, 15)]
    certs += [cert.cliffdim_case2_bounds(r, 2 * (r - 1) ** 2 + 1) for r in range(10, 15)]
    certs += [cert.lemma_bound_certificate(c) for c in _random_cone_classes(rng, 5)]
    ok = all(cert.recheck(c) for c in certs) and all(c.verdict != cert.INVARIANT_VIOLATION for c in certs)
    return ok, f"certificates={len(certs)}"


SUITES: List[tuple] = [
    ("lattice", lattice_suite),
    ("phi-ceiling", phi_ceiling_suite),
    ("oracle", oracle_suite),
    ("gonality", gonality_suite),
    ("certificates", certificate_suite),
]


def run_all(seed=20241016) -> List[SuiteResult]:
    out = []
    for name, fn in SUITES:
        ok, detail = fn(random.Random(seed))
        out.append(SuiteResult(name, bool(ok), detail))
    return out
