import random
from fractions import Fraction

import pytest
import sympy

from enriques.certificates import (
    ALL_HOLD, INVARIANT_VIOLATION, OUT_OF_SCOPE, cliffdim_case1_certificate, cliffdim_case2_bounds,
    lemma_bound_certificate, plane_curve_certificate, recheck,
)
from enriques.errors import PreconditionError
from enriques.lattice import E1, E2, RANK, DivisorClass, is_positive_cone

SYMPY_REL = {"<": "<", "<=": "<=", "=": "==", ">=": ">=", ">": ">"}


def sympy_holds(step):
    def val(x):
        x = Fraction(x)
        return sympy.Rational(x.numerator, x.denominator)

    return bool(sympy.Rel(val(step.lhs), val(step.rhs), SYMPY_REL[step.rel]))


def all_certificates():
    out = [plane_curve_certificate(d) for d in range(5, 16)]
    out += [cliffdim_case1_certificate(r) for r in range(3, 16)]
    out += [cliffdim_case2_bounds(r) for r in range(10, 14)]
    out += [cliffdim_case2_bounds(r, g) for r in range(10, 13) for g in (100, 163, 200, 243, 400)]
    rng = random.Random(5)
    while len(out) < 45:
        c = DivisorClass(tuple(rng.randint(-4, 4) for _ in range(RANK)))
        if is_positive_cone(c):
            out.append(lemma_bound_certificate(c))
    return out


@pytest.mark.parametrize("cert", all_certificates(), ids=lambda c: c.name)
def test_every_step_reverified_independently(cert):
    for s in cert.steps:
        assert s.holds == sympy_holds(s), s
        assert isinstance(s.lhs, (int, Fraction)) and isinstance(s.rhs, (int, Fraction))
    assert recheck(cert)
    fails = [i for i, s in enumerate(cert.steps) if not s.holds]
    if cert.verdict == ALL_HOLD:
        assert not fails
    elif cert.verdict.startswith("step-fails"):
        assert cert.verdict == f"step-fails({fails[0]})"


def _step(cert, anchor, phi=None):
    return next(s for s in cert.steps if s.anchor == anchor and s.phi == phi)


def test_plane_curve_six():
    c = plane_curve_certificate(6)
    assert c.parameters["g"] == 10
    s = _step(c, "phi-ceiling")
    assert (s.lhs, s.rhs, s.holds) == (4, 4, True)
    s = _step(c, "lemma-applicability")
    assert (s.lhs, s.rhs, s.holds) == (4, Fraction(9, 2), True)
    per_phi = {s.phi: s.holds for s in c.steps if s.phi is not None}
    assert per_phi == {1: True, 2: True, 3: False, 4: False}
    assert c.parameters["phi_closing_chain"] == [1, 2]


def test_plane_curve_five_is_out_of_scope():
    c = plane_curve_certificate(5)
    assert c.verdict == OUT_OF_SCOPE
    s = _step(c, "lemma-applicability")
    assert (s.lhs, s.rhs, s.holds) == (3, Fraction(5, 2), False)


def test_plane_curve_ten():
    c = plane_curve_certificate(10)
    assert c.parameters["g"] == 36
    assert (_step(c, "phi-ceiling").lhs, _step(c, "phi-ceiling").rhs) == (8, 8)
    s = _step(c, "lemma-applicability")
    assert (s.lhs, s.rhs, s.holds) == (8, Fraction(35, 2), True)


def test_plane_curve_precondition():
    with pytest.raises(PreconditionError):
        plane_curve_certificate(4)


def test_cliffdim_case1():
    c = cliffdim_case1_certificate(3)
    assert (c.parameters["g"], c.parameters["cliff"], c.parameters["phi_ceiling"]) == (10, 3, 4)
    assert c.parameters["phi_with_contradiction"] == [1, 2]
    assert not c.parameters["ceiling_suffices"] and c.verdict != ALL_HOLD
    c = cliffdim_case1_certificate(9)
    assert (c.parameters["g"], c.parameters["cliff"], c.parameters["phi_ceiling"]) == (34, 15, 8)
    assert c.parameters["ceiling_suffices"] and c.verdict == ALL_HOLD
    with pytest.raises(PreconditionError):
        cliffdim_case1_certificate(2)


def test_cliffdim_case2():
    assert cliffdim_case2_bounds(10).parameters["g_min"] == 163
    c = cliffdim_case2_bounds(10, 163)
    assert c.parameters["d_interval"] == [54, 54] and not c.parameters["interval_empty"]
    assert c.verdict == ALL_HOLD
    assert cliffdim_case2_bounds(12, 243).parameters["d_interval"] == [66, 66]
    low = cliffdim_case2_bounds(10, 100)
    assert low.parameters["interval_empty"] and low.verdict == "step-fails(2)"
    with pytest.raises(PreconditionError, match="r >= 10"):
        cliffdim_case2_bounds(9)


def test_cliffdim_case2_monotonicity():
    gmins = [cliffdim_case2_bounds(r).parameters["g_min"] for r in range(10, 30)]
    assert gmins == sorted(gmins) and len(set(gmins)) == len(gmins)
    tops = [cliffdim_case2_bounds(10, g).parameters["d_interval"][1] for g in range(163, 400)]
    assert tops == sorted(tops)


def test_lemma_certificate_examples():
    c = lemma_bound_certificate(3 * E1 + 3 * E2)
    assert [(s.lhs, s.rhs, s.holds) for s in c.steps[:2]] == [(3, 4, True), (6, 9, True)]
    witness = [s for s in c.steps if s.anchor == "non-effectivity"]
    assert [s.lhs for s in witness] == [-3, -3] and all(s.holds for s in witness)
    assert c.verdict == ALL_HOLD and c.parameters["cliff_upper"] == 4
    c = lemma_bound_certificate(E1 + E2)
    assert (c.steps[0].lhs, c.steps[0].rhs, c.steps[0].holds) == (1, 1, True)
    assert (c.steps[1].lhs, c.steps[1].rhs, c.steps[1].holds) == (2, 1, False)
    assert not c.parameters["lemma_ii_asserted"]
    c = lemma_bound_certificate(4 * E1 + 3 * E2)
    assert [(s.lhs, s.rhs) for s in c.steps[:2]] == [(3, 4), (6, 12)]


def test_lemma_certificate_flags_invariant_violation(monkeypatch):
    import enriques.certificates as cert
    from enriques.slices import PhiResult
    monkeypatch.setattr(cert, "phi", lambda c, h=None, ceiling=None: PhiResult(9, [E1]))
    assert cert.lemma_bound_certificate(3 * E1 + 3 * E2).verdict == INVARIANT_VIOLATION


def test_certificates_are_pure():
    assert plane_curve_certificate(7) == plane_curve_certificate(7)
    assert cliffdim_case1_certificate(5) == cliffdim_case1_certificate(5)
