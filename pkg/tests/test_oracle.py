from itertools import product

import pytest

from enriques.lattice import E1, E2, DivisorClass, pairing
from enriques.oracle import brute_oracle_phi, e8_box_vectors, e8_norm
from enriques.slices import SliceQuery, enumerate_slice, phi

# phi values and minimizer sets frozen from brute_oracle_phi (box radius in the last column)
GOLDEN = [
    ((3, 3, 1, 0, 0, 0, 0, 0, 0, 0), 3, [(1, 0, 0, 0, 0, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0, 0, 0, 0, 0)], 3),
    ((4, 2, 0, 0, 0, 0, 1, 0, 0, 0), 2, [(1, 0, 0, 0, 0, 0, 0, 0, 0, 0)], 3),
    ((3, 5, 0, 0, 0, 0, 0, 0, 0, -1), 3, [(0, 1, 0, 0, 0, 0, 0, 0, 0, 0)], 3),
    ((4, 4, 0, 0, 0, 0, 2, 0, 0, 0), 4,
     [(1, 1, 0, 0, 0, 0, 1, 0, 0, 0), (1, 0, 0, 0, 0, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0, 0, 0, 0, 0)], 3),
    ((6, 3, -1, 0, 0, -1, 0, 0, 0, 0), 3, [(1, 0, 0, 0, 0, 0, 0, 0, 0, 0)], 3),
    ((3, 3, 0, 0, 0, 2, 2, 1, -1, 2), 2, [(1, 1, 0, 0, 0, 1, 1, 1, 0, 1)], 3),
    ((3, 3, 1, -1, 0, 3, 2, 2, 1, 1), 1,
     [(2, 2, 1, 0, 1, 3, 2, 2, 1, 1), (1, 1, 0, -1, -1, 0, 0, 0, 0, 0)], 3),
    ((2, 3, -1, -1, -1, -1, -3, -1, -1, -3), 1,
     [(1, 2, -1, -1, -1, -1, -2, -1, -1, -2), (1, 1, 0, 0, 0, 0, -1, 0, 0, -1)], 3),
    ((3, 3, 0, -1, -2, -1, -3, -3, -2, -3), 2,
     [(1, 1, 0, 0, 0, 1, 1, 0, 0, 0), (1, 1, 0, 0, 0, 0, -1, -1, -1, -1),
      (1, 1, 0, -1, -2, -2, -3, -2, -1, -2)], 3),
]


def test_oracle_examples():
    assert brute_oracle_phi(3 * E1 + 3 * E2, 4) == (3, [E1, E2])
    assert brute_oracle_phi(E1 + E2, 2) == (1, [E1, E2])
    assert brute_oracle_phi(2 * E1 + 5 * E2, 4) == (2, [E2])


@pytest.mark.parametrize("coords,value,mins,R", GOLDEN)
def test_phi_matches_frozen_oracle_values(coords, value, mins, R):
    res = phi(DivisorClass(coords))
    assert res.value == value
    assert [m.coords for m in res.minimizers] == mins


def test_box_incompleteness_is_detected_by_widening():
    # four-coordinate minimizers exist here; R = 3 misses two of the eighteen
    c = DivisorClass((3, 3, 0, 0, 1, -1, 0, 1, -1, -1))
    res = phi(c)
    narrow = brute_oracle_phi(c, 3)
    assert res.value == narrow.value == 2 and len(res.minimizers) == 18
    assert set(narrow.minimizers) < set(res.minimizers)
    assert all(max(map(abs, e.coords)) == 4 for e in set(res.minimizers) - set(narrow.minimizers))


def test_e8_norm_agrees_with_lattice_pairing():
    for w in [(1, 0, 0, 0, 0, 0, 0, 0), (1, 1, 0, 0, 0, 0, 0, 0), (2, 3, 4, 5, 6, 4, 2, 3), (1, -1, 2, 0, -3, 1, 0, 2)]:
        x = DivisorClass((0, 0) + w)
        assert e8_norm(w) == -pairing(x, x)


def test_e8_box_vectors_match_naive_scan():
    got = sorted(e8_box_vectors(4, 1))
    want = sorted(w for w in product((-1, 0, 1), repeat=8) if e8_norm(w) == 4)
    assert got == want and len(got) > 0
    # the highest root has a coefficient 6, so R = 6 holds all 240 roots
    roots = e8_box_vectors(2, 6)
    assert len(roots) == 240


def test_slice_enumeration_matches_box_scan():
    c = 2 * E1 + 3 * E2
    R = 2
    for m in (1, 2, 3):
        fast = {x for x in enumerate_slice(SliceQuery(c, m, -4, 2, effective_only=False))
                if max(map(abs, x.coords)) <= R}
        slow = set()
        for p in range(-R, R + 1):
            for q in range(-R, R + 1):
                if 3 * p + 2 * q != m:
                    continue
                for n in range(-4, 3):
                    if 2 * p * q - n < 0:
                        continue
                    for w in e8_box_vectors(2 * p * q - n, R):
                        slow.add(DivisorClass((p, q) + w))
        assert fast == slow
