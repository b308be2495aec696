"""Box-exhaustive reference for phi, independent of the slice enumerator.

A vector is x = p*e + q*f + w with w in E8(-1), so x^2 = 2pq - Q(w) where
Q is the positive E8 form.  Isotropic x therefore need Q(w) = 2pq.  The
E8 diagram is a tree (three arms on a5), so the box vectors of a given
Q-value are assembled from per-arm tables keyed by their contribution to
Q.  Nothing here touches C^perp, LLL or Fincke-Pohst.
"""

from collections import defaultdict
from functools import lru_cache
from itertools import product
from math import isqrt

from .lattice import E8_EDGES, DivisorClass, _h, as_class, content, pairing
from .slices import IsotropicClass, PhiResult

CENTER = 5
# arms listed from the node adjacent to a5 outward
ARMS = ((4, 3, 2, 1), (6, 7), (8,))


def e8_norm(w):
    """Q(w) = 2 sum w_i^2 - 2 sum_edges w_i w_j, with w indexed 1..8 via w[i-1]."""
    return 2 * sum(x * x for x in w) - 2 * sum(w[i - 1] * w[j - 1] for i, j in E8_EDGES)


@lru_cache(maxsize=None)
def _arm_table(arm, center_value, R):
    table = defaultdict(list)
    for vals in product(range(-R, R + 1), repeat=len(arm)):
        contrib = 2 * sum(v * v for v in vals) - 2 * center_value * vals[0]
        contrib -= 2 * sum(a * b for a, b in zip(vals, vals[1:]))
        table[contrib].append(vals)
    return dict(table)


def e8_box_vectors(norm, R):
    """All w in [-R, R]^8 with Q(w) = norm, as 8-tuples (a1..a8)."""
    out = []
    for c in range(-R, R + 1):
        ta, tb, tc = (_arm_table(arm, c, R) for arm in ARMS)
        rest = norm - 2 * c * c
        for ka, la in ta.items():
            for kb, lb in tb.items():
                lc = tc.get(rest - ka - kb)
                if not lc:
                    continue
                for va, vb, vc in product(la, lb, lc):
                    w = [0] * 8
                    w[CENTER - 1] = c
                    for arm, vals in zip(ARMS, (va, vb, vc)):
                        for node, v in zip(arm, vals):
                            w[node - 1] = v
                    out.append(tuple(w))
    return out


def brute_oracle_phi(c, R, h=None):
    """phi(C) restricted to half-fibres with all coordinates in [-R, R].

    Complete inside the box only.  (p, q) pairs are visited in order of a
    Cauchy-Schwarz lower bound on x.C and abandoned once that bound
    exceeds the best value found.
    """
    c = as_class(c)
    hh = _h(h)
    qc = e8_norm(c.coords[2:])
    qh = e8_norm(hh.coords[2:])

    def lin_u(p, q, d):
        return pairing(DivisorClass((p, q) + (0,) * 8), d)

    def lower(p, q):
        # |w.C| <= sqrt(Q(w) Q(c8)) with Q(w) = 2pq, so x.C >= lin_u - sqrt(2pq Q(c8))
        return lin_u(p, q, c) - isqrt(2 * p * q * qc) - 1 if p * q and qc else lin_u(p, q, c)

    def can_be_effective(p, q):
        return lin_u(p, q, hh) + isqrt(2 * p * q * qh) + 1 > 0

    pairs = sorted(((p, q) for p in range(-R, R + 1) for q in range(-R, R + 1)
                    if p * q >= 0 and can_be_effective(p, q)),
                   key=lambda pq: lower(*pq))
    best, found = None, []
    for p, q in pairs:
        if best is not None and lower(p, q) > best:
            break
        for w in e8_box_vectors(2 * p * q, R):
            x = DivisorClass((p, q) + w)
            if not x or pairing(x, x) != 0 or pairing(x, hh) <= 0 or content(x) != 1:
                continue
            v = pairing(x, c)
            if best is None or v < best:
                best, found = v, [x]
            elif v == best:
                found.append(x)
    if best is None:
        return None
    return PhiResult(best, sorted((IsotropicClass(x.coords) for x in found), reverse=True))
