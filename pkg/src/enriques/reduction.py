"""Exact integer/rational linear algebra used by the slice enumerator.

Everything here works on plain lists of ints or Fractions; the matrices
involved are at most 10x10, so clarity wins over speed.
"""

from __future__ import annotations

import math

from ._rational import Fraction


def gram_of(basis, form):
    """Gram matrix [form(b_i, b_j)] of a list of integer vectors."""
    n = len(basis)
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            g[i][j] = g[j][i] = form(basis[i], basis[j])
    return g


def split_functional(w):
    """Unimodular change of basis adapted to the functional x -> w.x.

    Returns (delta, preimage, kernel) where delta = gcd(w) >= 1,
    w.preimage = delta and kernel is a Z-basis of {x : w.x = 0}.
    Columns of a unimodular matrix are tracked through Euclid steps on w.
    """
    n = len(w)
    w = list(w)
    cols = [[int(i == j) for i in range(n)] for j in range(n)]
    if not any(w):
        raise ValueError("zero functional")
    while sum(1 for x in w if x) > 1:
        piv = min((i for i in range(n) if w[i]), key=lambda i: abs(w[i]))
        for j in range(n):
            if j != piv and w[j]:
                q = w[j] // w[piv]
                w[j] -= q * w[piv]
                cols[j] = [a - q * b for a, b in zip(cols[j], cols[piv])]
    piv = next(i for i in range(n) if w[i])
    pre = cols[piv]
    if w[piv] < 0:
        pre = [-a for a in pre]
    kernel = [cols[j] for j in range(n) if j != piv]
    return abs(w[piv]), pre, kernel


def lll_reduce(basis, form):
    """LLL reduction (delta = 3/4) of `basis` for a positive definite bilinear form.

    Integral variant: only the Gram determinants d_i and the scaled
    Gram-Schmidt coefficients lam_ij = d_j mu_ij are stored, all integers.
    The form only needs to be evaluated on integer vectors.
    """
    b = [list(v) for v in basis]
    n = len(b)
    if n <= 1:
        return b
    d = [0] * (n + 1)  # d[i+1] = det Gram(b_0..b_i), d[0] = 1
    d[0] = 1
    lam = [[0] * n for _ in range(n)]

    def gram_schmidt_row(k):
        for j in range(k + 1):
            u = form(b[k], b[j])
            for i in range(j):
                u = (d[i + 1] * u - lam[k][i] * lam[j][i]) // d[i]
            if j < k:
                lam[k][j] = u
            else:
                if u <= 0:
                    raise ValueError("form is not positive definite on the basis")
                d[k + 1] = u

    def red(k, l):
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            b[k] = [x - q * y for x, y in zip(b[k], b[l])]
            lam[k][l] -= q * d[l + 1]
            for i in range(l):
                lam[k][i] -= q * lam[l][i]

    def swap(k, kmax):
        b[k], b[k - 1] = b[k - 1], b[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lk = lam[k][k - 1]
        B = (d[k - 1] * d[k + 1] + lk * lk) // d[k]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lk * t) // d[k]
            lam[i][k - 1] = (B * t + lk * lam[i][k]) // d[k + 1]
        d[k] = B

    gram_schmidt_row(0)
    k, kmax = 1, 0
    while k < n:
        if k > kmax:
            kmax = k
            gram_schmidt_row(k)
        while True:
            red(k, k - 1)
            if 4 * d[k + 1] * d[k - 1] < 3 * d[k] ** 2 - 4 * lam[k][k - 1] ** 2:
                swap(k, kmax)
                k = max(1, k - 1)
            else:
                for l in range(k - 2, -1, -1):
                    red(k, l)
                k += 1
                break
    return b


def ldl(a):
    """Decompose a positive definite matrix as sum_i q_i (x_i + sum_{j>i} mu_ij x_j)^2.

    Returns (q, mu) with Fraction entries; raises ValueError if a pivot is
    not positive.
    """
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    q = [Fraction(0)] * n
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        if m[i][i] <= 0:
            raise ValueError("matrix is not positive definite")
        q[i] = m[i][i]
        for j in range(i + 1, n):
            mu[i][j] = m[i][j] / q[i]
        for r in range(i + 1, n):
            f = m[r][i] / q[i]
            for c in range(i + 1, n):
                m[r][c] -= f * m[i][c]
    return q, mu


def ldl_solve(q, mu, rhs):
    """Solve A x = rhs given the factors (q, mu) of A from `ldl`."""
    n = len(q)
    # A = U^T D U with U unit upper triangular, U[i][j] = mu[i][j]
    z = [Fraction(0)] * n
    for i in range(n):
        z[i] = Fraction(rhs[i]) - sum((mu[k][i] * z[k] for k in range(i) if mu[k][i]), Fraction(0))
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        x[i] = z[i] / q[i] - sum((mu[i][j] * x[j] for j in range(i + 1, n) if mu[i][j]), Fraction(0))
    return x


def floor_sqrt(t):
    """floor(sqrt(t)) for a non-negative rational t, exactly."""
    t = Fraction(t)
    if t < 0:
        raise ValueError("negative radicand")
    return math.isqrt(int(t.numerator) * int(t.denominator)) // int(t.denominator)


def integer_window(center, radius_sq):
    """All integers y with (y - center)^2 <= radius_sq, in increasing order."""
    if radius_sq < 0:
        return []
    s = floor_sqrt(radius_sq)
    lo = math.floor(center - s) - 1
    hi = math.ceil(center + s) + 1
    return [y for y in range(lo, hi + 1) if (y - center) ** 2 <= radius_sq]


def fincke_pohst(q, mu, center, bound):
    """Yield every integer vector y with sum_i q_i (z_i + sum_{j>i} mu_ij z_j)^2 <= bound,
    where z = y - center.  Exact: each candidate window is filtered by the
    rational inequality itself."""
    n = len(q)
    y = [0] * n
    z = [Fraction(0)] * n

    def rec(i, remaining):
        shift = sum((mu[i][j] * z[j] for j in range(i + 1, n)), Fraction(0))
        c = center[i] - shift
        for yi in integer_window(c, remaining / q[i]):
            y[i] = yi
            z[i] = yi - center[i]
            used = q[i] * (z[i] + shift) ** 2
            if i == 0:
                yield list(y)
            else:
                yield from rec(i - 1, remaining - used)

    if bound < 0:
        return
    yield from rec(n - 1, Fraction(bound))
