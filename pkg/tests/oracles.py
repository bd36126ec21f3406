"""Independent reference computations used only by the tests.

Nothing here imports the package under test.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

# ---------------------------------------------------------------------------
# singular values by characteristic polynomial root bisection
# ---------------------------------------------------------------------------
# Polynomials are lists of Fractions, lowest degree first.


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _deriv(p):
    return _trim([k * c for k, c in enumerate(p)][1:] or [Fraction(0)])


def _divmod(a, b):
    a = _trim(a)
    b = _trim(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = list(a)
    while len(r) >= len(b) and any(r):
        shift = len(r) - len(b)
        f = r[-1] / b[-1]
        q[shift] = f
        for i, c in enumerate(b):
            r[i + shift] -= f * c
        r = _trim(r[:-1]) if len(r) > 1 else [Fraction(0)]
        if len(r) < len(b):
            break
    return _trim(q), _trim(r)


def _gcd(a, b):
    a, b = _trim(a), _trim(b)
    while any(b):
        _, r = _divmod(a, b)
        a, b = b, r
    return [c / a[-1] for c in a]


def _eval(p, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _squarefree_parts(p):
    """Yun's algorithm: [(q1, 1), (q2, 2), ...] with p = c * prod(qk ** k)."""
    p = _trim(p)
    if len(p) == 1:
        return []
    dp = _deriv(p)
    a = _gcd(p, dp)
    b, _ = _divmod(p, a)
    c, _ = _divmod(dp, a)
    d = [x - y for x, y in zip(c + [0] * len(b), _deriv(b) + [0] * len(c))]
    d = _trim(d)
    parts = []
    k = 1
    while len(_trim(b)) > 1:
        a = _gcd(b, d)
        if len(a) > 1:
            parts.append((a, k))
        b, _ = _divmod(b, a)
        c, _ = _divmod(d, a)
        d = _trim([x - y for x, y in zip(c + [0] * len(b), _deriv(b) + [0] * len(c))])
        k += 1
    return parts


def _bisect(p, lo: Fraction, hi: Fraction) -> float:
    flo = _eval(p, lo)
    a, b = float(lo), float(hi)
    for _ in range(200):
        mid = (a + b) / 2
        if mid in (a, b):
            break
        fm = _eval(p, Fraction(mid))
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            a, flo = mid, fm
        else:
            b = mid
    return (a + b) / 2


def _distinct_real_roots(p):
    """Distinct real roots of a polynomial with rational coefficients."""
    p = _trim(p)
    if len(p) == 1:
        return []
    roots = []
    for q, _ in _squarefree_parts(p):
        roots.extend(_squarefree_roots(q))
    return sorted(roots)


def _squarefree_roots(q):
    q = _trim(q)
    if len(q) == 2:
        return [float(-q[0] / q[1])]
    bound = 1 + max(abs(c / q[-1]) for c in q[:-1])
    crit = [Fraction(x) for x in _distinct_real_roots(_deriv(q))]
    points = sorted(set([-bound] + [x for x in crit if -bound < x < bound] + [bound]))
    roots = []
    for lo, hi in zip(points, points[1:]):
        flo, fhi = _eval(q, lo), _eval(q, hi)
        if flo == 0:
            roots.append(float(lo))
        elif flo * fhi < 0:
            roots.append(_bisect(q, lo, hi))
    if _eval(q, points[-1]) == 0:
        roots.append(float(points[-1]))
    return roots


def charpoly(g):
    """det(x I - G) via Faddeev-LeVerrier, exact over the rationals."""
    n = len(g)
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = [[Fraction(0)] * n for _ in range(n)]
    c = Fraction(1)
    for k in range(1, n + 1):
        # M_k = G M_{k-1} + c_{n-k+1} I
        mk = [[sum(g[i][t] * mk[t][j] for t in range(n)) + c * ident[i][j] for j in range(n)] for i in range(n)]
        gm = [[sum(g[i][t] * mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        c = -sum(gm[i][i] for i in range(n)) / k
        coeffs[n - k] = c
    return coeffs


def oracle_singular_values(matrix) -> list[float]:
    """Singular values from the roots of det(x I - M Mᵀ), descending, length = rows."""
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    g = [[sum(a * b for a, b in zip(m[i], m[j])) for j in range(n)] for i in range(n)]
    p = charpoly(g)
    eig = []
    for q, mult in _squarefree_parts(p):
        for r in _squarefree_roots(q):
            eig.extend([r] * mult)
    assert len(eig) == n, (eig, p)
    return sorted((math.sqrt(max(x, 0.0)) for x in eig), reverse=True)


# ---------------------------------------------------------------------------
# Kendall tau-b by counting pairs
# ---------------------------------------------------------------------------


def _places(ranking):
    out = {}
    for place, item in enumerate(ranking):
        for label in [item] if isinstance(item, str) else item:
            out[label] = place
    return out


def brute_kendall_tau_b(a, b) -> float:
    pa, pb = _places(a), _places(b)
    concordant = discordant = tie_a = tie_b = 0
    for x, y in combinations(sorted(pa), 2):
        da = pa[x] - pa[y]
        db = pb[x] - pb[y]
        if da == 0 and db == 0:
            continue
        if da == 0:
            tie_a += 1
        elif db == 0:
            tie_b += 1
        elif (da > 0) == (db > 0):
            concordant += 1
        else:
            discordant += 1
    return (concordant - discordant) / math.sqrt((concordant + discordant + tie_a) * (concordant + discordant + tie_b))
