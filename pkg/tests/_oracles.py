"""Independent reference implementations used only by tests.

These deliberately use different algorithms than the package: plain
division-based Gaussian elimination instead of fraction-free Bareiss,
permutation-sum determinants instead of cofactor expansion, and a direct
term-by-term multiplier instead of repeated squaring.
"""

from fractions import Fraction
from itertools import permutations

from lefkit.polyring import Poly


def naive_rank(rows):
    """Rank by textbook Gaussian elimination over Fraction."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][c]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def perm_sign(perm):
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def perm_det_frac(rows):
    """Determinant as the signed sum over permutations (Fraction entries)."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        term = Fraction(1)
        for i, j in enumerate(perm):
            term *= Fraction(rows[i][j])
            if not term:
                break
        total += perm_sign(perm) * term
    return total


def perm_det_poly(rows, nvars):
    """Determinant of a matrix of Poly entries by permutation expansion."""
    n = len(rows)
    total = Poly.zero(nvars)
    for perm in permutations(range(n)):
        term = Poly.one(nvars)
        for i, j in enumerate(perm):
            term = naive_mul(term, rows[i][j])
            if term.is_zero():
                break
        total = total + (term if perm_sign(perm) > 0 else -term)
    return total


def naive_mul(a, b):
    """Direct convolution of term dicts, no squaring tricks."""
    terms = {}
    for ea, ca in a.terms():
        for eb, cb in b.terms():
            expo = tuple(x + y for x, y in zip(ea, eb))
            terms[expo] = terms.get(expo, Fraction(0)) + ca * cb
    return Poly(a.nvars, {e: c for e, c in terms.items() if c})


def naive_pow(a, s):
    out = Poly.one(a.nvars)
    for _ in range(s):
        out = naive_mul(out, a)
    return out
