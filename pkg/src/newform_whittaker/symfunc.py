"""Symmetric functions evaluated at concrete rational points.

Signatures are plain tuples of ints. A signature is dominant when it is weakly
decreasing and non-negative; as a partition it may carry trailing zeros.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

__all__ = [
    "SatakeParams",
    "is_dominant",
    "weight",
    "dominant_signatures",
    "det",
    "elementary_e",
    "complete_h",
    "schur",
    "schur_bialternant",
    "schur_jacobi_trudi",
    "schur_ssyt_oracle",
    "ssyt",
    "pieri_expand",
]


@dataclass(frozen=True)
class SatakeParams:
    """Inverse roots of the L-factor, padded with zeros up to length n.

    A zero entry means the L-factor has degree below n, i.e. positive conductor.
    """

    alphas: tuple

    def __init__(self, alphas):
        object.__setattr__(self, "alphas", tuple(Fraction(a) for a in alphas))
        if not self.alphas:
            raise ValueError("need at least one Satake parameter")

    @property
    def n(self):
        return len(self.alphas)

    @property
    def conductor_positive(self):
        return any(a == 0 for a in self.alphas)

    def __iter__(self):
        return iter(self.alphas)

    def __len__(self):
        return len(self.alphas)


def _alphas(alpha):
    if isinstance(alpha, SatakeParams):
        return alpha.alphas
    return tuple(Fraction(a) for a in alpha)


def is_dominant(f):
    return all(a >= b for a, b in zip(f, f[1:])) and (not f or f[-1] >= 0)


def weight(f):
    return sum(f)


def _require_dominant(f):
    f = tuple(int(x) for x in f)
    if not is_dominant(f):
        raise ValueError(f"signature {f} is not dominant")
    return f


def dominant_signatures(length, max_weight):
    """All dominant signatures of the given length with weight <= max_weight.

    Graded: by weight, then lexicographically descending within a weight.
    """
    out = []

    def rec(prefix, remaining, cap, slots):
        if slots == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), -1, -1):
            rec(prefix + [part], remaining - part, part, slots - 1)

    for w in range(max_weight + 1):
        rec([], w, w, length)
    return out


def det(rows):
    """Determinant of a square matrix of Fractions by elimination."""
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            factor = a[r][col] / p
            if factor:
                for c in range(col, n):
                    a[r][c] -= factor * a[col][c]
    return sign * result


def elementary_e(i, alpha):
    xs = _alphas(alpha)
    if not 0 <= i <= len(xs):
        raise ValueError(f"elementary index {i} out of range 0..{len(xs)}")
    # coefficients of prod(1 + x t)
    coeffs = [Fraction(1)]
    for x in xs:
        coeffs = [a + x * b for a, b in zip(coeffs + [Fraction(0)], [Fraction(0)] + coeffs)]
    return coeffs[i]


def complete_h(k, alpha):
    if k < 0:
        return Fraction(0)
    xs = _alphas(alpha)
    # h_j over a growing prefix of variables
    h = [Fraction(1)] + [Fraction(0)] * k
    for x in xs:
        for j in range(1, k + 1):
            h[j] += x * h[j - 1]
    return h[k]


def _prepare(f, xs):
    """Drop zero variables and pad/trim the partition to the remaining count.

    Returns None when the value is forced to zero (more rows than variables).
    """
    f = _require_dominant(f)
    parts = tuple(p for p in f if p > 0)
    nz = tuple(x for x in xs if x != 0)
    if len(parts) > len(nz):
        return None
    return parts + (0,) * (len(nz) - len(parts)), nz


@lru_cache(maxsize=None)
def _bialternant(parts, xs):
    m = len(xs)
    num = det([[x ** (parts[i] + m - 1 - i) for x in xs] for i in range(m)])
    vandermonde = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            vandermonde *= xs[i] - xs[j]
    return num / vandermonde


def schur_bialternant(f, alpha, fallback=True):
    """Schur polynomial s_f as a ratio of alternants.

    Repeated parameters make the ratio 0/0; then the Jacobi-Trudi determinant
    is used instead, unless ``fallback`` is False, in which case ValueError.
    """
    prep = _prepare(f, _alphas(alpha))
    if prep is None:
        return Fraction(0)
    parts, xs = prep
    if len(set(xs)) != len(xs):
        if not fallback:
            raise ValueError("repeated Satake parameters: bialternant is 0/0")
        return schur_jacobi_trudi(f, alpha)
    return _bialternant(parts, xs)


schur = schur_bialternant


def schur_jacobi_trudi(f, alpha):
    """s_f = det(h_{f_i - i + j}) over the nonzero rows of f."""
    f = _require_dominant(f)
    xs = _alphas(alpha)
    parts = [p for p in f if p > 0]
    ell = len(parts)
    if ell > len(xs):
        return Fraction(0)
    top = parts[0] + ell if parts else 0
    h = [complete_h(k, xs) for k in range(top + 1)]
    hk = lambda k: h[k] if 0 <= k <= top else Fraction(0)  # noqa: E731
    return det([[hk(parts[i] - i + j) for j in range(ell)] for i in range(ell)])


def ssyt(shape, max_entry):
    """Yield semistandard tableaux of ``shape`` with entries in 1..max_entry.

    Tableaux are tuples of rows. Cells are filled in row-major order.
    """
    shape = tuple(p for p in _require_dominant(shape) if p > 0)
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]

    def fill(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        # rows below still need room for strictly increasing columns
        depth_below = sum(1 for rr in range(r + 1, len(shape)) if shape[rr] > c)
        for val in range(lo, max_entry - depth_below + 1):
            grid[r][c] = val
            yield from fill(k + 1)
        grid[r][c] = 0

    yield from fill(0)


def schur_ssyt_oracle(f, alpha, budget=12):
    """Brute-force s_f: sum over semistandard tableaux of the product of parameters."""
    f = _require_dominant(f)
    if weight(f) > budget:
        raise ValueError(f"weight {weight(f)} exceeds enumeration budget {budget}")
    xs = _alphas(alpha)
    total = Fraction(0)
    for t in ssyt(f, len(xs)):
        term = Fraction(1)
        for row in t:
            for entry in row:
                term *= xs[entry - 1]
        total += term
    return total


def pieri_expand(f, i):
    """Dominant signatures f + eps with eps a 0/1 vector of i ones, same length as f."""
    f = _require_dominant(f)
    if not 1 <= i <= len(f):
        raise ValueError(f"Pieri index {i} out of range 1..{len(f)}")
    out = []
    for positions in combinations(range(len(f)), i):
        g = list(f)
        for j in positions:
            g[j] += 1
        g = tuple(g)
        if is_dominant(g):
            out.append(g)
    return out
