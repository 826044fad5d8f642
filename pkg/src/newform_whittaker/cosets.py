"""Finite-level check of the coset representatives used for the Hecke operators T_i.

Everything is reduced modulo p^N with the uniformizer represented by p. The
groups involved are

* K_m: invertible matrices whose bottom row is (0, ..., 0, 1) mod p^m;
* Gamma = K_m meet d K_m d^{-1} with d = diag(p, ..., p, 1, ..., 1) (i copies of p).

Conjugating by d^{-1} scales entry (j, l) by p^{f_l - f_j}, so an element of
K_m lies in Gamma exactly when its entries with row <= i < column are
divisible by p. Every condition is therefore visible modulo p^{m+1}.
"""

from dataclasses import dataclass, field
from itertools import product

import numpy as np

__all__ = [
    "ResidueMatrix",
    "CosetSpec",
    "CosetReport",
    "is_prime",
    "gaussian_binomial",
    "km_membership",
    "subgroup_membership",
    "parabolic_transversal",
    "lattice_transversal",
    "km_elements",
    "verify_coset_transversal",
]


def is_prime(p):
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def gaussian_binomial(m, i, q):
    """Number of i-dimensional subspaces of F_q^m."""
    if not 0 <= i <= m:
        return 0
    num = den = 1
    for k in range(i):
        num *= q ** (m - k) - 1
        den *= q ** (k + 1) - 1
    return num // den


def _int_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    return sum(
        (-1) ** c * rows[0][c] * _int_det([r[:c] + r[c + 1:] for r in rows[1:]])
        for c in range(n)
    )


@dataclass(frozen=True)
class ResidueMatrix:
    """Square integer matrix with entries reduced modulo p^N."""

    rows: tuple
    p: int
    N: int

    def __post_init__(self):
        mod = self.p**self.N
        rows = tuple(tuple(int(x) % mod for x in r) for r in self.rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, n, p, N):
        return cls(tuple(tuple(int(j == k) for k in range(n)) for j in range(n)), p, N)

    @classmethod
    def block(cls, a, x, p, N):
        """The matrix (a x; 0 1) for an (n-1)-square block a and column x."""
        a = [list(r) for r in a]
        rows = [r + [x[j]] for j, r in enumerate(a)]
        rows.append([0] * len(a) + [1])
        return cls(tuple(map(tuple, rows)), p, N)

    @property
    def n(self):
        return len(self.rows)

    @property
    def modulus(self):
        return self.p**self.N

    def det(self):
        return _int_det([list(r) for r in self.rows]) % self.modulus

    def is_invertible(self):
        return self.det() % self.p != 0

    def __matmul__(self, other):
        n, mod = self.n, self.modulus
        return ResidueMatrix(
            tuple(
                tuple(sum(self.rows[j][k] * other.rows[k][l] for k in range(n)) % mod for l in range(n))
                for j in range(n)
            ),
            self.p,
            self.N,
        )

    def inverse(self):
        n, mod = self.n, self.modulus
        d = self.det()
        if d % self.p == 0:
            raise ZeroDivisionError("matrix is not invertible modulo p")
        dinv = pow(d, -1, mod)
        rows = [list(r) for r in self.rows]
        if n == 1:
            return ResidueMatrix(((dinv,),), self.p, self.N)
        adj = [[0] * n for _ in range(n)]
        for j in range(n):
            for k in range(n):
                minor = [r[:k] + r[k + 1:] for idx, r in enumerate(rows) if idx != j]
                adj[k][j] = (-1) ** (j + k) * _int_det(minor)
        return ResidueMatrix(tuple(tuple(c * dinv for c in r) for r in adj), self.p, self.N)

    def as_array(self):
        return np.array(self.rows, dtype=np.int64)


@dataclass(frozen=True)
class CosetSpec:
    n: int
    p: int
    m: int
    i: int
    N: int = None

    def __post_init__(self):
        if self.N is None:
            object.__setattr__(self, "N", self.m + 1)
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.m < 1:
            raise ValueError("level m must be positive")
        if not 1 <= self.i <= self.n - 1:
            raise ValueError(f"Hecke index i must lie in 1..{self.n - 1}")
        if self.N < self.m + 1:
            raise ValueError("truncation N must be at least m + 1")

    @property
    def modulus(self):
        return self.p**self.N


def km_membership(M, m):
    if M.N < m:
        raise ValueError("truncation too coarse for this level")
    pm = M.p**m
    n = M.n
    bottom = M.rows[n - 1]
    if any(bottom[l] % pm for l in range(n - 1)) or (bottom[n - 1] - 1) % pm:
        return False
    return M.is_invertible()


def subgroup_membership(M, spec):
    if not km_membership(M, spec.m):
        return False
    return all(
        M.rows[j][l] % spec.p == 0 for j in range(spec.i) for l in range(spec.i, spec.n)
    )


def _vectors(dim, p):
    return [tuple(v) for v in product(range(p), repeat=dim)]


def _span(columns, dim, p):
    out = set()
    for coeffs in product(range(p), repeat=len(columns)):
        out.add(tuple(sum(c * col[r] for c, col in zip(coeffs, columns)) % p for r in range(dim)))
    return frozenset(out)


def _columns(a, cols):
    return [tuple(row[c] for row in a) for c in cols]


def _gl_mod_p(dim, p):
    for entries in product(range(p), repeat=dim * dim):
        a = tuple(tuple(entries[r * dim:(r + 1) * dim]) for r in range(dim))
        if _int_det([list(r) for r in a]) % p:
            yield a


def parabolic_transversal(size, i, p):
    """Left coset representatives of the block-parabolic P in GL_size(F_p).

    P = {a : a_{jl} = 0 for j <= i < l} is the stabilizer of the span of the
    last size - i basis vectors, so cosets a P are labelled by the image of
    that span under a.
    """
    if not 1 <= i <= size:
        raise ValueError(f"index {i} out of range 1..{size}")
    seen = {}
    for a in _gl_mod_p(size, p):
        key = _span(_columns(a, range(i, size)), size, p)
        if key not in seen:
            seen[key] = a
    return [ResidueMatrix(a, p, 1) for a in seen.values()]


def lattice_transversal(a, i, p):
    """Representatives x of L_0 / a L_i, read modulo p (a L_i contains p L_0)."""
    rows = a.rows if isinstance(a, ResidueMatrix) else a
    size = len(rows)
    sub = _span(_columns(rows, range(i, size)), size, p)
    reps, covered = [], set()
    for x in _vectors(size, p):
        if x in covered:
            continue
        reps.append(x)
        covered.update(tuple((xj + sj) % p for xj, sj in zip(x, s)) for s in sub)
    return reps


def km_elements(n, p, m, N):
    """Yield numpy batches (k, n, n) covering K_m modulo p^N exactly once.

    Bottom rows are drawn directly from their congruence class; the upper
    rows are scanned in full and filtered by invertibility modulo p.
    """
    mod, pm = p**N, p**m
    lifts_zero = range(0, mod, pm)
    lifts_one = range(1, mod, pm)
    upper = np.array(list(product(range(mod), repeat=(n - 1) * n)), dtype=np.int64)
    upper = upper.reshape(-1, n - 1, n)
    for bottom in product(*([lifts_zero] * (n - 1) + [lifts_one])):
        batch = np.empty((upper.shape[0], n, n), dtype=np.int64)
        batch[:, : n - 1, :] = upper
        batch[:, n - 1, :] = bottom
        yield batch[_batch_det(batch) % p != 0]


def _batch_det(batch):
    # cofactor expansion along the first row; exact in int64 at desk scale
    n = batch.shape[1]
    if n == 1:
        return batch[:, 0, 0].copy()
    total = np.zeros(batch.shape[0], dtype=np.int64)
    for c in range(n):
        minor = np.delete(batch[:, 1:, :], c, axis=2)
        total += (-1) ** c * batch[:, 0, c] * _batch_det(minor)
    return total


def _gamma_mask(rows, spec):
    """Gamma-membership of products given only their first i rows and last row.

    ``rows`` has shape (k, i + 1, n); determinants are units already.
    """
    p, n, i = spec.p, spec.n, spec.i
    pm = p**spec.m
    ok = np.all(rows[:, i, : n - 1] % pm == 0, axis=1)
    ok &= (rows[:, i, n - 1] - 1) % pm == 0
    ok &= np.all(rows[:, :i, i:] % p == 0, axis=(1, 2))
    return ok


@dataclass
class CosetReport:
    spec: CosetSpec
    representatives: list = field(default_factory=list)
    expected_count: int = 0
    index_sizes: list = field(default_factory=list)
    distinct: bool = False
    clashes: list = field(default_factory=list)
    covered: int = 0
    enumerated: int = 0
    uncovered: int = 0
    multiply_covered: int = 0

    @property
    def count_ok(self):
        return len(self.representatives) == self.expected_count

    @property
    def index_ok(self):
        return all(s == self.spec.p**self.spec.i for s in self.index_sizes)

    @property
    def coverage_ok(self):
        return self.enumerated > 0 and self.uncovered == 0 and self.multiply_covered == 0

    @property
    def passed(self):
        return self.distinct and self.count_ok and self.index_ok and self.coverage_ok


def verify_coset_transversal(spec, max_candidates=50_000_000):
    """Exhaustively check the representatives (a x; 0 1) for K_m / Gamma."""
    n, p, N = spec.n, spec.p, spec.N
    mod = p**N
    candidates = mod ** ((n - 1) * n) * p ** ((N - spec.m) * n)
    if candidates > max_candidates:
        raise ValueError(f"enumeration of {candidates} matrices exceeds max_candidates")

    report = CosetReport(spec)
    report.expected_count = p**spec.i * gaussian_binomial(n - 1, spec.i, p)
    for a in parabolic_transversal(n - 1, spec.i, p):
        xs = lattice_transversal(a, spec.i, p)
        report.index_sizes.append(len(xs))
        for x in xs:
            report.representatives.append(ResidueMatrix.block(a.rows, x, p, N))

    reps = report.representatives
    inverses = [r.inverse() for r in reps]
    for s in range(len(reps)):
        for t in range(s + 1, len(reps)):
            if subgroup_membership(inverses[t] @ reps[s], spec):
                report.clashes.append((s, t))
    report.distinct = not report.clashes

    keep = list(range(spec.i)) + [n - 1]
    inv_rows = [h.as_array()[keep].astype(np.int32) for h in inverses]
    for batch in km_elements(n, p, spec.m, N):
        batch = batch.astype(np.int32)
        hits = np.zeros(batch.shape[0], dtype=np.int64)
        for hinv in inv_rows:
            hits += _gamma_mask(np.matmul(hinv, batch) % mod, spec)
        report.enumerated += batch.shape[0]
        report.covered += int(np.count_nonzero(hits == 1))
        report.uncovered += int(np.count_nonzero(hits == 0))
        report.multiply_covered += int(np.count_nonzero(hits > 1))
    return report
