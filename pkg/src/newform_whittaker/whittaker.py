"""Newform Whittaker values on the diagonal torus of GL(n).

The newform ``W`` is normalized by ``W(1) = 1`` (a non-zero newform never
vanishes at the identity, so this costs nothing). For a signature
``f = (f_1, ..., f_{n-1})`` the torus point is ``diag(p^f_1, ..., p^f_{n-1}, 1)``
with ``p`` a uniformizer. Values live in the Laurent ring in ``v = q^(1/2)``.

Satake parameters are given as a sequence of ``n`` rationals (or a
:class:`~newform_whittaker.symfunc.SatakeParams`); a zero entry marks
positive conductor.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .linsolve import solve_sparse
from .scalars import Laurent
from .symfunc import (
    _alphas,
    dominant_signatures,
    elementary_e,
    is_dominant,
    pieri_expand,
    schur,
)

__all__ = [
    "ResidualPowerError",
    "WhittakerTable",
    "RecursionCheck",
    "RecursionReport",
    "modulus_exponent",
    "modulus_sqrt",
    "whittaker_value",
    "whittaker_table",
    "normalized_value",
    "mu_params",
    "eigen_from_satake",
    "lfactor_den_from_eigen",
    "verify_recursion",
    "solve_recursion_linear",
]


class ResidualPowerError(ValueError):
    """A quantity that must be a pure rational still carries a power of v."""


def _n_for(f, alpha):
    xs = _alphas(alpha)
    n = len(xs)
    if n < 2:
        raise ValueError("rank n must be at least 2")
    if len(f) != n - 1:
        raise ValueError(f"signature {tuple(f)} should have length n-1 = {n - 1}")
    return xs, n


def modulus_exponent(f):
    """Integer e with sqrt(delta_B(p^f)) = v^e; the rank is len(f) + 1."""
    n = len(f) + 1
    return -sum((n + 1 - 2 * j) * fj for j, fj in enumerate(f, start=1))


def modulus_sqrt(f):
    return Laurent.monomial(modulus_exponent(f))


def whittaker_value(f, alpha):
    """W(p^f): zero off the dominant cone, else sqrt(delta_B(p^f)) * s_f(alpha)."""
    xs, n = _n_for(f, alpha)
    f = tuple(int(x) for x in f)
    if not is_dominant(f):
        return Laurent()
    return modulus_sqrt(f) * schur(f + (0,), xs)


def _tilde_exponent(f):
    # w~(f) = q^{sum_j (n-1-j) f_j} W(p^f), as a power of v
    n = len(f) + 1
    return 2 * sum((n - 1 - j) * fj for j, fj in enumerate(f, start=1))


def normalized_value(f, alpha):
    """The rescaled value w~(f) = q^{sum (n-1-j) f_j} W(p^f) used by the Hecke recursion."""
    return whittaker_value(f, alpha).shift(_tilde_exponent(tuple(f)))


@dataclass
class WhittakerTable:
    n: int
    alpha: tuple
    entries: dict = field(default_factory=dict)

    def __getitem__(self, f):
        f = tuple(f)
        if f in self.entries:
            return self.entries[f]
        if not is_dominant(f):
            return Laurent()
        raise KeyError(f)

    def __len__(self):
        return len(self.entries)

    def signatures(self):
        return list(self.entries)


def whittaker_table(alpha, max_weight):
    xs = _alphas(alpha)
    n = len(xs)
    table = WhittakerTable(n, xs)
    for f in dominant_signatures(n - 1, max_weight):
        table.entries[f] = whittaker_value(f, xs)
    return table


def mu_params(alpha):
    """mu_i = q^{(n-1)/2 - 1} alpha_i = v^{n-3} alpha_i."""
    xs = _alphas(alpha)
    n = len(xs)
    return tuple(Laurent.monomial(n - 3, a) for a in xs)


def eigen_from_satake(alpha):
    """Hecke eigenvalues (lambda_1, ..., lambda_{n-1}) of the newform.

    lambda_i = q^{i - i(i-1)/2} e_i(mu). This is the positive-conductor
    relation; for an unramified parameter list the result is still computed
    from all n entries but no longer matches the L-factor.
    """
    xs = _alphas(alpha)
    n = len(xs)
    if n < 2:
        raise ValueError("rank n must be at least 2")
    return tuple(
        Laurent.monomial(2 * i - i * (i - 1) + i * (n - 3), elementary_e(i, xs))
        for i in range(1, n)
    )


def lfactor_den_from_eigen(lambdas):
    """Denominator of L(s) as a polynomial in X = q^{-s}, from the Hecke eigenvalues.

    Coefficient of X^i is (-1)^i lambda_i q^{i(i-1)/2 - i(n-1)/2}, which must
    be a pure rational.
    """
    lambdas = [Laurent.coerce(lam) for lam in lambdas]
    n = len(lambdas) + 1
    poly = [Fraction(1)]
    for i, lam in enumerate(lambdas, start=1):
        c = lam.shift(i * (i - 1) - i * (n - 1))
        if not c.is_constant():
            raise ResidualPowerError(f"lambda_{i} = {lam} leaves a residual v-power: {c}")
        poly.append((-1) ** i * c.constant())
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def _hecke_coefficient(lam, i):
    # q^{i(i-1)/2 - i} lambda_i
    return Laurent.coerce(lam).shift(i * (i - 1) - 2 * i)


@dataclass(frozen=True)
class RecursionCheck:
    f: tuple
    i: int
    lhs: Laurent
    rhs: Laurent
    raw_lhs: Laurent
    raw_rhs: Laurent

    @property
    def ok(self):
        return self.lhs == self.rhs and self.raw_lhs == self.raw_rhs


@dataclass
class RecursionReport:
    n: int
    weight_bound: int
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.ok for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.ok]

    def __len__(self):
        return len(self.checks)


def _zero_one_vectors(length, ones):
    for positions in combinations(range(length), ones):
        yield tuple(1 if j in positions else 0 for j in range(length))


def verify_recursion(alpha, weight_bound):
    """Check the Hecke difference equations against the closed form.

    For each dominant f of weight <= weight_bound and each 1 <= i <= n-1, two
    forms of the same identity are compared exactly:

    * rescaled:  q^{i(i-1)/2 - i} lambda_i w~(f) = sum_eps w~(f + eps)
    * raw:       q^{-i} lambda_i w(f) = q^{i(n-1) - i(i-1)/2} sum_eps q^{-sum_j j eps_j} w(f + eps)

    where eps runs over 0/1 vectors with i ones and w = W(p^.) is evaluated by
    :func:`whittaker_value` (so non-dominant f + eps contribute zero through the
    support condition, not by being skipped).

    The (n-1)-variable recursion is a positive-conductor statement; with all
    parameters nonzero the report records failures rather than raising.
    """
    if weight_bound < 1:
        raise ValueError("weight_bound must be at least 1")
    xs = _alphas(alpha)
    n = len(xs)
    lambdas = eigen_from_satake(xs)
    report = RecursionReport(n, weight_bound)
    for f in dominant_signatures(n - 1, weight_bound):
        w_f = whittaker_value(f, xs)
        wt_f = normalized_value(f, xs)
        for i in range(1, n):
            lam = lambdas[i - 1]
            lhs = _hecke_coefficient(lam, i) * wt_f
            raw_lhs = lam.shift(-2 * i) * w_f
            rhs = Laurent()
            raw_sum = Laurent()
            for eps in _zero_one_vectors(n - 1, i):
                g = tuple(a + b for a, b in zip(f, eps))
                rhs = rhs + normalized_value(g, xs)
                shift = -2 * sum(j * e for j, e in enumerate(eps, start=1))
                raw_sum = raw_sum + whittaker_value(g, xs).shift(shift)
            raw_rhs = raw_sum.shift(2 * i * (n - 1) - i * (i - 1))
            report.checks.append(RecursionCheck(f, i, lhs, rhs, raw_lhs, raw_rhs))
    return report


def solve_recursion_linear(alpha, weight_bound):
    """Rebuild the Whittaker table from the Hecke recursion by an exact linear solve.

    Works with u(f) = s_f(alpha), related to the rescaled values by
    w~(f) = v^{(n-3)|f|} u(f). The equation for (f, i) reads

        c_i u(f) = sum over dominant f + eps of u(f + eps),

    with c_i = v^{-i(n-3)} q^{i(i-1)/2 - i} lambda_i a pure rational; it is kept
    whenever every f + eps stays within weight_bound. Together with u(0) = 1
    the system must have exactly one solution. Only the Hecke eigenvalues (not
    the closed form) feed the solve.
    """
    if weight_bound < 1:
        raise ValueError("weight_bound must be at least 1")
    xs = _alphas(alpha)
    n = len(xs)
    if n < 2:
        raise ValueError("rank n must be at least 2")
    if all(a != 0 for a in xs):
        raise ValueError("linear recursion solve needs positive conductor (a zero Satake parameter)")
    lambdas = eigen_from_satake(xs)
    coeffs = []
    for i, lam in enumerate(lambdas, start=1):
        c = _hecke_coefficient(lam, i).shift(-i * (n - 3))
        if not c.is_constant():
            raise ResidualPowerError(f"Hecke coefficient {c} for i={i} is not rational")
        coeffs.append(c.constant())

    unknowns = dominant_signatures(n - 1, weight_bound)
    zero = (0,) * (n - 1)
    equations = [({zero: 1}, 1)]
    for f in unknowns:
        for i in range(1, n):
            if sum(f) + i > weight_bound:
                continue
            row = {f: coeffs[i - 1]}
            for g in pieri_expand(f, i):
                row[g] = row.get(g, 0) - 1
            equations.append((row, 0))
    u = solve_sparse(equations, unknowns)

    table = WhittakerTable(n, xs)
    for f in unknowns:
        w_tilde = Laurent.monomial((n - 3) * sum(f), u[f])
        table.entries[f] = w_tilde.shift(-_tilde_exponent(f))
    return table
