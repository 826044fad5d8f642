"""Zeta integral of the newform along GL(1) as a formal series in X = q^{-s}."""

from dataclasses import dataclass

from .scalars import TruncSeries, poly_from_inverse_roots, series_invert
from .symfunc import _alphas
from .whittaker import ResidualPowerError, whittaker_value

__all__ = ["ZetaReport", "zeta_series", "lfactor_series", "zeta_equals_lfactor"]


def zeta_series(alpha, order):
    """Z(s, W) truncated at X^order, with W(1) = 1.

    The k-th term is W(diag(p^k, 1, ..., 1)) |p^k|^{-(n-1)/2} times X^k, the
    unit group contributing volume one. The v-powers must cancel exactly.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    xs = _alphas(alpha)
    n = len(xs)
    coeffs = []
    for k in range(order + 1):
        f = (k,) + (0,) * (n - 2)
        term = whittaker_value(f, xs).shift(k * (n - 1))
        if not term.is_constant():
            raise ResidualPowerError(f"zeta coefficient of X^{k} keeps a v-power: {term}")
        coeffs.append(term.constant())
    return TruncSeries(coeffs, order)


def lfactor_series(alpha, order):
    """prod(1 - alpha_i X)^{-1} truncated at X^order."""
    return series_invert(poly_from_inverse_roots(_alphas(alpha)), order)


@dataclass(frozen=True)
class ZetaReport:
    order: int
    zeta: TruncSeries
    lfactor: TruncSeries
    first_mismatch: object = None

    @property
    def passed(self):
        return self.first_mismatch is None


def zeta_equals_lfactor(alpha, order):
    if order < 1:
        raise ValueError("order must be at least 1")
    z = zeta_series(alpha, order)
    lf = lfactor_series(alpha, order)
    return ZetaReport(order, z, lf, z.first_difference(lf))
