"""Exact scalars: Laurent polynomials in v = q^(1/2) and truncated series in X = q^(-s).

Coefficients are :class:`fractions.Fraction` throughout. Nothing on the
verification path ever touches floating point; :meth:`Laurent.numeric` exists
for display only.
"""

import math
import re
from fractions import Fraction

__all__ = [
    "Laurent",
    "TruncSeries",
    "parse_rational",
    "format_rational",
    "poly_mul",
    "poly_from_inverse_roots",
    "format_poly",
    "series_invert",
    "numeric_eval",
]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")
_TERM_RE = re.compile(r"([+-]?)(\d+(?:/\d+)?)(?:\*v\^(-?\d+))?")


def parse_rational(text):
    """Parse ``a`` or ``a/b`` into a Fraction. Decimals and exponents are rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Laurent:
    """Finite sum of terms ``c * v**e`` with rational ``c`` and integer ``e``.

    ``v`` stands for the positive square root of ``q``, so ``v**2 == q``.
    Instances are immutable and kept canonical (no zero coefficients).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in dict(terms).items():
                if not isinstance(e, int):
                    raise TypeError(f"exponent must be int, got {type(e).__name__}")
                c = Fraction(c)
                if c:
                    clean[e] = c
        self._terms = clean

    @classmethod
    def monomial(cls, exponent, coeff=1):
        return cls({exponent: coeff})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Laurent):
            return x
        if isinstance(x, (int, Fraction)):
            return cls({0: x})
        return NotImplemented

    @property
    def terms(self):
        """Copy of the exponent -> coefficient map."""
        return dict(self._terms)

    def exponents(self):
        return sorted(self._terms, reverse=True)

    def coeff(self, exponent):
        return self._terms.get(exponent, Fraction(0))

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(e == 0 for e in self._terms)

    def constant(self):
        """Return the value as a Fraction; raises if any nonzero v-power remains."""
        if not self.is_constant():
            raise ValueError(f"not a pure rational: {self}")
        return self._terms.get(0, Fraction(0))

    def as_monomial(self):
        """Return ``(e, c)`` if this is a single term ``c*v^e``, else None."""
        if len(self._terms) != 1:
            return None
        ((e, c),) = self._terms.items()
        return e, c

    def shift(self, k):
        """Multiply by ``v**k``."""
        return Laurent({e + k: c for e, c in self._terms.items()})

    def __add__(self, other):
        other = Laurent.coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Laurent(out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = Laurent.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = Laurent.coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = Laurent.coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return Laurent(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        out = Laurent({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = Laurent.coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, e in enumerate(self.exponents()):
            c = self._terms[e]
            body = format_rational(abs(c))
            if e != 0:
                body = f"{body}*v^{e}"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Laurent({str(self)!r})"

    @classmethod
    def parse(cls, text):
        """Inverse of ``str``: accepts the canonical text form."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            if s == "":
                raise ValueError("empty scalar string")
            return cls()
        terms = {}
        pos = 0
        while pos < len(s):
            m = _TERM_RE.match(s, pos)
            if m is None or (pos > 0 and not m.group(1)):
                raise ValueError(f"malformed scalar string {text!r}")
            c = parse_rational(m.group(2))
            e = int(m.group(3)) if m.group(3) is not None else 0
            if m.group(1) == "-":
                c = -c
            if e in terms:
                raise ValueError(f"repeated exponent {e} in {text!r}")
            terms[e] = c
            pos = m.end()
        out = cls(terms)
        if str(out) != text.strip():
            raise ValueError(f"not in canonical form: {text!r}")
        return out

    def to_json(self):
        return {str(e): format_rational(self._terms[e]) for e in self.exponents()}

    @classmethod
    def from_json(cls, obj):
        return cls({int(e): parse_rational(c) for e, c in obj.items()})

    def numeric(self, q):
        return numeric_eval(self, q)


def numeric_eval(a, q):
    """Float value of ``a`` at ``v = +sqrt(q)``."""
    if q < 2:
        raise ValueError("q must be at least 2")
    v = math.sqrt(q)
    return float(sum(float(c) * v**e for e, c in Laurent.coerce(a).terms.items()))


# Polynomials in X are plain lists of Fractions, lowest degree first.


def poly_mul(p, r):
    if not p or not r:
        return []
    out = [Fraction(0)] * (len(p) + len(r) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(r):
                out[i + j] += a * b
    return out


def poly_from_inverse_roots(alphas):
    """Expand prod(1 - a*X)."""
    out = [Fraction(1)]
    for a in alphas:
        out = poly_mul(out, [Fraction(1), -Fraction(a)])
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def format_poly(p, var="X"):
    terms = []
    for k, c in enumerate(p):
        if c == 0:
            continue
        mag = format_rational(abs(c))
        if k == 0:
            body = mag
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if abs(c) == 1 else f"{mag}*{mono}"
        terms.append((c < 0, body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] else "") + terms[0][1]
    for neg, body in terms[1:]:
        out += (" - " if neg else " + ") + body
    return out


class TruncSeries:
    """Power series in X known modulo X^(order+1)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order):
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = [Fraction(c) for c in list(coeffs)[: order + 1]]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return self.order + 1

    def _common(self, other):
        if not isinstance(other, TruncSeries):
            other = TruncSeries(other if isinstance(other, (list, tuple)) else [other], self.order)
        return min(self.order, other.order), other

    def __add__(self, other):
        n, other = self._common(other)
        return TruncSeries([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)], n)

    def __sub__(self, other):
        n, other = self._common(other)
        return TruncSeries([self.coeffs[k] - other.coeffs[k] for k in range(n + 1)], n)

    def __mul__(self, other):
        n, other = self._common(other)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncSeries(out, n)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"TruncSeries({format_poly(self.coeffs)} + O(X^{self.order + 1}))"

    def first_difference(self, other):
        """Smallest k at which the two series differ (up to the shorter order), or None."""
        n = min(self.order, other.order)
        for k in range(n + 1):
            if self.coeffs[k] != other.coeffs[k]:
                return k
        return None


def series_invert(p, order):
    """Inverse of the polynomial ``p`` (constant term 1) modulo X^(order+1)."""
    p = [Fraction(c) for c in p]
    if not p or p[0] != 1:
        raise ValueError("constant term must be 1")
    out = [Fraction(1)] + [Fraction(0)] * order
    for k in range(1, order + 1):
        acc = Fraction(0)
        for j in range(1, min(k, len(p) - 1) + 1):
            acc += p[j] * out[k - j]
        out[k] = -acc
    return TruncSeries(out, order)
