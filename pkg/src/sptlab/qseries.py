"""Truncated power series in q with exact integer coefficients.

Only what the generating-function checks need: ring operations modulo
``q^(N+1)``, q-Pochhammer products, Gaussian binomials, and evaluators for
the spt and N_S generating functions.
"""

from __future__ import annotations

import os

from .errors import DomainError

DEFAULT_ORDER = 40


def default_order() -> int:
    value = os.environ.get("SPTLAB_SERIES_ORDER")
    return int(value) if value else DEFAULT_ORDER


class TruncatedSeries:
    """Coefficients of q^0 .. q^order; everything above is discarded."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs, order: int):
        if order < 0:
            raise DomainError("truncation order must be nonnegative")
        c = [int(x) for x in list(coeffs)[: order + 1]]
        c.extend([0] * (order + 1 - len(c)))
        self.order = order
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls((1,), order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1) -> "TruncatedSeries":
        c = [0] * (order + 1)
        if 0 <= exponent <= order:
            c[exponent] = coeff
        return cls(c, order)

    @classmethod
    def geometric(cls, step: int, order: int, start: int = 0) -> "TruncatedSeries":
        """q^start / (1 - q^step), expanded."""
        if step < 1:
            raise DomainError("geometric step must be positive")
        c = [0] * (order + 1)
        for e in range(start, order + 1, step):
            c[e] = 1
        return cls(c, order)

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient q^{n} lies outside order {self.order}")
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        terms = [f"{c}*q^{e}" for e, c in enumerate(self.coeffs) if c]
        return f"TruncatedSeries({' + '.join(terms) or '0'}; O(q^{self.order + 1}))"

    def _check(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise DomainError(f"expected a TruncatedSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise DomainError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, k: int) -> "TruncatedSeries":
        return TruncatedSeries([k * a for a in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        N = self.order
        a, b = self.coeffs, other.coeffs
        out = [0] * (N + 1)
        for i, x in enumerate(a):
            if x:
                for j in range(N + 1 - i):
                    y = b[j]
                    if y:
                        out[i + j] += x * y
        return TruncatedSeries(out, N)

    __rmul__ = __mul__

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by q^k (k >= 0)."""
        if k < 0:
            raise DomainError("shift must be nonnegative")
        return TruncatedSeries((0,) * k + self.coeffs, self.order)

    def inverse(self) -> "TruncatedSeries":
        return series_inverse(self)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> "TruncatedSeries":
        return cls([int(c) for c in data["coeffs"]], int(data["order"]))


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_scale(a: TruncatedSeries, k: int) -> TruncatedSeries:
    return a.scale(k)


def series_inverse(f: TruncatedSeries) -> TruncatedSeries:
    c0 = f.coeffs[0]
    if c0 not in (1, -1):
        raise DomainError(f"constant term {c0} is not a unit over the integers")
    N = f.order
    g = [0] * (N + 1)
    g[0] = c0  # 1/c0 == c0 for c0 = +-1
    for n in range(1, N + 1):
        acc = sum(f.coeffs[i] * g[n - i] for i in range(1, n + 1))
        g[n] = -c0 * acc
    return TruncatedSeries(g, N)


def _times_one_minus(coeffs: list, e: int) -> None:
    # In place: coeffs *= (1 - q^e), truncated to len(coeffs).
    for i in range(len(coeffs) - 1, e - 1, -1):
        coeffs[i] -= coeffs[i - e]


def _divide_one_minus(coeffs: list, e: int) -> None:
    # In place: coeffs /= (1 - q^e), truncated to len(coeffs).
    for i in range(e, len(coeffs)):
        coeffs[i] += coeffs[i - e]


def pochhammer(k_terms, shift: int, N: int) -> TruncatedSeries:
    """(q^shift; q)_k_terms; ``k_terms=None`` means the infinite product."""
    if shift < 1:
        raise DomainError(f"pochhammer shift must be >= 1, got {shift}")
    if k_terms is not None and k_terms < 0:
        raise DomainError("number of factors must be nonnegative")
    c = [1] + [0] * N
    i = 0
    while (k_terms is None or i < k_terms) and shift + i <= N:
        _times_one_minus(c, shift + i)
        i += 1
    return TruncatedSeries(c, N)


def _inverse_pochhammer_into(c: list, k_terms, shift: int) -> None:
    N = len(c) - 1
    i = 0
    while (k_terms is None or i < k_terms) and shift + i <= N:
        _divide_one_minus(c, shift + i)
        i += 1


def gaussian_binomial(top: int, bottom: int, N: int) -> TruncatedSeries:
    """[top choose bottom]_q, truncated at order ``N``."""
    if not 0 <= bottom <= top:
        raise DomainError(f"need 0 <= bottom <= top, got top={top}, bottom={bottom}")
    deg = bottom * (top - bottom)
    work = max(N, deg)
    c = list(pochhammer(top, 1, work).coeffs)
    _inverse_pochhammer_into(c, bottom, 1)
    _inverse_pochhammer_into(c, top - bottom, 1)
    return TruncatedSeries(c, N)


def gf_spt(N: int | None = None) -> TruncatedSeries:
    """Sum over n >= 1 of q^n / ((1-q^n)^2 (q^{n+1}; q)_inf)."""
    N = default_order() if N is None else N
    total = [0] * (N + 1)
    for n in range(1, N + 1):
        c = [0] * (N + 1)
        c[n] = 1
        _divide_one_minus(c, n)
        _divide_one_minus(c, n)
        _inverse_pochhammer_into(c, None, n + 1)
        for i, v in enumerate(c):
            total[i] += v
    return TruncatedSeries(total, N)


def gf_spt_alt(N: int | None = None) -> TruncatedSeries:
    """Sum over n >= 1 of q^n (q^{n+1}; q)_inf / (q^n; q)_inf^2."""
    N = default_order() if N is None else N
    total = [0] * (N + 1)
    for n in range(1, N + 1):
        c = list(pochhammer(None, n + 1, N).shift(n).coeffs)
        _inverse_pochhammer_into(c, None, n)
        _inverse_pochhammer_into(c, None, n)
        for i, v in enumerate(c):
            total[i] += v
    return TruncatedSeries(total, N)


def _lead_exponent(m: int, j: int) -> int:
    if m >= 0:
        return j * j + m * j + 2 * j + m + 1
    a = -m
    return j * j - a * j + 2 * j - a + 1


def gf_V_cell(m: int, j: int, h: int, N: int | None = None) -> TruncatedSeries:
    """Generating function of the pairs in V_m whose statistics are (j, h).

    For ``m >= 0``::

        q^(j^2+mj+2j+m+1) / (q;q)_(j+m) * [j, h] q^(h^2+h) / ((q;q)_h (1 - q^(m+1+j+h)))

    and for ``m < 0`` the same with ``|m|`` entering as ``j - |m|``.  The
    set is empty, and the series zero, when ``j < -m``.
    """
    N = default_order() if N is None else N
    if h < 0 or j < 0:
        raise DomainError("j and h must be nonnegative")
    if h > j:
        raise DomainError(f"need h <= j, got j={j}, h={h}")
    if m < 0 and j < -m:
        return TruncatedSeries.zero(N)
    rows = j + m  # height of the m-Durfee rectangle, also the (q;q) index
    lead = _lead_exponent(m, j) + h * h + h
    if lead > N:
        return TruncatedSeries.zero(N)
    c = [0] * (N + 1)
    binom = gaussian_binomial(j, h, N - lead).coeffs
    c[lead : lead + len(binom)] = binom
    _inverse_pochhammer_into(c, rows, 1)
    _inverse_pochhammer_into(c, h, 1)
    _divide_one_minus(c, rows + 1 + h)
    return TruncatedSeries(c, N)


def gf_NS(m: int, N: int | None = None) -> TruncatedSeries:
    """Generating function sum over n of N_S(m, n) q^n, as a sum of V-cells."""
    N = default_order() if N is None else N
    total = TruncatedSeries.zero(N)
    j = max(0, -m)
    while _lead_exponent(m, j) <= N:
        for h in range(j + 1):
            if _lead_exponent(m, j) + h * h + h > N:
                break
            total = total + gf_V_cell(m, j, h, N)
        j += 1
    return total
