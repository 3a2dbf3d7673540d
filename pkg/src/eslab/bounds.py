"""Closed-form Erdos-Szekeres bounds, evaluated exactly.

Unspecified asymptotic constants are explicit arguments defaulting to 1.
Irrational exponents (n^(1/(d-1)), sqrt(n log2 n)) are rounded to integers
by exact integer comparisons; the rounding mode is recorded on the result.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

import gmpy2

TWR_BIT_BUDGET = 1 << 20
MODES = ("floor", "ceil")


@dataclass(frozen=True)
class BoundValue:
    name: str
    params: dict
    value: int | Fraction | None
    formula: str = ""
    mode: str | None = None
    exponent: int | None = None
    extra: dict = field(default_factory=dict)

    @property
    def symbolic(self) -> bool:
        return self.value is None

    def to_dict(self) -> dict:
        v = self.value
        if v is None:
            text, bits = None, None
        elif isinstance(v, Fraction) and v.denominator != 1:
            text, bits = f"{v.numerator}/{v.denominator}", None
        else:
            v = int(v)
            text, bits = str(v), v.bit_length()
        params = {k: str(p) if isinstance(p, Fraction) else p for k, p in self.params.items()}
        return {"name": self.name, "params": params, "value": text, "bit_length": bits,
                "formula": self.formula, "mode": self.mode, "exponent": self.exponent,
                **({"extra": self.extra} if self.extra else {})}


def _as_int_if_integral(x: Fraction):
    return int(x) if x.denominator == 1 else x


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")


# --------------------------------------------------------------------------
# exact rounding of irrational exponents

def root_exponent(c, n: int, m: int, mode: str = "floor") -> int:
    """Round c * n^(1/m) to an integer exactly (c > 0 rational, n >= 0)."""
    _check_mode(mode)
    c = Fraction(c)
    if c <= 0 or n < 0 or m < 1:
        raise ValueError("need c > 0, n >= 0, m >= 1")
    # c n^(1/m) = (p^m n)^(1/m) / q
    p, q = c.numerator, c.denominator
    a = p ** m * n
    r, exact = gmpy2.iroot(a, m)
    r = int(r)
    e = r // q
    if mode == "ceil" and (e * q) ** m < a:
        e += 1
    return e


def sqrt_nlog_exponent(C, n: int, mode: str = "floor") -> int:
    """Round C * sqrt(n log2 n) to an integer exactly.

    e <= C sqrt(n log2 n)  iff  2^(e^2 b^2) <= n^(n a^2)  for C = a/b, e >= 0.
    """
    _check_mode(mode)
    C = Fraction(C)
    if C <= 0 or n < 1:
        raise ValueError("need C > 0 and n >= 1")
    a, b = C.numerator, C.denominator
    N = n ** (n * a * a)
    top = N.bit_length() - 1          # 2^E <= N  iff  E <= top
    e = gmpy2.isqrt(top // (b * b))
    e = int(e)
    while (e + 1) ** 2 * b * b <= top:
        e += 1
    if mode == "ceil" and not (N == 1 << top and e * e * b * b == top):
        e += 1
    return e


# --------------------------------------------------------------------------
# planar and d-dimensional ES(n)

def es2_upper_1935(n: int) -> BoundValue:
    if n < 3:
        raise ValueError("n must be at least 3")
    return BoundValue("es2_upper_1935", {"n": n}, comb(2 * n - 4, n - 2) + 1,
                      "C(2n-4, n-2) + 1")


def es2_upper_kp(n: int) -> BoundValue:
    if n < 4:
        raise ValueError("n must be at least 4")
    return BoundValue("es2_upper_kp", {"n": n}, comb(2 * n - 4, n - 2) + 7 - 2 * n,
                      "C(2n-4, n-2) + 7 - 2n")


def es2_lower(n: int) -> BoundValue:
    if n < 3:
        raise ValueError("n must be at least 3")
    return BoundValue("es2_lower", {"n": n}, 2 ** (n - 2) + 1, "2^(n-2) + 1")


def karolyi_upper(d: int, n: int) -> BoundValue:
    if not n > d >= 2:
        raise ValueError("need n > d >= 2")
    return BoundValue("karolyi_upper", {"d": d, "n": n},
                      comb(2 * n - 2 * d - 1, n - d) + 1, "C(2n-2d-1, n-d) + 1")


def kv_es_lower(d: int, n: int, c_d=1, mode: str = "floor") -> BoundValue:
    """2^(c_d n^(1/(d-1))) with the exponent rounded exactly."""
    if d < 2 or n < 1:
        raise ValueError("need d >= 2 and n >= 1")
    e = root_exponent(c_d, n, d - 1, mode)
    return BoundValue("kv_es_lower", {"d": d, "n": n, "c_d": Fraction(c_d)}, 2 ** e,
                      "2^(c_d n^(1/(d-1)))", mode, e)


# --------------------------------------------------------------------------
# ES_d(l, n)

def thm11_upper(l: int, n: int, d: int, es_dn: int) -> BoundValue:
    """(l-d-1) C(es_dn - 1, d) + es_dn for a supplied bound es_dn on ES_d(n)."""
    if not l > d >= 2:
        raise ValueError("need l > d >= 2")
    if es_dn < d + 1:
        raise ValueError("es_dn must be at least d+1")
    value = (l - d - 1) * comb(es_dn - 1, d) + es_dn
    return BoundValue("thm11_upper", {"l": l, "n": n, "d": d, "es_dn": es_dn}, value,
                      "(l-d-1) C(ES_d(n)-1, d) + ES_d(n)")


def lower_coefficient(d: int, l: int) -> Fraction:
    """(l - d + 2 floor(d/2) - 1) / (2 floor(d/2)); (l-1)/d for even d and
    (l-2)/(d-1) for odd d."""
    h = d // 2
    return Fraction(l - d + 2 * h - 1, 2 * h)


def thm12_lower(l: int, n: int, d: int, c_d=1, mode: str = "floor") -> BoundValue:
    if not l > d >= 2:
        raise ValueError("need l > d >= 2")
    if Fraction(c_d) <= 0:
        raise ValueError("c_d must be positive")
    e = root_exponent(c_d, n, d - 1, mode)
    value = _as_int_if_integral(lower_coefficient(d, l) * 2 ** e)
    return BoundValue("thm12_lower", {"l": l, "n": n, "d": d, "c_d": Fraction(c_d)}, value,
                      "(l-d+2*floor(d/2)-1)/(2*floor(d/2)) * 2^(c_d n^(1/(d-1)))", mode, e)


def conlon_bounds(l: int, n: int, C_upper=1, mode: str = "floor") -> tuple[BoundValue, BoundValue]:
    """Planar (3l-1) 2^(n-5) < ES(l, n) < l^2 2^(n + C sqrt(n log2 n))."""
    if l < 3 or n < 3:
        raise ValueError("need l, n >= 3")
    lower = _as_int_if_integral(Fraction(3 * l - 1) * Fraction(2) ** (n - 5))
    e = sqrt_nlog_exponent(C_upper, n, mode)
    lo = BoundValue("conlon_lower", {"l": l, "n": n}, lower, "(3l-1) 2^(n-5)")
    hi = BoundValue("conlon_upper", {"l": l, "n": n, "C": Fraction(C_upper)},
                    l * l * 2 ** (n + e), "l^2 2^(n + C sqrt(n log2 n))", mode, n + e)
    return lo, hi


# --------------------------------------------------------------------------
# towers and symbolic forms

def twr(k: int, x: int, bit_budget: int = TWR_BIT_BUDGET) -> BoundValue:
    """twr_1(x) = x, twr_{k+1}(x) = 2^twr_k(x); symbolic past the bit budget."""
    if k < 1 or x < 0:
        raise ValueError("need k >= 1 and x >= 0")
    v = x
    for level in range(1, k):
        if v > bit_budget:
            return BoundValue("twr", {"k": k, "x": x}, None, f"2^(twr_{level}({x}))",
                              extra={"height": k, "levels_evaluated": level,
                                     "top_exponent_bits": v.bit_length()})
        v = 1 << v
    return BoundValue("twr", {"k": k, "x": x}, v, "twr_k(x)")


def thm11_asymptotic(l: int, d: int) -> BoundValue:
    """(l-d)/d! * 2^(O(d n / log_(4) n)); the O-constant is not known."""
    return BoundValue("thm11_asymptotic", {"l": l, "d": d}, None,
                      "(l-d)/d! * 2^(O(d n / log_(4) n))",
                      extra={"coefficient": str(Fraction(l - d, factorial(d)))})


def es3_pz_upper() -> BoundValue:
    return BoundValue("es3_pz_upper", {}, None, "2^(C n / log_(5) n)")


def ramsey_tower_lower(d: int) -> BoundValue:
    return BoundValue("ramsey_tower_lower", {"d": d}, None, "twr_d(n^(c log n))")
