import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eslab import bounds as B


@pytest.mark.parametrize("fn,arg,value", [
    (B.es2_upper_1935, 3, 3), (B.es2_upper_1935, 4, 7), (B.es2_upper_1935, 5, 21),
    (B.es2_upper_kp, 4, 5), (B.es2_upper_kp, 5, 17), (B.es2_upper_kp, 6, 65),
    (B.es2_lower, 3, 3), (B.es2_lower, 6, 17), (B.es2_lower, 10, 257),
])
def test_planar_examples(fn, arg, value):
    assert fn(arg).value == value


def test_dimension_reduction_bound_examples():
    assert B.karolyi_upper(3, 5).value == 4
    assert B.karolyi_upper(2, 5).value == 11
    for d in range(2, 7):
        assert B.karolyi_upper(d, d + 1).value == 2


def test_hyperplane_count_bound_examples():
    assert B.thm11_upper(5, 5, 3, 4).value == 5
    es = B.es2_upper_kp(5).value
    assert B.thm11_upper(4, 5, 2, es).value == 137


@pytest.mark.parametrize("d", range(2, 6))
def test_hyperplane_count_bound_degenerates_at_l_d_plus_1(d):
    for n in range(d + 1, d + 8):
        es = B.karolyi_upper(d, n).value if n > d + 1 else d + 1
        es = max(es, d + 1)
        assert B.thm11_upper(d + 1, n, d, es).value == es


def test_clustered_lower_bound_examples():
    assert B.thm12_lower(5, 9, 2).value == 1024
    r = B.thm12_lower(5, 9, 3)
    assert r.value == 12 and r.exponent == 3 and r.mode == "floor"


@pytest.mark.parametrize("d", range(2, 7))
def test_lower_coefficient_identity(d):
    for l in range(d + 1, d + 12):
        expected = Fraction(l - 1, d) if d % 2 == 0 else Fraction(l - 2, d - 1)
        assert B.lower_coefficient(d, l) == expected


def test_planar_incidence_lower_examples():
    assert B.conlon_bounds(3, 5)[0].value == 8
    assert B.conlon_bounds(4, 10)[0].value == 352
    assert B.conlon_bounds(3, 3)[0].value == 2
    assert B.conlon_bounds(3, 4)[0].value == 4


def test_twr_examples():
    assert B.twr(1, 5).value == 5
    assert B.twr(3, 2).value == 16
    assert B.twr(4, 1).value == 16
    big = B.twr(6, 2)
    assert big.symbolic and big.extra["levels_evaluated"] == 5


def test_twr_recurrence():
    for x in range(0, 5):
        for k in range(1, 4):
            a, b = B.twr(k, x), B.twr(k + 1, x)
            if not b.symbolic:
                assert b.value == 2 ** a.value


def test_kv_es_lower_examples():
    assert B.kv_es_lower(2, 8).value == 256
    assert B.kv_es_lower(3, 9).value == 8
    assert B.kv_es_lower(3, 1).value == 2


def test_planar_bound_ordering():
    for n in range(4, 101):
        assert B.es2_lower(n).value <= B.es2_upper_kp(n).value <= B.es2_upper_1935(n).value


@given(st.integers(0, 10 ** 30), st.integers(1, 6))
def test_root_exponent_exact_floor(n, m):
    r = B.root_exponent(1, n, m)
    assert r ** m <= n < (r + 1) ** m
    c = B.root_exponent(1, n, m, "ceil")
    assert c == r or (c == r + 1 and r ** m < n)


@given(st.fractions(min_value=Fraction(1, 50), max_value=50), st.integers(0, 10 ** 6),
       st.integers(1, 4))
def test_root_exponent_rational_coefficient(c, n, m):
    e = B.root_exponent(c, n, m)
    # e <= c n^(1/m) < e + 1, i.e. (e/c)^m <= n < ((e+1)/c)^m
    assert (Fraction(e) / c) ** m <= n < (Fraction(e + 1) / c) ** m


@pytest.mark.parametrize("n", [1, 2, 3, 4, 16, 100, 1000, 12345])
@pytest.mark.parametrize("C", [Fraction(1), Fraction(1, 3), Fraction(5, 2)])
def test_sqrt_nlog_exponent(n, C):
    e = B.sqrt_nlog_exponent(C, n)
    x = float(C) * math.sqrt(n * math.log2(n))
    if abs(x - round(x)) > 1e-9:
        assert e == math.floor(x)
        assert B.sqrt_nlog_exponent(C, n, "ceil") == math.ceil(x)
    # exact boundary: n = 16 gives sqrt(64) = 8
    if n == 16 and C == 1:
        assert e == 8 == B.sqrt_nlog_exponent(C, n, "ceil")


def test_symbolic_forms():
    assert B.thm11_asymptotic(5, 3).symbolic
    assert B.thm11_asymptotic(5, 3).extra["coefficient"] == "1/3"
    assert B.es3_pz_upper().symbolic and B.ramsey_tower_lower(3).symbolic


def test_to_dict_records_bits_and_mode():
    doc = B.kv_es_lower(2, 100).to_dict()
    assert doc["value"] == str(2 ** 100) and doc["bit_length"] == 101
    assert doc["mode"] == "floor" and doc["exponent"] == 100


@pytest.mark.parametrize("call", [
    lambda: B.es2_upper_1935(2), lambda: B.es2_upper_kp(3), lambda: B.karolyi_upper(3, 3),
    lambda: B.thm11_upper(3, 5, 3, 10), lambda: B.thm12_lower(5, 9, 2, c_d=0),
    lambda: B.root_exponent(1, 4, 2, "round"), lambda: B.twr(0, 1),
])
def test_invalid_arguments(call):
    with pytest.raises(ValueError):
        call()
