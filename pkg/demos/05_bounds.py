"""
Exact bound evaluation
======================

Big-integer evaluators with explicit rounding of irrational exponents.
"""
from eslab import bounds as B

for n in (4, 5, 6, 10):
    print(n, B.es2_lower(n).value, B.es2_upper_kp(n).value, B.es2_upper_1935(n).value)

print(B.karolyi_upper(3, 5).value, B.thm11_upper(4, 5, 2, B.es2_upper_kp(5).value).value)
print(B.thm12_lower(5, 9, 3).to_dict())
print([b.value for b in B.conlon_bounds(4, 10)])

# floor and ceil differ only when the exponent is irrational
print(B.kv_es_lower(3, 10).exponent, B.kv_es_lower(3, 10, mode="ceil").exponent)

print(B.twr(4, 2).value.bit_length(), B.twr(6, 2).to_dict())
