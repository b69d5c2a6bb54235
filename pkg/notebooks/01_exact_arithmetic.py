"""
Exact arithmetic for plane distances
====================================

Squared distances in the pentagon family live in Q(sqrt5), those of the
hexagon family in Q(sqrt33).  Equalities are decided exactly; only sign
questions go through dyadic intervals, with the precision raised until the
interval excludes zero.
"""

from fractions import Fraction

from twodist.exactnum import HexC, Q5, Q33, approx, certified_sign

# %%
# The golden ratio and its square
d = Q5(Fraction(1, 2), Fraction(1, 2))
print("d   =", d, "~", float(d))
print("d^2 =", d * d)
assert d * d == Q5(Fraction(3, 2), Fraction(1, 2))
assert d * d == d + 1

# %%
# Signs of numbers that are very close to zero
tiny = Q5(Fraction(-2236067977, 10**9), 1)  # sqrt5 - 2.236067977
print("sign:", tiny.sign(), " enclosure at 40 bits:", approx(tiny, 40))
print("certified sign:", certified_sign(lambda bits: approx(tiny, bits)))

# %%
# The hexagon-family field: a + b i sqrt3 + c i sqrt11 + d sqrt33
rho = HexC(Fraction(5, 6), 0, Fraction(1, 6), 0)  # (5 + i sqrt11)/6
sigma = HexC(0, Fraction(1, 6), 0, Fraction(1, 6))  # (sqrt33 + i sqrt3)/6
print("|rho|^2 =", rho.norm_sq(), "  |sigma|^2 =", sigma.norm_sq())
assert sigma * sigma == rho

p = HexC(Fraction(-1, 2), Fraction(5, 6))  # (-1/2, 5/sqrt12)
print("|p|^2 =", p.norm_sq(), " |p - conj p|^2 =", (p - p.conj()).norm_sq())
assert (p - p.conj()).norm_sq() == Q33(Fraction(25, 3))

# %%
# Values serialise as rational strings and round-trip exactly
print(d.to_json(), Q5.from_json(d.to_json()) == d)
