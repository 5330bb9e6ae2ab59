"""Arithmetic in GF(9) built from the smallest irreducible quadratic over GF(3)."""
from lcg.field import elements, is_square, make_field

F = make_field(3, 2)
print(f"GF({F.q}) with modulus coefficients {F.modulus} (constant term last)")
xs = elements(F)
g = xs[3]  # the class of the indeterminate x
print("powers of x:", [int(g**e) for e in range(1, 9)])
squares = sorted(int(a) for a in xs if a and is_square(a))
print("nonzero squares:", squares)
a, b = xs[4], xs[7]
print(f"{int(a)} * {int(b)} = {int(a * b)}; {int(a)} / {int(b)} = {int(a / b)}")
