"""Exact-rational oracle for the simplex inequality margin."""
from fractions import Fraction as F
import sympy as sp


def margin(x1, x2, x3):
    lhs = x1 * x2 * x3 + x1 * x1 * x2 / 2 + x2 * x2 * x3 / 2 + x3 * x3 * x1 / 2
    third = F(1, 3)
    rhs = F(5, 54) - F(1, 50) * ((x1 - third) ** 2 + (x2 - third) ** 2 + (x3 - third) ** 2)
    return rhs - lhs


def sweep(d):
    worst, arg, zeros = None, None, []
    for a in range(d + 1):
        for b in range(d + 1 - a):
            c = d - a - b
            m = margin(F(a, d), F(b, d), F(c, d))
            if worst is None or m < worst:
                worst, arg = m, (a, b, c)
            if m == 0:
                zeros.append((a, b, c))
    return worst, arg, zeros


if __name__ == "__main__":
    print("(1,0,0):", margin(F(1), F(0), F(0)))
    print("bary:", margin(F(1, 3), F(1, 3), F(1, 3)))
    for d in [1, 2, 3, 4, 5, 6, 7, 10, 50, 200]:
        w, a, z = sweep(d)
        print(d, "worst", w, "at", a, "zeros", z)
    u, v = sp.symbols("u v")
    x1, x2 = sp.Rational(1, 3) + u, sp.Rational(1, 3) + v
    x3 = 1 - x1 - x2
    f = sp.Rational(5, 54) - sp.Rational(1, 50) * ((x1 - sp.Rational(1, 3))**2 + (x2 - sp.Rational(1, 3))**2 + (x3 - sp.Rational(1, 3))**2) \
        - (x1*x2*x3 + x1**2*x2/2 + x2**2*x3/2 + x3**2*x1/2)
    print(sp.Poly(sp.expand(f), u, v).as_dict())
