"""Brute-force reference values frozen into the C++ unit tests.

Every quantity here is computed straight from its defining sum, using
complex roots of unity for Ramanujan sums and exhaustive residue scans for
congruence counts. Nothing is shared with the C++ implementation.

    python3 tests/oracles/frozen_values.py
"""
from cmath import exp, pi
from fractions import Fraction
from itertools import product
from math import gcd, lcm


def c(n, k):
    """Ramanujan sum from primitive n-th roots of unity, rounded."""
    s = sum(exp(2j * pi * j * k / n) for j in range(1, n + 1) if gcd(j, n) == 1)
    v = round(s.real)
    assert abs(s.real - v) < 1e-6 and abs(s.imag) < 1e-6
    return v


def poly(coeffs, x):
    return sum(a * x**i for i, a in enumerate(coeffs))


def E(polys, moduli):
    m = lcm(*moduli)
    raw = 0
    for k in range(1, m + 1):
        t = 1
        for g, mi in zip(polys, moduli):
            t *= c(mi, poly(g, k))
        raw += t
    assert raw % m == 0
    return raw // m


def R(polys, moduli):
    m = lcm(*moduli)
    raw = 0
    for k in range(1, m + 1):
        if gcd(k, m) != 1:
            continue
        t = 1
        for g, mi in zip(polys, moduli):
            t *= c(mi, poly(g, k))
        raw += t
    return raw


def T(moduli, a):
    m = lcm(*moduli)
    r = len(moduli)
    total = 0
    for ks in product(range(m), repeat=r - 1):
        for l in range(m):
            if gcd(l, m) != 1:
                continue
            t = 1
            for ki, mi in zip(ks, moduli):
                t *= c(mi, ki)
            total += t * c(moduli[-1], sum(ks) + l - a)
    return total


def roots(polys, moduli, units):
    m = lcm(*moduli)
    return sum(
        1
        for x in range(m)
        if all(poly(g, x) % mi == 0 for g, mi in zip(polys, moduli)) and (not units or gcd(x, m) == 1)
    )


x = [0, 1]
print("divisors(30)", [d for d in range(1, 31) if 30 % d == 0])
print("phi(30)", sum(1 for k in range(1, 31) if gcd(k, 30) == 1))
print("crt (1,2),(2,3)", [r for r in range(6) if r % 2 == 1 and r % 3 == 2])
print("coprime_count(12,3,2)", sum(1 for k in range(1, 13) if k % 3 == 2 and gcd(k, 12) == 1))
print("c_6(1)", c(6, 1), "c_4(2)", c(4, 2), "c_5(1)", c(5, 1), "c_6(3)", c(6, 3))
print("row 6", [c(6, k) for k in range(1, 7)])
print("E(x,x;6,6)", E([x, x], [6, 6]))
print("E(x^2-1;8)", E([[-1, 0, 1]], [8]), "E(x^2-1;4)", E([[-1, 0, 1]], [4]))
print("R(x-1,x-1;3,3)", R([[-1, 1]] * 2, [3, 3]), "R(x^2-1;4)", R([[-1, 0, 1]], [4]))
print("R(x-1,x-1;4,4)", R([[-1, 1]] * 2, [4, 4]), "(4,2)", R([[-1, 1]] * 2, [4, 2]))
print("R(x^2-1;8)", R([[-1, 0, 1]], [8]))
print("R(3,3,3)", R([[-1, 1]] * 3, [3, 3, 3]), "R(9,9,9)", R([[-1, 1]] * 3, [9, 9, 9]))
print("E_(0,1)(6,6)", E([[0, 1], [-1, 1]], [6, 6]), "E_(0,1)(4,4)", E([[0, 1], [-1, 1]], [4, 4]))
print("R_(1,2)(3,3)", R([[-1, 1], [-2, 1]], [3, 3]), "R_(0,1)(2,3)", R([[0, 1], [-1, 1]], [2, 3]))
print("roots x^2-1 mod 8,12", roots([[-1, 0, 1]], [8], False), roots([[-1, 0, 1]], [12], False))
print("linear (1,3),(2,4)", roots([[-1, 1], [-3, 1]], [2, 4], False))
print("linear units (1,2),(2,3)", roots([[-1, 1], [-2, 1]], [2, 3], True))
print("T (6) a=1", T([6], 1), "T (6,6) a=0", T([6, 6], 0), "T (2,3) a=7", T([2, 3], 7))


def brauer(n, k):
    mu = lambda d: 0 if any(d % (p * p) == 0 for p in range(2, d + 1)) else (-1) ** sum(
        1 for p in range(2, d + 1) if d % p == 0 and all(p % q for q in range(2, p))
    )
    phi = lambda d: sum(1 for j in range(1, d + 1) if gcd(j, d) == 1)
    lhs = sum(Fraction(d * mu(n // d), phi(d)) for d in range(1, n + 1) if n % d == 0 and gcd(d, k) == 1)
    rhs = Fraction(mu(n) * c(n, k), phi(n))
    return lhs, rhs


print("brauer(3,1)", brauer(3, 1))


def s_even_alpha(f, s):
    divs = [d for d in range(1, s + 1) if s % d == 0]
    return {d: Fraction(sum(f(e) * c(s // e, s // d) for e in divs), s) for d in divs}


print("alpha(c_6 as 12-even)", s_even_alpha(lambda n: c(6, n), 12))
print("c_2 (x) c_2 at 0", sum(c(2, k) * c(2, -k) for k in range(2)))
print("coprime shift c_6, a=0", sum(c(6, -k) for k in range(1, 7) if gcd(k, 6) == 1))
print("coprime shift c_4, a=1", sum(c(4, 1 - k) for k in range(1, 5) if gcd(k, 4) == 1))
print("(c_4+3c_2) on divisors of 4", [c(4, d) + 3 * c(2, d) for d in (1, 2, 4)])
