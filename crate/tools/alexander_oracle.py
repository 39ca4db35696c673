"""Alexander polynomials of closed braids from the unreduced Burau matrix:
the (1,1) minor of I - B(w) is the Alexander polynomial up to a unit.

Usage: python3 tools/alexander_oracle.py N "s1^3 s2^-1" ...

Prints coefficients (lowest degree first) normalized to lowest degree 0 and
positive top coefficient.
"""
import re
import sys

import sympy as sp

t = sp.symbols("t")


def generator(n, i, sign):
    m = sp.eye(n)
    k = i - 1
    block = sp.Matrix([[1 - t, t], [1, 0]])
    if sign < 0:
        block = block.inv()
    m[k:k + 2, k:k + 2] = block
    return m


def burau(n, word):
    m = sp.eye(n)
    for tok in word.split():
        g = re.fullmatch(r"s(\d+)(?:\^(-?\d+))?", tok)
        i, e = int(g[1]), int(g[2] or 1)
        step = generator(n, i, 1 if e > 0 else -1)
        for _ in range(abs(e)):
            m = m * step
    return m


def alexander(n, word):
    a = sp.eye(n) - burau(n, word)
    minor = a[1:, 1:].det() if n > 1 else sp.Integer(1)
    num, den = sp.fraction(sp.factor(sp.cancel(sp.together(minor))))
    if sp.Poly(den, t).length() != 1:
        raise ValueError("not a Laurent polynomial")
    p = sp.Poly(sp.expand(num), t)
    coeffs = p.all_coeffs()[::-1]
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if coeffs and coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    return [int(c) for c in coeffs]


if __name__ == "__main__":
    n = int(sys.argv[1])
    for w in sys.argv[2:]:
        print(w, alexander(n, w))
