#!/usr/bin/env python3
"""Reference computations for monomial series expected values:
support minima, shift factors, truncated unit inversion, and the
formal-rewriting invariance of the support antichain."""
from fractions import Fraction
from itertools import product
import random


def cw_leq(a, b):
    return all(x <= y for x, y in zip(a, b))


def min_cw(S):
    S = sorted(set(map(tuple, S)))
    return sorted(t for t in S if not any(s != t and cw_leq(s, t) for s in S))


def padd(f, g):
    h = dict(f)
    for e, c in g.items():
        h[e] = h.get(e, Fraction(0)) + c
        if h[e] == 0:
            del h[e]
    return h


def pmul(f, g):
    h = {}
    for (e1, c1), (e2, c2) in product(f.items(), g.items()):
        e = tuple(a + b for a, b in zip(e1, e2))
        h[e] = h.get(e, Fraction(0)) + c1 * c2
        if h[e] == 0:
            del h[e]
    return h


def shift_factor(f):
    n = len(next(iter(f)))
    gamma = tuple(min(e[i] for e in f) for i in range(n))
    return gamma, {tuple(a - b for a, b in zip(e, gamma)): c for e, c in f.items()}


def box_points(B):
    return product(*[range(b + 1) for b in B])


def invert_unit(u, B):
    c0 = u.get(tuple(0 for _ in B))
    assert c0, "not a unit"
    inv = {tuple(0 for _ in B): 1 / Fraction(c0)}
    pts = sorted(box_points(B), key=lambda e: (sum(e), e))
    for e in pts:
        if all(x == 0 for x in e):
            continue
        s = Fraction(0)
        for g, cg in u.items():
            if any(x > y for x, y in zip(g, e)) or all(x == 0 for x in g):
                continue
            rest = tuple(a - b for a, b in zip(e, g))
            s += cg * inv.get(rest, Fraction(0))
        v = -s / c0
        if v != 0:
            inv[e] = v
    return inv


def fmt(f):
    return sorted((e, str(c)) for e, c in f.items())


# support minima
print("A(z1^2 z2 + z1^5):", min_cw([(2, 1), (5, 0)]))
print("A(1 + z1^3):", min_cw([(0, 0), (3, 0)]))
print("A(z1^2 z2 + z1^2 z2^3):", min_cw([(2, 1), (2, 3)]))

# shift factors
print("shift(z1 z2^-2 + z1^3):", shift_factor({(1, -2): Fraction(1), (3, 0): Fraction(1)}))
print("shift(z1^-1 + 1):", shift_factor({(-1,): Fraction(1), (0,): Fraction(1)}))

# truncated inversion
print("inv(1+z1, B=(3,)):", fmt(invert_unit({(0,): Fraction(1), (1,): Fraction(1)}, (3,))))
print("inv(2, B=(2,)):", fmt(invert_unit({(0,): Fraction(2)}, (2,))))
u = {(0, 0): Fraction(1), (1, 0): Fraction(1), (0, 1): Fraction(1)}
iv = invert_unit(u, (2, 2))
print("inv(1+z1+z2, B=(2,2)):", fmt(iv))
prod_trunc = {e: c for e, c in pmul(u, iv).items() if all(x <= 2 for x in e)}
print("u*inv truncated == 1:", prod_trunc == {(0, 0): Fraction(1)})

# formal unit-rewriting invariance: pieces [(1-z^b)p, z^b p], union of supports
rng = random.Random(77)
ok_all = True
for _ in range(300):
    n = rng.randint(1, 4)
    f = {}
    for _ in range(rng.randint(1, 8)):
        e = tuple(rng.randint(0, 5) for _ in range(n))
        c = Fraction(rng.randint(-6, 6))
        if c:
            f[e] = f.get(e, Fraction(0)) + c
    f = {e: c for e, c in f.items() if c}
    if not f:
        continue
    A = min_cw(f.keys())
    pieces = [f]
    for _ in range(5):
        b = tuple(rng.randint(0, 2) for _ in range(n))
        if all(x == 0 for x in b):
            b = tuple(1 if i == 0 else 0 for i in range(n))
        zb = {b: Fraction(1)}
        one_minus = {tuple(0 for _ in range(n)): Fraction(1), b: Fraction(-1)}
        if all(x == 0 for x in b):
            continue
        p = pieces[rng.randrange(len(pieces))]
        pieces.remove(p)
        q1, q2 = pmul(one_minus, p), pmul(zb, p)
        pieces += [q for q in (q1, q2) if q]
        supp = set()
        for q in pieces:
            supp |= set(q.keys())
        ok_all &= min_cw(supp) == A
        total = {}
        for q in pieces:
            total = padd(total, q)
        ok_all &= total == f
print("unit-rewriting invariance over 300 random f x 5 steps:", ok_all)
