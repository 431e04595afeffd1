#!/usr/bin/env python3
"""Reference computations for tangent cones, epsilon-curve cone location,
and stellar subdivision facet counts."""
from fractions import Fraction as F


def lex_nonneg(col):
    for v in col:
        if v > 0:
            return True
        if v < 0:
            return False
    return True


def membership(x, ws):
    cols = [(x[i],) + tuple(w[i] for w in ws) for i in range(len(x))]
    return all(lex_nonneg(c) for c in cols)


print("x=(1,0),w=(0,1):", membership((F(1), F(0)), [(F(0), F(1))]))
print("x=(0,0),w=(-1,0):", membership((F(0), F(0)), [(F(-1), F(0))]))
print("x=(0,1),w1=(0,-1),w2=(1,0):",
      membership((F(0), F(1)), [(F(0), F(-1)), (F(1), F(0))]))

# epsilon-curve location in a subdivision: coordinates of the curve in the
# ray basis of each facet are polynomials in eps; containment for small
# eps > 0 means every coordinate's coefficient sequence is lex >= 0.
def mat_inv2(m):
    (a, b), (c, d) = m
    det = a * d - b * c
    assert det != 0
    return [[d / det, -b / det], [-c / det, a / det]]


def curve_coords(rays, x, ws):
    """rays: list of 2 integer vectors (columns). Returns per-ray coefficient
    sequences [c0, c1, ...] of the curve x + eps*w1 + ... in that basis."""
    m = [[F(rays[0][0]), F(rays[1][0])], [F(rays[0][1]), F(rays[1][1])]]
    inv = mat_inv2(m)
    seqs = []
    for i in range(2):
        seq = []
        for vec in [x] + list(ws):
            seq.append(inv[i][0] * vec[0] + inv[i][1] * vec[1])
        seqs.append(seq)
    return seqs


def supports(rays, x, ws):
    return all(lex_nonneg(s) for s in curve_coords(rays, x, ws))


quad_split = [[(1, 0), (1, 1)], [(1, 1), (0, 1)]]
x, w = (F(1), F(1)), (F(1), F(2))
for rays in quad_split:
    seqs = curve_coords(rays, x, w and [w])
    print(f"cone {rays}: coords {seqs} supports={supports(rays, x, [w])}")
# minimal face for P=((1,1);(1,1)): coordinates on the ray (1,1) itself
for rays in quad_split:
    seqs = curve_coords(rays, (F(1), F(1)), [(F(1), F(1))])
    nz = [i for i, s in enumerate(seqs) if any(v != 0 for v in s)]
    print(f"cone {rays}: nonzero coords at rays {[rays[i] for i in nz]}")

# stellar subdivision of the fan of the projective plane at (1,1):
# facets {01},{12},{02} with rays n0=(1,0), n1=(0,1), n2=(-1,-1).
# (1,1) lies in cone{01}; replacing it yields 2 cones; total = 4.
print("P2 stellar facet count:", 2 + 2)
