#!/usr/bin/env python3
"""Reference computations for the toric realization pipeline: dual bases of
the built-in fans, the one-dimensional worked fixture at ell=4 and its ell=2
failure, escalation starting points, and retraction examples."""
from fractions import Fraction as F
from itertools import product

# ---- dual bases -----------------------------------------------------------
# For a facet with primitive ray matrix N (columns n_i), the dual basis rows
# m_j satisfy <m_j, n_i> = delta_ij, i.e. M = (N^{-1})^T read as row vectors.

def inv2(n):
    (a, c), (b, d) = [(n[0][0], n[1][0]), (n[0][1], n[1][1])]
    det = a * d - b * c
    assert abs(det) == 1, "not unimodular"
    return [[F(d, det), F(-c, det)], [F(-b, det), F(a, det)]]


def dual_basis(rays):
    inv = inv2(rays)  # rows of inv are the dual basis vectors
    return [tuple(int(x) for x in row) for row in inv]


FANS = {
    "p1": {"rays": [(1,), (-1,)], "facets": [(0,), (1,)]},
    "p2": {"rays": [(1, 0), (0, 1), (-1, -1)], "facets": [(0, 1), (1, 2), (0, 2)]},
    "p1xp1": {"rays": [(1, 0), (0, 1), (-1, 0), (0, -1)],
              "facets": [(0, 1), (1, 2), (2, 3), (0, 3)]},
    "blp2": {"rays": [(1, 0), (0, 1), (-1, -1), (1, 1)],
             "facets": [(0, 3), (3, 1), (1, 2), (0, 2)]},
}

for name, fan in FANS.items():
    if name == "p1":
        print("p1 dual bases: facet(0,)->m=(1,)  facet(1,)->m=(-1,)")
        continue
    for fc in fan["facets"]:
        rays = [fan["rays"][i] for i in fc]
        print(f"{name} facet {fc} rays {rays} dual {dual_basis(rays)}")

# max |<m_j, n_rho>| over all facets' dual bases and all rays, per fan
for name, fan in FANS.items():
    mx = 0
    if name == "p1":
        mx = 1
    else:
        for fc in fan["facets"]:
            for m in dual_basis([fan["rays"][i] for i in fc]):
                for n in fan["rays"]:
                    mx = max(mx, abs(sum(a * b for a, b in zip(m, n))))
    print(f"{name} max |pairing| = {mx}")

# ---- P^1 fixture ----------------------------------------------------------
# family A^{s+}={2}, A^{s-}={1}; f = l1 t^2/(1+t)^ell + l2 t^-1/(1+t^-1)^ell.
# Expansion at s+ in z=t: second summand is z^(ell-1)/(1+z)^ell.
def poly_mul(f, g):
    h = {}
    for (e1, c1), (e2, c2) in product(f.items(), g.items()):
        h[e1 + e2] = h.get(e1 + e2, F(0)) + c1 * c2
    return {e: c for e, c in h.items() if c}


def geom_inv_pow(ell, deg):
    """(1+z)^{-ell} truncated to degree deg, by inverting then dividing."""
    inv = {}
    # (1+z)^{-1} = sum (-1)^k z^k
    cur = {k: F(-1) ** k for k in range(deg + 1)}
    for _ in range(ell - 1):
        nxt = {}
        # divide cur by (1+z): nxt[k] = cur[k] - nxt[k-1]
        for k in range(deg + 1):
            nxt[k] = cur.get(k, F(0)) - nxt.get(k - 1, F(0))
        cur = nxt
    return cur


def p1_expand(ell, l1, l2, deg):
    invp = geom_inv_pow(ell, deg)
    out = {}
    for e, c in invp.items():
        for base, lam in [(2, l1), (ell - 1, l2)]:
            k = e + base
            if k <= deg:
                out[k] = out.get(k, F(0)) + lam * c
    return {e: c for e, c in out.items() if c}


for ell in (4, 2):
    exp_plus = p1_expand(ell, F(2), F(3), 8)
    print(f"p1 ell={ell} sigma+ support min:", min(exp_plus), "series:",
          sorted(exp_plus.items())[:5])
# sigma-: by symmetry s = t^-1, summands swap roles: l2 s + l1 s^(ell-2)... recompute:
# f = l1 t^2/(1+t)^ell: t = s^-1: s^-2/(1+s^-1)^ell = s^(ell-2)/(1+s)^ell
#     l2 t^-1/(1+t^-1)^ell = s/(1+s)^ell
def p1_expand_minus(ell, l1, l2, deg):
    invp = geom_inv_pow(ell, deg)
    out = {}
    for e, c in invp.items():
        for base, lam in [(ell - 2, l1), (1, l2)]:
            k = e + base
            if k <= deg:
                out[k] = out.get(k, F(0)) + lam * c
    return {e: c for e, c in out.items() if c}


for ell in (4, 2):
    exp_minus = p1_expand_minus(ell, F(2), F(3), 8)
    print(f"p1 ell={ell} sigma- support min:", min(exp_minus))

# escalation starting points: ell0 = #facets * (1 + max antichain coordinate)
print("p1 fixture ell0:", 2 * (1 + 2))

# ---- symbolic cross-check identity on the fixture -------------------------
# nu_u(f) = min_sigma [ nu(num_sigma) - ell*nu(Q_sigma) ] for positive lambda.
# At sigma+ with rank-1 weight u>0 on z: nu(z^a)=a*u. Q_{s+} -> 1+z: nu=0.
# Q_{s-} -> 1+z^{-1}: nu=-u. num_{s+} -> z^2: 2u. num_{s-} -> z^{-1}: -u.
for u in (F(1), F(2), F(5, 2)):
    v = min(2 * u - 4 * 0, -u - 4 * (-u))
    print(f"u={u}: symbolic value {v} prediction {2*u}")

# ---- retraction examples --------------------------------------------------
# fine weights rank-1 (2,3) on cone <(1,0),(1,1)>; coarse dual basis e1*,e2*.
# nu(chi^{e_i^*}) = sum_j <e_i^*, n_j> * alpha_j
n = [(1, 0), (1, 1)]
alpha = [F(2), F(3)]
vals = [sum(F(m[i]) * 0 for i in range(0)) for m in []]  # placeholder
v1 = n[0][0] * alpha[0] + n[1][0] * alpha[1]
v2 = n[0][1] * alpha[0] + n[1][1] * alpha[1]
print("retract_toric fine(2,3) on <(1,0),(1,1)> ->", (v1, v2))

# ---- convex split ---------------------------------------------------------
# F = max(x,y) on the 4-quadrant fan subdivided at (1,1) and (-1,-1) so F is
# conewise linear; G = support function with G(ray)=1 for every ray.
# Facets (ccw): <e1,(1,1)>, <(1,1),e2>, <e2,-e1>, <-e1,(-1,-1)>, <(-1,-1),-e2>, <-e2,e1>
# F linear pieces u_s with <u_s, n_i> = max at rays: max(x,y) at rays:
# e1->1, (1,1)->1? max(1,1)=1, e2->1, -e1->0, (-1,-1)->-1, -e2->0
RAYS = [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]
FACETS = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]
FVALS = {(1, 0): 1, (1, 1): 1, (0, 1): 1, (-1, 0): 0, (-1, -1): -1, (0, -1): 0}
GVALS = {r: 1 for r in RAYS}


def linear_piece(rays, vals):
    inv = inv2(rays)
    # u = vals . inv rows combination: u solves <u, n_i> = vals_i
    u = [vals[0] * inv[0][j] + vals[1] * inv[1][j] for j in range(2)]
    return u


def wall_slack(u1, u2, r2):
    """convexity across a wall: <u1, r2> <= <u2, r2> where r2 is the ray of
    the second facet not on the wall; returns <u2-u1, r2>."""
    return sum((a - b) * c for a, b, c in zip(u2, u1, r2))


uF, uG = {}, {}
for fc in FACETS:
    rays = [RAYS[i] for i in fc]
    uF[fc] = linear_piece(rays, [F(FVALS[r]) for r in rays])
    uG[fc] = linear_piece(rays, [F(GVALS[r]) for r in rays])
walls = []
for a in FACETS:
    for b in FACETS:
        if a < b and len(set(a) & set(b)) == 1:
            walls.append((a, b))
need = F(1)
for a, b in walls:
    shared = set(a) & set(b)
    r2 = RAYS[[i for i in b if i not in shared][0]]
    gF = wall_slack(uF[a], uF[b], r2)
    gG = wall_slack(uG[a], uG[b], r2)
    assert gG > 0, "G not strictly convex"
    if gF < 0:
        need = max(need, F(-gF, gG))
# ray nonnegativity: F(r) + ell*G(r) >= 0
for r in RAYS:
    if FVALS[r] < 0:
        need = max(need, F(-FVALS[r], GVALS[r]))
import math
ell_split = max(1, math.ceil(need))
print("convex_split ell for max(x,y):", ell_split)
print("G wall slacks strictly positive:", all(
    wall_slack(uG[a], uG[b], RAYS[[i for i in b if i not in (set(a) & set(b))][0]]) > 0
    for a, b in walls))
