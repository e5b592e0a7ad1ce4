"""Independent reference values, computed with sympy and plain enumeration.

Writes JSON to stdout; tests/oracle/reference.json is the checked-in copy.
"""
import itertools
import json
from fractions import Fraction
from math import gcd
from functools import reduce

import sympy as sp

x, y, z, t, u = sp.symbols("x y z t u")


def canon(p, gens):
    poly = sp.Poly(sp.expand(p), *gens)
    lc = poly.LC(order="grevlex")
    return text(poly.as_expr() / lc)


def text(p):
    return str(sp.expand(p)).replace("**", "^")


def groebner_strs(polys, gens, order):
    return [canon(g, gens) for g in sp.groebner(polys, *gens, order=order).exprs]


def eliminate(polys, drop, keep):
    gb = sp.groebner(polys, *drop, *keep, order="lex")
    return [canon(g, keep) for g in gb.exprs if not any(g.has(d) for d in drop)]


def global_colength(polys, gens):
    gb = sp.groebner(polys, *gens, order="grevlex")
    leads = [sp.Poly(g, *gens).monoms(order="grevlex")[0] for g in gb.exprs]
    count, degree = 0, 0
    while True:
        layer = [m for m in itertools.product(range(degree + 1), repeat=len(gens)) if sum(m) == degree]
        standard = [m for m in layer if not any(all(a >= b for a, b in zip(m, l)) for l in leads)]
        if not standard:
            return count
        count += len(standard)
        degree += 1


def rank(rows):
    rows = [dict(r) for r in rows if r]
    pivots = {}
    for row in rows:
        row = {k: v for k, v in row.items() if v}
        while row:
            lead = min(row)
            if lead not in pivots:
                inv = 1 / row[lead]
                pivots[lead] = {k: v * inv for k, v in row.items()}
                break
            piv = pivots[lead]
            factor = row[lead]
            for k, v in piv.items():
                row[k] = row.get(k, 0) - factor * v
                if row[k] == 0:
                    del row[k]
    return len(pivots)


def truncated(polys, gens, cap):
    monos = [m for d in range(cap) for m in itertools.product(range(d + 1), repeat=len(gens)) if sum(m) == d]
    index = {m: k for k, m in enumerate(monos)}
    rows = []
    for p in polys:
        terms = sp.Poly(sp.expand(p), *gens).terms()
        for s in monos:
            row = {}
            for mono, coef in terms:
                m = tuple(a + b for a, b in zip(mono, s))
                if sum(m) < cap:
                    row[index[m]] = Fraction(int(coef.p), int(coef.q))
            rows.append(row)
    return len(monos) - rank(rows)


def local_colength(polys, gens, max_cap=14):
    previous = truncated(polys, gens, 1)
    for cap in range(2, max_cap + 1):
        value = truncated(polys, gens, cap)
        if value == previous:
            return value
        previous = value
    return None


def semigroup(gens, limit=200):
    member = [False] * limit
    member[0] = True
    for k in range(1, limit):
        member[k] = any(a <= k and member[k - a] for a in gens)
    gaps = [k for k in range(limit) if not member[k]]
    return {"delta": len(gaps), "gaps": gaps}


out = {}

J = sp.Matrix([[y, x, 0], [0, z, y], [z, 0, x]])
out["three_lines_jacobian_det"] = text(J.det())

out["groebner_x2m1_xym1"] = groebner_strs([x**2 - 1, x * y - 1], (x, y), "grevlex")
out["eliminate_cusp"] = eliminate([x - u**2, y - u**3], (u,), (x, y))
out["eliminate_resultant"] = eliminate([x - t * y, t**2 - 1], (t,), (x, y))
out["implicitize_u2_u3"] = eliminate([x - u**2, y - u**3], (u,), (x, y))
out["global_z_y2_x2m1"] = global_colength([z, y**2, x**2 - 1], (x, y, z))

for name, gens in {"2,3": [2, 3], "3,4,5": [3, 4, 5], "4,7,9,10": [4, 7, 9, 10]}.items():
    out["semigroup_" + name] = semigroup(gens)
    assert reduce(gcd, gens) == 1

cusp = y**2 - x**3
node = y**2 - x**3 - x**2
out["cusp_milnor_local"] = local_colength([sp.diff(cusp, x), sp.diff(cusp, y)], (x, y))
out["node_milnor_local"] = local_colength([sp.diff(node, x), sp.diff(node, y)], (x, y))
out["cusp_e_jac"] = local_colength([cusp, 3 * sp.diff(cusp, x) + 5 * sp.diff(cusp, y)], (x, y))
out["node_e_jac"] = local_colength([node, 3 * sp.diff(node, x) + 5 * sp.diff(node, y)], (x, y))
out["cusp_m"] = local_colength([cusp, 2 * x + 7 * y], (x, y))
out["node_m"] = local_colength([node, 2 * x + 7 * y], (x, y))

f1, f2, f3 = x**2 * y - z**2, x**3 - y * z, y**2 - x * z
out["local_345_plus_yz"] = local_colength([f1, f2, f3, y, z], (x, y, z))
out["local_three_lines_quadric"] = local_colength([x * y, y * z, x * z, x**2 + y**2 + z**2], (x, y, z))

json.dump(out, __import__("sys").stdout, indent=2, sort_keys=True)
print()
