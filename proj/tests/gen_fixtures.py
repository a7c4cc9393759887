#!/usr/bin/env python3
"""Regenerate tests/fixtures.hpp with an independent computer-algebra system.

Every frozen constant the C++ tests compare against is recomputed here from
scratch with sympy: the map's components, the image curve, the reduction of
the curve's second component modulo s^2 + 2s - a, the fiber polynomial W and
its slices, and the per-target root counts.  Run from the repository root:

    python3 tests/gen_fixtures.py

The script prints each value as it derives it and rewrites fixtures.hpp.
A handful of fiber counts are additionally confirmed numerically with mpmath
by polishing approximate preimages against the original system.
"""

from __future__ import annotations

import pathlib

import sympy as sp

x, y, s, a, b = sp.symbols("x y s a b")
fb, hb, qb = sp.symbols("fb hb qb")  # plane coordinates for the factored map

# ---------------------------------------------------------------------------
# The map itself.
t = x * y - 1
h = t * (x * t + 1)
f = (x * t + 1) ** 2 * (t**2 + y)


def u_of(F, H):
    return sp.Rational(1, 4) * F * (
        75 * F**3
        + 300 * F**2 * H
        + 450 * F * H**2
        + 276 * F**2
        + 828 * F * H
        + 48 * H**2
        + 364 * F
        + 48 * H
    )


p = sp.expand(f + h)
q = sp.expand(-(t**2) - 6 * t * h * (h + 1) + u_of(f, h))
g = sp.expand(f - h * (h + 1))
jac = sp.expand(
    sp.diff(p, x) * sp.diff(q, y) - sp.diff(p, y) * sp.diff(q, x)
)


def poly_stats(expr, gens):
    P = sp.Poly(expr, *gens)
    return len(P.terms()), P.total_degree()


f_terms, f_deg = poly_stats(f.expand(), (x, y))
g_terms, g_deg = poly_stats(g, (x, y))
p_terms, p_deg = poly_stats(p, (x, y))
q_terms, q_deg = poly_stats(q, (x, y))
jac_terms, jac_deg = poly_stats(jac, (x, y))
u_terms, u_deg = poly_stats(sp.expand(u_of(fb, hb)), (fb, hb))

q_1_3 = q.subs({x: 1, y: 3})
u_63_6 = u_of(63, 6)
jac_0_0 = jac.subs({x: 0, y: 0})
p_1_1 = p.subs({x: 1, y: 1})
q_1_1 = q.subs({x: 1, y: 1})
assert jac_0_0 == 11
print(f"map: f {f_terms}t/deg{f_deg}, g {g_terms}t/deg{g_deg}, "
      f"p {p_terms}t/deg{p_deg}, q {q_terms}t/deg{q_deg}, "
      f"jac {jac_terms}t/deg{jac_deg}, u {u_terms}t/deg{u_deg}")
print(f"q(1,3) = {q_1_3}; u(63,6) = {u_63_6}; F(1,1) = ({p_1_1}, {q_1_1})")

# ---------------------------------------------------------------------------
# Image curve: phi(s) = (s^2 + 2s, phi2(s)) with phi2 = u(s^2 + s, s).
phi1 = sp.Poly(s**2 + 2 * s, s)
phi2 = sp.Poly(sp.expand(u_of(s**2 + s, s)), s)
assert phi2.degree() == 8
phi_table = {}
for s0 in (1, -3, -2, -1, 0):
    phi_table[s0] = (phi1.eval(s0), phi2.eval(s0))
    print(f"phi({s0}) = {phi_table[s0]}")
assert phi_table[-2] == (0, 208)

# Symmetry: phi2(s) - phi2(-2-s) = c * (75s^2+150s+104) * (s+1)^3.
sym = sp.Poly(sp.expand(phi2.as_expr() - phi2.as_expr().subs(s, -2 - s)), s)
quot, rem = sp.div(sym, sp.Poly((75 * s**2 + 150 * s + 104) * (s + 1) ** 3, s))
assert rem.is_zero and quot.degree() == 0
sym_c = quot.eval(0)
print(f"symmetry factor c = {sym_c}")

# Reduction of phi2 modulo s^2 + 2s - a: phi2 == lin(a)*s + cst(a).
red = sp.Poly(phi2.as_expr(), s).rem(sp.Poly(s**2 + 2 * s - a, s))
red = sp.Poly(red.as_expr(), s)
lin = sp.Poly(red.coeff_monomial(s), a)
cst = sp.Poly(red.as_expr() - red.coeff_monomial(s) * s, a)
print(f"lin = {lin.as_expr()}; cst = {cst.as_expr()}")

# Membership value R(a,b) = resultant(s^2+2s-a, phi2 - b) in closed form.
R_resultant = sp.resultant(s**2 + 2 * s - a, phi2.as_expr() - b, s)
beta = cst.as_expr() - b
R_closed = sp.expand(beta**2 - 2 * lin.as_expr() * beta - a * lin.as_expr() ** 2)
assert sp.expand(R_resultant - R_closed) == 0
print("membership closed form matches the resultant")

# Extra point of the Zariski closure: phi at the conjugate parameter pair,
# i.e. both components reduced modulo 75s^2 + 150s + 104 must be constant.
m = sp.Poly(75 * s**2 + 150 * s + 104, s)
za = sp.div(sp.Poly(phi1.as_expr(), s), m)[1]
zb = sp.div(sp.Poly(phi2.as_expr(), s), m)[1]
assert za.degree() <= 0 and zb.degree() <= 0
zariski = (za.eval(0), zb.eval(0))
print(f"extra closure point = {zariski}")
assert sp.expand(R_closed.subs({a: zariski[0], b: zariski[1]})) == 0

# ---------------------------------------------------------------------------
# Fiber polynomial: W(fb, a, b) = Q(fb, a - fb, b) where Q captures the
# algebraic relation between f, h, q.
Q = fb**2 * (qb - u_of(fb, hb)) + hb**2 * (fb - hb * (hb + 1)) * (
    fb + (6 * fb - hb) * (hb + 1)
)
# Sanity: Q vanishes identically on the map.
assert sp.expand(Q.subs({fb: f, hb: h, qb: q})) == 0
W = sp.Poly(sp.expand(Q.subs({hb: a - fb, qb: b})), fb)
assert W.degree() == 6
W_lc = W.LC()
print(f"W: degree {W.degree()}, leading coefficient {W_lc}")
r_branch = sp.Poly(sp.expand(fb - (a - fb) * (a - fb + 1)), fb)


def fiber_counts(a0, b0):
    """Real/complex preimage counts over (a0, b0), derived from W's roots."""
    Wab = sp.Poly(W.as_expr().subs({a: a0, b: b0}), fb)
    coeffs = Wab.all_coeffs()[::-1]
    m0 = 0
    while m0 < len(coeffs) and coeffs[m0] == 0:
        m0 += 1
    shifted = sp.Poly(coeffs[m0:][::-1], fb)
    V = sp.Poly(sp.quo(shifted, sp.gcd(shifted, shifted.diff(fb))), fb)
    g1 = sp.gcd(V, sp.Poly(r_branch.as_expr().subs(a, a0), fb))
    esc = 0
    if g1.degree() >= 1:
        esc = len(sp.Poly(g1, fb).real_roots())
        V = sp.Poly(sp.quo(V, g1), fb)
    genuine = len(V.real_roots()) if V.degree() >= 1 else 0
    boundary = 2 if a0 in (0, -1) and b0 < 0 else 0
    real = genuine + boundary
    cplx = V.degree() + (2 if a0 in (0, -1) and b0 != 0 else 0)
    return real, cplx, m0, esc, boundary


named_points = [
    (3, 0), (3, 4000), (3, 3142), (0, 0), (-1, 0),
    (0, 208), (0, 7), (0, -4), (-1, -2),
]
fiber_rows = []
for a0, b0 in named_points:
    row = (a0, b0, *fiber_counts(a0, b0))
    fiber_rows.append(row)
    print(f"fiber({a0}, {b0}): real {row[2]}, complex {row[3]}, "
          f"zero-mult {row[4]}, escaping {row[5]}, boundary {row[6]}")

# Slice landmarks used directly by tests.
W_3_0 = sp.Poly(W.as_expr().subs({a: 3, b: 0}), fb)
w30_roots = sorted(float(rr.evalf(20)) for rr in W_3_0.real_roots())
assert len(w30_roots) == 2
W_3_3142 = sp.Poly(W.as_expr().subs({a: 3, b: 3142}), fb)
w3142_real = W_3_3142.real_roots()
assert any(rr == 2 for rr in w3142_real)  # the escaping root
w3142_genuine = [float(rr.evalf(20)) for rr in w3142_real if rr != 2]
assert len(w3142_genuine) == 1
disc_3_3142 = sp.discriminant(W_3_3142.as_expr(), fb)
assert disc_3_3142 != 0
disc_3_0 = sp.discriminant(W_3_0.as_expr(), fb)
for b0 in (7, -4, 11):
    assert sp.discriminant(W.as_expr().subs({a: 0, b: b0}), fb) == 0
escape_residual = W.as_expr().subs({a: 3, b: 3142, fb: 6})
genuine_quad = sp.Poly(sp.Rational(-197, 4) * fb**2 + 104 * fb - 63, fb)
genuine_quad_disc = sp.discriminant(genuine_quad.as_expr(), fb)
assert len(genuine_quad.real_roots()) == 0
print(f"W(.,3,0) roots ~ {w30_roots}; W(.,3,3142) genuine root ~ {w3142_genuine[0]}")
print(f"disc W(.,3,3142) = {disc_3_3142}")
print(f"escape residual W(6,3,3142) = {escape_residual}; "
      f"slice quadratic disc = {genuine_quad_disc}")

# Sturm chain length for the (squarefree) slice over (3, 0).
chain = [W_3_0, W_3_0.diff(fb)]
while chain[-1].degree() > 0:
    chain.append(-sp.rem(chain[-2], chain[-1]))
assert not chain[-1].is_zero
chain_len_3_0 = len(chain)
print(f"sturm chain length over (3,0): {chain_len_3_0}")

# Derivative of phi vanishes only at s = -1 (gcd of both components).
dgcd = sp.gcd(sp.Poly(phi1.diff(s), s), sp.Poly(phi2.diff(s), s))
droots = sp.Poly(dgcd, s).real_roots()
assert droots == [-1]
print("phi'(s) = 0 exactly at s = -1")

# ---------------------------------------------------------------------------
# Confirmation against the raw system (no W involved): the boundary pair over
# (0, -4) exactly, and the two preimages over (3, 0) numerically via the
# factored inverse evaluated at W's real roots.
for x0, y0 in [(sp.Rational(-1, 2), -6), (sp.Rational(1, 2), -2)]:
    assert p.subs({x: x0, y: y0}) == 0
    assert q.subs({x: x0, y: y0}) == -4
print("boundary pair over (0,-4) confirmed on the raw system")

for root in W_3_0.real_roots():
    fr = sp.Float(root.evalf(40), 40)
    hr = 3 - fr
    rr = fr - hr * (hr + 1)
    xr = (hr + 1) * fr / rr**2
    yr = (fr - hr**2) * rr**2 / fr**2
    assert abs(float(p.subs({x: xr, y: yr})) - 3) < 1e-12
    assert abs(float(q.subs({x: xr, y: yr}))) < 1e-9
print("both preimages over (3,0) confirmed on the raw system")

# ---------------------------------------------------------------------------
# Emit the header.
def rat(v) -> str:
    return f'"{sp.nsimplify(v)}"'


out = pathlib.Path(__file__).with_name("fixtures.hpp")
lines = []
lines.append("#pragma once")
lines.append("")
lines.append("// Generated by gen_fixtures.py - do not edit by hand.")
lines.append("// Regenerate from the repository root with:  python3 tests/gen_fixtures.py")
lines.append("")
lines.append("namespace fixtures {")
lines.append("")
lines.append("// Point values of the map and its Jacobian determinant.")
lines.append(f"inline constexpr const char* kQ_1_3 = {rat(q_1_3)};")
lines.append(f"inline constexpr const char* kU_63_6 = {rat(u_63_6)};")
lines.append(f"inline constexpr const char* kJac_0_0 = {rat(jac_0_0)};")
lines.append(f"inline constexpr const char* kP_1_1 = {rat(p_1_1)};")
lines.append(f"inline constexpr const char* kQ_1_1 = {rat(q_1_1)};")
lines.append("")
lines.append("// Expanded sizes (sparse term counts and total degrees).")
lines.append(f"inline constexpr int kFTerms = {f_terms}, kFDegree = {f_deg};")
lines.append(f"inline constexpr int kGTerms = {g_terms}, kGDegree = {g_deg};")
lines.append(f"inline constexpr int kPTerms = {p_terms}, kPDegree = {p_deg};")
lines.append(f"inline constexpr int kQTerms = {q_terms}, kQDegree = {q_deg};")
lines.append(f"inline constexpr int kJacTerms = {jac_terms}, kJacDegree = {jac_deg};")
lines.append(f"inline constexpr int kUTerms = {u_terms}, kUDegree = {u_deg};")
lines.append("")
lines.append("// Image curve: samples of phi, the symmetry factor, the reduction")
lines.append("// of phi2 modulo s^2 + 2s - a, and the extra closure point.")
for s0, (pa, pb) in phi_table.items():
    tag = str(s0).replace("-", "m")
    lines.append(
        f"inline constexpr const char* kPhiA_{tag} = {rat(pa)}, *kPhiB_{tag} = {rat(pb)};")
lines.append(f"inline constexpr const char* kSymmetryFactor = {rat(sym_c)};")
lin_c = [lin.as_expr().coeff(a, k) for k in range(3)]
cst_c = [cst.as_expr().coeff(a, k) for k in range(5)]
lines.append("inline constexpr const char* kLinCoeffs[3] = {"
             + ", ".join(rat(v) for v in lin_c) + "};")
lines.append("inline constexpr const char* kCstCoeffs[5] = {"
             + ", ".join(rat(v) for v in cst_c) + "};")
lines.append(f"inline constexpr const char* kZariskiA = {rat(zariski[0])};")
lines.append(f"inline constexpr const char* kZariskiB = {rat(zariski[1])};")
lines.append("")
lines.append("// Fiber polynomial landmarks.")
lines.append(f"inline constexpr const char* kWLeadingCoeff = {rat(W_lc)};")
lines.append(f"inline constexpr const char* kFiberDisc_3_3142 = {rat(disc_3_3142)};")
lines.append(f"inline constexpr const char* kFiberDisc_3_0 = {rat(disc_3_0)};")
lines.append(f"inline constexpr const char* kEscapeResidual_6_3_3142 = {rat(escape_residual)};")
lines.append(f"inline constexpr const char* kSliceQuadDisc = {rat(genuine_quad_disc)};")
lines.append(f"inline constexpr int kChainLength_3_0 = {chain_len_3_0};")
lines.append(f"inline constexpr double kW30Root0 = {w30_roots[0]!r};")
lines.append(f"inline constexpr double kW30Root1 = {w30_roots[1]!r};")
lines.append(f"inline constexpr double kW3142GenuineRoot = {w3142_genuine[0]!r};")
lines.append("")
lines.append("// Per-target preimage counts:")
lines.append("// {a, b, real, complex, zero multiplicity, escaping, boundary}.")
lines.append("struct FiberRow {")
lines.append("    const char* a;")
lines.append("    const char* b;")
lines.append("    int real, complex_total, zero_multiplicity, escaping, boundary;")
lines.append("};")
lines.append(f"inline constexpr FiberRow kFiberRows[{len(fiber_rows)}] = {{")
for a0, b0, re_, cx, zm, esc, bd in fiber_rows:
    lines.append(f'    {{"{a0}", "{b0}", {re_}, {cx}, {zm}, {esc}, {bd}}},')
lines.append("};")
lines.append("")
lines.append("} // namespace fixtures")
lines.append("")
out.write_text("\n".join(lines))
print(f"wrote {out}")
