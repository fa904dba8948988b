"""From Diophantine approximation to polygon translation, end to end.

Builds the full reduction: a simultaneous-Diophantine-approximation
instance becomes a family of pulse functions, the pulses become stacked
trapezoids forming one convex polygon, and the polygon's translate
counts replay the pulse sum exactly.  Both decision problems are solved
by brute force and cross-checked against the polygon's sweep minimum.

Run: python demos/hardness_pipeline.py
"""

from fractions import Fraction as F

from polylat import (
    SDAInstance,
    apm_solve_bruteforce,
    apm_to_polygon,
    count_slices,
    frac_part,
    normalize_apm,
    optimize_sweep,
    pulse_eval,
    sda_solve_bruteforce,
    sda_to_apm,
    translate,
    verify_reduction,
)

inst = SDAInstance(alphas=(F(1, 2),), Q=2, eps=F(1, 4))
print("=== the Diophantine instance ===")
print(f"alphas = {[str(a) for a in inst.alphas]}, Q = {inst.Q}, eps = {inst.eps}, D = {inst.D}")
print("brute-force witness q:", sda_solve_bruteforce(inst))

print()
print("=== pulse encoding ===")
apm = sda_to_apm(inst)
for i, p in enumerate(apm.pulses):
    print(f"pulse {i}: a={p.a}, k={p.k}, d={p.d}, eps={p.eps}")
print("common zero of all pulses:", apm_solve_bruteforce(apm))

print()
print("=== normalize, then stack trapezoids into one polygon ===")
normalized, amap = normalize_apm(apm)
sc = apm_to_polygon(normalized)
print("vertices:", [(str(v.x), str(v.y)) for v in sc.polygon.vertices])
print("per-trapezoid constants:", [q.m_const for q in sc.quads], "-> M =", sc.m_total)

print()
print("=== the counting law: count(t) = M + pulse_sum(frac(t)) ===")
for i in range(0, 11, 2):
    t = F(i, 10)
    got = count_slices(translate(sc.polygon, t, (-1, 0)))[0]
    psum = sum(pulse_eval(p, frac_part(t)) for p in normalized.pulses)
    print(f"  t={t}: count {got} = {sc.m_total} + {psum}")

rep = verify_reduction(sc, normalized, samples=100)
print("systematic verification:", rep.samples_checked, "samples, all matched")

print()
print("=== decision equivalence ===")
res = optimize_sweep(sc.polygon, (-1, 0))
print(f"sweep minimum {res.count} vs threshold M = {sc.m_total}")
print("polygon says yes-instance:", res.count <= sc.m_total)
print("Diophantine brute force says:", sda_solve_bruteforce(inst) is not None)
