"""Molien series and fundamental degrees, including the non-crystallographic H3."""

from refltk import (Polynomial, build_root_system, extract_degrees, molien_series, reynolds_project,
                    verify_degree_identities, verify_g_delta_in_invariant_ring, weyl_group)

for t, n in [("A", 2), ("B", 3), ("H", 3)]:
    W = weyl_group(t, n)
    data = molien_series(W)
    degrees = extract_degrees(data, W.dim)
    ok = verify_degree_identities(W, degrees).passed
    print(f"{t}{n}: degrees {degrees}  (prod = |W| = {W.order}, sum(d-1) = #reflections: {ok})")
    print(f"    series starts {data.integer_coefficients()[:12]}")

W = weyl_group("A", 2)
x1 = Polynomial.variable(0, 2)
print("Reynolds projection of x1^2 under A2:", reynolds_project(W, x1 * x1))

W = weyl_group("H", 3)
print("g_Delta invariant under H3:", verify_g_delta_in_invariant_ring(W, build_root_system(W)))
