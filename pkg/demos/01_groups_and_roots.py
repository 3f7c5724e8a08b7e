"""Enumerate B3, list its root classes, and look at a few stabilizers."""

from refltk import (build_root_system, inertia, is_generated_by_contained_reflections, isotropy,
                    verify_axioms, verify_fixed_locus_equality, weyl_group)
from refltk.checks import fmt_vector

W = weyl_group("B", 3)
delta = build_root_system(W)
print(f"B3: |W| = {W.order}, {len(W.reflection_indices)} reflections, {len(delta)} roots")
for rep, cls in zip(delta.representatives, delta.classes):
    print(f"  root class of {fmt_vector(rep)}: {len(cls)} roots")
print("axioms:", "pass" if verify_axioms(delta, W).passed else "fail")

for v in [(1, 0, 0), (1, 1, 0), (1, 2, 3)]:
    H = isotropy(W, v)
    print(f"isotropy of {v}: order {H.order}, generated by its reflections: "
          f"{is_generated_by_contained_reflections(H)}")

alpha = delta.representatives[0]
print(f"inertia of {fmt_vector(alpha)}: order {inertia(W, alpha).order}")

print("fixed locus equality:", verify_fixed_locus_equality(W, delta).passed)
fake = delta.with_root((1, 2, 3))
rep = verify_fixed_locus_equality(W, fake)
print("with a fake hyperplane:", rep.passed, rep["roots-in-moved"].witnesses[0])
