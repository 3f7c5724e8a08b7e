"""Maximal elementary abelian 2-subgroups generated by reflections, up to conjugacy."""

from refltk import splitting_report, weyl_group

for t, n in [("A", 3), ("B", 2), ("B", 4), ("F", 4)]:
    W = weyl_group(t, n)
    rep = splitting_report(W)
    print(f"{t}{n}: r = {len(rep.classes)}  (all checks pass: {rep.passed})")
    for c in rep.classes:
        print(f"    rank {c.rank}: class size {c.class_size}, |N| = {c.normalizer.order}, "
              f"action image of order {len(c.action_image())}")
