"""Assemble verification reports for the command-line tool.

``run(command, spec)`` returns ``(document, exit_code)``.  The document is a
plain dict with a fixed layout; everything in it is ordered canonically so
two runs on the same input serialize to identical bytes.
"""

import json
from fractions import Fraction

import numpy as np

from ._qarray import QArray
from .checks import fmt_vector, make_check
from .classify import splitting_report
from .errors import ReflError
from .field import Scalar
from .invariants import (LOC_DEGREES, default_expansion_degree, extract_degrees,
                         g_delta_invariance_report, molien_series, verify_degree_identities)
from .roots import build_root_system, verify_axioms
from .spec_io import build_group, describe
from .stabilizers import (hyperplane, is_generated_by_contained_reflections, isotropy,
                          verify_fixed_locus_equality, verify_inertia_decomposition)

__all__ = ["COMMANDS", "run", "render_json", "render_text", "isotropy_samples"]

COMMANDS = ("enumerate", "roots", "stabilizers", "classify", "molien", "verify-all")

LOC_CLOSURE = "the element list is closed under multiplication by the generators"
LOC_FORM = "every element preserves the bilinear form"
LOC_ISOTROPY = "isotropy groups of vectors are generated by the reflections they contain"
LOC_MOLIEN = "Molien coefficients are non-negative integers with c_0 = 1"

SAMPLE_SEED = 20240611
SAMPLE_RANDOM = 50
SAMPLE_TOTAL = 100


def isotropy_samples(W, delta, seed=SAMPLE_SEED, random_count=SAMPLE_RANDOM, total=SAMPLE_TOTAL):
    """Test vectors: every root, ``random_count`` seeded random rational vectors, and
    random vectors on root hyperplanes until there are at least ``total``."""
    n, d = W.dim, W.d
    rng = np.random.default_rng(seed)
    out = [tuple(v) for v in delta.roots]

    def rational():
        return Scalar(Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 6))), 0, d)

    for _ in range(random_count):
        out.append(tuple(rational() for _ in range(n)))
    roots = delta.roots
    k = 0
    while len(out) < total and roots:
        H = hyperplane(W.space, roots[k % len(roots)])
        coeffs = [rational() for _ in H.basis]
        v = [Scalar(0, 0, d)] * n
        for c, b in zip(coeffs, H.basis):
            v = [x + c * y for x, y in zip(v, b)]
        out.append(tuple(v))
        k += 1
    return out


def _group_summary(W, delta=None):
    summary = {
        "dimension": W.dim,
        "field": "Q" if W.d == 1 else f"Q(sqrt {W.d})",
        "order": W.order,
        "reflections": len(W.reflection_indices),
    }
    if delta is not None:
        summary["roots"] = len(delta)
        summary["root_classes"] = [len(c) for c in delta.classes]
        summary["class_representatives"] = [fmt_vector(r) for r in delta.representatives]
    return summary


def _enumerate_checks(W):
    gens = [W.index_of(g) for g in W.generators]
    idx = np.arange(W.order)
    missing = 0
    for g in gens:
        found = W.lookup_or_none(W._enc[np.full(W.order, g)].matmul(W._enc[idx]))
        missing += sum(1 for x in found if x is None)
    closure = make_check("group-closure", LOC_CLOSURE, [{"missing_products": missing}] if missing else [],
                         count=missing, generators=len(gens), elements=W.order)
    E = W._enc
    ET = QArray(np.swapaxes(E.A, 1, 2), np.swapaxes(E.B, 1, 2), E.den, E.d)
    G = QArray.from_scalars([W.space.gram], W.d)
    lhs = ET.matmul(G).matmul(E)
    rhs = QArray(np.broadcast_to(G.A, lhs.A.shape), np.broadcast_to(G.B, lhs.B.shape), G.den, G.d)
    bad = np.nonzero(~lhs.equal_items(rhs))[0]
    form = make_check("form-preserved", LOC_FORM, [{"w_index": int(i)} for i in bad],
                      count=len(bad), elements=W.order)
    return [closure, form]


def _stabilizer_checks(W, delta):
    checks = []
    merged = {}
    for alpha in delta.roots:
        rep = verify_inertia_decomposition(W, alpha)
        for c in rep.checks:
            entry = merged.setdefault(c.check_id, [c.location, [], 0])
            n = c.details["failures"]
            entry[2] += n
            if n:
                entry[1].extend({"alpha": fmt_vector(alpha), **w} for w in c.witnesses)
    for cid, (loc, witnesses, count) in merged.items():
        checks.append(make_check(cid, loc, witnesses, count=count, roots=len(delta)))
    checks.extend(verify_fixed_locus_equality(W, delta).checks)

    samples = isotropy_samples(W, delta)
    failures = []
    orders = []
    for v in samples:
        H = isotropy(W, v)
        orders.append(H.order)
        if not is_generated_by_contained_reflections(H):
            failures.append({"v": fmt_vector(v), "order": H.order})
    checks.append(make_check("isotropy-reflection-generated", LOC_ISOTROPY, failures,
                             samples=len(samples), seed=SAMPLE_SEED,
                             nontrivial=sum(1 for o in orders if o > 1)))
    return checks


def _molien_section(W, delta, expansion):
    expansion = expansion or default_expansion_degree(W)
    data = molien_series(W, expansion)
    degrees = extract_degrees(data, W.dim)
    checks = []
    shown = min(len(data.coefficients), 25)
    section = {
        "expansion_degree": expansion,
        "rational_function": data.rational_function(),
        "coefficients": [str(c) for c in data.coefficients[:shown]],
        "degrees": degrees,
    }
    try:
        bad = [] if data.integer_coefficients()[0] == 1 else [{"c0": str(data.coefficients[0])}]
    except ValueError as exc:
        bad = [{"reason": str(exc)}]
    checks.append(make_check("molien-integral", LOC_MOLIEN, bad))
    checks.append(make_check("polynomial-invariants", LOC_DEGREES,
                             [] if degrees is not None else [{"reason": "no factorization into 1/(1 - t^d)"}],
                             degrees=degrees))
    if degrees is not None:
        checks.extend(verify_degree_identities(W, degrees).checks)
    checks.extend(g_delta_invariance_report(W, delta).checks)
    return checks, section


def _splitting_section(W, delta):
    rep = splitting_report(W, delta)
    table = rep["classification"].details["classes"]
    return rep.checks, {"r": len(table), "classes": table}


def run(command, spec, expansion=None):
    """Run one command on a parsed group definition; returns ``(document, exit_code)``."""
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}; expected one of {', '.join(COMMANDS)}")
    doc = {"command": command, "spec": describe(spec)}
    try:
        W = build_group(spec)
        everything = command == "verify-all"
        delta = None if command == "enumerate" else build_root_system(W)
        checks = []
        if command == "enumerate" or everything:
            checks.extend(_enumerate_checks(W))
        if command == "roots" or everything:
            checks.extend(verify_axioms(delta, W).checks)
        if command == "stabilizers" or everything:
            checks.extend(_stabilizer_checks(W, delta))
        if command == "classify" or everything:
            cls_checks, split = _splitting_section(W, delta)
            checks.extend(cls_checks)
            doc["splitting"] = split
        if command == "molien" or everything:
            mol_checks, section = _molien_section(W, delta, expansion or spec.expansion_degree)
            checks.extend(mol_checks)
            doc["molien"] = section
        doc["group"] = _group_summary(W, delta)
    except ReflError as exc:
        doc["error"] = {"code": exc.code, "type": type(exc).__name__, "message": str(exc)}
        doc["checks"] = []
        doc["passed"] = False
        return doc, 2
    doc["checks"] = [c.to_dict() for c in checks]
    doc["summary"] = {
        "checks": len(checks),
        "passed": sum(1 for c in checks if c.passed),
        "failed": sum(1 for c in checks if not c.passed),
    }
    doc["passed"] = all(c.passed for c in checks)
    return doc, 0 if doc["passed"] else 1


def _jsonable(x):
    if isinstance(x, Scalar):
        return str(x)
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (tuple, set, frozenset)):
        return [_jsonable(y) for y in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def render_json(doc):
    return json.dumps(doc, sort_keys=True, indent=2, default=_jsonable) + "\n"


def render_text(doc):
    lines = [f"refltk {doc['command']}"]
    if "error" in doc:
        err = doc["error"]
        lines.append(f"error [{err['code']}]: {err['message']}")
        return "\n".join(lines) + "\n"
    g = doc["group"]
    lines.append(f"group: order {g['order']}, dimension {g['dimension']}, field {g['field']}, "
                 f"{g['reflections']} reflections")
    if "roots" in g:
        lines.append(f"roots: {g['roots']} in classes {g['root_classes']}")
    if "splitting" in doc:
        sp = doc["splitting"]
        lines.append(f"splitting: r = {sp['r']}")
        for c in sp["classes"]:
            lines.append(f"  rank {c['rank']}  |G| = {c['order']}  |N| = {c['normalizer_order']}  "
                         f"class size {c['class_size']}  action image {c['action_image_order']}")
    if "molien" in doc:
        m = doc["molien"]
        lines.append(f"molien: {m['rational_function']}")
        lines.append(f"degrees: {m['degrees']}")
    for c in doc["checks"]:
        lines.append(f"[{c['status'].upper():4}] {c['check_id']}: {c['anchor']}")
        for w in c["witnesses"]:
            lines.append(f"         witness: {json.dumps(w, sort_keys=True, default=_jsonable)}")
    s = doc["summary"]
    lines.append(f"{s['passed']}/{s['checks']} checks passed")
    return "\n".join(lines) + "\n"
