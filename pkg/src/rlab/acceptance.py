"""
The acceptance suite: ten exhaustive or oracle-backed checks at desk scale.

Each ``criterion_N`` is a pure function returning a report dict with keys
``id``, ``title``, ``pass``, ``limit`` (seconds) and ``details``; :func:`run`
adds wall-clock ``seconds`` and :func:`run_all` fans the criteria out to a
process pool and merges the reports in id order.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import chain, combinations
from typing import Callable

from .coxeter import CoxeterSystem, make_system
from .parabolic import ParabolicQuotient, left_weak_leq, unique_lift
from .pbruhat import (
    class_rep,
    count_classes_by_equivalence,
    count_triples,
    p_chains,
    p_cover,
    p_leq,
    p_pairs,
    q_poset,
)
from .polyalg import GF, DEFAULT_PRIME, buchberger, bruhat_revlex, initial_ideal
from .reforder import (
    build_reflection_order,
    increasing_chain,
    reflection_sequence,
    verify_reflection_order,
)
from .simpcomplex import (
    ball_certificate,
    boundary_containment_check,
    lift_facet,
    projected_complex,
    ridge_classification,
    shelling_order,
    verify_shelling,
)
from .typea_geom import (
    flag_ideal_point_count,
    grassmannian_ideal,
    grassmannian_quotient,
    groebner_degeneration_check,
    hilbert_comparison,
    hyperplane_section_check,
    model_image_check,
    richardson_point_check,
    slice_cone_recursion_check,
    stratification_check,
)

__all__ = ["CRITERIA", "run", "run_all", "summary_line"]


def _subsets(rank: int) -> list[frozenset[int]]:
    gens = range(1, rank + 1)
    return [frozenset(c) for c in chain.from_iterable(combinations(gens, r) for r in range(rank + 1))]


def _quotients(W: CoxeterSystem) -> list[ParabolicQuotient]:
    return [ParabolicQuotient(W, J) for J in _subsets(W.rank)]


def _grassmannian_cases() -> list[tuple[int, int]]:
    """Every Grassmannian ``Gr(k, n)`` with ``n <= 4`` and ``0 < k < n``, ``n >= 3``."""
    return [(n, k) for n in (3, 4) for k in range(1, n)]


def _report(cid: int, title: str, limit: float, ok: bool, details: dict) -> dict:
    return {"id": cid, "title": title, "limit": limit, "pass": bool(ok), "details": details}


# -- 1 ---------------------------------------------------------------------------


def criterion_1() -> dict:
    """Class counts of Q(W, W_P): interval equivalence versus triples."""
    details: dict = {}
    ok = True
    n7 = len(q_poset(ParabolicQuotient(make_system("A2"), {2})).classes)
    details["Q(A2,{2})"] = n7
    ok &= n7 == 7
    rows = []
    for tag in ("A2", "A3", "B2"):
        for Q in _quotients(make_system(tag)):
            a, b = count_classes_by_equivalence(Q), count_triples(Q)
            rows.append({"system": tag, "J": sorted(Q.J), "equivalence": a, "triples": b})
            ok &= a == b
    details["counts"] = rows
    return _report(1, "class counts agree", 5, ok, details)


# -- 2 ---------------------------------------------------------------------------


def criterion_2() -> dict:
    """Unique minimum of each coset above x, reached by a P-Bruhat chain."""
    W = make_system("A3")
    failures = []
    checked = 0
    for Q in _quotients(W):
        order = build_reflection_order(W, Q.J, "last")
        for x in W.elements:
            for cid, coset in enumerate(Q.cosets):
                above = [z for z in coset if W.bruhat_leq(x, z)]
                checked += 1
                if not above:
                    if unique_lift(x, cid, Q) is not None:
                        failures.append({"J": sorted(Q.J), "x": list(x.word), "coset": cid, "why": "lift of empty set"})
                    continue
                minimal = [z for z in above if not any(y != z and W.bruhat_leq(y, z) for y in above)]
                if len(minimal) != 1:
                    failures.append({"J": sorted(Q.J), "x": list(x.word), "coset": cid, "minimal": len(minimal)})
                    continue
                z = minimal[0]
                chain_ = increasing_chain(x, z, order)
                bridge = all(not Q.in_subgroup(t) for t in reflection_sequence(chain_))
                if unique_lift(x, cid, Q) != z or not p_leq(x, z, Q) or not bridge:
                    failures.append({"J": sorted(Q.J), "x": list(x.word), "coset": cid, "z": list(z.word), "bridge": bridge})
    details = {"checked": checked, "failures": failures[:5]}
    return _report(2, "unique lift", 10, not failures, details)


# -- 3 ---------------------------------------------------------------------------


def criterion_3() -> dict:
    """Left weak order on parabolic parts, length-additive shifts, the shift to W^P, top/bottom."""
    W = make_system("A3")
    els = W.elements
    counts = {"left-weak": 0, "length-additive": 0, "shift": 0, "top-bottom": 0}
    failures = []
    for Q in _quotients(W):
        J = sorted(Q.J)
        par = [Q.factorize(w)[1] for w in els]
        for v in els:
            for w in W.covers(v, "up"):
                if not p_cover(v, w, Q):
                    continue
                counts["left-weak"] += 1
                wp, vp = par[w.index], par[v.index]
                if not left_weak_leq(wp, vp) or not W.descents(wp, "right") <= W.descents(vp, "right"):
                    failures.append({"check": "left-weak", "J": J, "v": list(v.word), "w": list(w.word)})
        for z in Q.subgroup:
            for u in els:
                uz = u * z
                if uz.length != u.length + z.length:
                    continue
                for v in els:
                    vz = v * z
                    if vz.length != v.length + z.length:
                        continue
                    counts["length-additive"] += 1
                    if p_leq(uz, vz, Q) != p_leq(u, v, Q):
                        failures.append({"check": "length-additive", "J": J, "u": list(u.word), "v": list(v.word), "z": list(z.word)})
        for u, w in p_pairs(Q):
            counts["shift"] += 1
            wP, w_par = Q.factorize(w)
            if not p_leq(u * w_par.inverse(), wP, Q):
                failures.append({"check": "shift", "J": J, "u": list(u.word), "w": list(w.word)})
        for w in Q.min_reps:
            for u in els:
                if W.bruhat_leq(u, w):
                    counts["top-bottom"] += 1
                    if not p_leq(u, w, Q):
                        failures.append({"check": "top-bottom", "J": J, "u": list(u.word), "w": list(w.word)})
    return _report(3, "P-Bruhat structure", 30, not failures, {"checked": counts, "failures": failures[:5]})


# -- 4 ---------------------------------------------------------------------------


def _all_chains(W: CoxeterSystem, a, b) -> list[tuple]:
    ups = W._up_covers()
    out = []

    def extend(c: list) -> None:
        if c[-1] == b:
            out.append(tuple(c))
            return
        for v in ups[c[-1].index]:
            if W.bruhat_leq(v, b):
                c.append(v)
                extend(c)
                c.pop()

    extend([a])
    return out


def criterion_4() -> dict:
    """Reflection orders: validity, diamonds, unique increasing and lex-minimal chains."""
    failures = []
    built = 0
    for tag in ("A2", "A3", "B2"):
        W = make_system(tag)
        for J in _subsets(W.rank):
            for placement in ("first", "last"):
                for functional in (0, 1):
                    ok, why = verify_reflection_order(build_reflection_order(W, J, placement, functional))
                    built += 1
                    if not ok:
                        failures.append({"system": tag, "J": sorted(J), "placement": placement, "violation": why})

    W = make_system("A3")
    orders = [
        build_reflection_order(W, J, placement, functional)
        for J in _subsets(W.rank)
        for placement in ("first", "last")
        for functional in (0, 1)
    ]
    diamonds = 0
    intervals = 0
    chains_seen = 0
    for a in W.elements:
        for b in W.elements:
            if not W.bruhat_leq(a, b):
                continue
            chains = _all_chains(W, a, b)
            labels = [tuple(t.index for t in reflection_sequence(c)) for c in chains]
            intervals += 1
            chains_seen += len(chains)
            if b.length - a.length == 2:
                diamonds += 1
                if len(chains) != 2:
                    failures.append({"diamond": [list(a.word), list(b.word)], "chains": len(chains)})
            for o in orders:
                keys = [tuple(o.rank[t] for t in lab) for lab in labels]
                inc = [i for i, k in enumerate(keys) if all(x < y for x, y in zip(k, k[1:]))]
                if len(inc) != 1 or keys[inc[0]] != min(keys):
                    failures.append({"interval": [list(a.word), list(b.word)], "increasing": len(inc)})
                    continue
                if b.length - a.length == 2 and len(keys) == 2:
                    (p, q), (r, s) = keys
                    if not (max(p, s) < min(q, r) or max(q, r) < min(p, s)):
                        failures.append({"diamond-order": [list(a.word), list(b.word)]})
                if increasing_chain(a, b, o) != chains[inc[0]]:
                    failures.append({"interval": [list(a.word), list(b.word)], "why": "search disagrees"})
    details = {
        "orders-verified": built,
        "orders-on-S4": len(orders),
        "intervals": intervals,
        "chains": chains_seen,
        "diamonds": diamonds,
        "failures": failures[:5],
    }
    return _report(4, "reflection orders and increasing chains", 120, not failures, details)


# -- 5 and 6 ---------------------------------------------------------------------


def _shelling_cases() -> list[ParabolicQuotient]:
    A3, B2 = make_system("A3"), make_system("B2")
    return [ParabolicQuotient(A3, J) for J in ({1}, {2}, {1, 2}, {1, 3}, {2, 3})] + _quotients(B2)


def criterion_5() -> dict:
    """Lexicographic shellings, thinness, ball certificates, boundary containment."""
    rows = []
    failures = []
    for Q in _shelling_cases():
        P = q_poset(Q)
        orders = [build_reflection_order(Q.system, Q.J, "last", f) for f in (0, 1)]
        tally = {"Ball": 0, "Sphere": 0, "Inconclusive": 0}
        for c in P.classes:
            K = projected_complex(c.u, c.w, Q)
            table = ridge_classification(K)
            verdicts = set()
            for o in orders:
                cert = shelling_order(c.u, c.w, Q, o)
                ok, why = verify_shelling(K, cert.facets)
                if not ok or not cert.verify()[0]:
                    failures.append({"J": sorted(Q.J), "u": list(c.u.word), "w": list(c.w.word), "shelling": why})
                verdicts.add(ball_certificate(K, cert))
            if not K.is_pure() or not table.thin:
                failures.append({"J": sorted(Q.J), "u": list(c.u.word), "w": list(c.w.word), "pure": K.is_pure(), "thin": table.thin})
            if table.exterior() and verdicts != {"Ball"}:
                failures.append({"J": sorted(Q.J), "u": list(c.u.word), "w": list(c.w.word), "certificate": sorted(verdicts)})
            for v in verdicts:
                tally[v] += 1
        ok, wit = boundary_containment_check(P, Q)
        if not ok:
            failures.append({"J": sorted(Q.J), "boundary": wit[:3]})
        rows.append({"system": Q.system.type_tag + str(Q.system.rank), "J": sorted(Q.J), "classes": len(P), "certificates": tally})
    return _report(5, "shellings and ball certificates", 120, not failures, {"quotients": rows, "failures": failures[:5]})


def criterion_6() -> dict:
    """Facets biject with maximal P-Bruhat chains via iterated unique lifts."""
    failures = []
    complexes = 0
    for Q in _shelling_cases():
        for c in q_poset(Q).classes:
            complexes += 1
            K = projected_complex(c.u, c.w, Q)
            chains = list(p_chains(c.u, c.w, Q))
            images = {tuple(sorted(Q.coset_of(v) for v in ch)) for ch in chains}
            if len(K.facets) != len(chains) or set(K.facets) != images:
                failures.append({"J": sorted(Q.J), "u": list(c.u.word), "w": list(c.w.word), "facets": len(K.facets), "chains": len(chains)})
                continue
            for ch in chains:
                F = tuple(sorted(Q.coset_of(v) for v in ch))
                if lift_facet(F, c.u, c.w, Q) != ch:
                    failures.append({"J": sorted(Q.J), "u": list(c.u.word), "w": list(c.w.word), "facet": list(F)})
    return _report(6, "facet lifting", 60, not failures, {"complexes": complexes, "failures": failures[:5]})


# -- 7, 8, 9 ---------------------------------------------------------------------


def _grassmannian_classes():
    for n, k in _grassmannian_cases():
        Q = grassmannian_quotient(n, k)
        for c in q_poset(Q).classes:
            yield n, k, c


def criterion_7() -> dict:
    """Initial ideals of projected Richardson ideals equal Stanley-Reisner ideals."""
    Q = grassmannian_quotient(4, 2)
    R, order = bruhat_revlex(Q)
    I = grassmannian_ideal(4, 2, GF(DEFAULT_PRIME))
    gr24 = sorted(repr(m) for m in initial_ideal(buchberger(I, order)).gens)
    ok = gr24 == ["p14*p23"]
    rows = []
    failures = []
    for n, k, c in _grassmannian_classes():
        for refinement in ("sum-lex", "sum-colex"):
            rep = groebner_degeneration_check(c.u, c.w, k, n, refinement, confirm_qq=True)
            if not rep["pass"]:
                failures.append(rep)
        rows.append((n, k))
    per_case = {f"Gr({k},{n})": rows.count((n, k)) for n, k in _grassmannian_cases()}
    details = {"initial-Gr(2,4)": gr24, "classes": per_case, "failures": failures[:3]}
    return _report(7, "Groebner degeneration", 600, ok and not failures, details)


def criterion_8() -> dict:
    """Hilbert functions of projected Richardson ideals match face counts."""
    failures = []
    spot = None
    checked = 0
    for n, k, c in _grassmannian_classes():
        rep = hilbert_comparison(c.u, c.w, k, n, 4)
        checked += 1
        if not rep["pass"]:
            failures.append(rep)
        if (n, k) == (4, 2) and c.u.length == 0 and c.dim == 4:
            spot = [r["algebra"] for r in rep["degrees"]]
    ok = not failures and spot is not None and spot[1] == 6 and spot[2] == 20
    return _report(8, "Hilbert functions", 300, ok, {"classes": checked, "Gr(2,4)": spot, "failures": failures[:3]})


def criterion_9() -> dict:
    """Slice/cone identity for the Bruhat-minimal coordinate on each projected ideal."""
    failures = []
    statuses: dict[str, int] = {}
    for n, k, c in _grassmannian_classes():
        rep = slice_cone_recursion_check(c.u, c.w, k, n)
        statuses[rep["status"]] = statuses.get(rep["status"], 0) + 1
        if not rep["pass"]:
            failures.append(rep)
    return _report(9, "slice and cone", 120, not failures, {"status": statuses, "failures": failures[:3]})


# -- 10 --------------------------------------------------------------------------


def criterion_10() -> dict:
    """Finite-field point oracles."""
    details: dict = {}
    ok = True
    counts = {f"n={n},q={q}": flag_ideal_point_count(n, q) for n, q in ((3, 2), (4, 2))}
    details["flag-counts"] = {k: v["points"] for k, v in counts.items()}
    ok &= details["flag-counts"] == {"n=3,q=2": 21, "n=4,q=2": 315} and all(v["pass"] for v in counts.values())

    A2, A3 = make_system("A2"), make_system("A3")
    pairs = [(u, w) for u in A2.elements for w in A2.elements if A2.bruhat_leq(u, w)]
    big = [(u, w) for u in A3.elements for w in A3.elements if A3.bruhat_leq(u, w)]
    rng = random.Random(0)
    sample = rng.sample(big, 50)
    bad = [
        [list(u.word), list(w.word), q]
        for u, w in pairs + sample
        for q in (2, 3)
        if not richardson_point_check(u, w, q)["pass"]
    ]
    details["richardson"] = {"S3-pairs": len(pairs), "S4-sampled": len(sample), "seed": 0, "failures": bad[:5]}
    ok &= not bad

    strata = [stratification_check(1, 3, 2), stratification_check(2, 4, 3)]
    details["stratification"] = [
        {"k": s["k"], "n": s["n"], "q": s["q"], "points": s["points"], "classes": s["classes"], "pass": s["pass"]}
        for s in strata
    ]
    ok &= [(s["points"], s["classes"]) for s in strata] == [(7, 7), (130, 33)] and all(s["pass"] for s in strata)

    nf2, nf3 = A2.normal_form, A3.normal_form
    sections = [
        hyperplane_section_check(A2.identity, nf2([2, 1]), 1, q) for q in (2, 3)
    ] + [hyperplane_section_check(A3.identity, nf3([2, 1, 3, 2]), 2, q) for q in (2, 3)]
    sections += [hyperplane_section_check(nf2([1]), nf2([1]), 1, q) for q in (2, 3)]
    details["hyperplane-sections"] = [
        {"u": s["u"], "w": s["w"], "q": s["q"], "covers": s["covers"], "points": s["section-points"], "pass": s["pass"]}
        for s in sections
    ]
    ok &= all(s["pass"] for s in sections)

    models = [
        model_image_check(A2.identity, nf2([2]), 1, 2),
        model_image_check(nf2([2]), nf2([2]), 1, 2),
        model_image_check(nf2([1]), nf2([2, 1]), 1, 3),
        model_image_check(A2.identity, A2.longest, 1, 2),
        model_image_check(A3.identity, nf3([2, 1, 3, 2]), 2, 2),
    ]
    details["model-images"] = [
        {"u": m["u"], "w": m["w"], "q": m["q"], "model": m["model"], "pass": m["pass"]} for m in models
    ]
    ok &= all(m["pass"] for m in models)
    ok &= models[0]["closed-image-points"] == models[1]["closed-image-points"] == 1
    return _report(10, "finite-field oracles", 300, ok, details)


CRITERIA: dict[int, Callable[[], dict]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
}


def run(cid: int) -> dict:
    """Run one criterion, timing it; exceptions become failing reports."""
    start = time.perf_counter()
    try:
        report = CRITERIA[cid]()
    except Exception as exc:  # a crash is a verdict, not a runner failure
        report = _report(cid, CRITERIA[cid].__doc__ or "", 0, False, {"error": f"{type(exc).__name__}: {exc}"})
    report["seconds"] = round(time.perf_counter() - start, 2)
    limit = _LIMITS[cid]
    report["limit"] = limit
    report["in-time"] = report["seconds"] < limit
    return report


_LIMITS = {1: 5, 2: 10, 3: 30, 4: 120, 5: 120, 6: 60, 7: 600, 8: 300, 9: 120, 10: 300}


def run_all(ids=None, jobs: int = 1) -> list[dict]:
    """Run criteria, in parallel when ``jobs > 1``; results sorted by id."""
    ids = sorted(ids or CRITERIA)
    if jobs <= 1:
        reports = [run(i) for i in ids]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(run, ids))
    return sorted(reports, key=lambda r: r["id"])


def summary_line(report: dict) -> str:
    verdict = "PASS" if report["pass"] and report["in-time"] else "FAIL"
    return f"[{verdict}] criterion {report['id']:>2}: {report['title']} ({report['seconds']:.2f}s / limit {report['limit']}s)"
