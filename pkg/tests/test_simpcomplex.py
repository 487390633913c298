from itertools import chain, combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rlab.coxeter import make_system
from rlab.errors import ComplexError, ReflectionOrderError
from rlab.parabolic import ParabolicQuotient
from rlab.pbruhat import class_rep, p_chains, p_pairs, q_poset
from rlab.reforder import build_reflection_order
from rlab.simpcomplex import (
    SimplicialComplex,
    ball_certificate,
    boundary_containment_check,
    certificate_for,
    direct_image_complex,
    lift_facet,
    projected_complex,
    ridge_classification,
    shelling_order,
    sr_hilbert,
    verify_shelling,
)


def all_J(rank):
    return [set(c) for c in chain.from_iterable(combinations(range(1, rank + 1), r) for r in range(rank + 1))]


CASES = [(tag, frozenset(J)) for tag in ("A2", "A3", "B2") for J in all_J(make_system(tag).rank)]


@pytest.fixture
def gr24(A3):
    Q = ParabolicQuotient(A3, {1, 3})
    return Q, A3.identity, A3.normal_form([2, 1, 3, 2])


def labels(Q, F):
    return {Q.label(c) for c in F}


# -- projected complexes -----------------------------------------------------------


def test_projected_examples(A2, gr24):
    Q2 = ParabolicQuotient(A2, {2})
    K = projected_complex(A2.identity, A2.normal_form([2, 1]), Q2)
    assert K.facets == ((0, 1, 2),)
    Q, u, w = gr24
    K = projected_complex(u, w, Q)
    assert [labels(Q, F) for F in K.facets] == [{"12", "13", "14", "24", "34"}, {"12", "13", "23", "24", "34"}]
    s1 = A2.normal_form([1])
    assert projected_complex(s1, s1, Q2).facets == ((Q2.coset_of(s1),),)


@pytest.mark.parametrize("tag,J", CASES, ids=str)
def test_projected_complexes_exhaustively(tag, J):
    W = make_system(tag)
    Q = ParabolicQuotient(W, J)
    for u in W.elements:
        for w in W.elements:
            if not W.bruhat_leq(u, w):
                continue
            K = projected_complex(u, w, Q)
            assert K == direct_image_complex(u, w, Q)
            assert K.is_pure()
    for u, w in p_pairs(Q):
        K = projected_complex(u, w, Q)
        assert all(len(F) == w.length - u.length + 1 for F in K.facets)
        assert all(Q.coset_of(u) in F for F in K.facets)
        # equivalent pairs have the same complex
        assert K == projected_complex(*class_rep(u, w, Q), Q)


def test_lift_examples(A2, gr24):
    Q2 = ParabolicQuotient(A2, {2})
    nf = A2.normal_form
    assert lift_facet((0, 1, 2), A2.identity, nf([2, 1]), Q2) == (A2.identity, nf([1]), nf([2, 1]))
    Q, u, w = gr24
    F = tuple(sorted(Q.cid_from_label(s) for s in ("12", "13", "14", "24", "34")))
    c = lift_facet(F, u, w, Q)
    assert [Q.label(Q.coset_of(v)) for v in c] == ["12", "13", "14", "24", "34"]
    assert c[0] == u and c[-1] == w
    s1 = nf([1])
    assert lift_facet((Q2.coset_of(s1),), s1, s1, Q2) == (s1,)
    with pytest.raises(ComplexError):
        lift_facet((0, 1), A2.identity, nf([2, 1]), Q2)


@pytest.mark.parametrize("tag,J", CASES, ids=str)
def test_lift_is_inverse_to_projection(tag, J):
    W = make_system(tag)
    Q = ParabolicQuotient(W, J)
    for c in q_poset(Q).classes:
        K = projected_complex(c.u, c.w, Q)
        chains = list(p_chains(c.u, c.w, Q))
        assert len(chains) == len(K.facets)
        for ch in chains:
            F = tuple(sorted(Q.coset_of(v) for v in ch))
            assert lift_facet(F, c.u, c.w, Q) == ch
        for F in K.facets:
            assert tuple(sorted(Q.coset_of(v) for v in lift_facet(F, c.u, c.w, Q))) == F


# -- shellings ---------------------------------------------------------------------------


def test_shelling_examples(A3, gr24):
    Q, u, w = gr24
    order = build_reflection_order(A3, Q.J, "last")
    cert = shelling_order(u, w, Q, order)
    assert len(cert.facets) == 2 and cert.verify() == (True, None)
    K = projected_complex(u, w, Q)
    assert verify_shelling(K, cert.facets) == (True, None)
    single = SimplicialComplex([[0, 1, 2]])
    assert verify_shelling(single, single.facets) == (True, None)
    assert certificate_for(single, single.facets).verify() == (True, None)


def test_shelling_rejects_first_placement(A3, gr24):
    Q, u, w = gr24
    with pytest.raises(ReflectionOrderError):
        shelling_order(u, w, Q, build_reflection_order(A3, Q.J, "first"))
    with pytest.raises(ReflectionOrderError):
        shelling_order(u, w, Q, build_reflection_order(A3, {1}, "last"))


def test_first_placement_lex_order_is_not_always_a_shelling(A3):
    """Experiment: with the parabolic reflections first, the lex order can fail."""
    from rlab.simpcomplex import lex_order_facets, normalize_pair

    Q = ParabolicQuotient(A3, {2})
    order = build_reflection_order(A3, Q.J, "first")
    failures = 0
    for c in q_poset(Q).classes:
        K = projected_complex(*normalize_pair(c.u, c.w, Q), Q)
        failures += not certificate_for(K, lex_order_facets(c.u, c.w, Q, order)).verify()[0]
    assert failures > 0


def test_verify_shelling_synthetic():
    K = SimplicialComplex([[0, 1, 2], [2, 3, 4]])
    ok, why = verify_shelling(K, [[0, 1, 2], [2, 3, 4]])
    assert not ok and why["position"] == 2
    with pytest.raises(ComplexError):
        verify_shelling(SimplicialComplex([[0, 1, 2], [3, 4]]), [[0, 1, 2], [3, 4]])
    ok, why = verify_shelling(K, [[0, 1, 2]])
    assert not ok


def test_certificate_detects_bad_order():
    # a path of three edges shelled from both ends first is not a shelling
    K = SimplicialComplex([[0, 1], [1, 2], [2, 3]])
    assert certificate_for(K, [[0, 1], [1, 2], [2, 3]]).verify()[0]
    assert not certificate_for(K, [[0, 1], [2, 3], [1, 2]]).verify()[0]


@pytest.mark.parametrize("tag,J", CASES, ids=str)
def test_lex_order_shells_every_class(tag, J):
    W = make_system(tag)
    Q = ParabolicQuotient(W, J)
    orders = [build_reflection_order(W, J, "last", f) for f in (0, 1)]
    for c in q_poset(Q).classes:
        K = projected_complex(c.u, c.w, Q)
        table = ridge_classification(K)
        assert table.thin
        for order in orders:
            cert = shelling_order(c.u, c.w, Q, order)
            assert cert.verify() == (True, None)
            assert ball_certificate(K, cert) == ("Ball" if table.exterior() else "Sphere")


# -- ridges and certificates --------------------------------------------------------------


def test_ridge_examples(gr24):
    Q, u, w = gr24
    table = ridge_classification(projected_complex(u, w, Q))
    interior = [r for r in table.ridges if table.tag(r) == "interior"]
    assert [labels(Q, r) for r in interior] == [{"12", "13", "24", "34"}]
    assert all(table.tag(r) == "exterior" for r in table.ridges if r not in interior)
    single = ridge_classification(SimplicialComplex([[0, 1, 2]]))
    assert all(single.tag(r) == "exterior" for r in single.ridges)


def test_thinness_witness():
    table = ridge_classification(SimplicialComplex([[0, 1, 2], [0, 1, 3], [0, 1, 4]]))
    assert not table.thin and table.witness == (0, 1)


def test_ball_examples(A3, gr24):
    Q, u, w = gr24
    K = projected_complex(u, w, Q)
    cert = shelling_order(u, w, Q, build_reflection_order(A3, Q.J, "last"))
    assert ball_certificate(K, cert) == "Ball"
    simplex = SimplicialComplex([[0, 1, 2, 3]])
    assert ball_certificate(simplex, certificate_for(simplex, simplex.facets)) == "Ball"
    tri = SimplicialComplex([[0, 1], [1, 2], [0, 2]])
    assert ball_certificate(tri, certificate_for(tri, tri.facets)) == "Sphere"


def test_ball_certificate_is_inconclusive_off_hypotheses():
    K = SimplicialComplex([[0, 1], [2, 3]])
    assert ball_certificate(K, certificate_for(K, K.facets)) == "Inconclusive"
    fan = SimplicialComplex([[0, 1], [0, 2], [0, 3]])
    assert ball_certificate(fan, certificate_for(fan, fan.facets)) == "Inconclusive"


# -- face counts --------------------------------------------------------------------------


def test_sr_hilbert_examples(gr24):
    Q, u, w = gr24
    K = projected_complex(u, w, Q)
    assert [sr_hilbert(K, d) for d in (0, 1, 2)] == [1, 6, 20]
    assert sr_hilbert(SimplicialComplex([[5]]), 0) == 1


def count_supported_monomials(K, d):
    verts = K.vertices
    total = 0
    for combo in _multisets(verts, d):
        if K.contains_face(set(combo)):
            total += 1
    return total


def _multisets(items, d):
    from itertools import combinations_with_replacement

    return combinations_with_replacement(items, d)


complexes = st.lists(st.frozensets(st.integers(0, 5), min_size=1, max_size=4), min_size=1, max_size=5)


@settings(max_examples=60, deadline=None)
@given(complexes, st.integers(0, 4))
def test_sr_hilbert_counts_monomials_on_faces(facets, d):
    K = SimplicialComplex(facets)
    assert sr_hilbert(K, d) == count_supported_monomials(K, d)


@settings(max_examples=60, deadline=None)
@given(complexes)
def test_minimal_non_faces_are_minimal(facets):
    K = SimplicialComplex(facets)
    for m in K.minimal_non_faces():
        assert not K.contains_face(m)
        assert all(K.contains_face(m[:i] + m[i + 1 :]) for i in range(len(m)))


def test_boundary_containment_examples(A2, A3):
    Q2 = ParabolicQuotient(A2, {2})
    ok, wit = boundary_containment_check(q_poset(Q2), Q2)
    assert ok and wit == []
    Q = ParabolicQuotient(A3, {1, 3})
    assert boundary_containment_check(q_poset(Q), Q)[0]


def test_complex_json():
    K = SimplicialComplex([[0, 1], [1, 2]], vertices=[0, 1, 2, 3])
    assert K.to_json() == {"vertices": [0, 1, 2, 3], "facets": [[0, 1], [1, 2]]}
