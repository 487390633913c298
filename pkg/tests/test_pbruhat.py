import json
from itertools import chain, combinations

import pytest

from oracles import p_leq_table
from rlab.coxeter import make_system
from rlab.errors import ModelSearchError, NotComparableError
from rlab.parabolic import ParabolicQuotient, left_weak_leq
from rlab.pbruhat import (
    class_rep,
    count_classes_by_equivalence,
    count_triples,
    find_model,
    maximize_model,
    p_chains,
    p_cover,
    p_leq,
    p_pairs,
    q_poset,
)
from rlab.simpcomplex import projected_complex


def all_J(rank):
    return [set(c) for c in chain.from_iterable(combinations(range(1, rank + 1), r) for r in range(rank + 1))]


CASES = [(tag, frozenset(J)) for tag in ("A2", "A3", "B2") for J in all_J(make_system(tag).rank)]


def quotient(tag, J):
    return ParabolicQuotient(make_system(tag), J)


@pytest.fixture
def QA2(A2):
    return ParabolicQuotient(A2, {2})


def test_p_cover_examples(A2, QA2):
    nf = A2.normal_form
    assert p_cover(A2.identity, nf([1]), QA2)
    assert not p_cover(A2.identity, nf([2]), QA2)
    assert not p_cover(nf([1]), A2.longest, QA2)


def test_p_leq_examples(A2, QA2):
    nf = A2.normal_form
    assert p_leq(A2.identity, nf([2, 1]), QA2)
    assert list(p_chains(A2.identity, nf([2, 1]), QA2)) == [(A2.identity, nf([1]), nf([2, 1]))]
    assert not p_leq(A2.identity, nf([2]), QA2)
    assert all(p_leq(u, u, QA2) for u in A2.elements)


@pytest.mark.parametrize("tag,J", CASES, ids=str)
def test_p_leq_matches_brute_force(tag, J):
    Q = quotient(tag, J)
    W = Q.system
    oracle = p_leq_table(W, J)
    for u in W.elements:
        for w in W.elements:
            assert p_leq(u, w, Q) == oracle(u, w)


def test_class_rep_examples(A2, QA2):
    nf = A2.normal_form
    assert class_rep(nf([2]), A2.longest, QA2) == (A2.identity, nf([2, 1]))
    assert class_rep(A2.identity, nf([2, 1]), QA2) == (A2.identity, nf([2, 1]))
    for u in A2.elements:
        uP, u_par = QA2.factorize(u)
        assert class_rep(u, u, QA2) == (u * u_par.inverse(), uP)
    with pytest.raises(NotComparableError):
        class_rep(A2.identity, nf([2]), QA2)


def test_q_poset_examples(A2):
    assert len(q_poset(ParabolicQuotient(A2, {2}))) == 7
    assert len(q_poset(ParabolicQuotient(A2, {1, 2}))) == 1
    bruhat_pairs = sum(1 for u in A2.elements for w in A2.elements if A2.bruhat_leq(u, w))
    assert len(q_poset(ParabolicQuotient(A2, set()))) == bruhat_pairs


@pytest.mark.parametrize("tag,J", CASES, ids=str)
def test_class_counts_and_triples(tag, J):
    Q = quotient(tag, J)
    W = Q.system
    P = q_poset(Q)
    assert len(P) == count_classes_by_equivalence(Q) == count_triples(Q)
    for c in P.classes:
        up, w, x = c.triple
        assert Q.is_max_rep(up) and Q.is_min_rep(w) and Q.in_subgroup(x)
        assert up * x == c.u and W.bruhat_leq(c.u, c.w) and p_leq(c.u, c.w, Q)
        assert c.dim == c.w.length - c.u.length


@pytest.mark.parametrize("tag,J", CASES, ids=str)
def test_closure_order_is_graded_partial_order(tag, J):
    P = q_poset(quotient(tag, J))
    n = len(P)
    for i in range(n):
        assert P.leq(i, i)
        for j in range(n):
            if i != j and P.leq(i, j):
                assert not P.leq(j, i)
                assert P.classes[i].dim < P.classes[j].dim
                for k in range(n):
                    if P.leq(j, k):
                        assert P.leq(i, k)
    for i, j in P.cover_pairs():
        assert P.classes[j].dim == P.classes[i].dim + 1
    assert P.is_graded()


@pytest.mark.parametrize("tag,J", [c for c in CASES if c[0] != "A2"], ids=str)
def test_closure_order_matches_subcomplexes(tag, J):
    Q = quotient(tag, J)
    P = q_poset(Q)
    complexes = [projected_complex(c.u, c.w, Q) for c in P.classes]
    for i in range(len(P)):
        for j in range(len(P)):
            assert P.leq(i, j) == complexes[i].is_subcomplex_of(complexes[j]), (i, j)


def test_q_poset_json(A2, QA2):
    data = json.loads(json.dumps(q_poset(QA2).to_json()))
    assert len(data["classes"]) == 7
    assert {"u-word", "w-word", "dim", "triple"} <= set(data["classes"][0])
    assert all(len(pair) == 2 for pair in data["order"])


# -- lemmas on P-Bruhat order, exhaustive on S4 ---------------------------------------


@pytest.mark.parametrize("J", all_J(3), ids=str)
def test_parabolic_parts_go_down_in_left_weak_order(A3, J):
    Q = ParabolicQuotient(A3, J)
    for v in A3.elements:
        for w in A3.covers(v, "up"):
            if p_cover(v, w, Q):
                wp, vp = Q.factorize(w)[1], Q.factorize(v)[1]
                assert left_weak_leq(wp, vp)
                assert A3.descents(wp, "right") <= A3.descents(vp, "right")


@pytest.mark.parametrize("J", all_J(3), ids=str)
def test_length_additive_shifts_preserve_p_order(A3, J):
    Q = ParabolicQuotient(A3, J)
    for z in Q.subgroup:
        for u in A3.elements:
            if (u * z).length != u.length + z.length:
                continue
            for v in A3.elements:
                if (v * z).length == v.length + z.length:
                    assert p_leq(u * z, v * z, Q) == p_leq(u, v, Q)


@pytest.mark.parametrize("J", all_J(3), ids=str)
def test_shift_to_minimal_representative(A3, J):
    Q = ParabolicQuotient(A3, J)
    for u, w in p_pairs(Q):
        wP, w_par = Q.factorize(w)
        assert p_leq(u * w_par.inverse(), wP, Q)


@pytest.mark.parametrize("J", all_J(3), ids=str)
def test_below_a_minimal_representative_bruhat_is_p_bruhat(A3, J):
    Q = ParabolicQuotient(A3, J)
    for w in Q.min_reps:
        for u in A3.elements:
            if A3.bruhat_leq(u, w):
                assert p_leq(u, w, Q)


# -- Richardson models ------------------------------------------------------------------


def test_maximize_model_examples(A2, QA2):
    nf = A2.normal_form
    s2 = nf([2])
    assert maximize_model(A2.identity, s2, QA2) == (s2, s2)
    assert maximize_model(A2.identity, A2.longest, QA2) == (s2, A2.longest)
    u, w = nf([1, 2]), A2.longest
    assert QA2.is_max_rep(u) and maximize_model(u, w, QA2) == (u, w)
    with pytest.raises(NotComparableError):
        maximize_model(nf([1]), s2, QA2)


def test_find_model_examples(A2, QA2):
    nf = A2.normal_form
    s1, s2 = nf([1]), nf([2])
    assert find_model(s1, nf([2, 1]), QA2) == (s1, nf([2, 1]))
    assert find_model(A2.identity, s2, QA2) == (s2, s2)
    assert find_model(A2.identity, A2.longest, QA2) == (s2, A2.longest)


@pytest.mark.parametrize("tag,J", CASES, ids=str)
def test_find_model_reaches_p_bruhat_pairs(tag, J):
    Q = quotient(tag, J)
    W = Q.system
    for u in W.elements:
        for w in W.elements:
            if not W.bruhat_leq(u, w):
                continue
            a, b = find_model(u, w, Q)
            assert p_leq(a, b, Q)
            gap, new = w.length - u.length, b.length - a.length
            if p_leq(u, w, Q):
                assert (a, b) == (u, w)
            else:
                assert new < gap


def test_model_search_error_is_an_rlab_error():
    from rlab.errors import RlabError

    assert issubclass(ModelSearchError, RlabError)
