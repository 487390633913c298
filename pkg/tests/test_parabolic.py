import json
from itertools import chain, combinations

import pytest

from oracles import coset_map, subgroup
from rlab.coxeter import make_system
from rlab.parabolic import (
    ParabolicQuotient,
    coset_reps,
    demazure,
    demazure_word,
    factorize,
    left_weak_leq,
    unique_lift,
)


def all_J(rank):
    return [set(c) for c in chain.from_iterable(combinations(range(1, rank + 1), r) for r in range(rank + 1))]


def quotients(tags=("A2", "A3", "B2")):
    for tag in tags:
        W = make_system(tag)
        for J in all_J(W.rank):
            yield ParabolicQuotient(W, J)


def test_factorize_examples(A2):
    Q = ParabolicQuotient(A2, {2})
    nf = A2.normal_form
    assert factorize(A2.longest, Q) == (nf([2, 1]), nf([2]))
    assert factorize(nf([2]), Q) == (A2.identity, nf([2]))
    assert factorize(nf([1]), Q) == (nf([1]), A2.identity)


def test_coset_reps_examples(A2):
    Q = ParabolicQuotient(A2, {2})
    nf = A2.normal_form
    assert coset_reps(Q.coset_of(nf([1])), Q) == (nf([1]), nf([1, 2]))
    assert coset_reps(Q.coset_of(A2.identity), Q) == (A2.identity, Q.w0P)
    assert coset_reps(Q.coset_of(A2.longest), Q) == (nf([2, 1]), A2.longest)


@pytest.mark.parametrize("Q", list(quotients()), ids=lambda Q: f"{Q.system.type_tag}{Q.system.rank}-{sorted(Q.J)}")
def test_quotient_structure(Q):
    W = Q.system
    oracle = coset_map(W, Q.J)
    H = subgroup(W, Q.J)
    assert set(Q.subgroup) == H
    assert len(H) * Q.n_cosets == W.order
    for w in W.elements:
        assert set(Q.cosets[Q.coset_of(w)]) == oracle[w]
        m, x = Q.factorize(w)
        assert m * x == w and x in H and m.length + x.length == w.length
        assert not (W.descents(m, "right") & Q.J)
    for cid in range(Q.n_cosets):
        lo, hi = Q.coset_reps(cid)
        assert hi == lo * Q.w0P and hi.length == lo.length + Q.w0P.length
        assert all(W.bruhat_leq(lo, z) and W.bruhat_leq(z, hi) for z in Q.cosets[cid])
    # coset ids extend Bruhat order on minimal representatives
    for a in range(Q.n_cosets):
        for b in range(Q.n_cosets):
            if W.bruhat_leq(Q.min_reps[a], Q.min_reps[b]):
                assert a <= b


def test_grassmannian_labels(A3):
    Q = ParabolicQuotient(A3, {1, 3})
    assert Q.grassmannian_k == 2
    assert [Q.label(c) for c in range(Q.n_cosets)] == ["12", "13", "14", "23", "24", "34"]
    assert Q.cid_from_label("24") == 4
    for c in range(Q.n_cosets):
        w = Q.min_reps[c]
        assert Q.subset(c) == tuple(sorted(w.one_line()[:2]))


def test_quotient_json(A2):
    data = json.loads(json.dumps(ParabolicQuotient(A2, {2}).to_json()))
    assert data["J"] == [2]
    assert [c["min-word"] for c in data["cosets"]] == [[], [1], [2, 1]]


def test_rejects_out_of_range_generator(A2):
    with pytest.raises(ValueError):
        ParabolicQuotient(A2, {3})


# -- Demazure products --------------------------------------------------------------


def test_demazure_examples(A2):
    nf = A2.normal_form
    s1, s2 = nf([1]), nf([2])
    assert demazure(s1, s1, "up") == s1
    assert demazure(s1, s2, "up") == nf([1, 2])
    assert demazure(nf([1, 2]), s2, "down") == s1


def reduced_words(W, w):
    if w.length == 0:
        return [()]
    out = []
    for i in W.descents(w, "right"):
        out += [r + (i,) for r in reduced_words(W, w * W.s(i))]
    return out


def test_demazure_is_word_independent_and_associative(A3):
    els = A3.elements
    for w in els:
        for v in els:
            results = {demazure_word(w, r, "up") for r in reduced_words(A3, v)}
            assert len(results) == 1
            down = {demazure_word(w, r, "down") for r in reduced_words(A3, v)}
            assert len(down) == 1
            if (w * v).length == w.length + v.length:
                assert demazure(w, v, "up") == w * v
    for a in els:
        for b in els:
            ab = demazure(a, b)
            for c in els[::5]:
                assert demazure(ab, c) == demazure(a, demazure(b, c))


# -- coset lemmas ------------------------------------------------------------------


@pytest.mark.parametrize("J", all_J(3), ids=str)
def test_common_upper_bound_in_coset(A3, J):
    Q = ParabolicQuotient(A3, J)
    for cid, coset in enumerate(Q.cosets):
        lo = Q.min_reps[cid]
        for x in coset:
            for y in coset:
                xp, yp = Q.factorize(x)[1], Q.factorize(y)[1]
                z = lo * demazure(xp, yp)
                assert Q.coset_of(z) == cid
                assert A3.bruhat_leq(x, z) and A3.bruhat_leq(y, z)


@pytest.mark.parametrize("J", all_J(3), ids=str)
def test_interval_between_coset_mates_stays_in_coset(A3, J):
    Q = ParabolicQuotient(A3, J)
    for coset in Q.cosets:
        for x in coset:
            for y in coset:
                if A3.bruhat_leq(x, y):
                    for z in A3.interval(x, y):
                        assert Q.coset_of(z) == Q.coset_of(x)


# -- unique lift ---------------------------------------------------------------------


def test_unique_lift_examples(A2):
    from rlab.pbruhat import p_leq

    Q = ParabolicQuotient(A2, {2})
    nf = A2.normal_form
    s1 = nf([1])
    top = Q.coset_of(A2.longest)
    assert set(Q.cosets[top]) == {nf([2, 1]), A2.longest}
    assert unique_lift(s1, top, Q) == nf([2, 1])
    assert p_leq(s1, nf([2, 1]), Q)
    assert unique_lift(s1, Q.coset_of(A2.identity), Q) is None
    for cid in range(Q.n_cosets):
        assert unique_lift(A2.identity, cid, Q) == Q.min_reps[cid]


@pytest.mark.parametrize("tag", ["A3", "B2"])
def test_unique_lift_is_the_unique_minimum(tag):
    W = make_system(tag)
    for J in all_J(W.rank):
        Q = ParabolicQuotient(W, J)
        for x in W.elements:
            for cid, coset in enumerate(Q.cosets):
                above = [z for z in coset if W.bruhat_leq(x, z)]
                minimal = [z for z in above if not any(y != z and W.bruhat_leq(y, z) for y in above)]
                z = unique_lift(x, cid, Q)
                assert (z is None) == (not above)
                if above:
                    assert minimal == [z]


def test_left_weak_order(A2):
    nf = A2.normal_form
    assert left_weak_leq(nf([2]), nf([1, 2]))
    assert not left_weak_leq(nf([1]), nf([1, 2]))
    assert all(left_weak_leq(A2.identity, w) and left_weak_leq(w, A2.longest) for w in A2.elements)
