from itertools import chain, combinations

import pytest

from oracles import all_chains
from rlab.coxeter import make_system
from rlab.errors import NotComparableError, ReflectionOrderError
from rlab.parabolic import ParabolicQuotient, unique_lift
from rlab.pbruhat import p_cover
from rlab.reforder import (
    ReflectionOrder,
    build_reflection_order,
    chain_sort_key,
    increasing_chain,
    reflection_sequence,
    verify_reflection_order,
)


def all_J(rank):
    return [set(c) for c in chain.from_iterable(combinations(range(1, rank + 1), r) for r in range(rank + 1))]


def test_build_examples(A2):
    nf = A2.normal_form
    assert build_reflection_order(A2, {2}, "last").reflections == (nf([1]), nf([1, 2, 1]), nf([2]))
    assert build_reflection_order(A2, {2}, "first").reflections == (nf([2]), nf([1, 2, 1]), nf([1]))


def test_commuting_reflections_are_unconstrained(A3):
    s1, s3 = A3.s(1), A3.s(3)
    rest = [t for t, _ in A3.reflections_with_roots() if t not in (s1, s3)]
    base = build_reflection_order(A3, {1, 3}, "last")
    ranked = [t for t in base.reflections if t not in (s1, s3)]
    for pair in ((s1, s3), (s3, s1)):
        order = ReflectionOrder(A3, tuple(ranked) + pair, "last", frozenset({1, 3}))
        assert verify_reflection_order(order) == (True, None)
    assert len(rest) == 4


def test_verify_examples(A2):
    nf = A2.normal_form
    good = ReflectionOrder(A2, (nf([1]), nf([1, 2, 1]), nf([2])))
    bad = ReflectionOrder(A2, (nf([1]), nf([2]), nf([1, 2, 1])))
    assert verify_reflection_order(good) == (True, None)
    ok, why = verify_reflection_order(bad)
    assert not ok and "plane" in why
    A1 = make_system("A1")
    assert verify_reflection_order(ReflectionOrder(A1, (A1.s(1),)))[0]


def test_placement_violation_is_reported(A2):
    nf = A2.normal_form
    order = ReflectionOrder(A2, (nf([2]), nf([1, 2, 1]), nf([1])), "last", frozenset({2}))
    ok, why = verify_reflection_order(order)
    assert not ok and why["placement"] == "last"


def test_rejects_bad_arguments(A2):
    with pytest.raises(ReflectionOrderError):
        build_reflection_order(A2, {2}, "middle")
    with pytest.raises(ReflectionOrderError):
        ReflectionOrder(A2, (A2.s(1),))


@pytest.mark.parametrize("tag", ["A2", "A3", "B2", "C3", "G2", "A4", "D4"])
def test_built_orders_are_valid(tag):
    W = make_system(tag)
    for J in all_J(W.rank):
        for placement in ("first", "last"):
            for functional in (0, 1):
                order = build_reflection_order(W, J, placement, functional)
                assert verify_reflection_order(order) == (True, None)


def test_increasing_chain_examples(A2):
    nf = A2.normal_form
    order = build_reflection_order(A2, {2}, "last")
    c = increasing_chain(A2.identity, nf([2, 1]), order)
    assert c == (A2.identity, nf([1]), nf([2, 1]))
    assert reflection_sequence(c) == (nf([1]), nf([1, 2, 1]))
    assert increasing_chain(nf([1]), nf([1]), order) == (nf([1]),)
    assert increasing_chain(A2.identity, nf([1]), order) == (A2.identity, nf([1]))
    with pytest.raises(NotComparableError):
        increasing_chain(nf([1]), nf([2]), order)


@pytest.mark.parametrize("tag", ["A3", "B2"])
def test_unique_increasing_chain_is_lex_minimal(tag):
    W = make_system(tag)
    orders = [build_reflection_order(W, J, p, f) for J in all_J(W.rank) for p in ("first", "last") for f in (0, 1)]
    for a in W.elements:
        for b in W.elements:
            if not W.bruhat_leq(a, b):
                continue
            chains = all_chains(W, a, b, W.bruhat_leq)
            for order in orders:
                keys = [chain_sort_key(c, order) for c in chains]
                inc = [c for c, k in zip(chains, keys) if all(x < y for x, y in zip(k, k[1:]))]
                assert len(inc) == 1
                assert chain_sort_key(inc[0], order) == min(keys)
                assert increasing_chain(a, b, order) == inc[0]


@pytest.mark.parametrize("placement", ["first", "last"])
def test_diamonds(A3, placement):
    for J in all_J(3):
        order = build_reflection_order(A3, J, placement)
        for a in A3.elements:
            for b in A3.elements:
                if b.length != a.length + 2 or not A3.bruhat_leq(a, b):
                    continue
                chains = all_chains(A3, a, b, A3.bruhat_leq)
                assert len(chains) == 2
                (p, q), (r, s) = (chain_sort_key(c, order) for c in chains)
                assert max(p, s) < min(q, r) or max(q, r) < min(p, s)


def test_increasing_chain_to_unique_lift_avoids_parabolic_reflections(A3):
    for J in all_J(3):
        Q = ParabolicQuotient(A3, J)
        order = build_reflection_order(A3, J, "last")
        for x in A3.elements:
            for cid in range(Q.n_cosets):
                z = unique_lift(x, cid, Q)
                if z is None:
                    continue
                c = increasing_chain(x, z, order)
                assert not any(Q.in_subgroup(t) for t in reflection_sequence(c))
                assert all(p_cover(a, b, Q) for a, b in zip(c, c[1:]))


def test_order_json(A2):
    assert build_reflection_order(A2, {2}, "last").to_json() == [[1], [1, 2, 1], [2]]
