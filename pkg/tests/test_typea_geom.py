import pytest

from oracles import gale_leq
from rlab.coxeter import make_system
from rlab.errors import DegreeBoundExceeded, NotComparableError
from rlab.polyalg import GF, buchberger, bruhat_revlex, hilbert_function, initial_ideal
from rlab.pbruhat import q_poset
from rlab.typea_geom import (
    FlagRing,
    PointOracle,
    flag_ideal,
    flag_ideal_point_count,
    flag_ideal_random_check,
    gaussian_binomial,
    grassmannian_ideal,
    grassmannian_quotient,
    groebner_degeneration_check,
    hilbert_comparison,
    hyperplane_section_check,
    model_image_check,
    projected_richardson_ideal,
    q_factorial,
    richardson_ideal,
    richardson_point_check,
    slice_cone_recursion_check,
    stratification_check,
    vanishing_subsets,
)


def names(I):
    return sorted(repr(g) for g in I.gens)


def signed_terms(f):
    """Set of (sign, monomial) pairs, independent of the printed term order."""
    toks = repr(f).replace(" - ", " + -").split(" + ")
    return {("-", t[1:]) if t.startswith("-") else ("+", t) for t in toks}


@pytest.fixture(scope="module")
def W3():
    return make_system("A2")


@pytest.fixture(scope="module")
def W4():
    return make_system("A3")


# -- rings and ideals ------------------------------------------------------------------


def test_flag_ring_layout():
    FR = FlagRing(4)
    assert FR.step_names(2) == ["p12", "p13", "p14", "p23", "p24", "p34"]
    assert len(FR.subsets) == 14
    # componentwise order on subsets is Bruhat order on minimal representatives
    Q = grassmannian_quotient(4, 2)
    W = Q.system
    for a in range(Q.n_cosets):
        for b in range(Q.n_cosets):
            assert gale_leq(Q.subset(a), Q.subset(b)) == W.bruhat_leq(Q.min_reps[a], Q.min_reps[b])


def test_flag_ideal_examples():
    (g,) = flag_ideal(3).gens
    assert signed_terms(g) == {("+", "p3*p12"), ("-", "p2*p13"), ("+", "p1*p23")}
    assert grassmannian_ideal(4, 1).gens == ()
    assert grassmannian_ideal(3, 2).gens == ()
    (q,) = grassmannian_ideal(4, 2).gens
    assert {t for _, t in signed_terms(q)} == {"p12*p34", "p13*p24", "p14*p23"}
    assert len(flag_ideal(4).gens) == 10
    with pytest.raises(ValueError):
        flag_ideal(6)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_flag_ideal_vanishes_at_random_points(n):
    rep = flag_ideal_random_check(n, points=40, seed=1)
    assert rep["pass"] and rep["seed"] == 1


@pytest.mark.parametrize("n,q,count", [(3, 2, 21), (4, 2, 315), (3, 3, 52)])
def test_flag_point_counts(n, q, count):
    assert q_factorial(n, q) == count
    rep = flag_ideal_point_count(n, q)
    assert rep["points"] == count and rep["pass"]


def test_flag_counts_by_enumeration():
    for n, q in ((3, 2), (3, 3), (4, 2)):
        assert len(PointOracle(n, q).flags) == q_factorial(n, q)
    assert gaussian_binomial(4, 2, 3) == 130


def test_positions_of_permutation_flags(W4):
    orc = PointOracle(4, 2)
    for w in W4.elements:
        line = w.one_line()
        M = tuple(tuple(1 if c == line[r] - 1 else 0 for c in range(4)) for r in range(4))
        assert orc.positions(M) == (w, w)
        assert orc.in_richardson(M, w, w, open_=True)


def test_richardson_examples(W3):
    s1 = W3.s(1)
    I = richardson_ideal(W3.identity, s1)
    assert names(I) == sorted(names(flag_ideal(3)) + ["p3", "p13", "p23"])
    assert richardson_point_check(W3.identity, s1, 2)["points"] == 3
    for u in W3.elements:
        zeros = vanishing_subsets(u, u, 3)
        assert len(zeros) == 6 - 2
        assert richardson_point_check(u, u, 3)["points"] == 1
    assert names(richardson_ideal(W3.identity, W3.longest)) == names(flag_ideal(3))
    with pytest.raises(NotComparableError):
        richardson_ideal(s1, W3.s(2))


def test_richardson_point_sets_on_s3(W3):
    for u in W3.elements:
        for w in W3.elements:
            if W3.bruhat_leq(u, w):
                for q in (2, 3):
                    assert richardson_point_check(u, w, q)["pass"]


def test_richardson_point_sets_on_sampled_s4_pairs(W4):
    import random

    pairs = [(u, w) for u in W4.elements for w in W4.elements if W4.bruhat_leq(u, w)]
    for u, w in random.Random(7).sample(pairs, 12):
        assert richardson_point_check(u, w, 2)["pass"]


# -- projected ideals ------------------------------------------------------------------------


def test_projected_examples(W3, W4):
    nf = W3.normal_form
    assert names(projected_richardson_ideal(nf([1]), nf([2, 1]), 1)) == ["p1"]
    assert names(projected_richardson_ideal(nf([2]), nf([2]), 1)) == ["p2", "p3"]
    full = projected_richardson_ideal(W4.identity, W4.normal_form([2, 1, 3, 2]), 2)
    assert names(full) == names(grassmannian_ideal(4, 2, GF()))
    assert projected_richardson_ideal(W3.identity, nf([2, 1]), 1).gens == ()


def test_projection_is_the_point_image(W4):
    """Zeros of the projected ideal over F_2 are exactly the images of Richardson points."""
    from rlab.fq import FiniteField
    from rlab.typea_geom import _projective_points, _vanishes

    F = FiniteField(2)
    orc = PointOracle(4, 2)
    Q = grassmannian_quotient(4, 2)
    for c in q_poset(Q).classes:
        I = projected_richardson_ideal(c.u, c.w, 2, 4, GF(2))
        zeros = {pt for pt in _projective_points(F, 6) if _vanishes(F, I, pt)}
        image = {orc.projected(M, 2) for M in orc.flags if orc.in_richardson(M, c.u, c.w)}
        assert zeros == image


def test_degree_bound_failure_is_explicit(W4):
    with pytest.raises(DegreeBoundExceeded):
        projected_richardson_ideal(W4.identity, W4.longest, 2, 4, GF(), degree_bound=1)


# -- degeneration and Hilbert functions ------------------------------------------------------


def test_degeneration_on_projective_plane():
    Q = grassmannian_quotient(3, 1)
    for c in q_poset(Q).classes:
        rep = groebner_degeneration_check(c.u, c.w, 1, 3)
        assert rep["verdict"] == "EQUAL" and rep["QQ"]["verdict"] == "EQUAL"


def test_degeneration_examples(W4):
    rep = groebner_degeneration_check(W4.identity, W4.normal_form([2, 1, 3, 2]), 2, 4)
    assert rep["GF(32003)"]["initial"] == rep["GF(32003)"]["sr"] == ["p14*p23"]
    u = W4.normal_form([2, 1, 3, 2])
    point = groebner_degeneration_check(u, u, 2, 4)
    assert point["pass"] and len(point["QQ"]["initial"]) == 5


@pytest.mark.parametrize("k", [1, 2, 3])
def test_degeneration_on_every_gr4_class_both_refinements(k):
    Q = grassmannian_quotient(4, k)
    for c in q_poset(Q).classes:
        for refinement in ("sum-lex", "sum-colex"):
            assert groebner_degeneration_check(c.u, c.w, k, 4, refinement)["pass"]


def test_hilbert_examples(W3, W4):
    rep = hilbert_comparison(W4.identity, W4.normal_form([2, 1, 3, 2]), 2, 4, 2)
    assert [r["algebra"] for r in rep["degrees"]] == [1, 6, 20]
    nf = W3.normal_form
    point = hilbert_comparison(nf([2, 1]), nf([2, 1]), 1, 3)
    assert [r["algebra"] for r in point["degrees"]] == [1, 1, 1, 1, 1]
    line = hilbert_comparison(nf([1]), nf([2, 1]), 1, 3)
    assert [r["faces"] for r in line["degrees"]] == [d + 1 for d in range(5)]
    assert line["pass"]


def test_initial_ideal_preserves_hilbert_function():
    Q = grassmannian_quotient(4, 2)
    _, order = bruhat_revlex(Q)
    for c in q_poset(Q).classes:
        I = projected_richardson_ideal(c.u, c.w, 2)
        ini = initial_ideal(buchberger(I, order))
        assert [hilbert_function(I, d) for d in range(4)] == [hilbert_function(ini, d) for d in range(4)]


def test_slice_cone_recursion(W4):
    rep = slice_cone_recursion_check(W4.identity, W4.normal_form([2, 1, 3, 2]), 2, 4)
    assert rep["status"] == "holds" and rep["pass"] and rep["covers"] == [[2]]


# -- point-set checks -------------------------------------------------------------------------


def test_hyperplane_section_examples(W3, W4):
    rep = hyperplane_section_check(W3.identity, W3.normal_form([2, 1]), 1, 2)
    assert rep["pass"] and rep["covers"] == [[1]]
    rep = hyperplane_section_check(W4.identity, W4.normal_form([2, 1, 3, 2]), 2, 3)
    assert rep["pass"] and rep["covers"] == [[2]]
    s1 = W3.s(1)
    rep = hyperplane_section_check(s1, s1, 1, 3)
    assert rep["pass"] and rep["section-points"] == rep["union-points"] == 0


def test_hyperplane_sections_on_every_gr24_class():
    Q = grassmannian_quotient(4, 2)
    for c in q_poset(Q).classes:
        assert hyperplane_section_check(c.u, c.w, 2, 2)["pass"]


@pytest.mark.parametrize("q", [2, 3, 4])
def test_projective_plane_stratification(q):
    rep = stratification_check(1, 3, q)
    assert rep["pass"] and rep["points"] == q * q + q + 1 and rep["classes"] == 7


def test_gr24_stratification():
    rep = stratification_check(2, 4, 3)
    assert rep["pass"] and rep["points"] == 130 and sum(rep["stratum-sizes"]) == 130


def test_model_image_examples(W3):
    nf = W3.normal_form
    a = model_image_check(W3.identity, nf([2]), 1, 2)
    b = model_image_check(nf([2]), nf([2]), 1, 2)
    assert a["pass"] and b["pass"] and a["closed-image-points"] == b["closed-image-points"] == 1
    c = model_image_check(nf([1]), nf([2, 1]), 1, 3)
    assert c["pass"] and c["open-images-agree"] and c["injective"]


def test_model_images_on_every_pair_of_s3(W3):
    Q = grassmannian_quotient(3, 1)
    for u in W3.elements:
        for w in W3.elements:
            if W3.bruhat_leq(u, w):
                assert model_image_check(u, w, 1, 2)["pass"]
