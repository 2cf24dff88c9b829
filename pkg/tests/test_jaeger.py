import random

import pytest

from knotpoly.laurent import LaurentPoly, DeltaFraction, TAU, substitute_jaeger
from knotpoly.diagram import MorseDiagram, parse_braid, braid_closure
from knotpoly.front import FrontWord, saucer_front, crossed_saucer_front
from knotpoly.skein import SkeinCache, kauffman_D
from knotpoly.jaeger import (enumerate_states, enumerate_front_states,
                             jaeger_both_sides, lj_both_sides, lemma_check,
                             proof_chain_check, selection_sweep,
                             DIAGRAM_WEIGHTS, FRONT_WEIGHTS)

from conftest import A, random_braid, random_front

ONE = LaurentPoly.one()
INF_NEG = (("cup", 0), ("x", 0, -1), ("cap", 0))


def test_zero_crossing_unknot_states():
    unknot = braid_closure(parse_braid("braid 1:"))
    states = list(enumerate_states(unknot))
    assert len(states) == 2
    assert all(st.weight == ONE for st in states)
    assert {st.r_sigma for st in states} == {1, -1}


def test_one_curl_state_census():
    inf = MorseDiagram(INF_NEG)
    states = [st for st in enumerate_states(inf) if not st.weight.is_zero()]
    census = sorted((st.choices[0], st.r_sigma, st.weight.format(("t", "a")))
                    for st in states)
    assert census == [
        (0, 0, "1"), (0, 0, "1"),
        (1, -1, "t^-1 - t"),
        (2, -2, "-t^-1 + t"),
    ]
    total = len(list(enumerate_states(inf)))
    # 3 splices; unspliced and parallel-opened have 1 component, wall has 2
    assert total == 2 + 2 + 4


def test_jaeger_identity_examples(cache):
    unknot = braid_closure(parse_braid("braid 1:"))
    cert = jaeger_both_sides(unknot, cache)
    expect = DeltaFraction(TAU + LaurentPoly({(-1, 2): 1})
                           - LaurentPoly({(1, -2): 1}), 1)
    assert cert.equal and cert.lhs == expect and cert.rhs == expect

    inf = MorseDiagram(INF_NEG)
    cert = jaeger_both_sides(inf, cache)
    assert cert.equal
    assert cert.lhs == expect * LaurentPoly.monomial(1, -1, 2)


def test_jaeger_identity_trefoil(cache, paper_trefoil):
    assert jaeger_both_sides(paper_trefoil, cache).equal


def test_jaeger_identity_random_closures(cache):
    rng = random.Random(301)
    for _ in range(25):
        b = random_braid(rng, max_strands=4, max_letters=5)
        assert jaeger_both_sides(braid_closure(b), cache).equal, b.text()


def test_lj_example_one(cache):
    cert = lj_both_sides(saucer_front(), cache)
    assert cert.equal
    assert len(cert.contributions) == 2
    aa1 = A * A - ONE
    terms = {cert.contributions[0][2], cert.contributions[1][2]}
    assert terms == {
        DeltaFraction(aa1, 1),
        DeltaFraction(aa1 * LaurentPoly.monomial(1, -2, 2), 1),
    }


def test_lj_example_two_term_by_term(cache):
    cert = lj_both_sides(crossed_saucer_front(), cache)
    assert cert.equal
    assert len(cert.contributions) == 4
    aa1 = A * A - ONE
    a3a = A ** 3 - A
    term_unspliced = DeltaFraction(a3a * LaurentPoly.monomial(1, -1, 1), 1)
    term_h = DeltaFraction(-TAU * aa1 * LaurentPoly.monomial(1, -2, 2), 1)
    term_cusp = DeltaFraction(TAU * aa1 * aa1 * LaurentPoly.monomial(1, -3, 2), 2)
    got = [c[2] for c in cert.contributions]
    for expected, times in ((term_unspliced, 2), (term_h, 1), (term_cusp, 1)):
        assert sum(1 for g in got if g == expected) == times


def test_lj_zero_crossing_front_reduces_to_orientation_sum(cache):
    f = FrontWord([("L", 0), ("L", 1), ("R", 1), ("R", 0)])
    cert = lj_both_sides(f, cache)
    assert cert.equal
    assert len(cert.contributions) == 4  # two components, four orientations


def test_lj_random_fronts(cache):
    rng = random.Random(303)
    for _ in range(30):
        f = random_front(rng, max_crossings=4)
        assert lj_both_sides(f, cache).equal, f.events


def test_lemma_examples(cache):
    degrees = sorted(r.min_a_degree for r in lemma_check(saucer_front(), cache))
    assert degrees == [0, 2]

    rows = lemma_check(crossed_saucer_front(), cache)
    assert all(r.nonnegative and r.respects_bound for r in rows)
    cusp_rows = [r for r in rows if r.choices == (2,)]
    assert len(cusp_rows) == 1
    # the printed cusp-pair term is a^2 t^-3 (a^2-1)^2 / tau: least a-degree 2,
    # tight against the proof bound
    assert cusp_rows[0].min_a_degree == 2 and cusp_rows[0].bound == 2


def test_lemma_random_fronts(cache):
    rng = random.Random(304)
    for _ in range(40):
        f = random_front(rng, max_crossings=4)
        for row in lemma_check(f, cache):
            assert row.nonnegative, (f.events, row)
            assert row.respects_bound, (f.events, row)


def test_v_count_bounded_by_left_up(cache):
    rng = random.Random(305)
    for _ in range(40):
        f = random_front(rng, max_crossings=4)
        for st in enumerate_front_states(f):
            if st.weight.is_zero():
                continue
            assert st.v_count <= st.left_up, (f.events, st.choices, st.flips)


def test_proof_chain_relations(cache):
    rng = random.Random(306)
    fronts = [saucer_front(), crossed_saucer_front()]
    fronts += [random_front(rng, max_crossings=3) for _ in range(25)]
    for f in fronts:
        pc = proof_chain_check(f, cache)
        assert pc["weight_ok"] and pc["nu_ok"] and pc["rot_ok"], f.events
        assert pc["r_factor_ok"] and pc["master_ok"], f.events


def test_rhs_summation_order_invariant(cache):
    """The state sum is a commutative reduction; order must not matter."""
    f = crossed_saucer_front()
    cert = lj_both_sides(f, cache)
    rng = random.Random(307)
    terms = [c[2] for c in cert.contributions]
    for _ in range(5):
        rng.shuffle(terms)
        total = DeltaFraction.zero()
        for t in terms:
            total = total + t
        assert total == cert.rhs


def test_selection_sweep_unique_and_frozen(cache):
    diagrams = [
        MorseDiagram(INF_NEG),
        MorseDiagram([("cup", 0), ("x", 0, 1), ("cap", 0)]),
        braid_closure(parse_braid("braid 2: 1 1")),
        braid_closure(parse_braid("braid 2: -1 -1")),
        MorseDiagram([("cup", 0), ("x", 0, -1), ("x", 0, -1), ("cap", 0)]),
        MorseDiagram([("cup", 0), ("x", 0, 1), ("x", 0, 1), ("cap", 0)]),
    ]
    fronts = [saucer_front(), crossed_saucer_front(),
              FrontWord([("L", 0), ("X", 0), ("X", 0), ("R", 0)]),
              FrontWord([("L", 0), ("L", 1), ("X", 1), ("R", 1), ("R", 0)])]
    rep = selection_sweep(diagrams, fronts, cache)
    assert rep["diagram_unique"] and rep["diagram_matches_frozen"]
    assert rep["front_unique"] and rep["front_matches_frozen"]


def test_frozen_tables_shape():
    assert len(DIAGRAM_WEIGHTS) == 4
    assert set(v for v in DIAGRAM_WEIGHTS.values()) == {1, -1}
    assert len(FRONT_WEIGHTS) == 2
