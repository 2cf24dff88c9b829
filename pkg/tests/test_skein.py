import os
import random

import pytest

from knotpoly.laurent import LaurentPoly
from knotpoly.diagram import (MorseDiagram, parse_braid, braid_closure,
                              connected_sum, _switch_events, _smooth_h_events,
                              _smooth_v_events, smooth_vertical_dirs)
from knotpoly.skein import (SkeinCache, SkeinStats, homfly_R, kauffman_D,
                            full_invariants, DELTA, DELTA_D, CACHE_ENV_VAR)

from conftest import (A, AINV, ZVAR, P_TREFOIL, Y_TREFOIL, random_braid)

ONE = LaurentPoly.one()


def test_unknot_axioms(cache):
    unknot = braid_closure(parse_braid("braid 1:"))
    assert homfly_R(unknot, cache) == DELTA
    assert kauffman_D(unknot, cache) == DELTA_D


def test_one_curl_values(cache):
    inf = MorseDiagram([("cup", 0), ("x", 0, -1), ("cap", 0)])
    assert homfly_R(inf, cache) == (A * A - ONE).shift(-1, 0)
    assert kauffman_D(inf, cache) == A + (A * A - ONE).shift(-1, 0)
    # the curl encoding built into morsification satisfies D(curl) = a D(o)
    assert kauffman_D(inf, cache) == A * DELTA_D


def test_trefoil_goldens(cache, paper_trefoil):
    res = full_invariants(paper_trefoil, cache)
    assert res.P == P_TREFOIL
    assert res.Y == Y_TREFOIL
    assert res.e_P == -5 and res.e_Y == -6
    assert res.P == res.R.shift(0, -res.w)
    assert res.Y == res.D.shift(0, -res.w)


def test_skein_relations_hold_everywhere(cache):
    rng = random.Random(81)
    for _ in range(25):
        d = braid_closure(random_braid(rng, max_strands=4, max_letters=6))
        for cn in range(len(d.cross_info)):
            ev_idx, lo, hi, s = d.cross_info[cn]
            eps = d.oriented_sign(cn)
            switched = MorseDiagram(_switch_events(d.events, ev_idx), d.dirs)
            if d.dirs[lo] * d.dirs[hi] == 1:
                smoothed = MorseDiagram(_smooth_h_events(d.events, ev_idx), d.dirs)
            else:
                smoothed = MorseDiagram(*smooth_vertical_dirs(d, cn))
            assert homfly_R(d, cache) - homfly_R(switched, cache) == \
                (homfly_R(smoothed, cache) * eps).shift(1, 0)
            par = MorseDiagram(_smooth_h_events(d.events, ev_idx))
            turn = MorseDiagram(_smooth_v_events(d.events, ev_idx))
            assert kauffman_D(d, cache) - kauffman_D(switched, cache) == \
                ((kauffman_D(par, cache) - kauffman_D(turn, cache)) * s).shift(1, 0)


def test_markov_conjugation(cache):
    rng = random.Random(82)
    for _ in range(200):
        b = random_braid(rng, max_strands=4, max_letters=7)
        if not b.letters:
            continue
        k = rng.randrange(len(b.letters))
        rotated = b.letters[k:] + b.letters[:k]
        d1 = braid_closure(parse_braid(f"braid {b.strands}: " + " ".join(map(str, b.letters))))
        d2 = braid_closure(parse_braid(f"braid {b.strands}: " + " ".join(map(str, rotated))))
        assert homfly_R(d1, cache) == homfly_R(d2, cache)


def test_markov_stabilization(cache):
    rng = random.Random(83)
    for _ in range(100):
        b = random_braid(rng, max_strands=4, max_letters=6)
        n = b.strands
        sgn = rng.choice([1, -1])
        stabilized = parse_braid(
            f"braid {n + 1}: " + " ".join(map(str, list(b.letters) + [sgn * n])))
        R = homfly_R(braid_closure(b), cache)
        Rst = homfly_R(braid_closure(stabilized), cache)
        assert Rst == R.shift(0, sgn)
        # hence P is invariant
        assert Rst.shift(0, -(b.exponent_sum() + sgn)) == R.shift(0, -b.exponent_sum())


def test_orientation_independence_of_R_on_knots(cache):
    rng = random.Random(84)
    for _ in range(60):
        b = random_braid(rng, knot_only=True, max_strands=4, max_letters=7)
        d = braid_closure(b)
        assert homfly_R(d, cache) == homfly_R(d.reversed(), cache)


def test_connected_sum_invariants(cache, paper_trefoil):
    # summing with unknot diagrams leaves P and Y unchanged
    r0 = full_invariants(paper_trefoil, cache)
    for unknot_word in ("braid 1:", "braid 2: 1"):
        s = connected_sum(paper_trefoil, braid_closure(parse_braid(unknot_word)))
        r1 = full_invariants(s, cache)
        assert r0.P == r1.P and r0.Y == r1.Y

    s2 = connected_sum(paper_trefoil, paper_trefoil)
    r2 = full_invariants(s2, cache)
    assert r2.e_P == -9 and r2.e_Y == -11


def test_split_optimization_matches_plain_recursion(cache):
    rng = random.Random(85)
    for _ in range(10):
        b1 = random_braid(rng, max_strands=3, max_letters=5, knot_only=True)
        b2 = random_braid(rng, max_strands=3, max_letters=5, knot_only=True)
        d = connected_sum(braid_closure(b1), braid_closure(b2))
        fast = full_invariants(d, cache)
        slow = full_invariants(d, SkeinCache(), allow_split=False)
        assert fast.R == slow.R and fast.D == slow.D


def test_cache_consistency_and_stats(cache):
    d = braid_closure(parse_braid("braid 3: 1 -2 1 -2"))
    fresh = SkeinCache()
    stats = SkeinStats()
    r1 = homfly_R(d, fresh, stats)
    assert stats.cache_misses > 0
    again = SkeinStats()
    r2 = homfly_R(d, fresh, again)
    assert r1 == r2
    assert again.cache_hits >= 1
    assert homfly_R(d, cache) == r1


def test_persistent_cache_roundtrip(tmp_path):
    path = str(tmp_path / "cache.txt")
    d = braid_closure(parse_braid("braid 2: 1 1 1"))
    c1 = SkeinCache(path)
    r1 = homfly_R(d, c1)
    c1.close()
    assert os.path.getsize(path) > 0
    c2 = SkeinCache(path)
    stats = SkeinStats()
    r2 = homfly_R(d, c2, stats)
    c2.close()
    assert r1 == r2
    assert stats.cache_hits >= 1


def test_cache_env_var(tmp_path, monkeypatch):
    path = str(tmp_path / "envcache.txt")
    monkeypatch.setenv(CACHE_ENV_VAR, path)
    d = braid_closure(parse_braid("braid 2: 1 1"))
    r = full_invariants(d)
    assert os.path.exists(path)
    monkeypatch.delenv(CACHE_ENV_VAR)
    assert full_invariants(d).R == r.R
