import itertools
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from growthlab import groups as grp
from growthlab.asymptotics import approx_equiv, is_superadditive


def heis_matrix(e):
    x, y, z = e
    return np.array([[1, x, z], [0, 1, y], [0, 0, 1]], dtype=object)


def affine(e):
    k, p, q = e
    return Fraction(2) ** k, Fraction(p, 2 ** q)


def compose(f, g):
    # (f o g)(t) = s_f (s_g t + m_g) + m_f
    return f[0] * g[0], f[0] * g[1] + f[1]


ALL = ["z^1", "z^2", "z^3", "free:1", "free:2", "heis3", "heis3:ab", "bs12"]


# -- arithmetic --------------------------------------------------------------

def test_heisenberg_product_example():
    H = grp.parse_group("heis3")
    assert H.multiply((1, 0, 0), (0, 1, 0)) == (1, 1, 1)
    a, b = H.generator("a"), H.generator("b")
    assert H.commutator(a, b) == (0, 0, 1) == H.generator("c")


def test_bs12_relation():
    B = grp.parse_group("bs12")
    a, b = B.generator("a"), B.generator("b")
    assert B.multiply(B.multiply(b, a), B.inverse(b)) == B.power(a, 2) == (0, 2, 0)


@pytest.mark.parametrize("name", ALL)
def test_inverse_and_identity(name):
    G = grp.parse_group(name)
    rng = random.Random(name)
    for _ in range(200):
        e = G.evaluate(grp.random_word(G, rng.randint(0, 12), rng))
        assert G.multiply(e, G.inverse(e)) == G.identity()
        assert G.multiply(G.inverse(e), e) == G.identity()
        assert G.multiply(e, G.identity()) == e


def test_heisenberg_against_matrices():
    H = grp.parse_group("heis3")
    rng = random.Random(1)
    for _ in range(10_000):
        w1 = grp.random_word(H, rng.randint(0, 8), rng)
        w2 = grp.random_word(H, rng.randint(0, 8), rng)
        e = H.multiply(H.evaluate(w1), H.evaluate(w2))
        m = np.identity(3, dtype=object)
        for s in w1 + w2:
            m = m.dot(heis_matrix(s))
        assert (heis_matrix(e) == m).all()


def test_bs12_against_affine_maps():
    B = grp.parse_group("bs12")
    rng = random.Random(2)
    for _ in range(10_000):
        w1 = grp.random_word(B, rng.randint(0, 8), rng)
        w2 = grp.random_word(B, rng.randint(0, 8), rng)
        e = B.multiply(B.evaluate(w1), B.evaluate(w2))
        f = (Fraction(1), Fraction(0))
        for s in w1 + w2:
            f = compose(f, affine(s))
        assert affine(e) == f
        k, p, q = e
        assert q >= 0 and (q == 0 or p % 2 == 1)


def test_free_words_are_reduced():
    F = grp.parse_group("free:2")
    rng = random.Random(3)
    for _ in range(500):
        e = F.evaluate(grp.random_word(F, 10, rng))
        assert all(x != -y for x, y in zip(e, e[1:]))


@settings(max_examples=100, deadline=None)
@given(st.integers(-30, 30), st.integers(-30, 30))
def test_power_laws(m, n):
    for name in ("heis3", "bs12", "free:2"):
        G = grp.parse_group(name)
        g = G.generators[0]
        assert G.multiply(G.power(g, m), G.power(g, n)) == G.power(g, m + n)


@settings(max_examples=100, deadline=None)
@given(st.integers(-40, 40))
def test_cyclic_coordinate_round_trip(n):
    for name, sname in [("heis3", "center"), ("bs12", "cyclic:a"), ("bs12", "cyclic:b"),
                        ("z^2", "axis:1"), ("heis3", "cyclic:a"), ("free:2", "cyclic:a")]:
        G = grp.parse_group(name)
        sub = grp.parse_subgroup(G, sname)
        assert sub.coordinate(sub.element(n)) == n
        assert sub.intrinsic_length(sub.element(n)) == abs(n)


def test_membership_rejects_outsiders():
    H = grp.parse_group("heis3")
    assert not grp.center(H).contains((1, 0, 0))
    B = grp.parse_group("bs12")
    assert not grp.cyclic(B, "a").contains((0, 1, 1))  # t + 1/2 is not a power of a
    assert not grp.cyclic(B, "a").contains((1, 0, 0))


def test_parse_errors():
    for bad in ("z^0", "free:x", "heis4", "sl2"):
        with pytest.raises(ValueError):
            grp.parse_group(bad)
    with pytest.raises(ValueError):
        grp.parse_subgroup(grp.parse_group("z^2"), "axis:5")
    with pytest.raises(ValueError):
        grp.parse_subgroup(grp.parse_group("z^2"), "weird")


# -- balls -------------------------------------------------------------------

def test_small_balls():
    assert len(grp.ball(grp.parse_group("free:2"), 1)) == 5
    for r in range(6):
        assert len(grp.ball(grp.parse_group("z^2"), r)) == 2 * r * r + 2 * r + 1


def test_heisenberg_ball_matches_word_enumeration():
    H = grp.parse_group("heis3")
    gens = H.generators
    seen = {H.identity()}
    for n in (1, 2):
        for w in itertools.product(gens, repeat=n):
            seen.add(H.evaluate(w))
    assert set(grp.ball(H, 2).lengths) == seen


def test_growth_closed_forms():
    assert grp.growth_function(grp.parse_group("z^1"), 20).values == tuple(2 * r + 1 for r in range(1, 21))
    assert grp.growth_function(grp.parse_group("free:2"), 7).values == tuple(2 * 3 ** r - 1 for r in range(1, 8))


@pytest.mark.parametrize("name,R", [("heis3", 7), ("heis3:ab", 8), ("bs12", 8), ("free:2", 5), ("z^3", 5)])
def test_bfs_triangle_and_tree_property(name, R):
    G = grp.parse_group(name)
    idx = grp.ball(G, R)
    assert idx.length(G.identity()) == 0
    for e, n in idx.lengths.items():
        if n:
            assert any(idx.length(G.multiply(e, G.inverse(s))) == n - 1 for s in G.generators)
        for s in G.generators:
            m = idx.length(G.multiply(e, s))
            if m is not None:
                assert abs(m - n) <= 1


def test_budget_exceeded_reports_radius():
    with pytest.raises(grp.BudgetExceeded) as ei:
        grp.ball(grp.parse_group("free:2"), 10, budget=200)
    assert ei.value.radius_reached == 4  # |B(4)| = 161 <= 200 < |B(5)| = 485


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("GROWTHLAB_BUDGET", "10")
    with pytest.raises(grp.BudgetExceeded):
        grp.ball(grp.parse_group("z^2"), 5)


def test_ball_csv_is_canonical_text():
    csv = grp.ball(grp.parse_group("bs12"), 1).to_csv().splitlines()
    assert csv[0] == "key,length"
    assert '"bs12:0,0,0",0' in csv and '"bs12:0,1,0",1' in csv


# -- tabulators --------------------------------------------------------------

def test_axis_is_undistorted():
    G = grp.parse_group("z^2")
    sub = grp.axis(G, 0)
    assert grp.relative_growth(G, sub, 10).values == tuple(2 * r + 1 for r in range(1, 11))
    assert grp.distortion(G, sub, 10).values == tuple(range(1, 11))


def test_center_relative_growth_superlinear():
    G = grp.parse_group("heis3")
    g = grp.relative_growth(G, grp.center(G), 12)
    assert all(g(r) >= 2 * r for r in range(8, 13))
    assert is_superadditive(grp.distortion(G, grp.center(G), 12))


@pytest.mark.parametrize("gens", ["heis3", "heis3:ab"])
def test_center_quadratic_witnesses(gens):
    G = grp.parse_group(gens)
    sub = grp.center(G)
    idx = grp.ball(G, 12)
    d = grp.distortion(G, sub, 12, index=idx)
    a, b = G.generator("a"), G.generator("b")
    for k in (1, 2, 3):
        w = G.commutator(G.power(a, k), G.power(b, k))
        assert w == sub.element(k * k)
        assert idx.length(w) <= 4 * k
        assert d(4 * k) >= k * k


def test_center_distortion_frozen_values():
    # frozen from BFS: over {a,b} the centre only appears at even radius >= 4
    d = grp.distortion(grp.parse_group("heis3:ab"), grp.center(grp.parse_group("heis3:ab")), 12)
    assert d.values == (0, 0, 0, 1, 1, 2, 2, 4, 4, 6, 6, 9)
    d = grp.distortion(grp.parse_group("heis3"), grp.center(grp.parse_group("heis3")), 12)
    assert d.values == tuple(range(1, 13))


def test_bs12_frozen_values():
    G = grp.parse_group("bs12")
    sub = grp.cyclic(G, "a")
    idx = grp.ball(G, 11)
    assert grp.distortion(G, sub, 11, index=idx).values == (1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48)
    assert grp.relative_growth(G, sub, 11, index=idx).values == (3, 5, 7, 9, 13, 17, 23, 31, 41, 57, 75)
    for k in range(1, 6):
        bk = G.power(G.generator("b"), k)
        assert G.multiply(G.multiply(bk, G.generator("a")), G.inverse(bk)) == sub.element(2 ** k)


def test_word_length_examples():
    H = grp.parse_group("heis3")
    assert grp.word_length(H, H.identity(), 3) == 0
    assert grp.word_length(H, (0, 0, 1), 3) == 1
    B = grp.parse_group("bs12")
    a4 = B.power(B.generator("a"), 4)
    assert grp.word_length(B, a4, 6) <= 4
    assert grp.word_length(B, a4, 6) == grp.ball(B, 6).length(a4)
    assert grp.word_length(B, B.power(B.generator("a"), 1000), 3) is None


@pytest.mark.parametrize("name,sname,R", [("z^2", "axis:0", 10), ("heis3", "center", 10),
                                          ("heis3:ab", "center", 10), ("bs12", "cyclic:a", 10),
                                          ("free:2", "cyclic:a", 6)])
def test_growth_chain(name, sname, R):
    G = grp.parse_group(name)
    sub = grp.parse_subgroup(G, sname)
    idx = grp.ball(G, R)
    g_rel = grp.relative_growth(G, sub, R, index=idx)
    g_G = grp.growth_function(G, R, index=idx)
    d = grp.distortion(G, sub, R, index=idx)
    nx = len(G.named_generators())
    c = grp.change_of_generators_constant(sub, idx)
    for r in range(1, R + 1):
        assert g_rel(r) <= g_G(r) <= (2 * nx + 1) ** r
        assert g_rel(r) <= 2 * d(r) + 1
        if c * r <= R:
            assert 2 * r + 1 <= g_rel(c * r)  # intrinsic ball of <g0> maps into B(c r)


def test_generating_sets_are_approx_equivalent():
    a = grp.parse_group("heis3")
    b = grp.parse_group("heis3:ab")
    ga, gb = grp.growth_function(a, 12), grp.growth_function(b, 12)
    pair = approx_equiv(ga, gb, 8)
    assert pair is not None and max(w.c for w in pair) <= 8
    da = grp.distortion(a, grp.center(a), 12)
    db = grp.distortion(b, grp.center(b), 12)
    pair = approx_equiv(da, db, 8)
    assert pair is not None and max(w.c for w in pair) <= 8
