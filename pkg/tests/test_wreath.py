import json
import random
from math import factorial

import pytest

from wreathspringer.combinatorics import identity_perm, perm_compose, perm_length, partitions_of
from wreathspringer.wreath import (
    BoundExceededError,
    WreathElement,
    WreathGroup,
    bruhat_leq_wreath,
    cell_statistics,
    coxeterB_leq,
    dimension_polynomial_str,
    embed_md,
    eval_typeB_word,
    hasse_covers,
    hasse_dot,
    hasse_json,
    typeB_leq,
    wreath_identity,
    wreath_to_typeB,
)

from oracles import subword_downset


def random_element(rng, m, d):
    factors = tuple(tuple(rng.sample(range(m), m)) for _ in range(d))
    top = tuple(rng.sample(range(d), d))
    return WreathElement(factors, top)


# -- multiplication and inversion

def test_mul_identity():
    g = WreathGroup(3, 2)
    rng = random.Random(1)
    for _ in range(20):
        a = random_element(rng, 3, 2)
        assert a * g.identity == a
        assert g.identity * a == a


def test_mul_semidirect_rule():
    g = WreathGroup(2, 2)
    s = (1, 0)
    e = (0, 1)
    t = g.gen_t(1)
    a = WreathElement((s, e), identity_perm(2))
    assert t * a == WreathElement((e, s), t.top)


def test_mul_matches_embedding():
    rng = random.Random(5)
    for _ in range(200):
        a = random_element(rng, 3, 3)
        b = random_element(rng, 3, 3)
        assert embed_md(a * b) == perm_compose(embed_md(a), embed_md(b))


def test_mul_context_mismatch():
    with pytest.raises(ValueError):
        wreath_identity(2, 2) * wreath_identity(3, 2)


def test_inverse():
    g = WreathGroup(3, 2)
    assert g.identity.inverse() == g.identity
    t = g.gen_t(1)
    assert t.inverse() == t
    rng = random.Random(11)
    for _ in range(50):
        a = random_element(rng, 3, 2)
        assert a * a.inverse() == g.identity
        assert a.inverse() * a == g.identity


def test_group_axioms():
    rng = random.Random(23)
    for m, d in [(2, 2), (3, 2), (2, 3), (3, 3)]:
        ident = wreath_identity(m, d)
        for _ in range(500):
            a = random_element(rng, m, d)
            b = random_element(rng, m, d)
            c = random_element(rng, m, d)
            assert (a * b) * c == a * (b * c)
            assert a * ident == a
            assert a * a.inverse() == ident


# -- embedding

def test_embed_known_values():
    g = WreathGroup(2, 2)
    assert embed_md(g.identity) == (0, 1, 2, 3)
    # 1-based [3,4,1,2]
    assert embed_md(g.gen_t(1)) == (2, 3, 0, 1)
    assert embed_md(g.gen_s(1, 2)) == (0, 1, 3, 2)


def test_embed_injective_homomorphism():
    g = WreathGroup(3, 2)
    images = {embed_md(x) for x in g.elements}
    assert len(images) == g.order == factorial(3) ** 2 * 2
    for x in g.elements[:12]:
        for y in g.elements[::7]:
            assert embed_md(x * y) == perm_compose(embed_md(x), embed_md(y))


# -- generators

def test_generator_basic():
    g = WreathGroup(2, 1)
    assert g.gen_s(1, 1) == WreathElement(((1, 0),), (0,))
    with pytest.raises(ValueError):
        g.gen_s(2, 1)
    with pytest.raises(ValueError):
        WreathGroup(2, 2).gen_t(2)


def test_generator_conjugation_shifts_slots():
    g = WreathGroup(3, 3)
    for k in range(1, 3):
        t = g.gen_t(k)
        for i in range(1, 3):
            assert t * g.gen_s(i, k) * t == g.gen_s(i, k + 1)
            assert t * g.gen_s(i, k + 1) * t == g.gen_s(i, k)
    # slots away from the swap are untouched
    t1 = g.gen_t(1)
    assert t1 * g.gen_s(1, 3) * t1 == g.gen_s(1, 3)


def test_slot_swap_embedding_length():
    for m in range(1, 5):
        g = WreathGroup(m, 2)
        assert perm_length(embed_md(g.gen_t(1))) == m * m


# -- Bruhat order

def test_bruhat_reflexive():
    g = WreathGroup(2, 2)
    for x in g.elements:
        assert bruhat_leq_wreath(x, x)


def test_bruhat_known_pairs():
    g = WreathGroup(2, 2)
    s1 = g.gen_s(1, 1)
    s3 = g.gen_s(1, 2)
    t = g.gen_t(1)
    assert bruhat_leq_wreath(s1, s1 * s3)
    assert not bruhat_leq_wreath(s1, t)
    assert not bruhat_leq_wreath(t, s1)


def test_bruhat_matches_product_order_oracle():
    for m, d in [(2, 2), (3, 2)]:
        g = WreathGroup(m, d)
        for x in g.elements:
            for y in g.elements:
                expected = x.top == y.top and all(
                    xf in subword_downset(yf)
                    for xf, yf in zip(x.factors, y.factors)
                )
                assert bruhat_leq_wreath(x, y) == expected


def test_bruhat_partial_order_22():
    g = WreathGroup(2, 2)
    els = g.elements
    for x in els:
        for y in els:
            if bruhat_leq_wreath(x, y) and bruhat_leq_wreath(y, x):
                assert x == y
            for z in els:
                if bruhat_leq_wreath(x, y) and bruhat_leq_wreath(y, z):
                    assert bruhat_leq_wreath(x, z)


# -- Hasse diagram

def test_hasse_22_exact():
    g = WreathGroup(2, 2)
    edges = {(g.word(x), g.word(y)) for x, y in hasse_covers(g)}
    assert edges == {
        ("e", "s1^1"),
        ("e", "s1^2"),
        ("s1^1", "s1^1 s1^2"),
        ("s1^2", "s1^1 s1^2"),
        ("t1", "s1^1 t1"),
        ("t1", "s1^2 t1"),
        ("s1^1 t1", "s1^1 s1^2 t1"),
        ("s1^2 t1", "s1^1 s1^2 t1"),
    }


def test_hasse_degenerate_cases():
    assert hasse_covers(WreathGroup(1, 3)) == []
    # the full type A Hasse diagram of degree 3 has 8 cover relations
    assert len(hasse_covers(WreathGroup(3, 1))) == 8


def test_hasse_cover_shape():
    g = WreathGroup(3, 2)
    for x, y in hasse_covers(g):
        assert x.top == y.top
        diffs = [i for i in range(2) if x.factors[i] != y.factors[i]]
        assert len(diffs) == 1
        i = diffs[0]
        assert perm_length(y.factors[i]) == perm_length(x.factors[i]) + 1
        assert bruhat_leq_wreath(x, y)


def test_hasse_json_and_dot():
    g = WreathGroup(2, 2)
    data = hasse_json(g)
    assert data["m"] == 2 and data["d"] == 2
    assert len(data["nodes"]) == 8
    assert len(data["covers"]) == 8
    dot = hasse_dot(g)
    assert dot.startswith("digraph")
    assert dot.count("->") == 8
    # deterministic output
    assert json.dumps(hasse_json(g)) == json.dumps(hasse_json(WreathGroup(2, 2)))


def test_bound_guard():
    g = WreathGroup(4, 4, max_elements=1000)
    with pytest.raises(BoundExceededError):
        _ = g.elements
    with pytest.raises(BoundExceededError):
        hasse_covers(g)


def test_bound_env_override(monkeypatch):
    monkeypatch.setenv("WREATHSPRINGER_MAX_ELEMENTS", "4")
    with pytest.raises(BoundExceededError):
        _ = WreathGroup(2, 2).elements
    monkeypatch.setenv("WREATHSPRINGER_MAX_ELEMENTS", "100")
    assert len(WreathGroup(2, 2).elements) == 8


# -- words

def test_word_roundtrip():
    for m, d in [(2, 2), (3, 2)]:
        g = WreathGroup(m, d)
        for x in g.elements:
            assert g.parse_word(g.word(x)) == x


def test_parse_word_errors():
    g = WreathGroup(2, 2)
    with pytest.raises(ValueError):
        g.parse_word("x1")
    with pytest.raises(ValueError):
        g.parse_word("s1^3")
    with pytest.raises(ValueError):
        g.parse_word("t2")
    assert g.parse_word("e") == g.identity


# -- conjugacy classes

def test_conjugacy_class_counts():
    assert len(WreathGroup(2, 2).conjugacy_classes) == 5
    assert len(WreathGroup(3, 2).conjugacy_classes) == 9
    for m in range(1, 5):
        assert len(WreathGroup(m, 1).conjugacy_classes) == len(partitions_of(m))


def test_conjugacy_classes_partition_the_group():
    g = WreathGroup(2, 3)
    seen = [x for cls in g.conjugacy_classes for x in cls]
    assert len(seen) == g.order
    assert len(set(seen)) == g.order


# -- cell statistics

def test_cell_statistics_known():
    count, dist = cell_statistics(WreathGroup(2, 2))
    assert count == 8
    assert dist == {0: 2, 1: 4, 2: 2}
    assert dimension_polynomial_str(dist) == "2 + 4q + 2q^2"


def test_cell_statistics_type_a_poincare():
    count, dist = cell_statistics(WreathGroup(3, 1))
    assert count == 6
    assert dist == {0: 1, 1: 2, 2: 2, 3: 1}


def test_cell_statistics_tops_only():
    count, dist = cell_statistics(WreathGroup(1, 3))
    assert count == 6
    assert dist == {0: 6}


# -- type B comparison

def test_typeB_word_examples():
    assert coxeterB_leq([], [1, 0, 1], 2)
    assert coxeterB_leq([0, 1], [1, 0, 1], 2)
    assert not coxeterB_leq([1], [0], 2)


def test_typeB_invalid_generator():
    with pytest.raises(ValueError):
        coxeterB_leq([0], [2], 2)


def test_typeB_length_grading():
    w0 = eval_typeB_word([0, 1, 0, 1], 2)
    assert w0 == (-1, -2)
    for u in [(1, 2), (-1, 2), (2, 1), (-2, -1)]:
        assert typeB_leq(u, w0)


def test_wreath_order_coarser_than_typeB():
    g = WreathGroup(2, 2)
    images = wreath_to_typeB(g)
    assert len(set(images.values())) == 8
    for x in g.elements:
        for y in g.elements:
            if bruhat_leq_wreath(x, y):
                assert typeB_leq(images[x], images[y])
    # strictly coarser: the two factor generators are comparable in type B
    s1, s3 = g.gen_s(1, 1), g.gen_s(1, 2)
    assert typeB_leq(images[s1], images[s3])
    assert not bruhat_leq_wreath(s1, s3)
    # the slot swap stays comparable with its upper neighbours in both orders
    t, s1t = g.gen_t(1), g.gen_s(1, 1) * g.gen_t(1)
    assert bruhat_leq_wreath(t, s1t) and typeB_leq(images[t], images[s1t])
