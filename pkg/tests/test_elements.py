import itertools
import random

import pytest

from cliffharm.elements import (
    CliffordElement,
    DegreeMismatchError,
    GuardError,
    TripleElement,
    center,
    conjugacy_classes,
    conjugate,
    conjugation_sign,
    element,
    element_index,
    embed,
    enumerate_group,
    format_element,
    identity,
    inverse,
    mask_of,
    multiply,
    parse_element,
    triple,
    triple_action,
    triple_identity,
    triple_inverse,
    triple_multiply,
    xi,
    xi_sign,
)


def test_generator_relations():
    # gamma_a^2 = 1 and gamma_a gamma_b = -gamma_b gamma_a for a != b
    n = 5
    for a in range(1, n + 1):
        ga = element(n, 1, (a,))
        assert multiply(ga, ga) == identity(n)
        for b in range(1, a):
            gb = element(n, 1, (b,))
            assert multiply(ga, gb) == multiply(multiply(gb, ga), element(n, -1))


def test_gamma_subset_is_ordered_product_of_generators():
    n = 4
    for subset in itertools.chain.from_iterable(
        itertools.combinations(range(1, n + 1), k) for k in range(n + 1)
    ):
        prod = identity(n)
        for a in subset:
            prod = multiply(prod, element(n, 1, (a,)))
        assert prod == element(n, 1, subset)


def test_group_axioms_n3():
    n = 3
    g = list(enumerate_group(n))
    assert len(g) == 1 << (n + 1)
    assert len(set(g)) == len(g)
    for x in g:
        assert multiply(x, inverse(x)) == identity(n)
        assert multiply(inverse(x), x) == identity(n)
    rng = random.Random(7)
    for _ in range(300):
        x, y, z = rng.choice(g), rng.choice(g), rng.choice(g)
        assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


def test_xi_agrees_with_definition():
    for am in range(16):
        for bm in range(16):
            a = [i + 1 for i in range(4) if am >> i & 1]
            b = [i + 1 for i in range(4) if bm >> i & 1]
            count = sum(1 for x in a for y in b if x > y)
            assert xi(a, b) == count
            assert xi_sign(am, bm) == (-1) ** count


def test_conjugation_sign_closed_form():
    n = 4
    for am in range(1 << n):
        for cm in range(1 << n):
            x = CliffordElement(n, 1, am)
            c = CliffordElement(n, 1, cm)
            got = conjugate(x, c)
            assert got.mask == am
            assert got.sign == conjugation_sign(am, cm)


def test_center():
    assert {z.mask for z in center(2)} == {0}
    assert len(center(2)) == 2
    assert {z.mask for z in center(3)} == {0, 0b111}
    assert len(center(3)) == 4


def test_class_counts_and_sizes():
    for n in range(1, 6):
        classes = conjugacy_classes(n)
        expect = (1 << n) + (1 if n % 2 == 0 else 2)
        assert len(classes) == expect
        assert sum(c.size for c in classes) == 1 << (n + 1)
        # class equation: non-central classes are {x, -x}
        for c in classes:
            assert c.size in (1, 2)


def test_embed_is_homomorphism():
    n, m = 4, 2
    for x in enumerate_group(m):
        for y in enumerate_group(m):
            assert embed(multiply(x, y), n) == multiply(embed(x, n), embed(y, n))


def test_element_index_matches_enumeration():
    for n in (1, 3):
        for i, x in enumerate(enumerate_group(n)):
            assert element_index(x) == i


def test_parse_format_round_trip():
    n = 3
    for x in enumerate_group(n):
        assert parse_element(format_element(x), n) == x
    assert parse_element("+g{}", 2) == identity(2)
    assert parse_element("-g{1,3}", 3) == element(3, -1, (1, 3))
    assert format_element(element(2, -1, (2,))) == "-g{2}"


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_element("g{1}", 2)
    with pytest.raises(ValueError):
        parse_element("+g{3}", 2)
    with pytest.raises(ValueError):
        parse_element("+g{0}", 3)
    with pytest.raises(ValueError):
        parse_element("++g{1}", 3)


def test_degree_guards():
    with pytest.raises(DegreeMismatchError):
        multiply(identity(2), identity(3))
    with pytest.raises(GuardError):
        element(99)
    with pytest.raises(ValueError):
        element(-1)


def test_mask_of():
    assert mask_of(()) == 0
    assert mask_of((1, 3)) == 0b101
    assert mask_of(frozenset({2})) == 0b10


def test_triple_group_axioms():
    n, m = 2, 1
    e = triple_identity(n, m)
    rng = random.Random(3)
    gs = list(enumerate_group(n))
    hs = list(enumerate_group(m))
    sample = [
        triple(rng.choice(gs), rng.choice(gs), rng.choice(hs), m)
        for _ in range(40)
    ]
    for t in sample:
        assert triple_multiply(t, triple_inverse(t)) == e
        assert triple_multiply(e, t) == t
    for a, b in zip(sample, sample[1:]):
        c = sample[0]
        assert triple_multiply(triple_multiply(a, b), c) == triple_multiply(
            a, triple_multiply(b, c)
        )


def test_triple_action_is_an_action():
    # (g1, g2, h).(g3, g4) = (g1 g3 g2^-1, g2 g4 h^-1) composes correctly
    n, m = 2, 2
    rng = random.Random(11)
    gs = list(enumerate_group(n))
    for _ in range(60):
        s = triple(rng.choice(gs), rng.choice(gs), rng.choice(gs), m)
        t = triple(rng.choice(gs), rng.choice(gs), rng.choice(gs), m)
        p = (rng.choice(gs), rng.choice(gs))
        assert triple_action(triple_multiply(s, t), p) == triple_action(
            s, triple_action(t, p)
        )


def test_triple_element_validation():
    with pytest.raises(ValueError):
        # h touches index 2, outside the embedded CL(1)
        TripleElement(identity(2), identity(2), element(2, 1, (2,)), 1)
    with pytest.raises(DegreeMismatchError):
        TripleElement(identity(2), identity(3), identity(2), 2)
