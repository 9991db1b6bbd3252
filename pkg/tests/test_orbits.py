import random

import pytest

from cliffharm.exact import gr
from cliffharm.elements import (
    CliffordElement,
    GuardError,
    TripleElement,
    element,
    identity,
)
from cliffharm.characters import chi, rho
from cliffharm.gelfand import TripleIrrepLabel, spherical_character
from cliffharm.orbits import (
    SphericalQuery,
    closed_vs_direct_grids,
    enumerate_pair_orbits,
    orbit_of,
    predicted_orbit,
    spherical_closed_form,
    spherical_value,
    subset_sum_lemma,
)


def test_orbit_structure_exhaustive_small():
    for n in (1, 2, 3, 4):
        orbits = enumerate_pair_orbits(n)
        # orbits partition all (sign, mask) pairs
        assert sum(o.size for o in orbits) == 1 << (2 * n + 2)
        members = set()
        for o in orbits:
            assert o.representative == o.members[0]
            members.update(o.members)
            assert o.size in (1, 2, 4)
        assert len(members) == 1 << (2 * n + 2)


def test_prediction_matches_brute_force():
    for n in (1, 2, 3):
        for o in enumerate_pair_orbits(n):
            for p in o.members:
                assert predicted_orbit(p, n) == o
                assert orbit_of(p, n) == o


def test_singleton_orbits_are_central_pairs():
    # size-1 orbits <=> both components commute with everything
    n = 3
    for o in enumerate_pair_orbits(n):
        central = all(e.mask in (0, 0b111) for e in o.representative)
        assert (o.size == 1) == central
    # explicit instance: the disjoint-cover pair locks the two signs together
    p = (element(n, 1, (1,)), element(n, 1, (2, 3)))
    orb = predicted_orbit(p, n)
    assert orb.size == 2
    assert set(orb.members) == {
        p, (element(n, -1, (1,)), element(n, -1, (2, 3)))
    }
    # even degree: no disjoint cover locking, signs flip independently
    q = (element(2, 1, (1,)), element(2, 1, (2,)))
    assert predicted_orbit(q, 2).size == 4


def test_orbit_guard():
    with pytest.raises(GuardError):
        enumerate_pair_orbits(8)


def test_subset_sum_lemma():
    for n in range(0, 9):
        for u in range(1 << n):
            assert subset_sum_lemma(u, n) == (1 if u == 0 else 0)
    with pytest.raises(ValueError):
        subset_sum_lemma(4, 2)


def _query(n, sigma, g1, g2, h):
    return SphericalQuery(sigma, TripleElement(g1, g2, h, n))


def test_direct_value_matches_generic_spherical():
    # the integer-vectorized summation agrees with the generic definition
    rng = random.Random(2)
    n = 2
    sigmas = [
        TripleIrrepLabel(chi(n, (1,)), rho(n), rho(n)),
        TripleIrrepLabel(chi(n, (1, 2)), chi(n), chi(n, (1, 2))),
        TripleIrrepLabel(rho(n), rho(n), chi(n, (2,))),
    ]
    for sigma in sigmas:
        for _ in range(15):
            g = [
                CliffordElement(n, rng.choice((1, -1)), rng.randrange(1 << n))
                for _ in range(3)
            ]
            q = _query(n, sigma, *g)
            assert spherical_value(q) == spherical_character(sigma, q.at)


def test_spherical_invariant_under_simultaneous_conjugation():
    # psi(c g1 c^-1, c g2 c^-1, c h c^-1) = psi(g1, g2, h)
    from cliffharm.elements import conjugate

    rng = random.Random(6)
    n = 2
    sigma = TripleIrrepLabel(chi(n, (1,)), rho(n), rho(n))
    for _ in range(20):
        g = [
            CliffordElement(n, rng.choice((1, -1)), rng.randrange(1 << n))
            for _ in range(3)
        ]
        base = spherical_value(_query(n, sigma, *g))
        for cmask in range(1 << n):
            c = CliffordElement(n, 1, cmask)
            moved = [conjugate(x, c) for x in g]
            assert spherical_value(_query(n, sigma, *moved)) == base


def test_closed_forms_by_family():
    n = 3
    # vanishing families
    q = _query(n, TripleIrrepLabel(rho(n, "+"), rho(n, "-"), rho(n, "+")),
               identity(n), identity(n), identity(n))
    r = spherical_closed_form(q)
    assert r.analyzed and r.family == "rho-rho-rho" and r.value == gr(0)
    q = _query(n, TripleIrrepLabel(chi(n, (1,)), chi(n, (2,)), rho(n, "+")),
               identity(n), identity(n), identity(n))
    r = spherical_closed_form(q)
    assert r.analyzed and r.family == "chi-chi-rho" and r.value == gr(0)
    # product of linears: nonzero only when the masks cancel
    sigma = TripleIrrepLabel(chi(n, (1,)), chi(n, (2,)), chi(n, (1, 2)))
    q = _query(n, sigma, element(n, 1, (1,)), identity(n), identity(n))
    r = spherical_closed_form(q)
    assert r.family == "chi-chi-chi" and r.value == gr(-1)
    # unanalyzed orderings fall back to direct summation but stay correct
    sigma = TripleIrrepLabel(rho(n, "+"), chi(n, (1,)), rho(n, "-"))
    q = _query(n, sigma, identity(n), identity(n), identity(n))
    r = spherical_closed_form(q)
    assert not r.analyzed and r.value == spherical_value(q)


def test_closed_equals_direct_sampled():
    rng = random.Random(9)
    for n in (2, 3):
        sigmas = [
            TripleIrrepLabel(chi(n, (1,)), rho(n, "+") if n % 2 else rho(n),
                             rho(n, "-") if n % 2 else rho(n)),
            TripleIrrepLabel(chi(n), chi(n, (1, 2)), chi(n, (1, 2))),
        ]
        for sigma in sigmas:
            for _ in range(25):
                g = [
                    CliffordElement(n, rng.choice((1, -1)), rng.randrange(1 << n))
                    for _ in range(3)
                ]
                q = _query(n, sigma, *g)
                res = spherical_closed_form(q)
                assert res.analyzed
                assert res.value == spherical_value(q)


def test_full_grid_comparison_small():
    for n in (1, 2):
        reports = closed_vs_direct_grids(n)
        families = {r.family for r in reports}
        assert families == {
            "chi-chi-chi", "rho-rho-rho", "chi-rho-rho", "chi-chi-rho"
        }
        assert all(r.agree for r in reports)


def test_spherical_query_requires_equal_degrees():
    with pytest.raises(ValueError):
        SphericalQuery(
            TripleIrrepLabel(rho(2), rho(2), chi(1)),
            TripleElement(identity(2), identity(2), identity(2), 1),
        )
