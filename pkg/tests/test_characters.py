from fractions import Fraction

import numpy as np
import pytest

from cliffharm.exact import gr
from cliffharm.elements import element, enumerate_group, conjugacy_classes
from cliffharm.characters import (
    IrrepLabel,
    NotACharacterError,
    character_table,
    character_value,
    chi,
    conjugate_label,
    decompose,
    format_label,
    inner_product,
    irrep_character,
    irreps,
    parse_label,
    restrict_character,
    restricted_kronecker,
    rho,
    tensor_character,
)


def test_irrep_census():
    for n in range(0, 7):
        labs = irreps(n)
        assert len(labs) == len(conjugacy_classes(n))
        assert sum(lab.dim ** 2 for lab in labs) == 1 << (n + 1)
        assert len(set(labs)) == len(labs)


def test_label_validation():
    with pytest.raises(ValueError):
        rho(3)          # odd degree needs a sign
    with pytest.raises(ValueError):
        rho(2, "+")     # even degree takes no sign
    with pytest.raises(ValueError):
        chi(2, (3,))    # subset outside X_2
    assert rho(0).dim == 1
    assert rho(2).dim == 2
    assert rho(5, "-").dim == 4
    assert chi(4, (1, 3)).dim == 1


def test_linear_character_values():
    n = 4
    for am in range(1 << n):
        lab = IrrepLabel(n, "chi", am)
        for g in enumerate_group(n):
            # chi_A kills the sign: chi_A(-gamma_B) = chi_A(gamma_B)
            expect = (-1) ** (am & g.mask).bit_count()
            assert character_value(lab, g) == gr(expect)


def test_spin_character_support():
    # the 2^{n/2}-dimensional character vanishes off the centre
    for n in (2, 4):
        lab = rho(n)
        d = 1 << (n // 2)
        for g in enumerate_group(n):
            v = character_value(lab, g)
            if g.mask == 0:
                assert v == gr(g.sign * d)
            else:
                assert v == gr(0)
    # odd degree: support is the (order-4) centre
    for n, sign in ((3, "+"), (5, "-")):
        lab = rho(n, sign)
        top = (1 << n) - 1
        for g in enumerate_group(n):
            v = character_value(lab, g)
            if g.mask not in (0, top):
                assert v == gr(0)
            else:
                assert v != gr(0)


def test_first_orthogonality():
    for n in range(0, 5):
        labs = irreps(n)
        for a in labs:
            fa = irrep_character(a)
            for b in labs:
                assert inner_product(fa, irrep_character(b)) == gr(int(a == b))


def test_character_table_columns():
    # column orthogonality weighted by class size, using the int64 table
    for n in (2, 3):
        labels, keys, sizes, re, im = character_table(n)
        vals = re.astype(complex) + 1j * im
        gram = vals.conj().T @ vals
        k = len(keys)
        expect = np.diag([(1 << (n + 1)) / int(s) for s in sizes])
        assert np.array_equal(gram, expect)


def test_table_matches_character_value():
    for n in (1, 2, 3):
        labels, keys, sizes, re, im = character_table(n)
        for r, lab in enumerate(labels):
            for c, (sign, mask) in enumerate(keys):
                v = character_value(lab, element(n, sign,
                                                 [i + 1 for i in range(n) if mask >> i & 1]))
                assert v == gr(int(re[r, c]), int(im[r, c]))


def test_tensor_of_linears():
    n = 3
    for am in range(1 << n):
        for bm in range(1 << n):
            f = tensor_character(IrrepLabel(n, "chi", am), IrrepLabel(n, "chi", bm))
            dec = decompose(f)
            assert dec.terms == ((IrrepLabel(n, "chi", am ^ bm), 1),)


def test_tensor_linear_with_spin():
    assert decompose(tensor_character(chi(4, (1, 2)), rho(4))).terms == ((rho(4), 1),)
    # odd degree: the sign flips exactly when |A| is odd
    assert decompose(tensor_character(chi(3, (1,)), rho(3, "+"))).terms == (
        (rho(3, "-"), 1),
    )
    assert decompose(tensor_character(chi(3, (1, 2)), rho(3, "+"))).terms == (
        (rho(3, "+"), 1),
    )


def test_decompose_rejects_non_characters():
    f = irrep_character(rho(2))
    bad = type(f)(f.degree, {k: v + gr(Fraction(1, 3)) for k, v in f.values.items()})
    with pytest.raises(NotACharacterError):
        decompose(bad)


def test_restriction_of_irreps():
    # single-irrep branching down one degree
    assert decompose(restrict_character(irrep_character(chi(3, (1, 3))), 2)).terms == (
        (chi(2, (1,)), 1),
    )
    dec = decompose(restrict_character(irrep_character(rho(4)), 3))
    assert dec.terms == ((rho(3, "+"), 1), (rho(3, "-"), 1))
    for s in ("+", "-"):
        dec = decompose(restrict_character(irrep_character(rho(3, s)), 2))
        assert dec.terms == ((rho(2), 1),)


def test_restricted_kronecker_dimension():
    dec = restricted_kronecker(rho(4), rho(4), 3)
    assert dec.dimension() == 16
    assert sorted(m for _, m in dec.terms) == [2] * 8


def test_conjugate_label():
    assert conjugate_label(chi(3, (1,))) == chi(3, (1,))
    assert conjugate_label(rho(4)) == rho(4)
    # rho_n^+- swap under conjugation iff m = (n-1)/2 is odd
    assert conjugate_label(rho(3, "+")) == rho(3, "-")      # m = 1
    assert conjugate_label(rho(5, "+")) == rho(5, "+")      # m = 2
    assert conjugate_label(rho(7, "-")) == rho(7, "+")      # m = 3
    # conjugating the label conjugates the character values
    for lab in irreps(3):
        f = irrep_character(lab)
        g = irrep_character(conjugate_label(lab))
        assert {k: v.conjugate() for k, v in f.values.items()} == g.values


def test_parse_format_labels():
    for n in (2, 3):
        for lab in irreps(n):
            assert parse_label(format_label(lab), n) == lab
    assert parse_label("chi:{}", 2) == chi(2)
    assert parse_label("chi:{1,3}", 3) == chi(3, (1, 3))
    assert parse_label("rho", 2) == rho(2)
    assert parse_label("rho-", 5) == rho(5, "-")
    with pytest.raises(ValueError):
        parse_label("rho+", 2)
    with pytest.raises(ValueError):
        parse_label("spin", 3)


def test_decomposition_json():
    dec = decompose(tensor_character(rho(2), rho(2)))
    payload = dec.to_json()
    assert payload["multiplicity_free"] is True
    assert dec.dimension() == 4
    assert [t["irrep"] for t in payload["terms"]] == [
        "chi:{}", "chi:{1}", "chi:{2}", "chi:{1,2}"
    ]
    assert all(t["mult"] == 1 for t in payload["terms"])
