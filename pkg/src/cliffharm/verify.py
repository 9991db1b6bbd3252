"""Reproduction suite: one check per headline claim, three effort levels.

Levels: smoke (tiny degrees, seconds), desk (the documented acceptance
ranges), deep (desk plus extended sampled ranges).  Every comparison is
exact; a check either reproduces the claimed statement on its whole range
or fails with the first counterexample.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .exact import gr
from .elements import (
    CliffordElement,
    conjugacy_classes,
    enumerate_group,
    mask_of,
)
from .characters import (
    IrrepLabel,
    chi,
    rho,
    irreps,
    irrep_character,
    tensor_character,
    restrict_character,
    decompose,
    restricted_kronecker,
    character_value,
    format_label,
)
from .gelfand import (
    TripleIrrepLabel,
    diagonal_invariant_dim,
    gelfand_check_characters,
    gelfand_check_biinvariant,
)
from .matrix_models import FrobeniusContext, build_matrix_rep, matrix_coefficient_checks
from .linalg import ScaledMatrix, hs_inner, scaled_hs_inner
from .orbits import (
    closed_vs_direct_grids,
    enumerate_pair_orbits,
    orbit_of,
    predicted_orbit,
    subset_sum_lemma,
)


@dataclass
class CheckResult:
    ident: str
    description: str
    ok: bool
    detail: str
    seconds: float


def _check(ident, description):
    def wrap(fn):
        def run(**kw):
            t0 = time.time()
            ok, detail = fn(**kw)
            return CheckResult(ident, description, ok, detail, time.time() - t0)

        run.ident = ident
        return run

    return wrap


def _chars_equal(f, g):
    return f.degree == g.degree and f.values == g.values


@_check("C1", "diagonal pair (n,n) is Gelfand")
def check_gelfand_equal(n_max=6):
    for n in range(1, n_max + 1):
        r = gelfand_check_characters(n, n)
        if not r.gelfand:
            return False, f"failed at n={n}: max multiplicity {r.max_multiplicity}"
    return True, f"n = 1..{n_max}"


@_check("C2", "pair (n,n-1) is Gelfand iff n odd; even-n witness has multiplicity 2")
def check_gelfand_drop(n_max=6):
    for n in range(2, n_max + 1):
        r = gelfand_check_characters(n, n - 1)
        if r.gelfand != (n % 2 == 1):
            return False, f"wrong verdict at n={n}"
        if n % 2 == 0:
            if r.witness_multiplicity != 2:
                return False, f"witness multiplicity {r.witness_multiplicity} at n={n}"
            w = r.witness
            if (w.rho1.kind, w.rho2.kind, w.theta.mask) != ("rho", "rho", 0):
                return False, f"unexpected witness {w} at n={n}"
    return True, f"n = 2..{n_max}"


def _expected_odd_tensor(n, same_sign):
    """Labels of rho_n^a (x) rho_n^b: chi_A with |A| parity set by m and a*b."""
    m = (n - 1) // 2
    want_even = (m % 2 == 0) == same_sign
    return {
        IrrepLabel(n, "chi", mask)
        for mask in range(1 << n)
        if (mask.bit_count() % 2 == 0) == want_even
    }


@_check("C3", "tensor-square decomposition tables (even and odd degree)")
def check_tensor_tables(even_ns=(2, 4, 6), odd_ns=(3, 5, 7)):
    for n in even_ns:
        dec = decompose(tensor_character(rho(n), rho(n)))
        expect = [(IrrepLabel(n, "chi", mask), 1) for mask in range(1 << n)]
        if list(dec.terms) != expect:
            return False, f"rho x rho at n={n}"
    for n in odd_ns:
        for s1 in ("+", "-"):
            for s2 in ("+", "-"):
                dec = decompose(tensor_character(rho(n, s1), rho(n, s2)))
                if any(mult != 1 for _, mult in dec.terms):
                    return False, f"multiplicity at n={n}, signs {s1}{s2}"
                got = {lab for lab, _ in dec.terms}
                if got != _expected_odd_tensor(n, s1 == s2):
                    return False, f"wrong parity class at n={n}, signs {s1}{s2}"
    return True, f"even n in {even_ns}, odd n in {odd_ns}"


@_check("C4", "the five restriction rules for tensor products")
def check_restriction_rules(n_max=6):
    for n in range(2, n_max + 1):
        m = n - 1
        top = 1 << (n - 1)
        for a in range(1 << n):
            for b in range(1 << n):
                f = restrict_character(
                    tensor_character(chi(n, a), chi(n, b)), m
                )
                expect = irrep_character(chi(m, (a ^ b) & ~top))
                if not _chars_equal(f, expect):
                    return False, f"chi x chi at n={n}, A={a}, B={b}"
        if n % 2 == 0:
            target = irrep_character(rho(m, "+"))
            target = {
                k: v + irrep_character(rho(m, "-")).values[k]
                for k, v in target.values.items()
            }
            for a in range(1 << n):
                f = restrict_character(tensor_character(chi(n, a), rho(n)), m)
                if f.values != target:
                    return False, f"chi x rho at n={n}, A={a}"
            dec = restricted_kronecker(rho(n), rho(n), m)
            expect = [(IrrepLabel(m, "chi", mask), 2) for mask in range(1 << m)]
            if list(dec.terms) != expect:
                return False, f"rho x rho restriction at n={n}"
        else:
            target = irrep_character(rho(m))
            for a in range(1 << n):
                for s in ("+", "-"):
                    f = restrict_character(
                        tensor_character(chi(n, a), rho(n, s)), m
                    )
                    if not _chars_equal(f, target):
                        return False, f"chi x rho{s} at n={n}, A={a}"
            expect = [(IrrepLabel(m, "chi", mask), 1) for mask in range(1 << m)]
            for s1 in ("+", "-"):
                for s2 in ("+", "-"):
                    dec = restricted_kronecker(rho(n, s1), rho(n, s2), m)
                    if list(dec.terms) != expect:
                        return False, f"rho{s1} x rho{s2} restriction at n={n}"
    return True, f"n = 2..{n_max}"


@_check("C5", "orbit case analysis matches brute force on all pairs")
def check_orbits(n_max=5):
    for n in range(1, n_max + 1):
        orbits = enumerate_pair_orbits(n)
        if sum(o.size for o in orbits) != 1 << (2 * n + 2):
            return False, f"orbit sizes do not cover all pairs at n={n}"
        for o in orbits:
            if o.size not in (1, 2, 4):
                return False, f"orbit size {o.size} at n={n}"
            for p in o.members:
                if predicted_orbit(p, n) != o:
                    return False, f"prediction mismatch at n={n}, pair {p}"
    return True, f"n = 1..{n_max}, exhaustive"


@_check("C6", "spherical closed forms equal direct summation on full grids")
def check_spherical_grids(n_max=4, lemma_n_max=10):
    for n in range(1, n_max + 1):
        for rep in closed_vs_direct_grids(n):
            if not rep.agree:
                return False, f"family {rep.family} disagrees at n={n}"
    for n in range(0, lemma_n_max + 1):
        for u in range(1 << n):
            if subset_sum_lemma(u, n) != (1 if u == 0 else 0):
                return False, f"subset-sum lemma fails at n={n}, U={u:b}"
    return True, f"grids n = 1..{n_max}, lemma n <= {lemma_n_max}"


@_check("C7", "intertwiner isometry: dimensions, round trip, inner products")
def check_frobenius(pairs=((1, 1), (1, 0), (2, 2), (2, 1))):
    for n, m in pairs:
        for r1 in irreps(n):
            for r2 in irreps(n):
                for th in irreps(m):
                    ctx = FrobeniusContext(n, m, r1, r2, th)
                    d = diagonal_invariant_dim(r1, r2, th)
                    he = ctx.hom_triple_eta()
                    hs = ctx.hom_res_theta_prime()
                    inv = ctx.invariant_tensors()
                    where = f"(n,m)=({n},{m}), triple ({r1}, {r2}, {th})"
                    if not he.dimension == hs.dimension == len(inv) == d:
                        return False, f"dimension mismatch at {where}"
                    tildes = [ctx.tilde(t) for t in he.basis]
                    for t, tt in zip(he.basis, tildes):
                        if ctx.hat(tt) != ScaledMatrix(0, t):
                            return False, f"hat(tilde) != id at {where}"
                    for s in hs.basis:
                        if ctx.tilde(ctx.hat(s)) != ScaledMatrix(0, s):
                            return False, f"tilde(hat) != id at {where}"
                    for i, ti in enumerate(he.basis):
                        for j, tj in enumerate(he.basis):
                            if scaled_hs_inner(tildes[i], tildes[j]) != hs_inner(ti, tj):
                                return False, f"isometry fails at {where}"
    return True, f"(n,m) in {tuple(pairs)}, all irrep triples"


@_check("C8", "character and convolution Gelfand verdicts agree")
def check_method_agreement(pairs=((1, 1), (2, 1), (2, 2), (3, 2), (3, 3))):
    for n, m in pairs:
        a = gelfand_check_characters(n, m).gelfand
        b = gelfand_check_biinvariant(n, m)
        if a != b:
            return False, f"methods disagree at (n,m)=({n},{m}): {a} vs {b}"
    return True, f"(n,m) in {tuple(pairs)}"


@_check("C9", "matrix-model traces match characters; coefficient identities hold")
def check_oracles(trace_n_max=4, coeff_n_max=2):
    for n in range(0, trace_n_max + 1):
        for lab in irreps(n):
            rep = build_matrix_rep(lab)
            for cls in conjugacy_classes(n):
                g = cls.representative
                if rep.image(g).trace() != character_value(lab, g):
                    return False, f"trace mismatch for {format_label(lab)} at {g}"
    for n in range(0, coeff_n_max + 1):
        report = matrix_coefficient_checks(n)
        if not report.ok:
            return False, f"coefficient identity failures at n={n}: {report.failures[:3]}"
    return True, f"traces n <= {trace_n_max}, coefficients n <= {coeff_n_max}"


@_check("D1", "extended ranges: gelfand n=7, sampled orbits n=6,7")
def check_deep_extras(seed=0, samples=10_000):
    for n, m in ((7, 7), (7, 6)):
        r = gelfand_check_characters(n, m)
        if r.gelfand != (m == n or n % 2 == 1):
            return False, f"verdict at (n,m)=({n},{m})"
    rng = random.Random(seed)
    for n in (6, 7):
        for _ in range(samples):
            p = tuple(
                CliffordElement(n, rng.choice((1, -1)), rng.randrange(1 << n))
                for _ in range(2)
            )
            if predicted_orbit(p, n) != orbit_of(p, n):
                return False, f"orbit mismatch at n={n}, pair {p}"
    return True, f"gelfand n=7; {samples} sampled pairs at n=6,7 (seed {seed})"


LEVELS = ("smoke", "desk", "deep")


def run_suite(level="desk", seed=0):
    """Run the reproduction checks for the given effort level."""
    if level not in LEVELS:
        raise ValueError(f"unknown level {level!r}; expected one of {LEVELS}")
    if level == "smoke":
        checks = [
            check_gelfand_equal(n_max=2),
            check_gelfand_drop(n_max=2),
            check_tensor_tables(even_ns=(2,), odd_ns=(3,)),
            check_restriction_rules(n_max=3),
            check_orbits(n_max=2),
            check_spherical_grids(n_max=2, lemma_n_max=6),
            check_frobenius(pairs=((1, 1), (1, 0))),
            check_method_agreement(pairs=((1, 1), (2, 1))),
            check_oracles(trace_n_max=2, coeff_n_max=1),
        ]
    else:
        checks = [
            check_gelfand_equal(),
            check_gelfand_drop(),
            check_tensor_tables(),
            check_restriction_rules(),
            check_orbits(),
            check_spherical_grids(),
            check_frobenius(),
            check_method_agreement(),
            check_oracles(),
        ]
        if level == "deep":
            checks.append(check_deep_extras(seed=seed))
    return checks
