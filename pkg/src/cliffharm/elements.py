"""Exact arithmetic of the Clifford group CL(n).

CL(n) = {+/- gamma_A : A subset of {1..n}} with the twisted multiplication

    e1*gamma_A . e2*gamma_B = e1*e2*(-1)^xi(A,B) gamma_{A xor B}

where xi(A, B) counts pairs (a, b) in A x B with a > b.  Subsets are stored
as machine-word bitmasks (bit i-1 <-> index i), so xi is a masked-popcount
loop and multiplication is a couple of integer operations.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

# Element arithmetic works up to degree 16; anything that enumerates the
# whole group (or G x G) is guarded separately.
MAX_DEGREE = 16
MAX_ENUM_DEGREE = 12


class DegreeMismatchError(ValueError):
    """Operands live in Clifford groups of different degrees."""


class GuardError(ValueError):
    """Requested degree exceeds the configured enumeration guard."""


def _check_degree(n: int, guard: int = MAX_DEGREE) -> None:
    if not 0 <= n <= guard:
        raise GuardError(f"degree {n} outside supported range [0, {guard}]")


def mask_of(subset) -> int:
    """Bitmask of an iterable of 1-based indices (ints pass through)."""
    if isinstance(subset, int):
        return subset
    m = 0
    for i in subset:
        m |= 1 << (i - 1)
    return m


def subset_of(mask: int) -> frozenset:
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def xi(a, b) -> int:
    """Number of pairs (x, y) in A x B with x > y."""
    am = mask_of(a)
    bm = mask_of(b)
    count = 0
    while am:
        low = am & -am
        count += (bm & (low - 1)).bit_count()
        am ^= low
    return count


def xi_sign(am: int, bm: int) -> int:
    """(-1)^xi(A,B) on raw masks; the hot-path version of xi."""
    s = 0
    while am:
        low = am & -am
        s ^= (bm & (low - 1)).bit_count()
        am ^= low
    return -1 if s & 1 else 1


@dataclass(frozen=True)
class CliffordElement:
    """A signed subset (sign, A) representing sign * gamma_A in CL(n)."""

    degree: int
    sign: int
    mask: int

    def __post_init__(self):
        _check_degree(self.degree)
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.mask >> self.degree:
            raise ValueError(
                f"subset {sorted(subset_of(self.mask))} not contained in X_{self.degree}"
            )

    @property
    def subset(self) -> frozenset:
        return frozenset(subset_of(self.mask))

    def __str__(self):
        return format_element(self)


def element(n: int, sign: int = 1, subset=()) -> CliffordElement:
    return CliffordElement(n, sign, mask_of(subset))


def identity(n: int) -> CliffordElement:
    return CliffordElement(n, 1, 0)


def multiply(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    if x.degree != y.degree:
        raise DegreeMismatchError(f"degrees differ: {x.degree} != {y.degree}")
    sign = x.sign * y.sign * xi_sign(x.mask, y.mask)
    return CliffordElement(x.degree, sign, x.mask ^ y.mask)


def inverse(x: CliffordElement) -> CliffordElement:
    k = x.mask.bit_count()
    sign = x.sign * (-1 if (k * (k - 1) // 2) & 1 else 1)
    return CliffordElement(x.degree, sign, x.mask)


def conjugate(x: CliffordElement, c: CliffordElement) -> CliffordElement:
    """c^-1 * x * c, by composed multiplications."""
    return multiply(multiply(inverse(c), x), c)


def conjugation_sign(a_mask: int, c_mask: int) -> int:
    """Closed form for gamma_C^-1 gamma_A gamma_C = s * gamma_A.

    s = (-1)^(|A||C| - |A & C|); used as an independent oracle for
    conjugate() and as the fast path in orbit enumeration.
    """
    e = a_mask.bit_count() * c_mask.bit_count() - (a_mask & c_mask).bit_count()
    return -1 if e & 1 else 1


def embed(x: CliffordElement, n: int) -> CliffordElement:
    if x.degree > n:
        raise DegreeMismatchError(f"cannot embed degree {x.degree} into degree {n}")
    return CliffordElement(n, x.sign, x.mask)


def enumerate_group(n: int):
    """All 2^(n+1) elements, sign-major then subset-as-integer ascending."""
    _check_degree(n, MAX_ENUM_DEGREE)
    return [
        CliffordElement(n, sign, mask)
        for sign in (1, -1)
        for mask in range(1 << n)
    ]


def element_index(x: CliffordElement) -> int:
    """Position of x in enumerate_group(x.degree)."""
    return ((x.sign < 0) << x.degree) | x.mask


def element_order_key(x: CliffordElement):
    return (x.sign < 0, x.mask)


def center(n: int):
    """{+/-1} for n even, plus {+/- gamma_Xn} for n odd."""
    _check_degree(n, MAX_ENUM_DEGREE)
    full = (1 << n) - 1
    zs = [identity(n), CliffordElement(n, -1, 0)]
    if n % 2 == 1:
        zs += [CliffordElement(n, 1, full), CliffordElement(n, -1, full)]
    return zs


@dataclass(frozen=True)
class ConjugacyClass:
    representative: CliffordElement
    members: tuple

    @property
    def size(self) -> int:
        return len(self.members)


@lru_cache(maxsize=None)
def conjugacy_classes(n: int):
    """Brute-force class partition (the closed form is the test oracle)."""
    elements = enumerate_group(n)
    seen = set()
    classes = []
    for x in elements:
        if (x.sign, x.mask) in seen:
            continue
        orbit = {conjugate(x, c) for c in elements}
        members = tuple(sorted(orbit, key=element_order_key))
        for m in members:
            seen.add((m.sign, m.mask))
        classes.append(ConjugacyClass(members[0], members))
    return tuple(classes)


@lru_cache(maxsize=None)
def class_representative_map(n: int):
    """element (sign, mask) -> class representative (sign, mask)."""
    rep = {}
    for cls in conjugacy_classes(n):
        key = (cls.representative.sign, cls.representative.mask)
        for m in cls.members:
            rep[(m.sign, m.mask)] = key
    return rep


# -- the triple-product group G x G x H -------------------------------------


@dataclass(frozen=True)
class TripleElement:
    """An element of CL(n) x CL(n) x CL(m), with CL(m) embedded in CL(n).

    g1, g2 have degree n; h has degree n but its subset lies in X_m.
    """

    g1: CliffordElement
    g2: CliffordElement
    h: CliffordElement
    subgroup_degree: int

    def __post_init__(self):
        n = self.g1.degree
        m = self.subgroup_degree
        if self.g2.degree != n or self.h.degree != n:
            raise DegreeMismatchError("triple components must share degree")
        if m not in (n, n - 1) and not (n == 0 and m == 0):
            raise ValueError(f"subgroup degree must be n or n-1, got m={m} for n={n}")
        if self.h.mask >> m:
            raise ValueError(f"h lies outside the embedded subgroup CL({m})")

    @property
    def degree(self) -> int:
        return self.g1.degree


def triple(g1, g2, h, m=None) -> TripleElement:
    if m is None:
        m = g1.degree
    return TripleElement(g1, g2, embed(h, g1.degree), m)


def triple_identity(n: int, m: int) -> TripleElement:
    return TripleElement(identity(n), identity(n), identity(n), m)


def triple_multiply(s: TripleElement, t: TripleElement) -> TripleElement:
    return TripleElement(
        multiply(s.g1, t.g1),
        multiply(s.g2, t.g2),
        multiply(s.h, t.h),
        s.subgroup_degree,
    )


def triple_inverse(t: TripleElement) -> TripleElement:
    return TripleElement(
        inverse(t.g1), inverse(t.g2), inverse(t.h), t.subgroup_degree
    )


def triple_action(t: TripleElement, p):
    """(g1, g2, h) . (g3, g4) = (g1 g3 g2^-1, g2 g4 h^-1)."""
    g3, g4 = p
    if g3.degree != t.degree or g4.degree != t.degree:
        raise DegreeMismatchError("pair degree does not match acting triple")
    return (
        multiply(multiply(t.g1, g3), inverse(t.g2)),
        multiply(multiply(t.g2, g4), inverse(t.h)),
    )


def enumerate_triple_group(n: int, m: int):
    """All of CL(n) x CL(n) x CL(m) in deterministic (g1, g2, h) order."""
    g_elems = enumerate_group(n)
    h_elems = [embed(h, n) for h in enumerate_group(m)]
    return [
        TripleElement(g1, g2, h, m)
        for g1, g2, h in product(g_elems, g_elems, h_elems)
    ]


def diagonal_subgroup(n: int, m: int):
    """H~ = {(h, h, h) : h in CL(m)} inside CL(n) x CL(n) x CL(m)."""
    return [
        TripleElement(embed(h, n), embed(h, n), embed(h, n), m)
        for h in enumerate_group(m)
    ]


# -- textual element syntax -------------------------------------------------

_ELEMENT_RE = _re.compile(r"^([+-])g\{([0-9,\s]*)\}$")


def parse_element(text: str, n: int) -> CliffordElement:
    """Parse `+g{1,3}` / `-g{}` syntax."""
    m = _ELEMENT_RE.match(text.strip())
    if m is None:
        raise ValueError(f"malformed element {text!r}; expected e.g. '+g{{1,3}}'")
    sign = 1 if m.group(1) == "+" else -1
    body = m.group(2).strip()
    indices = [int(tok) for tok in body.split(",") if tok.strip()] if body else []
    if any(i < 1 or i > n for i in indices):
        raise ValueError(f"index out of range in {text!r} for CL({n})")
    return CliffordElement(n, sign, mask_of(indices))


def format_element(x: CliffordElement) -> str:
    body = ",".join(str(i) for i in sorted(x.subset))
    return f"{'+' if x.sign > 0 else '-'}g{{{body}}}"
