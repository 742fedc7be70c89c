"""The coordinate-axes local rings and their verification toolkit.

build_supplement(K, n) constructs K[x_1..x_n]/(x_i x_k : i != k)
localized at (x_1..x_n): the local ring at the origin of n coordinate
axes.  Its minimal primes are the ideals I_k = (x_i : i != k), one per
axis, the defining ideal is their intersection, the ring is reduced of
Krull dimension one, and every prime containing an intersection of
minimal primes contains one of them (infinite prime absorbance).  All
four facts are checked here at desk scale against brute-force oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import covers, rings
from . import spectrum as sp
from .errors import (
    BadArityError,
    NonEnumerableError,
    SpectrumTooLargeError,
    TooManyVarsError,
    UnsupportedError,
)
from .rings import (
    IntegerRing,
    LocalizedAtIrrelevant,
    ModRing,
    MonomialIdeal,
    MonomialQuotient,
    PolyRingOverPrimeField,
    PrimeField,
    Product,
    RationalField,
    RingExpr,
    SymbolicSupplement,
)
from .spectrum import MonoPrime, PrimePoint

SPECTRUM_BOUND = 20


def supplement_gens(n: int) -> frozenset[tuple[int, ...]]:
    """Exponent vectors of all products x_i x_k with i < k <= n."""
    gens = set()
    for i, k in combinations(range(1, n + 1), 2):
        exp = [0] * k
        exp[i - 1] = 1
        exp[k - 1] = 1
        gens.add(tuple(exp))
    return frozenset(gens)


def build_supplement(field: PrimeField | RationalField, n: int) -> LocalizedAtIrrelevant:
    """The n-axes local ring; n = 1 degenerates to K[x]_(x)."""
    if n < 1:
        raise BadArityError("the axes construction needs n >= 1")
    inner = rings.monomial_quotient(field, n, supplement_gens(n))
    return rings.localized(inner)


def supplement_is_degenerate(n: int) -> bool:
    """n = 1 gives the zero ideal, a valuation-like ring the statements skip."""
    return n == 1


def minimal_primes_monomial(
    ideal, nvars: int, check: bool = True
) -> list[MonoPrime]:
    """Minimal primes of a monomial ideal, as minimal vertex covers.

    With check=True (the default) the result is compared against the
    2^nvars subset-scan oracle, which caps nvars; pass check=False to
    skip the oracle.
    """
    gens = ideal.gens if isinstance(ideal, MonomialIdeal) else frozenset(ideal)
    edges = [rings.mono_support(g) for g in gens]
    fast = covers.minimal_covers(edges, nvars)
    if check:
        if nvars > covers.ORACLE_VAR_BOUND:
            raise TooManyVarsError(
                f"{nvars} variables exceeds the oracle bound; pass check=False"
            )
        oracle = covers.brute_force_minimal_covers(edges, nvars)
        if fast != oracle:
            raise AssertionError(
                f"cover enumeration disagrees with the subset oracle on {gens}"
            )
    return [MonoPrime(c) for c in fast]


def verify_intersection(n: int, field: PrimeField | RationalField) -> bool:
    """Whether (x_i x_k : i != k) equals the intersection of the I_k."""
    if n < 1:
        raise BadArityError("need n >= 1")
    if n > 12:
        raise TooManyVarsError("intersection fold is capped at n = 12")
    ambient = rings.monomial_quotient(field, n, frozenset())
    axis_ideals = []
    for k in range(1, n + 1):
        exps = {(0,) * (i - 1) + (1,) for i in range(1, n + 1) if i != k}
        axis_ideals.append(rings.monomial_ideal(exps))
    meet = rings.ideal_intersect_all(axis_ideals, ambient)
    return meet == MonomialIdeal(supplement_gens(n))


def krull_dim(R: RingExpr) -> int:
    """Longest chain of primes: enumerated when possible, else by formula."""
    if sp.is_enumerable(R):
        pts = sp.spec_points(R)
        below = {
            p: [q for q in pts if q != p and sp.leq_specialization(q, p, R)]
            for p in pts
        }
        memo: dict[PrimePoint, int] = {}

        def depth(p: PrimePoint) -> int:
            if p not in memo:
                memo[p] = 1 + max(depth(q) for q in below[p]) if below[p] else 0
            return memo[p]

        return max((depth(p) for p in pts), default=0)
    if isinstance(R, MonomialQuotient):
        return rings.quotient_dim(R)
    if isinstance(R, (IntegerRing, PolyRingOverPrimeField)):
        return 1
    if isinstance(R, SymbolicSupplement):
        return 1
    raise NonEnumerableError(f"cannot chase chains in {R}")


def is_reduced(R: RingExpr) -> bool:
    """Whether the nilradical vanishes."""
    if isinstance(R, (IntegerRing, RationalField, PrimeField, PolyRingOverPrimeField)):
        return True
    if isinstance(R, ModRing):
        return all(e == 1 for _, e in R.factorization)
    if isinstance(R, (MonomialQuotient, LocalizedAtIrrelevant, SymbolicSupplement)):
        # Square-free generators force a radical defining ideal.
        return True
    if isinstance(R, Product):
        return all(is_reduced(f) for f in R.factors)
    raise UnsupportedError(f"cannot decide reducedness of {R}")


# ---------------------------------------------------------------------------
# Prime absorbance (P.Z.) and prime avoidance (C.P.)
# ---------------------------------------------------------------------------


def _family_intersection_contained(
    family: list[PrimePoint], q: PrimePoint, R: RingExpr
) -> bool:
    """Whether the intersection of the family's ideals sits inside q's ideal."""
    if isinstance(R, Product):
        inner = [p.inner for p in family if p.slot == q.slot]
        if not inner:
            # The intersection is full in q's slot, and no proper ideal
            # of the factor contains the whole factor.
            return False
        return _family_intersection_contained(inner, q.inner, R.factors[q.slot])
    ideals = [sp.point_ideal(p, R) for p in family]
    meet = rings.ideal_intersect_all(ideals, R)
    return rings.ideal_contains(sp.point_ideal(q, R), meet, R)


def absorbance_holds(points: list[PrimePoint], R: RingExpr) -> bool:
    """Infinite prime absorbance over an explicit family of primes.

    For every nonempty subfamily F and every prime q in the list, if the
    intersection of F is contained in q then some member of F is.  The
    subset walk shares intersection prefixes, so each node costs one
    ideal intersection.
    """
    pts = list(points)
    n = len(pts)
    if isinstance(R, Product):
        return _absorbance_product(pts, R)
    ideals = [sp.point_ideal(p, R) for p in pts]
    below = [
        sum(1 << i for i in range(n) if sp.leq_specialization(pts[i], pts[j], R))
        for j in range(n)
    ]

    def walk(i: int, mask: int, meet) -> bool:
        if i == n:
            if mask == 0:
                return True
            for j in range(n):
                if rings.ideal_contains(ideals[j], meet, R) and not (below[j] & mask):
                    return False
            return True
        if not walk(i + 1, mask, meet):
            return False
        nxt = ideals[i] if meet is None else rings.ideal_intersect(meet, ideals[i], R)
        return walk(i + 1, mask | (1 << i), nxt)

    return walk(0, 0, None)


def _absorbance_product(pts: list[PrimePoint], R: Product) -> bool:
    for size in range(1, len(pts) + 1):
        for family in combinations(pts, size):
            fam = list(family)
            for q in pts:
                if _family_intersection_contained(fam, q, R):
                    if not any(sp.leq_specialization(p, q, R) for p in fam):
                        return False
    return True


def _degree_le2_members(q: PrimePoint, R: RingExpr):
    """Monomials of total degree <= 2 lying in q, for the union test."""
    if not isinstance(R, (MonomialQuotient, LocalizedAtIrrelevant)):
        return []
    nvars = R.nvars if isinstance(R, MonomialQuotient) else R.inner.nvars
    out = []
    exps = [(0,) * (i - 1) + (1,) for i in range(1, nvars + 1)]
    exps += [(0,) * (i - 1) + (2,) for i in range(1, nvars + 1)]
    for i, k in combinations(range(1, nvars + 1), 2):
        e = [0] * k
        e[i - 1] = 1
        e[k - 1] = 1
        exps.append(tuple(e))
    for e in exps:
        el = rings.mpoly_el(R, {e: 1})
        if rings.is_zero(R, el):
            continue
        if sp.point_contains(q, el, R):
            out.append(el)
    return out


def _union_covers_prime(q: PrimePoint, family: list[PrimePoint], R: RingExpr) -> bool:
    """Decidable fragment of "q is inside the union of the family".

    Tests the generators of q plus, on monomial rings, every monomial of
    degree <= 2 inside q.  This overapproximates union membership (sums
    of generators are not sampled), so avoidance verdicts are
    conservative; the fragment is exact on chains and on Z/n.
    """
    samples = sp.point_ideal_generators(q, R) + _degree_le2_members(q, R)
    for el in samples:
        if rings.is_zero(R, el):
            continue
        if not any(sp.point_contains(p, el, R) for p in family):
            return False
    return True


def avoidance_holds(points: list[PrimePoint], R: RingExpr) -> bool:
    """Prime-family avoidance over an explicit family, on the fragment above.

    Membership of every sample element in every listed prime is computed
    once; the subset sweep is then pure bitmask work.
    """
    pts = list(points)
    n = len(pts)
    sample_masks: list[list[int]] = []
    for q in pts:
        samples = sp.point_ideal_generators(q, R) + _degree_le2_members(q, R)
        masks = []
        for el in samples:
            if rings.is_zero(R, el):
                continue
            masks.append(
                sum(1 << i for i in range(n) if sp.point_contains(pts[i], el, R))
            )
        sample_masks.append(masks)
    above = [
        sum(1 << i for i in range(n) if sp.leq_specialization(pts[j], pts[i], R))
        for j in range(n)
    ]
    for family in range(1, 1 << n):
        for j in range(n):
            if all(mask & family for mask in sample_masks[j]):
                if not (above[j] & family):
                    return False
    return True


def _bounded_spec(R: RingExpr) -> list[PrimePoint]:
    pts = sp.spec_points(R)
    if len(pts) > SPECTRUM_BOUND:
        raise SpectrumTooLargeError(f"|Spec| = {len(pts)} exceeds {SPECTRUM_BOUND}")
    return pts


def pz_check(R: RingExpr) -> bool:
    """Infinite prime absorbance over the whole (enumerated) spectrum."""
    return absorbance_holds(_bounded_spec(R), R)


def cp_check(R: RingExpr) -> bool:
    """Prime avoidance over the whole (enumerated) spectrum, conservative."""
    return avoidance_holds(_bounded_spec(R), R)


# ---------------------------------------------------------------------------
# Full report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SupplementReport:
    """All four axes-ring statements checked for one (field, n)."""

    n: int
    field: str
    degenerate: bool
    intersection_ok: bool
    minimal_primes: tuple[MonoPrime, ...]
    dim: int
    reduced: bool
    pz_ok: bool

    @property
    def all_ok(self) -> bool:
        expected = tuple(
            MonoPrime(frozenset(range(1, self.n + 1)) - {k})
            for k in range(1, self.n + 1)
        )
        mins_match = set(self.minimal_primes) == set(expected) or self.degenerate
        return (
            self.intersection_ok
            and mins_match
            and self.dim == 1
            and self.reduced
            and self.pz_ok
        )


def supplement_report(
    field: PrimeField | RationalField, n: int, check: bool = True
) -> SupplementReport:
    ring = build_supplement(field, n)
    mins = minimal_primes_monomial(MonomialIdeal(ring.inner.gens), n, check=check)
    return SupplementReport(
        n=n,
        field=str(field),
        degenerate=supplement_is_degenerate(n),
        intersection_ok=verify_intersection(n, field),
        minimal_primes=tuple(mins),
        dim=krull_dim(ring),
        reduced=is_reduced(ring),
        pz_ok=pz_check(ring),
    )
