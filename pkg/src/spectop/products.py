"""Tame primes of products and the image operators for canonical maps.

For a finite set E the image of Spec(prod R/p) -> Spec(R) is the union
of the up sets V(p), and the image of Spec(prod R_p) -> Spec(R) the
union of the down sets.  For the symbolic infinite families the images
gain exactly one limit point: the generic point over Z and GF(p)[x], the
maximal ideal on the axes ring.  Wild primes of the infinite products
are never materialized; only their contractions matter, and those are
pinned to the limit-point terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from . import maps, rings
from . import spectrum as sp
from . import topology as top
from .errors import (
    BadSlotError,
    KindMismatchError,
    NonEnumerableError,
    UnsupportedError,
    UnsupportedSymbolicError,
)
from .primes import USE_ACTIVE, prime_factors
from .rings import (
    El,
    IntegerRing,
    PolyRingOverPrimeField,
    Product,
    RingExpr,
    TupleEl,
)
from .spectrum import (
    CofiniteClosed,
    CofiniteMin,
    EmptySet,
    Explicit,
    FpxMax,
    PrimePoint,
    SpecSubset,
    TamePrime,
    Whole,
    ZMax,
)

QUOTIENT = "quotient"
LOCAL = "local"


def unit_idempotent(k: int, R: Product) -> El:
    """e_k: 1 in slot k, 0 elsewhere; e_k * e_k = e_k."""
    if not isinstance(R, Product):
        raise KindMismatchError("unit idempotents live in product rings")
    if not 0 <= k < len(R.factors):
        raise BadSlotError(f"slot {k} out of range for {R}")
    return TupleEl(
        tuple(
            rings.one(f) if i == k else rings.zero(f) for i, f in enumerate(R.factors)
        )
    )


def direct_sum_locus(R: Product) -> SpecSubset:
    """V(direct sum ideal): the wild primes.  Empty for finite products."""
    if not isinstance(R, Product):
        raise KindMismatchError("expected a product ring")
    # The direct sum of finitely many factors contains sum(e_k) = 1.
    total = rings.zero(R)
    for k in range(len(R.factors)):
        total = rings.add(R, total, unit_idempotent(k, R))
    if total != rings.one(R):
        raise AssertionError("idempotents of a finite product must sum to 1")
    return EmptySet(R)


def tame_contract(
    p: TamePrime,
    R: Product | None,
    source: RingExpr,
    m: maps.RingMapSpec,
) -> PrimePoint:
    """Contraction of a tame prime along a canonical map into a product."""
    if not isinstance(p, TamePrime):
        raise KindMismatchError("expected a tame prime")
    if maps.map_source(m) != source:
        raise KindMismatchError("map source does not match the given ring")
    if R is not None:
        sp.validate_point(p, R)
    return maps.contract(m, p)


def quotient_product_image(R: RingExpr, E: SpecSubset) -> SpecSubset:
    """Image of Spec(prod_{p in E} R/p) -> Spec(R)."""
    if R != E.ring:
        raise KindMismatchError("subset does not live over the given ring")
    if isinstance(E, (EmptySet, Whole)):
        return E
    if isinstance(E, Explicit):
        out: SpecSubset = EmptySet(R)
        for p in E.points:
            out = sp.subset_union(out, top.up_set(p, R))
        return out
    if isinstance(E, CofiniteClosed):
        if E.with_generic:
            # The factor R/(0) is R itself, contributing all of V(0).
            return Whole(R)
        # Maximal-point branch: the image is E plus the generic point; an
        # element avoiding every member of E is invertible in the product.
        return sp.cofinite_closed(R, E.excluded, True)
    if isinstance(E, CofiniteMin):
        # Axes branch: the image is E plus the maximal ideal; the top
        # point, if present, only contributes V(m) = {m} again.
        return sp.cofinite_min(R, E.excluded, True)
    raise UnsupportedSymbolicError(f"no image rule for {sp.subset_str(E)}")


def local_product_image(R: RingExpr, E: SpecSubset) -> SpecSubset:
    """Image of Spec(prod_{p in E} R_p) -> Spec(R)."""
    if R != E.ring:
        raise KindMismatchError("subset does not live over the given ring")
    if isinstance(E, (EmptySet, Whole)):
        return E
    if isinstance(E, Explicit):
        out: SpecSubset = EmptySet(R)
        for p in E.points:
            out = sp.subset_union(out, top.down_set(p, R))
        return out
    if isinstance(E, CofiniteClosed):
        return sp.cofinite_closed(R, E.excluded, True)
    if isinstance(E, CofiniteMin):
        if E.with_top:
            # The factor R_m is R itself; everything survives.
            return Whole(R)
        return sp.cofinite_min(R, E.excluded, True)
    raise UnsupportedSymbolicError(f"no image rule for {sp.subset_str(E)}")


def brute_force_image(R: RingExpr, E: SpecSubset, kind: str) -> SpecSubset:
    """Oracle: enumerate the product's tame primes and contract each.

    Goes through the order correspondences Spec(R/p) = {q >= p} and
    Spec(R_p) = {q <= p}; agrees with the formula branch on finite
    inputs.
    """
    if kind not in (QUOTIENT, LOCAL):
        raise UnsupportedError(f"unknown image kind {kind!r}")
    if not sp.is_enumerable(R):
        raise NonEnumerableError("the oracle needs an enumerable spectrum")
    if not isinstance(E, (EmptySet, Explicit)):
        raise NonEnumerableError("the oracle needs a finite subset")
    if kind == QUOTIENT:
        m: maps.RingMapSpec = maps.CanonicalIntoQuotientProduct(R, E)
    else:
        m = maps.CanonicalIntoLocalProduct(R, E)
    if isinstance(E, EmptySet):
        return EmptySet(R)
    image = {maps.contract(m, q) for q in maps.tame_points(m)}
    return sp.explicit(R, image)


def is_unit_in_quotient_product(
    r: El, E: SpecSubset, R: RingExpr, limit=USE_ACTIVE
) -> bool:
    """Whether the image of r in prod_{p in E} R/p is invertible.

    Equivalent to r avoiding every member of E; over Z this reads "no
    prime factor of r lies in E".
    """
    r = rings.normalize(r, R)
    if R != E.ring:
        raise KindMismatchError("subset does not live over the given ring")
    if isinstance(E, EmptySet):
        return True
    if isinstance(E, Explicit):
        return not any(sp.point_contains(p, r, R, limit) for p in E.points)
    if isinstance(E, Whole):
        return rings.is_unit(r, R)
    if isinstance(E, CofiniteClosed):
        if isinstance(R, IntegerRing):
            if r.v == 0:
                return False
            if abs(r.v) == 1:
                return True
            return all(ZMax(p) in E.excluded for p in prime_factors(r.v, limit))
        if isinstance(R, PolyRingOverPrimeField):
            from . import gfpoly

            if r.coeffs == ():
                return False
            if gfpoly.deg(r.coeffs) == 0:
                return True
            return all(
                FpxMax(f) in E.excluded for f, _ in gfpoly.factor(r.coeffs, R.p)
            )
    if isinstance(E, CofiniteMin):
        # A nonunit of the axes ring vanishes on cofinitely many axes,
        # so it dies in some retained factor.
        return rings.constant_term(r) != 0
    raise UnsupportedSymbolicError(f"no unit rule for {sp.subset_str(E)}")


def _nilpotent_by_squaring(R: RingExpr, r: El, rounds: int = 8) -> bool:
    """Oracle nilpotence test: square until zero or the round budget ends."""
    cur = rings.normalize(r, R)
    for _ in range(rounds):
        if cur == rings.zero(R):
            return True
        cur = rings.mul(R, cur, cur)
    return cur == rings.zero(R)


def nilradical_product_law_check(R: Product) -> bool:
    """Concrete check that nilpotents of a finite product are componentwise.

    (a) On a generated element sample, nilpotence by repeated squaring
    agrees with the conjunction of componentwise nilpotence tests.
    (b) The minimal tame primes are Zariski dense in the enumerated
    spectrum.  Both always hold for finite products; a failure flags an
    engine bug.
    """
    if not isinstance(R, Product):
        raise KindMismatchError("expected a product ring")
    pts = sp.spec_points(R)
    rng = Random(0x5EED)
    sample = rings.sample_elements(R, rng, 40)
    sample.append(rings.zero(R))
    sample.append(rings.one(R))
    for k in range(len(R.factors)):
        sample.append(unit_idempotent(k, R))
    for t in sample:
        product_side = _nilpotent_by_squaring(R, t)
        component_side = all(
            rings.is_nilpotent(x, f) for x, f in zip(t.items, R.factors)
        )
        if product_side != component_side:
            return False
    minimal = [
        p
        for p in pts
        if not any(q != p and sp.leq_specialization(q, p, R) for q in pts)
    ]
    dense = top.zariski_closure(sp.explicit(R, minimal)) == sp.whole(R)
    return dense


@dataclass(frozen=True)
class ImageReport:
    """Image versus closure for one canonical map, with strictness witness."""

    image: SpecSubset
    closure: SpecSubset
    topology: str
    strict: bool
    witness: PrimePoint | None


def strictness_demo(R: RingExpr, E: SpecSubset, topology: str) -> ImageReport:
    """Compare Im pi* with the matching closure and exhibit a gap point.

    The quotient-product image is compared with the Zariski closure, the
    localization-product image with the flat closure.
    """
    if topology == top.ZARISKI:
        image = quotient_product_image(R, E)
        cl = top.zariski_closure(E, R)
    elif topology == top.FLAT:
        image = local_product_image(R, E)
        cl = top.flat_closure(E, R)
    else:
        raise UnsupportedError(f"strictness compares zariski or flat, not {topology!r}")
    strict = image != cl
    witness: PrimePoint | None = None
    if strict:
        gap = sp.subset_difference(cl, image)
        pts = sp.subset_points(gap)
        if not pts:
            raise AssertionError("strict inclusion must leave a witness")
        witness = pts[0]
    return ImageReport(image=image, closure=cl, topology=topology, strict=strict, witness=witness)
