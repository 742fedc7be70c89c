from itertools import combinations
from random import Random

import pytest

from conftest import AXES_F2, F2, F2X, enumerable_zoo, symbolic_zoo
from spectop import construction, maps, rings
from spectop import spectrum as sp
from spectop import topology as top
from spectop.errors import LyingOverNotFoundError, NonEnumerableError, WildPrimeError
from spectop.spectrum import (
    FieldZero,
    MonoPrime,
    SuppMin,
    SuppTop,
    TamePrime,
    ZGeneric,
    ZmodPrime,
    ZMax,
)

SUPP3 = construction.build_supplement(F2, 3)


def test_contract_examples():
    m = maps.QuotientMap(rings.ZZ, ZMax(5))
    assert maps.contract(m, FieldZero()) == ZMax(5)
    m2 = maps.DiagonalIntoModProduct(6, (2, 3))
    assert maps.contract(m2, TamePrime(0, ZmodPrime(2))) == ZmodPrime(2)
    m3 = maps.CanonicalIntoLocalProduct(rings.ZZ, sp.explicit(rings.ZZ, {ZMax(2)}))
    assert maps.contract(m3, TamePrime(0, ZGeneric())) == ZGeneric()


def test_contract_rejects_non_dominating_points():
    m = maps.QuotientMap(rings.ZZ, ZMax(5))
    with pytest.raises(WildPrimeError):
        maps.contract(m, ZMax(7))
    m2 = maps.CanonicalIntoLocalProduct(rings.ZZ, sp.explicit(rings.ZZ, {ZMax(2)}))
    with pytest.raises(WildPrimeError):
        maps.contract(m2, TamePrime(0, ZMax(3)))


def test_contract_monotone_within_slot():
    for R in enumerable_zoo():
        pts = sp.spec_points(R)
        E = sp.explicit(R, pts)
        m = maps.CanonicalIntoQuotientProduct(R, E)
        tames = maps.tame_points(m)
        for a in tames:
            for b in tames:
                if a.slot == b.slot and sp.leq_specialization(a.inner, b.inner, R):
                    ca, cb = maps.contract(m, a), maps.contract(m, b)
                    assert sp.leq_specialization(ca, cb, R)


def test_is_injective_examples():
    assert maps.is_injective(maps.DiagonalIntoModProduct(6, (2, 3)))
    assert not maps.is_injective(maps.DiagonalIntoModProduct(12, (2, 3)))
    E = sp.explicit(rings.ZZ, {ZMax(2), ZMax(3)})
    assert not maps.is_injective(maps.CanonicalIntoQuotientProduct(rings.ZZ, E))
    E2 = sp.cofinite_closed(rings.ZZ, {ZMax(11)}, False)
    assert maps.is_injective(maps.CanonicalIntoQuotientProduct(rings.ZZ, E2))
    assert maps.is_injective(maps.QuotientMap(rings.ZZ, ZGeneric()))
    assert not maps.is_injective(maps.QuotientMap(rings.ZZ, ZMax(7)))


def test_is_injective_axes_cases():
    mins = [p for p in sp.spec_points(SUPP3) if len(p.cover) == 2]
    all_mins = sp.explicit(SUPP3, mins)
    assert maps.is_injective(maps.CanonicalIntoQuotientProduct(SUPP3, all_mins))
    two = sp.explicit(SUPP3, mins[:2])
    assert not maps.is_injective(maps.CanonicalIntoQuotientProduct(SUPP3, two))
    assert maps.is_injective(maps.CanonicalIntoLocalProduct(SUPP3, all_mins))
    assert not maps.is_injective(maps.CanonicalIntoLocalProduct(SUPP3, two))
    assert maps.is_injective(
        maps.CanonicalIntoQuotientProduct(AXES_F2, sp.cofinite_min(AXES_F2, set(), False))
    )
    assert not maps.is_injective(
        maps.CanonicalIntoQuotientProduct(AXES_F2, sp.cofinite_min(AXES_F2, {3}, True))
    )


def test_laying_over_examples():
    m = maps.DiagonalIntoModProduct(6, (2, 3))
    q = maps.laying_over(m, ZmodPrime(2))
    assert q == TamePrime(0, ZmodPrime(2))
    assert maps.contract(m, q) == ZmodPrime(2)

    mins = sorted(
        (p for p in sp.spec_points(SUPP3) if len(p.cover) == 2),
        key=sp.point_sort_key,
    )
    E = sp.explicit(SUPP3, mins)
    m2 = maps.CanonicalIntoQuotientProduct(SUPP3, E)
    q2 = maps.laying_over(m2, mins[0])
    assert maps.contract(m2, q2) == mins[0]

    m3 = maps.QuotientMap(rings.ZZ, ZGeneric())
    assert maps.laying_over(m3, ZGeneric()) == ZGeneric()


def test_laying_over_round_trip_enumerable(rng):
    for R in enumerable_zoo():
        pts = sp.spec_points(R)
        if len(pts) > 8:
            continue
        E = sp.explicit(R, pts)
        for m in (
            maps.CanonicalIntoQuotientProduct(R, E),
            maps.CanonicalIntoLocalProduct(R, E),
        ):
            if not maps.is_injective(m):
                continue
            minimals = [
                p
                for p in pts
                if not any(q != p and sp.leq_specialization(q, p, R) for q in pts)
            ]
            for p in minimals:
                q = maps.laying_over(m, p)
                assert maps.contract(m, q) == p


def test_laying_over_symbolic_local(rng):
    for _ in range(25):
        excl = {ZMax(p) for p in rng.sample((2, 3, 5, 7, 11), rng.randint(0, 3))}
        E = sp.cofinite_closed(rings.ZZ, excl, rng.random() < 0.5)
        m = maps.CanonicalIntoLocalProduct(rings.ZZ, E)
        q = maps.laying_over(m, ZGeneric())
        assert maps.contract(m, q) == ZGeneric()
    E2 = sp.cofinite_min(AXES_F2, {2}, True)
    m2 = maps.CanonicalIntoLocalProduct(AXES_F2, E2)
    q2 = maps.laying_over(m2, SuppMin(2))
    assert q2 == TamePrime(SuppTop(), SuppMin(2))
    assert maps.contract(m2, q2) == SuppMin(2)


def test_laying_over_wild_only_case_refuses():
    E = sp.cofinite_closed(rings.ZZ, {ZMax(11)}, False)
    m = maps.CanonicalIntoQuotientProduct(rings.ZZ, E)
    assert maps.is_injective(m)
    with pytest.raises(NonEnumerableError):
        maps.laying_over(m, ZGeneric())


def test_laying_over_misuse():
    m = maps.DiagonalIntoModProduct(12, (2, 3))  # lcm 6 != 12
    with pytest.raises(LyingOverNotFoundError):
        maps.laying_over(m, ZmodPrime(2))
    m2 = maps.CanonicalIntoQuotientProduct(
        AXES_F2, sp.cofinite_min(AXES_F2, set(), False)
    )
    with pytest.raises(LyingOverNotFoundError):
        maps.laying_over(m2, SuppTop())


def test_residue_field_examples():
    assert maps.residue_field(rings.ZZ, ZMax(7)) == maps.ResidueField(
        "F_7", rings.prime_field(7)
    )
    assert maps.residue_field(rings.ZZ, ZGeneric()) == maps.ResidueField("Q", rings.QQ)
    rf = maps.residue_field(SUPP3, MonoPrime(frozenset({2, 3})))
    assert rf.ring is None and rf.label == "F_2(x1)"
    rf2 = maps.residue_field(AXES_F2, SuppMin(4))
    assert rf2.label == "F_2(x4)"
    rf3 = maps.residue_field(F2X, sp.FpxMax((1, 1, 1)))
    assert rf3.label == "GF(2^2)" and rf3.ring is None
    rf4 = maps.residue_field(AXES_F2, SuppTop())
    assert rf4.ring == F2


def test_patch_identity_finite():
    for R in enumerable_zoo():
        pts = sp.spec_points(R)
        if len(pts) > 8:
            continue
        for k in range(len(pts) + 1):
            for sub in combinations(pts, k):
                E = sp.explicit(R, sub)
                assert maps.residue_product_image(R, E) == top.patch_closure(E, R)


def test_patch_identity_symbolic(rng):
    for R in symbolic_zoo():
        for _ in range(70):
            E = _random_subset(R, rng)
            assert maps.residue_product_image(R, E) == top.patch_closure(E, R)


def _random_subset(R, rng):
    roll = rng.random()
    if roll < 0.1:
        return sp.empty_set(R)
    if roll < 0.2:
        return sp.whole(R)
    if roll < 0.5:
        return sp.explicit(R, sp.sample_points(R, rng, rng.randint(1, 4)))
    excl = sp.sample_points(R, rng, rng.randint(0, 3))
    flag = rng.random() < 0.5
    if isinstance(R, rings.SymbolicSupplement):
        return sp.cofinite_min(R, {p.k for p in excl if isinstance(p, SuppMin)}, flag)
    closed = {p for p in excl if not isinstance(p, (sp.ZGeneric, sp.FpxGeneric))}
    return sp.cofinite_closed(R, closed, flag)


@pytest.fixture
def rng():
    return Random(43)
