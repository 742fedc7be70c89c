from itertools import combinations
from random import Random

import pytest

from conftest import AXES_F2, F2, F2X, enumerable_zoo, symbolic_zoo
from spectop import construction, rings
from spectop import spectrum as sp
from spectop.errors import KindMismatchError, NonEnumerableError
from spectop.rings import IntEl, PolyEl
from spectop.spectrum import (
    CofiniteClosed,
    FieldZero,
    FpxMax,
    MonoPrime,
    SuppMin,
    SuppTop,
    TamePrime,
    ZGeneric,
    ZmodPrime,
    ZMax,
)

SUPP3 = construction.build_supplement(F2, 3)


def test_enumerate_zmod12():
    assert sp.spec_points(rings.zmod(12)) == [ZmodPrime(2), ZmodPrime(3)]


def test_enumerate_product_tame_primes():
    R = rings.product(rings.zmod(4), rings.zmod(9))
    assert sp.spec_points(R) == [
        TamePrime(0, ZmodPrime(2)),
        TamePrime(1, ZmodPrime(3)),
    ]


def test_enumerate_axes_ring():
    pts = set(sp.spec_points(SUPP3))
    expected = {
        MonoPrime(frozenset({2, 3})),
        MonoPrime(frozenset({1, 3})),
        MonoPrime(frozenset({1, 2})),
        MonoPrime(frozenset({1, 2, 3})),
    }
    assert pts == expected


def test_enumerate_symbolic_is_whole():
    for R in symbolic_zoo():
        assert sp.enumerate_spec(R) == sp.Whole(R)
        with pytest.raises(NonEnumerableError):
            sp.spec_points(R)


def test_enumerate_rejects_symbolic_product_factor():
    R = rings.Product((rings.ZZ, rings.zmod(4)))
    with pytest.raises(NonEnumerableError):
        sp.spec_points(R)


def test_positive_dim_quotient_not_enumerable():
    R = rings.monomial_quotient(F2, 2, {(1, 1)})
    with pytest.raises(NonEnumerableError):
        sp.spec_points(R)


def test_leq_examples():
    assert sp.leq_specialization(ZGeneric(), ZMax(7), rings.ZZ)
    assert not sp.leq_specialization(ZMax(5), ZMax(7), rings.ZZ)
    assert sp.leq_specialization(SuppMin(2), SuppTop(), AXES_F2)


def test_leq_is_partial_order_on_zoo():
    zoo = enumerable_zoo() + [
        construction.build_supplement(F2, 6),
        rings.product(rings.zmod(4), rings.zmod(9), rings.zmod(25), rings.zmod(49)),
    ]
    for R in zoo:
        pts = sp.spec_points(R)
        for p in pts:
            assert sp.leq_specialization(p, p, R)
        for p, q in combinations(pts, 2):
            if sp.leq_specialization(p, q, R) and sp.leq_specialization(q, p, R):
                assert p == q
        for p in pts:
            for q in pts:
                for r in pts:
                    if sp.leq_specialization(p, q, R) and sp.leq_specialization(q, r, R):
                        assert sp.leq_specialization(p, r, R)


def test_mono_prime_covers_hit_every_generator():
    for n in range(1, 7):
        R = construction.build_supplement(F2, n)
        for p in sp.spec_points(R):
            for g in R.inner.gens:
                assert rings.mono_support(g) & p.cover


def test_v_locus_integers():
    # Oracle: 12 = 2^2 * 3 by plain division.
    assert 12 % 2 == 0 and 12 % 3 == 0 and 12 % 5 != 0
    assert sp.v_locus(IntEl(12), rings.ZZ) == sp.explicit(rings.ZZ, {ZMax(2), ZMax(3)})
    assert sp.v_locus(IntEl(0), rings.ZZ) == sp.Whole(rings.ZZ)
    assert sp.v_locus(IntEl(1), rings.ZZ) == sp.empty_set(rings.ZZ)
    assert sp.v_locus(IntEl(-30), rings.ZZ) == sp.explicit(
        rings.ZZ, {ZMax(2), ZMax(3), ZMax(5)}
    )


def test_v_locus_axes_localized():
    x1 = rings.var_el(SUPP3, 1)
    # Brute force over the 4-point spectrum.
    expected = {p for p in sp.spec_points(SUPP3) if sp.point_contains(p, x1, SUPP3)}
    assert expected == {
        MonoPrime(frozenset({1, 3})),
        MonoPrime(frozenset({1, 2})),
        MonoPrime(frozenset({1, 2, 3})),
    }
    assert sp.v_locus(x1, SUPP3) == sp.explicit(SUPP3, expected)


def test_v_locus_symbolic_axes():
    x1 = rings.var_el(AXES_F2, 1)
    assert sp.v_locus(x1, AXES_F2) == sp.cofinite_min(AXES_F2, {1}, True)
    unit = rings.mpoly_el(AXES_F2, {(): 1, (0, 0, 1): 1})
    assert sp.v_locus(unit, AXES_F2) == sp.empty_set(AXES_F2)
    z = rings.mpoly_el(AXES_F2, {(1,): 1, (0, 1): 1})
    assert sp.d_locus(z, AXES_F2) == sp.explicit(AXES_F2, {SuppMin(1), SuppMin(2)})


def test_subset_member_examples():
    E1 = sp.cofinite_closed(rings.ZZ, {ZMax(11)}, False)
    assert not sp.subset_member(ZMax(11), E1)
    assert sp.subset_member(ZMax(13), E1)
    assert not sp.subset_member(ZGeneric(), E1)
    E2 = sp.cofinite_closed(rings.ZZ, {ZMax(11)}, True)
    assert sp.subset_member(ZGeneric(), E2)
    E3 = sp.cofinite_min(AXES_F2, {1}, False)
    assert sp.subset_member(SuppMin(4), E3)
    assert not sp.subset_member(SuppMin(1), E3)
    assert not sp.subset_member(SuppTop(), E3)


def test_complement_duality_enumerable(rng):
    for R in enumerable_zoo():
        pts = sp.spec_points(R)
        for e in rings.sample_elements(R, rng, 10):
            v = sp.v_locus(e, R)
            d = sp.d_locus(e, R)
            for p in pts:
                assert sp.subset_member(p, v) != sp.subset_member(p, d)


def test_complement_duality_symbolic(rng):
    for R in symbolic_zoo():
        for e in rings.sample_elements(R, rng, 20):
            v = sp.v_locus(e, R)
            d = sp.d_locus(e, R)
            for p in sp.sample_points(R, rng, 5):
                assert sp.subset_member(p, v) != sp.subset_member(p, d)


def test_v_locus_multiplicative(rng):
    for _ in range(200):
        r = IntEl(rng.randint(-300, 300))
        s = IntEl(rng.randint(-300, 300))
        if r.v == 0 or s.v == 0:
            continue
        lhs = sp.v_locus(rings.mul(rings.ZZ, r, s), rings.ZZ)
        rhs = sp.subset_union(sp.v_locus(r, rings.ZZ), sp.v_locus(s, rings.ZZ))
        assert lhs == rhs
    p = 2
    for _ in range(200):
        a = PolyEl(tuple(rng.randrange(p) for _ in range(rng.randint(1, 5))))
        b = PolyEl(tuple(rng.randrange(p) for _ in range(rng.randint(1, 5))))
        a, b = rings.normalize(a, F2X), rings.normalize(b, F2X)
        if a.coeffs == () or b.coeffs == ():
            continue
        lhs = sp.v_locus(rings.mul(F2X, a, b), F2X)
        rhs = sp.subset_union(sp.v_locus(a, F2X), sp.v_locus(b, F2X))
        assert lhs == rhs


def test_subset_algebra_by_membership(rng):
    R = rings.ZZ
    probes = sp.sample_points(R, rng, 40)
    subsets = [
        sp.empty_set(R),
        sp.whole(R),
        sp.explicit(R, {ZMax(2), ZMax(11)}),
        sp.explicit(R, {ZGeneric(), ZMax(3)}),
        sp.cofinite_closed(R, {ZMax(2)}, True),
        sp.cofinite_closed(R, {ZMax(11), ZMax(13)}, False),
    ]
    for A in subsets:
        comp = sp.subset_complement(A)
        for p in probes:
            assert sp.subset_member(p, A) != sp.subset_member(p, comp)
        for B in subsets:
            u = sp.subset_union(A, B)
            i = sp.subset_intersect(A, B)
            for p in probes:
                assert sp.subset_member(p, u) == (
                    sp.subset_member(p, A) or sp.subset_member(p, B)
                )
                assert sp.subset_member(p, i) == (
                    sp.subset_member(p, A) and sp.subset_member(p, B)
                )
            assert sp.subset_le(i, A) and sp.subset_le(A, u)


def test_subset_canonicalization():
    assert sp.cofinite_closed(rings.ZZ, set(), True) == sp.Whole(rings.ZZ)
    assert sp.cofinite_min(AXES_F2, set(), True) == sp.Whole(AXES_F2)
    assert sp.explicit(rings.ZZ, set()) == sp.empty_set(rings.ZZ)
    assert isinstance(sp.whole(rings.zmod(12)), sp.Explicit)
    assert isinstance(
        sp.cofinite_closed(rings.ZZ, set(), False), CofiniteClosed
    )


def test_point_validation():
    with pytest.raises(KindMismatchError):
        sp.validate_point(ZmodPrime(5), rings.zmod(12))
    with pytest.raises(KindMismatchError):
        sp.validate_point(ZMax(6), rings.ZZ)
    with pytest.raises(KindMismatchError):
        sp.validate_point(MonoPrime(frozenset({3})), SUPP3)
    with pytest.raises(KindMismatchError):
        sp.explicit(rings.ZZ, {FieldZero()})
    sp.validate_point(FpxMax((1, 1, 1)), F2X)
    with pytest.raises(KindMismatchError):
        sp.validate_point(FpxMax((1, 0, 1)), F2X)  # (x+1)^2 over GF(2)


@pytest.fixture
def rng():
    return Random(29)
