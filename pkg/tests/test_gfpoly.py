from random import Random

import pytest

from spectop import gfpoly as gf


def rand_poly(rng, p, max_deg):
    return gf.trim([rng.randrange(p) for _ in range(rng.randint(0, max_deg + 1))], p)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_ring_identities(p):
    rng = Random(p)
    for _ in range(300):
        a = rand_poly(rng, p, 6)
        b = rand_poly(rng, p, 6)
        c = rand_poly(rng, p, 6)
        assert gf.add(a, b, p) == gf.add(b, a, p)
        assert gf.mul(a, b, p) == gf.mul(b, a, p)
        lhs = gf.mul(gf.add(a, b, p), c, p)
        rhs = gf.add(gf.mul(a, c, p), gf.mul(b, c, p), p)
        assert lhs == rhs


@pytest.mark.parametrize("p", [2, 3, 5])
def test_divmod_invariant(p):
    rng = Random(100 + p)
    for _ in range(300):
        a = rand_poly(rng, p, 8)
        b = rand_poly(rng, p, 5)
        if not b:
            continue
        q, r = gf.divmod_(a, b, p)
        assert gf.add(gf.mul(q, b, p), r, p) == a
        assert gf.deg(r) < gf.deg(b)


def test_gcd_divides_both():
    p = 3
    rng = Random(7)
    for _ in range(200):
        a = rand_poly(rng, p, 6)
        b = rand_poly(rng, p, 6)
        g = gf.gcd(a, b, p)
        if g:
            if a:
                assert gf.divides(g, a, p)
            if b:
                assert gf.divides(g, b, p)


# Number of monic irreducibles of degree d over GF(q), by the necklace
# count (1/d) * sum mu(e) q^(d/e).
IRR_COUNTS = {
    (2, 1): 2,
    (2, 2): 1,
    (2, 3): 2,
    (2, 4): 3,
    (2, 5): 6,
    (3, 1): 3,
    (3, 2): 3,
    (3, 3): 8,
    (5, 1): 5,
    (5, 2): 10,
}


@pytest.mark.parametrize("p,d", sorted(IRR_COUNTS))
def test_irreducible_counts(p, d):
    count = 0
    for tail_bits in range(p**d):
        coeffs = []
        x = tail_bits
        for _ in range(d):
            coeffs.append(x % p)
            x //= p
        f = tuple(coeffs) + (1,)
        if gf.is_irreducible(f, p):
            count += 1
    assert count == IRR_COUNTS[(p, d)]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_factor_reassembles_and_is_irreducible(p):
    rng = Random(31 + p)
    for _ in range(120):
        f = rand_poly(rng, p, 9)
        if gf.deg(f) < 1:
            continue
        factors = gf.factor(f, p)
        prod = (1,)
        for g, mult in factors:
            assert gf.is_irreducible(g, p)
            assert g[-1] == 1
            for _ in range(mult):
                prod = gf.mul(prod, g, p)
        assert prod == gf.monic(f, p)


def test_factor_known_example():
    # x^4 + x = x (x + 1) (x^2 + x + 1) over GF(2)
    f = (0, 1, 0, 0, 1)
    assert gf.factor(f, 2) == [
        ((0, 1), 1),
        ((1, 1), 1),
        ((1, 1, 1), 1),
    ]


def test_irreducibles_stream_is_sorted_and_irreducible():
    gen = gf.irreducibles(2)
    seen = [next(gen) for _ in range(10)]
    assert seen[0] == (0, 1)
    degrees = [gf.deg(f) for f in seen]
    assert degrees == sorted(degrees)
    for f in seen:
        assert gf.is_irreducible(f, 2)
