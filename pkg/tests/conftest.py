"""Shared fixtures: ring zoos and seeded generators."""

from random import Random

import pytest

from spectop import construction, rings

F2 = rings.prime_field(2)
F3 = rings.prime_field(3)
F2X = rings.poly_ring(2)
AXES_F2 = rings.symbolic_supplement(F2)
AXES_Q = rings.symbolic_supplement(rings.QQ)


def enumerable_zoo():
    """Enumerable rings with small spectra, mixed kinds."""
    return [
        rings.zmod(12),
        rings.zmod(8),
        rings.zmod(30),
        rings.zmod(210),
        rings.prime_field(5),
        rings.QQ,
        construction.build_supplement(F2, 1),
        construction.build_supplement(F2, 2),
        construction.build_supplement(F3, 3),
        construction.build_supplement(F2, 4),
        construction.build_supplement(rings.QQ, 5),
        rings.product(rings.zmod(4), rings.zmod(9)),
        rings.product(rings.zmod(6), rings.zmod(35)),
        rings.product(rings.zmod(4), rings.zmod(9), rings.zmod(25)),
        rings.product(construction.build_supplement(F2, 2), rings.zmod(4)),
        rings.product(rings.zmod(30), rings.prime_field(3)),
    ]


def symbolic_zoo():
    return [rings.ZZ, F2X, AXES_F2]


@pytest.fixture
def rng():
    return Random(20260811)
