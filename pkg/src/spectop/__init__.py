"""Exact closures of subsets of prime spectra of concrete commutative rings.

The package computes Zariski, flat and patch closures of finite and
symbolically-infinite subsets of Spec(R) for a family of concrete rings,
together with the images of the induced maps Spec(prod R/p) -> Spec(R)
and Spec(prod R_p) -> Spec(R), density criteria, lying over, and the
coordinate-axes local rings that realize the flat-side extremes.  All
arithmetic is exact; everything is immutable and pure.
"""

from .construction import (
    SupplementReport,
    absorbance_holds,
    avoidance_holds,
    build_supplement,
    cp_check,
    is_reduced,
    krull_dim,
    minimal_primes_monomial,
    pz_check,
    supplement_gens,
    supplement_report,
    verify_intersection,
)
from .errors import (
    BadArityError,
    BadSlotError,
    FactorizationLimitError,
    KindMismatchError,
    LyingOverNotFoundError,
    NonEnumerableError,
    SpectopError,
    SpectrumTooLargeError,
    TooManyVarsError,
    UnsupportedError,
    UnsupportedMapError,
    UnsupportedSymbolicError,
)
from .maps import (
    CanonicalIntoLocalProduct,
    CanonicalIntoQuotientProduct,
    DiagonalIntoModProduct,
    QuotientMap,
    ResidueField,
    ResidueMap,
    RingMapSpec,
    contract,
    is_injective,
    laying_over,
    residue_field,
    residue_product_image,
)
from .products import (
    ImageReport,
    brute_force_image,
    direct_sum_locus,
    is_unit_in_quotient_product,
    local_product_image,
    nilradical_product_law_check,
    quotient_product_image,
    strictness_demo,
    tame_contract,
    unit_idempotent,
)
from .rings import (
    El,
    IdealRepr,
    IntegerRing,
    IntEl,
    LocalizedAtIrrelevant,
    ModEl,
    ModRing,
    MonomialIdeal,
    MonomialQuotient,
    MPolyEl,
    PolyEl,
    PolyRingOverPrimeField,
    PrimeField,
    PrincipalIdeal,
    Product,
    QQ,
    RatEl,
    RationalField,
    RingExpr,
    SymbolicSupplement,
    TupleEl,
    ZZ,
    ideal_intersect,
    ideal_intersect_all,
    ideal_member,
    is_nilpotent,
    is_regular,
    is_unit,
    localized,
    monomial_ideal,
    monomial_quotient,
    nilradical,
    normalize,
    poly_ring,
    prime_field,
    principal_ideal,
    product,
    symbolic_supplement,
    var_el,
    zmod,
)
from .spectrum import (
    CofiniteClosed,
    CofiniteMin,
    EmptySet,
    Explicit,
    FieldZero,
    FpxGeneric,
    FpxMax,
    MonoPrime,
    PrimePoint,
    SpecSubset,
    SuppMin,
    SuppTop,
    TamePrime,
    Whole,
    ZGeneric,
    ZmodPrime,
    ZMax,
    cofinite_closed,
    cofinite_min,
    d_locus,
    empty_set,
    enumerate_spec,
    explicit,
    leq_specialization,
    spec_points,
    subset_member,
    v_locus,
    whole,
)
from .topology import (
    FLAT,
    PATCH,
    ZARISKI,
    DensityCertificate,
    closure,
    density_criterion,
    down_set,
    flat_closure,
    is_dense,
    is_stable,
    patch_closure,
    up_set,
    zariski_closure,
)

__version__ = "0.1.0"
