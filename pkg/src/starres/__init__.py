"""Star products of multigraded free resolutions of monomial ideals."""

__version__ = "0.1.0"

from .complexes import (  # noqa: E402
    BasisElement,
    BettiTable,
    ChainMap,
    FreeComplex,
    betti_numbers,
    homology_dims,
    invariants_of_ideal,
    minimalize,
    strand,
    tensor_complex,
    validate_chain_map,
    validate_complex,
    verify_resolution,
)
from .field import PrimeField, RationalField, get_field, set_field, using_field  # noqa: E402
from .monomial import (  # noqa: E402
    Monomial,
    MonomialIdeal,
    UnitIdeal,
    divides,
    gcd,
    ideal_intersection,
    ideal_sum,
    lcm,
    minimal_generators,
    quotient,
    quotient_shift_ideal,
)
from .star import (  # noqa: E402
    comparison_map,
    iterated_star,
    principal_resolution,
    resolution,
    star,
    taylor_direct,
)
