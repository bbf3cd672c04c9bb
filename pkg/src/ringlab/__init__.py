"""Exact ring-theory workbench: finite-ring property checkers, skew
polynomial arithmetic over Q(sqrt(-7)), constructive witnesses, and
certified diagonal reduction."""

from .errors import RinglabError
from .matrices import MatrixOverRing, identity, mat_invertible
from .properties import (
    DEFAULT_BUDGET,
    PROPERTY_IDS,
    PropertyVerdict,
    check_property,
    probe_unit_central_commutative,
    replay_witness,
)
from .proofs import (
    TransferWitness,
    prop1_unit_commute,
    prop2_witness,
    prop4_unit_sum,
    prop5_duo_witness,
    sr1_witness,
    theorem1_transfer,
)
from .quadratic import QuadraticValue, quad_norm, sigma
from .reduction import (
    ReductionCertificate,
    check_edr_small,
    diagonal_reduce,
    hermite_reduce,
    smith_form_integers,
    verify_certificate,
)
from .rings import (
    IntegerRing,
    MatrixRing,
    ModularRing,
    ProductRing,
    QuadraticFieldRing,
    QuadraticIntegerRing,
    RingDescriptor,
    SkewSubringS,
    UpperTriangularRing,
    enumerate_elements,
    is_commutative,
    make_ring,
    principal_ideal,
    two_sided_ideal,
    units,
)
from .dsl import format_element, parse_element, parse_ring_spec
from .zoo import BUILTIN_SPECS, builtin_finite_zoo, builtin_zoo

__all__ = [name for name in dir() if not name.startswith("_")]
