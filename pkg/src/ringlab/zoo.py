"""The built-in ring zoo used by sweeps and the open-problem probe."""

from __future__ import annotations

from .dsl import parse_ring_spec
from .rings import RingDescriptor

BUILTIN_SPECS = tuple(
    [f"Zn({n})" for n in range(2, 13)]
    + [
        "Mat(2,Zn(2))",
        "Tri(2,Zn(2))",
        "Zn(2) x Zn(3)",
        "Zi7",
        "SkewS(3,2)",
    ]
)


def builtin_zoo() -> tuple[RingDescriptor, ...]:
    return tuple(parse_ring_spec(spec) for spec in BUILTIN_SPECS)


def builtin_finite_zoo() -> tuple[RingDescriptor, ...]:
    return tuple(r for r in builtin_zoo() if r.is_finite)
