"""Exact root-system, character and branching computations for exceptional dual pairs."""

from __future__ import annotations

__version__ = "0.1.0"

from .roots import (  # noqa: E402
    CartanType,
    Group,
    RootSystem,
    Weight,
    build_root_system,
    gl,
    identify_cartan_type,
    root_system,
    su2,
    weyl_dim,
)
from .characters import (  # noqa: E402
    Decomposition,
    DominantCharacter,
    LatticeMap,
    branch,
    decompose,
    invariant_dim,
    irreducible_character,
    littlewood_richardson,
    restrict_character,
    sym_power_character,
    tensor_decompose,
    trivial_character,
)
from .dualpair import (  # noqa: E402
    PRESETS,
    MarkedDiagram,
    integrability_exponent,
    restricted_root_data,
)
from .invariants import (  # noqa: E402
    dim_invariants_Kprime,
    dim_invariants_Ktilde,
    su2s_invariants_closed,
    su2s_invariants_oracle,
)
from .quaternionic import exact_sequence_ktype_diff, seesaw_multiplicity  # noqa: E402

__all__ = [
    "CartanType",
    "Decomposition",
    "DominantCharacter",
    "Group",
    "LatticeMap",
    "MarkedDiagram",
    "PRESETS",
    "RootSystem",
    "Weight",
    "__version__",
    "branch",
    "build_root_system",
    "decompose",
    "dim_invariants_Kprime",
    "dim_invariants_Ktilde",
    "exact_sequence_ktype_diff",
    "gl",
    "identify_cartan_type",
    "integrability_exponent",
    "invariant_dim",
    "irreducible_character",
    "littlewood_richardson",
    "restrict_character",
    "restricted_root_data",
    "root_system",
    "seesaw_multiplicity",
    "su2",
    "su2s_invariants_closed",
    "su2s_invariants_oracle",
    "sym_power_character",
    "tensor_decompose",
    "trivial_character",
    "weyl_dim",
]
