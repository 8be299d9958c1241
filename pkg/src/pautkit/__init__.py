"""Permutation automorphism groups, fixed subcodes and involution
witnesses for binary linear codes at desk scale."""

from .autgroup import (
    PAutReport,
    StabilizerChain,
    automorphisms,
    find_automorphism_outside,
    is_automorphism,
    is_group_code,
    is_quasi_group_code,
    paut,
    quasi_group_witness,
)
from .census import (
    CensusSlice,
    enumerate_invariant,
    enumerate_sigma_invariant,
    enumerate_subspaces,
    gaussian_binomial,
    invariant_subspace_count,
    shard,
    sigma_invariant_count,
)
from .errors import InvalidInput, NotFixed, NotInvariant, TooLarge
from .fixed import (
    FixedDecomposition,
    TSet,
    alpha_x,
    decompose,
    extra_automorphism,
    extra_automorphism_with_path,
    fixed_point_witness,
    fixed_subcode,
    t_set,
    t_sigma,
)
from .gf2 import (
    LinearCode,
    Word,
    format_code,
    parse_code,
    read_code,
    rref,
    weight,
    write_code,
)
from .perm import (
    Perm,
    apply,
    canonical_sigma,
    compose,
    conjugate,
    cycle_type,
    fixed_points,
    generate,
    image_code,
    inverse,
    involutions,
    is_fixed_point_free,
    is_involution,
    pair_product,
)
from .verify import (
    CHECKS,
    Counterexample,
    VerifyReport,
    conjecture_search,
    pairing_group_is_everything,
)

__version__ = "0.1.0"
