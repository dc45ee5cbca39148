"""Exact-arithmetic workbench for skew-symmetric cluster algebras of
geometric type: seed mutation, Laurent expansions, g-vectors, exchange
graphs, cluster complexes, and exhaustive theorem verification."""

from .exmatrix import (
    ExtendedExchangeMatrix,
    IceQuiver,
    SkewSymmetryError,
    from_ice_quiver,
    mutate_matrix,
    to_ice_quiver,
)
from .laurent import (
    InexactDivisionError,
    LaurentPoly,
    UnsupportedSubstitutionError,
    canonical_cmp,
    exact_div,
    substitute,
)
from .seed import (
    ClusterMonomial,
    LaurentPhenomenonError,
    Seed,
    apply_path,
    cluster_monomial,
    mutate_seed,
    reroot_cluster,
    reroot_expand,
)
from .gvec import GVector, check_sign_coherence, indices_along_path, pushforward_index
from .tropical import (
    PrincipalPattern,
    SeparationMismatchError,
    TropicalMonomial,
    f_polynomial,
    separation_eval,
    separated_variable_checked,
    tropical_eval,
    x_function,
)
from .explorer import (
    CanonicalSeedKey,
    ClusterComplex,
    ComparisonReport,
    ExchangeGraphRecord,
    TruncatedGraphError,
    canonical_key,
    cluster_complex,
    compare_patterns,
    explore,
)
from .verify import (
    VerificationReport,
    check_linear_independence,
    check_maximal_sets,
    check_not_laurent_monomial,
    check_proper_laurent,
    check_seed_determined,
    exact_rank,
)

__version__ = "0.1.0"
