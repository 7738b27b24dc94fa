"""Exact GIT-fans and projective embeddings with small boundary."""

from .chambers import (
    ALL_SUBSETS,
    EXPLICIT,
    GitProblem,
    SupportFamily,
    WeightSystem,
    certified_bound,
    embedding_numbers,
    gitfan,
    gitfan_box_oracle,
    interior_cones,
    orbit_cones,
    sigma,
    weight_cone,
)
from .cone import Cone, cone_from_inequalities, cone_from_rays, faces
from .errors import (
    DataInconsistencyError,
    FanValidationError,
    GitFanError,
    ParseError,
    ValidationError,
)
from .fan import Fan, faces_poset, maximal_cones, validate_fan
from .geometry import (
    EmbeddingReport,
    canonical_class,
    cov,
    divisor_cones,
    embedding_report,
    is_locally_factorial,
    is_q_factorial,
    morphism_graph,
    picard,
    relevant_faces,
)
from .lattice import INFINITE, Sublattice
from .subgroup import (
    SubspaceDatum,
    existence_small_boundary,
    is_epimorphic_subspace,
    is_observable_subspace,
    kernel_epimorphic,
    kernel_observable,
)

__version__ = "0.1.0"
