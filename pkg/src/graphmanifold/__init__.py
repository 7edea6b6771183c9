"""Homeomorphism and profinite-rigidity decisions for closed orientable
graph manifolds presented as decorated JSJ graphs."""

from .model import (
    BaseOrbifold,
    ConePoint,
    Edge,
    GluingMatrix,
    GraphManifold,
    MajorPiece,
    MinorPiece,
    MINOR,
    ValidationReport,
    mirror,
    reverse_end,
    validate,
    vertex_signature,
)
from .invariants import (
    Bipartition,
    bipartition,
    fiber_flip,
    is_residually_p,
    orbifold_euler_char,
    total_slope,
    twist_move,
)
from .decider import (
    HomeoWitness,
    IsoCandidate,
    ProfiniteWitness,
    Verdict,
    check_homeomorphic,
    check_profinite_iso,
    iso_candidates,
    kappa_solutions,
)
from .genus import (
    GenusResult,
    construct_scaled,
    is_profinitely_rigid,
    profinite_genus,
)
from .presentation import (
    BudgetExceeded,
    CensusVector,
    FiniteGroupSpec,
    Presentation,
    build_presentation,
    builtin_catalogue,
    count_homs,
    count_index_subgroups,
    export_text,
    group_elements,
    hom_census,
)
from .serialization import (
    ManifoldError,
    dumps_manifold,
    manifold_to_doc,
    parse_manifold,
)

__version__ = "0.1.0"
