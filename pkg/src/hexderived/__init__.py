"""Third-type hex-derived networks HDN3, THDN3 and RHDN3.

Builds the networks from triangular-lattice meshes, computes degree-based
topological indices by direct edge summation, and checks published edge
partitions and closed-form index formulas against those computations.
"""

from .closed_forms import (
    REGISTRY,
    ClosedForm,
    Verdict,
    VerificationRow,
    evaluate_closed_form,
    rederive_polynomial,
    verify,
    verify_all,
)
from .constructions import (
    ConstructionError,
    Family,
    FamilyParam,
    build_family,
    build_hx,
    build_rhombus_mesh,
    build_triangular_mesh,
    enumerate_faces,
    octahedral_substitution,
)
from .graph import FaceKey, Graph, GraphError, GraphSummary, LatticeCoord, Orientation, VertexId, VertexKind
from .indices import (
    INDICES,
    IndexDomainError,
    IndexSpec,
    IndexValue,
    abc4,
    balaban,
    class_sum_index,
    compute_all,
    edge_sum_index,
    extended_indices,
    forgotten,
    ga5,
    randic,
    rezg1,
    rezg2,
    rezg3,
)
from .partitions import (
    Partition,
    compare_partitions,
    degree_partition,
    expected_partition,
    sum_partition,
)
from .polynomial import Poly
from .tables import TABLES, Mode

__version__ = "0.1.0"
