"""wpnlab: witnessing partitions, certificates and censuses of H-free graphs."""

from .graphs import (  # noqa: F401
    Graph,
    Graph6Error,
    canonical_form,
    canonical_key,
    clique,
    contains_induced,
    cycle,
    empty,
    emit_graph6,
    is_isomorphic,
    parse_graph6,
    path,
    star,
)
from .families import (  # noqa: F401
    NAMED_FAMILIES,
    FamilySpec,
    NoFiniteBasisError,
    basis_of,
    family_subset,
    heavy_degree_check,
    is_restricted,
    member,
    named_forbidden_basis,
    s_statistic,
)
from .witnessing import (  # noqa: F401
    BudgetExhausted,
    Partition,
    PartitionCertificate,
    WitnessSequence,
    find_certificate,
    is_really_canonical,
    is_witnessing_sequence,
    theorem_certifier,
    theorem_sequence,
    verify_cycle_partition_claims,
    wpn,
)
from .sequences import (  # noqa: F401
    classify_sequence,
    enumerate_really_canonical_sequences,
)
from .counting import (  # noqa: F401
    SetPartition,
    UniformPartitionSampler,
    bell,
    c2l_lower_bound,
    f_star,
    labeled_cograph_count,
    partition_stats,
    sample_uniform_partition,
)
from .census import (  # noqa: F401
    CensusReport,
    ConfigMismatch,
    census,
    enumerate_labeled,
    enumerate_unlabeled,
    girth5_census,
)

__version__ = "0.1.0"
