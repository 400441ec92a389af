"""Large (3,2)-Motzkin paths, noncrossing linked partitions, and the
bijections between them, with exact counting and exhaustive generators.

The lattice paths use three level colors and two down colors, written
``U a b c x y``; the large variant bans the third level color on the
x-axis.  Partitions of {1,...,n} are stored as arc sets where every
vertex has at most one incoming arc and no two arcs cross.  The central
map sends a large path of length n to such a partition on n+1 vertices;
a second map doubles plain colored Motzkin paths onto large ones 2-to-1.
"""

from .bijection import (
    CaseTag,
    StructureError,
    classify_component,
    concat_merge,
    partition_to_path,
    path_to_partition,
)
from .counting import (
    IdentityCheck,
    IdentityReport,
    SequenceTable,
    large_motzkin_numbers,
    motzkin32_numbers,
    ncl_counts,
    schroder_numbers,
    verify_identities,
)
from .decompose import (
    AxisLevel,
    AxisSplit,
    DecomposeError,
    Elevated,
    OuterDecomposition,
    arc_reachable,
    concat_components,
    elevate,
    factor_components,
    outer_decompose,
    restrict_partition,
    split_axis_l3,
    strip_elevation,
)
from .doubling import double, project
from .enumerate import gen_large, gen_motzkin32, gen_ncl, gen_schroder
from .structures import (
    Arc,
    AxisF,
    AxisL3,
    BlockCrossing,
    CrossingArcs,
    InDegree,
    LargeMotzkinPath,
    LinkedPartition,
    MotzkinPath,
    NearlyDisjointViolation,
    NegativeHeight,
    NonzeroFinalHeight,
    ParseError,
    PartitionError,
    PathError,
    SchroderPath,
    Step,
    blocks_of,
    parse_partition,
    parse_path,
    render_ascii,
    render_partition,
    render_path,
    validate_large,
    validate_motzkin,
    validate_ncl,
    validate_ncl_blockwise,
    validate_schroder,
)

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "AxisF",
    "AxisL3",
    "AxisLevel",
    "AxisSplit",
    "BlockCrossing",
    "CaseTag",
    "CrossingArcs",
    "DecomposeError",
    "Elevated",
    "IdentityCheck",
    "IdentityReport",
    "InDegree",
    "LargeMotzkinPath",
    "LinkedPartition",
    "MotzkinPath",
    "NearlyDisjointViolation",
    "NegativeHeight",
    "NonzeroFinalHeight",
    "OuterDecomposition",
    "ParseError",
    "PartitionError",
    "PathError",
    "SchroderPath",
    "SequenceTable",
    "Step",
    "StructureError",
    "arc_reachable",
    "blocks_of",
    "classify_component",
    "concat_components",
    "concat_merge",
    "double",
    "elevate",
    "factor_components",
    "gen_large",
    "gen_motzkin32",
    "gen_ncl",
    "gen_schroder",
    "large_motzkin_numbers",
    "motzkin32_numbers",
    "ncl_counts",
    "outer_decompose",
    "parse_partition",
    "parse_path",
    "partition_to_path",
    "path_to_partition",
    "project",
    "render_ascii",
    "render_partition",
    "render_path",
    "restrict_partition",
    "schroder_numbers",
    "split_axis_l3",
    "strip_elevation",
    "validate_large",
    "validate_motzkin",
    "validate_ncl",
    "validate_ncl_blockwise",
    "validate_schroder",
    "verify_identities",
]
