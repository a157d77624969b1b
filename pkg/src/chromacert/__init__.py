"""Exact 2-/3-colorability deciders with checkable certificates.

A 2-coloring pairs with a uniform edge labeling (an orientation in which
every vertex is a pure source or pure sink) and with a signed adjacency
matrix free of mixed-sign rows; a 3-coloring pairs with a one-two uniform
labeling (adjacent vertices have distinct source/sink/mixed classes) and
the matching matrix predicate on row classes. The package decides both
properties exactly, converts freely between the certificate forms, and
cross-validates everything against brute-force enumeration oracles.
"""

from .coloring import (
    ChromaticClass,
    Coloring,
    OddCycleWitness,
    chromatic_class,
    is_proper,
    normalize_three_coloring,
    three_color,
    two_color,
    validate_coloring,
)
from .damatrix import (
    DAMatrix,
    MatrixKind,
    PolarityAssignment,
    RowClass,
    RowPairViolation,
    is_one_two_uniform_matrix,
    is_uniform_matrix,
    labeling_from_matrix,
    matrix_from_labeling,
    parse_matrix_json,
    parse_matrix_text,
    row_class,
    row_classes,
    ud_adjacency,
    validate_matrix,
)
from .errors import (
    BudgetExceededError,
    ChromacertError,
    DuplicateEdgeError,
    ForeignLabelingError,
    GraphFormatError,
    ImproperColoringError,
    InvalidMatrixError,
    InvalidParamsError,
    NotAntisymmetricError,
    NotOneTwoUniformError,
    NotUniformError,
    SelfLoopError,
    VertexRangeError,
)
from .formats import FORMATS, format_from_path, parse_graph, serialize_graph
from .generators import (
    GENERATOR_KINDS,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    generate,
    gnp,
    petersen,
    planted_three_partition,
)
from .graph import Graph
from .labeling import (
    EdgeLabeling,
    PairViolation,
    VertexClass,
    bipartition_from_labeling,
    classify_vertices,
    labeling_from_bipartition,
    labeling_from_three_coloring,
    parse_labeling,
    three_coloring_from_labeling,
    verify_one_two_uniform,
    verify_uniform,
    vertex_class,
)
from .oracle import (
    OracleReport,
    oracle_k_colorable,
    oracle_one_two_uniform_exists,
    oracle_uniform_labeling_exists,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ChromacertError",
    "ChromaticClass",
    "Coloring",
    "DAMatrix",
    "DuplicateEdgeError",
    "EdgeLabeling",
    "FORMATS",
    "ForeignLabelingError",
    "GENERATOR_KINDS",
    "Graph",
    "GraphFormatError",
    "ImproperColoringError",
    "InvalidMatrixError",
    "InvalidParamsError",
    "MatrixKind",
    "NotAntisymmetricError",
    "NotOneTwoUniformError",
    "NotUniformError",
    "OddCycleWitness",
    "OracleReport",
    "PairViolation",
    "PolarityAssignment",
    "RowClass",
    "RowPairViolation",
    "SelfLoopError",
    "VertexClass",
    "VertexRangeError",
    "bipartition_from_labeling",
    "chromatic_class",
    "classify_vertices",
    "complete_graph",
    "complete_multipartite",
    "cycle_graph",
    "format_from_path",
    "generate",
    "gnp",
    "is_one_two_uniform_matrix",
    "is_proper",
    "is_uniform_matrix",
    "labeling_from_bipartition",
    "labeling_from_matrix",
    "labeling_from_three_coloring",
    "matrix_from_labeling",
    "normalize_three_coloring",
    "oracle_k_colorable",
    "oracle_one_two_uniform_exists",
    "oracle_uniform_labeling_exists",
    "parse_graph",
    "parse_labeling",
    "parse_matrix_json",
    "parse_matrix_text",
    "petersen",
    "planted_three_partition",
    "row_class",
    "row_classes",
    "serialize_graph",
    "three_color",
    "three_coloring_from_labeling",
    "two_color",
    "ud_adjacency",
    "validate_coloring",
    "validate_matrix",
    "verify_one_two_uniform",
    "verify_uniform",
    "vertex_class",
]
