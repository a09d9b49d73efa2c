"""Exact computations around the discrete Gini index of integer partitions.

Covers the Gini index and Lorenz curves, Kostka-Foulkes polynomials and
graded multiplicities for GL_n, and the one-dimensional earth mover's
distance.
"""
from .emd import EmdResult, emd, emd_bfs_oracle, emd_majorized
from .errors import ConsistencyError, InvalidInputError, ResourceLimitError
from .gini import LorenzCurve, gini, gini_general, gini_via_area, lorenz_curve, weighted_total
from .kostant import RootSystemA, kostant_partition, kostant_partition_q, signed_permutations
from .kostka import (
    GradedMultiplicityReport,
    Tableau,
    charge,
    graded_multiplicity,
    graded_multiplicity_report,
    kostka_foulkes_charge,
    kostka_foulkes_kostant,
    kostka_number,
    reading_word,
    ssyt_enumerate,
    verify_theorem1,
)
from .partitions import (
    Composition,
    IntVector,
    Partition,
    Word,
    diagram_symmetric_difference,
    dominates,
    flat_partition,
    partitions_of,
    word_of,
)
from .qpoly import QPolynomial, add, degree, eval_at_one, scale_shift

__version__ = "0.1.0"
