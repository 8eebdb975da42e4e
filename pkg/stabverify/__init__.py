"""
stabverify - exact dimension counts for stabilizers on Mukai models

Reproducible verification that a generic linear subspace of the
representation V_g (g = 7, 8, 9, 10) is stabilized by no non-trivial
unipotent or semisimple element, outside a short list of exceptional
cases. All arithmetic is exact.
"""

__version__ = "1.0.0"
__author__ = "stabverify Contributors"

# Errors
from .errors import (
    CatalogError,
    FanOutExceeded,
    InternalConsistencyError,
    NotNilpotentError,
    PartitionError,
    RepresentationError,
    ScanCapExceeded,
)

# Partitions and Jordan calculus
from .partitions import AlgebraKind, Partition, admissible, dual, enumerate_orbits, orbit_dim
from .jordan import spin_compose, tensor, tensor_regular, wedge2, wedge2_regular

# Exact matrices and representations
from .exact_matrix import ExactMatrix
from .matrix_reps import RepTag, induce, jordan_type, representative
from .g2 import G2Algebra, get_g2

# Dimension counts
from .stable_dim import max_semisimple, max_unipotent, unipotent_flag_count
from .reports import CheckReport, Verdict

# Catalogs and verification
from .catalog import GenusCatalog, GenusConfig, clear_catalog_cache, load_catalog
from .nilpotent import cross_validate_tables, verify_nilpotent
from .torus import (
    Infeasible,
    Monomial,
    Substitution,
    WeightSystem,
    check_stratum,
    class_dim,
    impose_relation,
    multiplicities,
)
from .scan import ScanOptions, collapse_scan

# Convenience functions
from .api import run_scan, run_verify_nilpotent, run_verify_semisimple

# Public API
__all__ = [
    # Version
    '__version__',

    # Errors
    'CatalogError',
    'FanOutExceeded',
    'InternalConsistencyError',
    'NotNilpotentError',
    'PartitionError',
    'RepresentationError',
    'ScanCapExceeded',

    # Partitions and Jordan calculus
    'AlgebraKind',
    'Partition',
    'admissible',
    'dual',
    'enumerate_orbits',
    'orbit_dim',
    'spin_compose',
    'tensor',
    'tensor_regular',
    'wedge2',
    'wedge2_regular',

    # Matrices
    'ExactMatrix',
    'RepTag',
    'induce',
    'jordan_type',
    'representative',
    'G2Algebra',
    'get_g2',

    # Dimension counts
    'max_semisimple',
    'max_unipotent',
    'unipotent_flag_count',
    'CheckReport',
    'Verdict',

    # Catalogs and verification
    'GenusCatalog',
    'GenusConfig',
    'load_catalog',
    'clear_catalog_cache',
    'verify_nilpotent',
    'cross_validate_tables',
    'Monomial',
    'Substitution',
    'WeightSystem',
    'Infeasible',
    'multiplicities',
    'class_dim',
    'check_stratum',
    'impose_relation',
    'ScanOptions',
    'collapse_scan',

    # Functions
    'run_verify_nilpotent',
    'run_verify_semisimple',
    'run_scan',
]
