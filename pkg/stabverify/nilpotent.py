"""
Dimension count for unipotent stabilizer elements.

For a nilpotent orbit O with Jordan type b on V_g, the m-subspaces stable
under an element of O form a family of dimension at most max_unipotent(b, m).
The count dim O + max_unipotent(b, m) is compared with dim Gr(m, n).
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .catalog import GenusCatalog, OrbitRecord
from .errors import PartitionError
from .jordan import spin_compose, wedge2
from .matrix_reps import RepTag, induce, jordan_type, representative
from .partitions import Partition, enumerate_orbits, is_zero_orbit, label_to_str, orbit_dim
from .reports import CheckReport, Verdict, grassmannian_dim, unipotent_verdict
from .stable_dim import max_unipotent, unipotent_profiles

logger = logging.getLogger(__name__)


def check_orbit(record: OrbitRecord, n: int, m_range: Tuple[int, int],
                with_profiles: bool = False) -> List[CheckReport]:
    """Criterion check for one orbit at every m of the range."""
    lo, hi = m_range
    if lo < 0 or hi > n or lo > hi:
        raise ValueError(f"m range [{lo}, {hi}] is not inside [0, {n}]")
    if record.jordan.size != n:
        raise PartitionError(f"Jordan type {record.jordan} of {record.name} does not act on C^{n}")
    reports = []
    for m in range(lo, hi + 1):
        d_m = max_unipotent(record.jordan, m)
        rhs = grassmannian_dim(m, n)
        profiles = tuple(unipotent_profiles(record.jordan, m)) if with_profiles else None
        reports.append(CheckReport(record.name, m, record.dim, d_m, rhs,
                                   unipotent_verdict(record.dim + d_m, rhs), profiles))
    return reports


def verify_nilpotent(catalog: GenusCatalog, m_range: Optional[Tuple[int, int]] = None,
                     with_profiles: bool = False) -> List[CheckReport]:
    """
    Run the unipotent criterion for every non-zero orbit of the catalog.

    Args:
        catalog: genus catalog with Jordan types on V_g
        m_range: inclusive m range (default k..n-k)
        with_profiles: attach the optimal gamma profiles

    Returns:
        Reports ordered by orbit (table order), then m

    Raises:
        PartitionError: If an orbit lacks a usable Jordan type
    """
    config = catalog.config
    m_range = m_range or config.m_range
    reports: List[CheckReport] = []
    for record in catalog.orbits:
        if is_zero_orbit(record.label):
            continue
        reports.extend(check_orbit(record, config.n, m_range, with_profiles))
    non_strict = [r for r in reports if r.verdict is not Verdict.STRICT]
    logger.info("Genus %d: %d nilpotent checks, %d non-strict",
                config.g, len(reports), len(non_strict))
    return reports


@dataclass(frozen=True)
class TableMismatch:
    """One disagreement between the catalogued table and a computation."""
    orbit: str
    source: str
    expected: str
    found: str

    def __str__(self) -> str:
        return f"{self.orbit}: {self.source} gives {self.found}, table says {self.expected}"


def composed_jordan(catalog: GenusCatalog, label: Partition) -> Optional[Partition]:
    """Clebsch-Gordan Jordan type on V_g, where a composition rule exists."""
    rep = catalog.config.rep
    if rep is RepTag.WEDGE2:
        return wedge2(label)
    if rep is RepTag.HALF_SPIN:
        return spin_compose(label)
    return None


def table_mismatches(catalog: GenusCatalog, use_matrices: bool = True) -> List[TableMismatch]:
    """
    Compare every table row with the computed orbit dimension, the matrix
    oracle and (for wedge2 and half_spin) the composition rules.
    """
    config = catalog.config
    mismatches: List[TableMismatch] = []
    expected_labels = sorted(label_to_str(x) for x in enumerate_orbits(config.algebra))
    table_labels = sorted(r.name for r in catalog.orbits)
    if expected_labels != table_labels:
        mismatches.append(TableMismatch("*", "orbit classification",
                                        ", ".join(table_labels), ", ".join(expected_labels)))

    for record in catalog.orbits:
        dim = orbit_dim(record.label, config.algebra)
        if dim != record.dim:
            mismatches.append(TableMismatch(record.name, "orbit_dim", str(record.dim), str(dim)))
        if use_matrices:
            x = representative(record.label, config.algebra)
            found = jordan_type(induce(x, config.rep))
            if found != record.jordan:
                mismatches.append(TableMismatch(record.name, "matrix oracle",
                                                str(record.jordan), str(found)))
        if isinstance(record.label, Partition):
            composed = composed_jordan(catalog, record.label)
            if composed is not None and composed != record.jordan:
                mismatches.append(TableMismatch(record.name, "composition rule",
                                                str(record.jordan), str(composed)))
    return mismatches


def cross_validate_tables(catalog: GenusCatalog, use_matrices: bool = True) -> bool:
    """
    True iff the catalogued table agrees with every independent computation.

    The first mismatch, if any, is logged as an error.
    """
    mismatches = table_mismatches(catalog, use_matrices)
    if mismatches:
        logger.error("Genus %d table mismatch: %s", catalog.config.g, mismatches[0])
        return False
    logger.info("Genus %d: %d orbits cross-validated", catalog.config.g, len(catalog.orbits))
    return True
