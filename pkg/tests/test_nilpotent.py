"""
Tests for the unipotent criterion and the table cross-validation
"""

import dataclasses

import pytest

from stabverify.catalog import OrbitRecord, load_catalog
from stabverify.errors import PartitionError
from stabverify.matrix_reps import induce, jordan_type, representative
from stabverify.nilpotent import (
    check_orbit,
    composed_jordan,
    cross_validate_tables,
    table_mismatches,
    verify_nilpotent,
)
from stabverify.partitions import Partition
from stabverify.reports import Verdict


@pytest.mark.parametrize("g", [7, 8, 9, 10])
def test_tables_agree_without_matrices(g):
    """Test classification, orbit dimensions and composition rules."""
    assert table_mismatches(load_catalog(g), use_matrices=False) == []


@pytest.mark.parametrize("g", [8, 9, 10])
def test_tables_agree_with_matrices(g):
    """Test every Jordan type against the matrix oracle."""
    assert cross_validate_tables(load_catalog(g))


@pytest.mark.slow
def test_half_spin_table_agrees_with_matrices():
    """Test the genus 7 table against 16x16 half-spin matrices."""
    assert cross_validate_tables(load_catalog(7))


@pytest.mark.parametrize("g, label, jordan", [
    (9, "4,1^2", (5, 5, 4)),
    (9, "3^2", (5, 5, 1, 1, 1, 1)),
    (10, "reg", (11, 3)),
])
def test_corrected_rows_match_matrices(g, label, jordan):
    """Test the rows where the matrix computation overrides the printed Jordan types."""
    catalog = load_catalog(g)
    record = catalog.orbit(label)
    assert record.jordan == Partition(jordan)
    x = representative(record.label, catalog.config.algebra)
    assert jordan_type(induce(x, catalog.config.rep)) == Partition(jordan)


def test_corrupted_table_is_caught():
    """Test that a wrong Jordan type in the table is reported."""
    catalog = load_catalog(8)
    broken = dataclasses.replace(catalog, orbits=[
        dataclasses.replace(o, jordan=Partition((7, 5, 3))) if o.name == "6" else o
        for o in catalog.orbits
    ])
    mismatches = table_mismatches(broken, use_matrices=False)
    assert [m.orbit for m in mismatches] == ["6"]
    assert mismatches[0].source == "composition rule"
    assert not cross_validate_tables(broken, use_matrices=False)


def test_missing_orbit_is_caught():
    """Test that an incomplete orbit list fails the classification check."""
    catalog = load_catalog(9)
    broken = dataclasses.replace(catalog, orbits=catalog.orbits[1:])
    sources = [m.source for m in table_mismatches(broken, use_matrices=False)]
    assert "orbit classification" in sources


def test_composed_jordan():
    """Test that composition rules exist only for wedge2 and half_spin."""
    assert composed_jordan(load_catalog(8), Partition((6,))) == Partition((9, 5, 1))
    assert composed_jordan(load_catalog(7), Partition((9, 1))) == Partition((11, 5))
    assert composed_jordan(load_catalog(9), Partition((6,))) is None


@pytest.mark.parametrize("g", [7, 8, 9, 10])
def test_sweep_has_no_exceptional_orbit(g):
    """Test the unipotent criterion over the default m range."""
    catalog = load_catalog(g)
    reports = verify_nilpotent(catalog)
    lo, hi = catalog.config.m_range
    non_zero = [o for o in catalog.orbits if set(o.jordan) != {1}]
    assert len(reports) == len(non_zero) * (hi - lo + 1)
    assert not [r for r in reports if r.verdict is Verdict.EXCEPTIONAL]


def test_equality_only_for_two_cubed():
    """Test that equality occurs only for 2^3 in genus 8 at m = 3 and 12."""
    equality = []
    for g in (7, 8, 9, 10):
        equality += [(g, r.case, r.m) for r in verify_nilpotent(load_catalog(g))
                     if r.verdict is Verdict.EQUALITY_OK]
    assert equality == [(8, "2^3", 3), (8, "2^3", 12)]


def test_two_cubed_counts():
    """Test the individual numbers of the equality case."""
    record = load_catalog(8).orbit("2^3")
    report = check_orbit(record, 15, (3, 3), with_profiles=True)[0]
    assert (report.base_dim, report.d_m, report.rhs) == (18, 18, 36)
    assert report.profiles == ((3, 0, 0),)


def test_check_orbit_errors():
    """Test range and size validation."""
    record = load_catalog(8).orbit("6")
    with pytest.raises(ValueError):
        check_orbit(record, 15, (3, 16))
    wrong = OrbitRecord(Partition((6,)), 30, Partition((9, 5)))
    with pytest.raises(PartitionError):
        check_orbit(wrong, 15, (3, 12))


def test_custom_m_range():
    """Test an explicit m range."""
    reports = verify_nilpotent(load_catalog(10), m_range=(1, 1))
    assert [r.m for r in reports] == [1, 1, 1, 1]
    # lines in the kernel of a minimal nilpotent fill the projective space
    assert reports[-1].case == "min"
    assert reports[-1].verdict is Verdict.EQUALITY_OK
