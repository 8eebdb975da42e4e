"""
Tests for Partition, AlgebraKind and orbit bookkeeping
"""

import unittest

import pytest
from hypothesis import given, strategies as st

from stabverify.errors import PartitionError
from stabverify.partitions import (
    AlgebraKind,
    Partition,
    admissible,
    dual,
    enumerate_orbits,
    is_zero_orbit,
    orbit_codim,
    orbit_dim,
    parse_label,
    partitions_of,
)


class TestPartition(unittest.TestCase):
    """Test Partition construction and arithmetic"""

    def test_of_sorts_parts(self):
        """Test that Partition.of accepts parts in any order"""
        self.assertEqual(Partition.of([1, 3, 2, 3]).parts, (3, 3, 2, 1))

    def test_rejects_bad_parts(self):
        """Test validation of parts"""
        with self.assertRaises(PartitionError):
            Partition((1, 2))
        with self.assertRaises(PartitionError):
            Partition((2, 0))
        with self.assertRaises(PartitionError):
            Partition((True,))

    def test_parse_and_str(self):
        """Test the exponent notation in both directions"""
        p = Partition.parse("3^2,2,1")
        self.assertEqual(p.parts, (3, 3, 2, 1))
        self.assertEqual(str(p), "3^2,2,1")
        self.assertEqual(Partition.parse("[4, 2]"), Partition((4, 2)))
        self.assertEqual(str(Partition.parse("1^10")), "1^10")

    def test_parse_rejects_garbage(self):
        """Test that malformed labels raise PartitionError"""
        for text in ("", "3^", "a,b", "3^2^2"):
            with self.assertRaises(PartitionError):
                Partition.parse(text)

    def test_dual(self):
        """Test the conjugate partition"""
        self.assertEqual(Partition((4, 2)).dual(), Partition((2, 2, 1, 1)))
        self.assertEqual(dual(Partition((3, 3))), Partition((2, 2, 2)))

    def test_block_counts(self):
        """Test block counts and their inverse"""
        p = Partition((3, 3, 1))
        self.assertEqual(p.block_counts(), {3: 2, 1: 1})
        self.assertEqual(Partition.from_block_counts({3: 2, 1: 1}), p)

    def test_partial_sums(self):
        """Test beta_p = number of parts of size at least p"""
        self.assertEqual(Partition((9, 5, 1)).partial_sums(), [3, 2, 2, 2, 2, 1, 1, 1, 1])

    def test_refinement(self):
        """Test refinement of partitions"""
        self.assertTrue(Partition((2, 2, 1, 1)).is_refinement_of(Partition((4, 2))))
        self.assertFalse(Partition((3, 3)).is_refinement_of(Partition((4, 2))))


class TestAlgebraKind(unittest.TestCase):
    """Test AlgebraKind parsing and dimensions"""

    def test_parse(self):
        """Test round trip through the textual form"""
        for text in ("sl(6)", "sp(6)", "so(10)", "g2"):
            self.assertEqual(str(AlgebraKind.parse(text)), text)

    def test_dimensions(self):
        """Test Lie algebra dimensions of the four genera"""
        self.assertEqual(AlgebraKind.sl(6).dimension, 35)
        self.assertEqual(AlgebraKind.sp(6).dimension, 21)
        self.assertEqual(AlgebraKind.so(10).dimension, 45)
        self.assertEqual(AlgebraKind.g2().dimension, 14)

    def test_invalid(self):
        """Test that invalid algebras are rejected"""
        with self.assertRaises(ValueError):
            AlgebraKind.sp(5)
        with self.assertRaises(ValueError):
            AlgebraKind.parse("e8")


def test_admissible_rules():
    """Test the parity rules for sp and so labels."""
    assert admissible(Partition((3, 3)), AlgebraKind.sp(6))
    assert not admissible(Partition((3, 2, 1)), AlgebraKind.sp(6))
    assert admissible(Partition((2, 2, 1, 1, 1, 1, 1, 1)), AlgebraKind.so(10))
    assert not admissible(Partition((2, 1, 1, 1, 1, 1, 1, 1, 1)), AlgebraKind.so(10))
    with pytest.raises(PartitionError):
        admissible(Partition((3, 3)), AlgebraKind.sp(8))


@pytest.mark.parametrize("label, algebra, expected", [
    ("6", "sl(6)", 30),
    ("2^3", "sl(6)", 18),
    ("2,1^4", "sl(6)", 10),
    ("4,2", "sp(6)", 16),
    ("2^2,1^2", "sp(6)", 10),
    ("6", "sp(6)", 18),
    ("9,1", "so(10)", 40),
    ("2^2,1^6", "so(10)", 14),
    ("5,1^5", "so(10)", 28),
])
def test_orbit_dim(label, algebra, expected):
    """Test orbit dimensions against known values."""
    k = AlgebraKind.parse(algebra)
    assert orbit_dim(Partition.parse(label), k) == expected
    assert orbit_codim(Partition.parse(label), k) == k.dimension - expected


def test_orbit_dim_errors():
    """Test that inadmissible or misplaced labels raise."""
    with pytest.raises(PartitionError):
        orbit_dim(Partition((3, 2, 1)), AlgebraKind.sp(6))
    with pytest.raises(PartitionError):
        orbit_dim("reg", AlgebraKind.sl(6))
    with pytest.raises(PartitionError):
        orbit_dim("huge", AlgebraKind.g2())
    assert orbit_dim("subreg", AlgebraKind.g2()) == 10


@pytest.mark.parametrize("algebra, count", [
    ("sl(6)", 11), ("sp(6)", 8), ("so(10)", 16), ("g2", 5),
])
def test_enumerate_orbits(algebra, count):
    """Test the number of nilpotent orbits, zero orbit included."""
    orbits = enumerate_orbits(AlgebraKind.parse(algebra))
    assert len(orbits) == count
    assert sum(1 for label in orbits if is_zero_orbit(label)) == 1


def test_so10_has_no_very_even_orbit():
    """Test that no so(10) label has only even parts, so no label splits in two orbits."""
    for label in enumerate_orbits(AlgebraKind.so(10)):
        assert any(part % 2 for part in label), label


def test_parse_label():
    """Test symbolic and partition labels."""
    assert parse_label("min", AlgebraKind.g2()) == "min"
    assert parse_label("2^3", AlgebraKind.sl(6)) == Partition((2, 2, 2))
    with pytest.raises(PartitionError):
        parse_label("2^3", AlgebraKind.g2())


@given(st.integers(min_value=1, max_value=12))
def test_partitions_of_sizes(n):
    """Test that every generated partition has size n and none repeats."""
    found = list(partitions_of(n))
    assert all(p.size == n for p in found)
    assert len(set(found)) == len(found)


@given(st.lists(st.integers(min_value=1, max_value=9), min_size=1, max_size=8))
def test_dual_is_involution(parts):
    """Test dual(dual(p)) == p and that sizes agree."""
    p = Partition.of(parts)
    assert p.dual().size == p.size
    assert p.dual().dual() == p
