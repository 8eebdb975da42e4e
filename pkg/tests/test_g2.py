"""
Tests for the Chevalley basis of g2
"""

import unittest
from fractions import Fraction

import pytest

from stabverify.errors import PartitionError
from stabverify.g2 import ROOTS, g2_adjoint_rep, g2_vector_rep, get_g2, string_depth
from stabverify.matrix_reps import jordan_type
from stabverify.partitions import G2_ORBIT_DIMS, Partition


class TestG2Algebra(unittest.TestCase):
    """Test the realization of g2 inside gl(7)"""

    def test_basis_size(self):
        """Test 2 Cartan elements and 12 root vectors"""
        g2 = get_g2()
        self.assertEqual(len(g2.basis), 14)
        self.assertEqual(len(ROOTS), 12)

    def test_singleton(self):
        """Test that get_g2 caches the algebra"""
        self.assertIs(get_g2(), get_g2())

    def test_traceless(self):
        """Test that the basis lies in sl(7)"""
        for m in get_g2().basis:
            self.assertEqual(sum(m.entry(i, i) for i in range(7)), 0)

    def test_jacobi(self):
        """Test the Jacobi identity on every basis triple"""
        self.assertEqual(get_g2().jacobi_defects(), [])

    def test_structure_constants(self):
        """Test a few structure constants of the Chevalley basis"""
        g2 = get_g2()
        self.assertEqual(g2.structure_constant((0, 1), (1, 1)), Fraction(2))
        self.assertEqual(g2.structure_constant((1, 0), (1, 0)), Fraction(0))
        self.assertEqual(g2.structure_constant((1, 0), (0, -1)), Fraction(0))

    def test_coordinates_round_trip(self):
        """Test that coordinates reproduce the matrix"""
        g2 = get_g2()
        x = g2.basis[3].scale(2) + g2.basis[0]
        self.assertEqual(g2.element(g2.coordinates(x)), x)


def test_string_depth():
    """Test root strings through a root."""
    assert string_depth((0, 1), (1, 3)) == 3
    assert string_depth((1, 0), (1, 3)) == 0
    assert string_depth((0, 1), (0, 1)) == 0


@pytest.mark.parametrize("label", ["reg", "subreg", "short", "min"])
def test_adjoint_rank_is_orbit_dim(label):
    """Test dim O = rank ad(X) for each representative."""
    assert g2_adjoint_rep(label).rank() == G2_ORBIT_DIMS[label]


@pytest.mark.parametrize("label, jordan", [
    ("reg", (11, 3)),
    ("subreg", (5, 3, 3, 3)),
    ("short", (4, 4, 3, 1, 1, 1)),
    ("min", (3, 2, 2, 2, 2, 1, 1, 1)),
])
def test_adjoint_jordan_types(label, jordan):
    """Test Jordan types of ad(X) on the adjoint representation."""
    assert jordan_type(g2_adjoint_rep(label)) == Partition(jordan)


@pytest.mark.parametrize("label, jordan", [
    ("reg", (7,)),
    ("subreg", (3, 3, 1)),
    ("short", (3, 2, 2)),
    ("min", (2, 2, 1, 1, 1)),
])
def test_vector_rep_jordan_types(label, jordan):
    """Test Jordan types of each representative on C^7 and that ad is taken of it."""
    x = g2_vector_rep(label)
    assert jordan_type(x) == Partition(jordan)
    assert g2_adjoint_rep(label) == get_g2().ad(x)


def test_zero_and_unknown_labels():
    """Test the zero orbit and rejection of unknown labels."""
    assert g2_adjoint_rep("zero").is_zero
    with pytest.raises(PartitionError):
        g2_adjoint_rep("huge")
    with pytest.raises(PartitionError):
        g2_vector_rep("huge")
    assert g2_vector_rep("zero").is_zero
