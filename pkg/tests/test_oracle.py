##
#     Project: PySU3RWC
# Description: Exact SU(3) reduced Wigner coefficients with outer multiplicity
#      Author: PySU3RWC contributors
#   Copyright: 2026 PySU3RWC contributors
#     License: GPL-3+
#  This program is free software: you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation, either version 3 of the License, or
#  (at your option) any later version.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with this program.  If not, see <https://www.gnu.org/licenses/>.
##

import unittest

import mpmath

from pysu3rwc import OracleError, Partition3, U2Label, dim_su3, rwc_table
from pysu3rwc.constants import ORACLE_DIGITS
from pysu3rwc.engine import RwcTable
from pysu3rwc.oracle import (casimir_check,
                             commutator_residual,
                             coupled_vectors,
                             g_polynomial_vectors,
                             gt_generator_matrices,
                             highest_weight_multiplicity_space,
                             lowering_word,
                             oracle_projector_check)

import utility


def dot(first: dict, second: dict) -> mpmath.mpf:
    return mpmath.fsum(value * second.get(key, 0)
                       for key, value in first.items())


class TestCaseOracle(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        """
        Adjoint coupling and table preparation
        """
        cls.coupling = utility.get_coupling(left='1,1',
                                            right='1,1',
                                            target='3,2,1')
        cls.table = rwc_table(coupling=cls.coupling)

    def test_01_generators(self) -> None:
        """
        Build the generator matrices of small irreps
        """
        for irrep in (Partition3(1, 0, 0),
                      Partition3(2, 1, 0),
                      Partition3(3, 1, 0),
                      Partition3(4, 2, 0)):
            generators = gt_generator_matrices(irrep=irrep)
            # Check the dimension
            self.assertEqual(generators.dimension, dim_su3(irrep=irrep.su3))
            # Check the commutation relations
            self.assertLess(commutator_residual(generators=generators),
                            1e-40)
            # Check the Casimir operator is a multiple of the identity
            self.assertLess(casimir_check(irrep=irrep), 1e-40)

    def test_02_highest_weight_space(self) -> None:
        """
        Get the highest weight spaces of the adjoint product
        """
        adjoint = Partition3(2, 1, 0)
        # Check the multiplicity two of the adjoint
        space = highest_weight_multiplicity_space(left=adjoint,
                                                  right=adjoint,
                                                  target=Partition3(3, 2, 1))
        self.assertEqual(space.shape, (64, 2))
        # Check the singlet
        space = highest_weight_multiplicity_space(left=adjoint,
                                                  right=adjoint,
                                                  target=Partition3(2, 2, 2))
        self.assertEqual(space.shape, (64, 1))
        # Check the mismatched box count
        space = highest_weight_multiplicity_space(left=adjoint,
                                                  right=adjoint,
                                                  target=Partition3(3, 2, 0))
        self.assertEqual(space.shape, (64, 0))

    def test_03_projector_check(self) -> None:
        """
        Compare the engine tables with the null spaces
        """
        report = oracle_projector_check(coupling=self.coupling,
                                        table=self.table)
        # Check the five residuals
        self.assertTrue(report.passed, str(report))
        self.assertEqual(report.checked, 5)
        self.assertLess(report.residual, 1e-40)
        for left, right, target in (('1,1', '1,1', '4,2,0'),
                                    ('1,1', '1,1', '3,3,0'),
                                    ('1,1', '1,1', '2,2,2'),
                                    ('1,0', '0,1', '2,1,0'),
                                    ('2,0', '1,1', '3,2,0')):
            coupling = utility.get_coupling(left=left,
                                            right=right,
                                            target=target)
            report = oracle_projector_check(
                coupling=coupling,
                table=rwc_table(coupling=coupling))
            self.assertTrue(report.passed, str(report))

    def test_04_projector_check_fault(self) -> None:
        """
        Detect a coefficient with the wrong sign
        """
        cells = dict(self.table.cells)
        key = (0, utility.get_triple(rho1='2,1', rho2='2,0', rho='3,2'))
        cells[key] = -cells[key]
        table = RwcTable(coupling=self.coupling, cells=cells)
        report = oracle_projector_check(coupling=self.coupling,
                                        table=table)
        # Check the failure
        self.assertFalse(report.passed)
        self.assertGreater(report.residual, 1e-3)

    def test_05_convention(self) -> None:
        """
        Get the overlaps of the G states with the table states
        """
        space = highest_weight_multiplicity_space(
            left=self.coupling.left.partition,
            right=self.coupling.right.partition,
            target=self.coupling.target).space
        vectors = coupled_vectors(coupling=self.coupling,
                                  table=self.table,
                                  space=space)
        seeds = g_polynomial_vectors(coupling=self.coupling, space=space)
        with mpmath.workdps(ORACLE_DIGITS):
            expected = ((mpmath.sqrt(mpmath.mpf(7) / 10),
                         -mpmath.sqrt(mpmath.mpf(1) / 42)),
                        (mpmath.mpf(0),
                         mpmath.sqrt(mpmath.mpf(10) / 21)))
            for j, vector in enumerate(vectors):
                for k, seed in enumerate(seeds):
                    # Check the upper triangular positive overlaps
                    self.assertLess(abs(dot(vector, seed) - expected[j][k]),
                                    mpmath.mpf('1e-40'))

    def test_06_convention_fault(self) -> None:
        """
        Detect exchanged multiplicity labels
        """
        cells = {(1 - eta, triple): value
                 for (eta, triple), value in self.table.cells.items()}
        table = RwcTable(coupling=self.coupling, cells=cells)
        report = oracle_projector_check(coupling=self.coupling,
                                        table=table)
        # Check only the convention fails
        self.assertFalse(report.passed)
        self.assertEqual(report.failures, 1)
        self.assertTrue(report.violation.startswith('convention'))

    def test_07_lowering_word(self) -> None:
        """
        Get the lowering words of the adjoint target
        """
        target = Partition3(3, 2, 1)
        with mpmath.workdps(ORACLE_DIGITS):
            # Check E31 reaching [2,2]
            word, overlap = lowering_word(target=target,
                                          final=U2Label(2, 2))
            self.assertEqual(word, ((3, 1),))
            self.assertLess(abs(overlap ** 2 - mpmath.mpf(3) / 2),
                            mpmath.mpf('1e-40'))
            # Check E32 reaching [3,1]
            word, overlap = lowering_word(target=target,
                                          final=U2Label(3, 1))
            self.assertEqual(word, ((3, 2),))
            self.assertLess(abs(overlap - 1), mpmath.mpf('1e-40'))
        # Check a label outside the target
        with self.assertRaises(OracleError):
            lowering_word(target=target, final=U2Label(4, 2))

    def test_08_lowering_fault(self) -> None:
        """
        Detect a wrong sign below the highest final label
        """
        cells = dict(self.table.cells)
        key = (0, utility.get_triple(rho1='1,0', rho2='2,1', rho='2,2'))
        self.assertFalse(cells[key].is_zero())
        cells[key] = -cells[key]
        table = RwcTable(coupling=self.coupling, cells=cells)
        report = oracle_projector_check(coupling=self.coupling,
                                        table=table)
        # Check only the lowering fails
        self.assertFalse(report.passed)
        self.assertEqual(report.failures, 1)
        self.assertTrue(report.violation.startswith('lowering'))

    def test_09_multiplicity_three(self) -> None:
        """
        Compare the multiplicity three table of (2,2) x (2,2)
        """
        utility.require_slow_tests(test=self)
        coupling = utility.get_coupling(left='2,2',
                                        right='2,2',
                                        target='6,4,2')
        self.assertEqual(coupling.multiplicity, 3)
        report = oracle_projector_check(coupling=coupling,
                                        table=rwc_table(coupling=coupling))
        # Check every residual at the default tolerance
        self.assertTrue(report.passed, str(report))
        self.assertEqual(report.checked, 5)
