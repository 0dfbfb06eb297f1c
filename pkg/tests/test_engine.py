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

from pysu3rwc import (BarLabel,
                      DomainError,
                      Partition3,
                      RwcEngine,
                      Su3Irrep,
                      U2Label,
                      build_gram,
                      exchange_phase_mf,
                      exchange_z_matrix,
                      g_eta,
                      g_rho,
                      k_ranges,
                      racah_su3,
                      rwc_table,
                      special_rwc)
from pysu3rwc.engine import (completeness_report,
                             direct_mf_table,
                             multiplicity_free_report,
                             orthogonality_report,
                             racah_orthogonality_report,
                             special_structure_report)
from pysu3rwc.g_polynomials import recoupled_g_eta
from pysu3rwc.representation import decompose_product
from pysu3rwc.verify import coupling_checks

import utility


class TestCaseEngine(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        """
        Adjoint couplings preparation
        """
        cls.adjoint = utility.get_coupling(left='1,1',
                                           right='1,1',
                                           target='3,2,1')
        cls.symmetric = utility.get_coupling(left='1,1',
                                             right='1,1',
                                             target='4,2,0')

    def test_01_k_ranges(self) -> None:
        """
        Get the bar labels of a coupling
        """
        bars = k_ranges(coupling=self.adjoint)
        # Check the intermediate partitions
        self.assertEqual([bar.partition for bar in bars],
                         [Partition3(3, 2, 0),
                          Partition3(3, 1, 1),
                          Partition3(2, 2, 1)])
        # Check the coupling with the scalar irrep
        scalar = utility.get_coupling(left='2,1',
                                      right='0,0',
                                      target='3,1,0')
        bars = k_ranges(coupling=scalar)
        self.assertEqual(len(bars), 1)
        self.assertEqual((bars[0].k1, bars[0].k2), (0, 0))

    def test_02_build_gram(self) -> None:
        """
        Get the Gram matrix of the multiplicity vectors
        """
        gram = build_gram(coupling=self.adjoint)
        # Check the exact entries
        self.assertEqual(gram.entries,
                         ((utility.rational(7, 10),
                           utility.surd('-sqrt(1/60)')),
                          (utility.surd('-sqrt(1/60)'),
                           utility.rational(1, 2))))
        # Check the symmetry
        self.assertTrue(gram.is_symmetric())
        # Check the coupling with the scalar irrep
        scalar = utility.get_coupling(left='2,1',
                                      right='0,0',
                                      target='3,1,0')
        self.assertEqual(build_gram(coupling=scalar).entries,
                         ((utility.rational(1),),))

    def test_03_g_eta(self) -> None:
        """
        Get the recoupling contractions of the multiplicity vectors
        """
        bars = k_ranges(coupling=self.adjoint)
        # Check the squared norm of the first vector
        vector = [g_eta(coupling=self.adjoint, bar=bar, eta=0)
                  for bar in bars]
        self.assertEqual(sum((value * value for value in vector),
                             utility.rational(0)),
                         utility.rational(7, 10))
        # Check the eta outside the range
        with self.assertRaises(DomainError):
            g_eta(coupling=self.adjoint, bar=bars[0], eta=2)
        # Check the bar label outside the ranges
        with self.assertRaises(DomainError):
            g_eta(coupling=self.adjoint,
                  bar=BarLabel(k1=0, k2=0, partition=Partition3(6, 0, 0)),
                  eta=0)

    def test_03b_g_eta_closed_form(self) -> None:
        """
        Compare the closed G([m-bar], eta) with the recoupling contraction
        """
        checked = 0
        for left, right in ((Su3Irrep(1, 1), Su3Irrep(1, 1)),
                            (Su3Irrep(2, 1), Su3Irrep(1, 2)),
                            (Su3Irrep(0, 2), Su3Irrep(2, 1)),
                            (Su3Irrep(1, 1), Su3Irrep(2, 0)),
                            (Su3Irrep(1, 0), Su3Irrep(0, 1))):
            for target, _ in decompose_product(left=left, right=right):
                coupling = utility.get_coupling(
                    left=f'{left.lam},{left.mu}',
                    right=f'{right.lam},{right.mu}',
                    target=','.join(map(str, target)))
                for bar in k_ranges(coupling=coupling):
                    for eta in coupling.etas:
                        # Check the exact agreement
                        self.assertEqual(
                            g_eta(coupling=coupling, bar=bar, eta=eta),
                            recoupled_g_eta(coupling=coupling,
                                            bar=bar,
                                            eta=eta),
                            f'{coupling} {bar} eta {eta}')
                        checked += 1
        self.assertGreater(checked, 50)
        # Check the single values of the adjoint vectors
        bars = k_ranges(coupling=self.adjoint)
        self.assertEqual([g_eta(coupling=self.adjoint, bar=bar, eta=1)
                          for bar in bars],
                         [utility.surd('-sqrt(1/48)'),
                          utility.surd('sqrt(3/8)'),
                          utility.surd('-sqrt(5/48)')])

    def test_04_g_rho(self) -> None:
        """
        Get the recoupling contractions of the U(2) labels
        """
        bar = k_ranges(coupling=self.adjoint)[0]
        # Check the weight selection rule
        self.assertTrue(g_rho(coupling=self.adjoint,
                              bar=bar,
                              rho=utility.get_triple(rho1='2,1',
                                                     rho2='2,0',
                                                     rho='2,2')).is_zero())
        # Check the labels not between the rows of their parents
        with self.assertRaises(DomainError):
            g_rho(coupling=self.adjoint,
                  bar=bar,
                  rho=utility.get_triple(rho1='3,0',
                                         rho2='2,0',
                                         rho='3,2'))

    def test_05_special_rwc(self) -> None:
        """
        Get the special coefficients by triangular extraction
        """
        special = special_rwc(coupling=self.adjoint)
        # Check the exact entries
        self.assertEqual(special.entries,
                         ((utility.surd('sqrt(7/10)'),
                           utility.surd('-sqrt(1/42)')),
                          (utility.rational(0),
                           utility.surd('sqrt(10/21)'))))
        # Check the structure
        self.assertTrue(special.is_triangular())
        self.assertTrue(special.has_positive_diagonal())
        self.assertEqual(special.gram(), build_gram(self.adjoint).entries)
        # Check the structure report
        self.assertTrue(special_structure_report(self.adjoint).passed)

    def test_06_rwc_table_first_label(self) -> None:
        """
        Get the coefficients at the final label [3,2]
        """
        table = rwc_table(coupling=self.adjoint, rho=U2Label(3, 2))
        expected = {
            (0, ('2,1', '2,0')): 'sqrt(7/10)',
            (0, ('2,0', '2,1')): '-sqrt(2/35)',
            (0, ('2,1', '1,1')): '-sqrt(1/70)',
            (0, ('1,1', '2,1')): 'sqrt(8/35)',
            (1, ('2,1', '2,0')): '0',
            (1, ('2,0', '2,1')): '-sqrt(9/14)',
            (1, ('2,1', '1,1')): 'sqrt(2/7)',
            (1, ('1,1', '2,1')): '-sqrt(1/14)',
        }
        # Check the number of cells
        self.assertEqual(len(table), len(expected))
        for (eta, (rho1, rho2)), value in expected.items():
            triple = utility.get_triple(rho1=rho1, rho2=rho2, rho='3,2')
            # Check each coefficient
            self.assertEqual(table.get(eta=eta, rho=triple),
                             utility.surd(value),
                             f'eta {eta} {triple}')

    def test_07_rwc_table_second_label(self) -> None:
        """
        Get the coefficients at the final label [2,2]
        """
        table = rwc_table(coupling=self.adjoint, rho=U2Label(2, 2))
        expected = {
            (0, ('1,0', '2,1')): 'sqrt(1/35)',
            (0, ('2,1', '1,0')): 'sqrt(16/35)',
            (0, ('2,0', '2,0')): 'sqrt(27/70)',
            (0, ('1,1', '1,1')): 'sqrt(9/70)',
            (1, ('1,0', '2,1')): '-sqrt(4/7)',
            (1, ('2,1', '1,0')): '-sqrt(1/7)',
            (1, ('2,0', '2,0')): 'sqrt(3/14)',
            (1, ('1,1', '1,1')): 'sqrt(1/14)',
        }
        for (eta, (rho1, rho2)), value in expected.items():
            triple = utility.get_triple(rho1=rho1, rho2=rho2, rho='2,2')
            # Check each coefficient
            self.assertEqual(table.get(eta=eta, rho=triple),
                             utility.surd(value),
                             f'eta {eta} {triple}')

    def test_08_rwc_table_multiplicity_free(self) -> None:
        """
        Get the coefficients of the multiplicity-free target [4,2,0]
        """
        table = rwc_table(coupling=self.symmetric, rho=U2Label(3, 2))
        eta = self.symmetric.eta_min
        # Check the two exchanged rows
        self.assertEqual(table.get(eta=eta,
                                   rho=utility.get_triple(rho1='2,1',
                                                          rho2='2,0',
                                                          rho='3,2')),
                         utility.surd('-sqrt(1/20)'))
        self.assertEqual(table.get(eta=eta,
                                   rho=utility.get_triple(rho1='2,0',
                                                          rho2='2,1',
                                                          rho='3,2')),
                         utility.surd('sqrt(1/20)'))

    def test_09_orthogonality(self) -> None:
        """
        Check the orthonormality of the eta columns and the completeness
        """
        for target, _ in decompose_product(left=Su3Irrep(1, 1),
                                           right=Su3Irrep(1, 1)):
            coupling = utility.get_coupling(left='1,1',
                                            right='1,1',
                                            target=','.join(map(str,
                                                                target)))
            report = orthogonality_report(coupling=coupling)
            # Check the orthonormality of each target
            self.assertTrue(report.passed, str(report))
            self.assertGreater(report.checked, 0)
        report = completeness_report(left=Su3Irrep(1, 1),
                                     right=Su3Irrep(1, 1))
        # Check the completeness over the targets
        self.assertTrue(report.passed, str(report))
        report = completeness_report(left=Su3Irrep(2, 0),
                                     right=Su3Irrep(1, 1))
        self.assertTrue(report.passed, str(report))

    def test_10_racah_su3(self) -> None:
        """
        Get the SU(3) Racah coefficients
        """
        # Check the orthonormality over the bar labels
        report = racah_orthogonality_report(coupling=self.adjoint)
        self.assertTrue(report.passed, str(report))
        bars = k_ranges(coupling=self.adjoint)
        total = sum((racah_su3(coupling=self.adjoint, bar=bar, eta=0) *
                     racah_su3(coupling=self.adjoint, bar=bar, eta=0)
                     for bar in bars), utility.rational(0))
        self.assertEqual(total, 1)
        # Check the eta outside the range
        with self.assertRaises(DomainError):
            racah_su3(coupling=self.adjoint, bar=bars[0], eta=2)
        # Check the bar label outside the ranges
        with self.assertRaises(DomainError):
            racah_su3(coupling=self.adjoint,
                      bar=BarLabel(k1=0, k2=0,
                                   partition=Partition3(6, 0, 0)),
                      eta=0)

    def test_11_multiplicity_free_path(self) -> None:
        """
        Compare the mu2 = 0 tables with the direct kernel path
        """
        for left, right in ((Su3Irrep(1, 1), Su3Irrep(2, 0)),
                            (Su3Irrep(2, 1), Su3Irrep(1, 0)),
                            (Su3Irrep(0, 2), Su3Irrep(2, 0))):
            for target, _ in decompose_product(left=left, right=right):
                coupling = utility.get_coupling(
                    left=f'{left.lam},{left.mu}',
                    right=f'{right.lam},{right.mu}',
                    target=','.join(map(str, target)))
                report = multiplicity_free_report(coupling=coupling)
                # Check the agreement of every coefficient
                self.assertTrue(report.passed, str(report))
        # Check the coupling with mu2 > 0
        with self.assertRaises(DomainError):
            direct_mf_table(coupling=self.adjoint)

    def test_12_exchange(self) -> None:
        """
        Get the exchange matrices and phases
        """
        # Check the exact orthogonal matrix of the adjoint target
        self.assertEqual(exchange_z_matrix(coupling=self.adjoint),
                         ((utility.rational(2, 7),
                           utility.surd('sqrt(45/49)')),
                          (utility.surd('sqrt(45/49)'),
                           utility.rational(-2, 7))))
        # Check the multiplicity-free phases
        for left, right, target, phase in (('1,1', '1,1', '4,2,0', 1),
                                           ('1,0', '0,1', '2,1,0', 1),
                                           ('1,0', '1,0', '2,0,0', 1),
                                           ('1,0', '1,0', '1,1,0', -1)):
            coupling = utility.get_coupling(left=left,
                                            right=right,
                                            target=target)
            self.assertEqual(exchange_phase_mf(coupling=coupling), phase,
                             str(coupling))
        # Check the phase request with multiplicity 2
        with self.assertRaises(DomainError):
            exchange_phase_mf(coupling=self.adjoint)

    def test_13_engine(self) -> None:
        """
        Get restricted tables from the engine
        """
        engine = RwcEngine()
        table = engine.table(coupling=self.adjoint,
                             rho=U2Label(3, 2),
                             eta=1)
        # Check the restriction to four cells
        self.assertEqual(len(table), 4)
        self.assertEqual({eta for eta, _, _ in table.items()}, {1})
        # Check the tables are kept in memory
        self.assertIs(engine.table(coupling=self.adjoint),
                      engine.table(coupling=self.adjoint))
        # Check the special matrix
        self.assertEqual(engine.special(coupling=self.adjoint)[1][1],
                         utility.surd('sqrt(10/21)'))
        # Check the eta outside the range
        with self.assertRaises(DomainError):
            engine.table(coupling=self.adjoint, eta=3)

    def test_14_sweep(self) -> None:
        """
        Check every coupling with lambda and mu up to 3
        """
        utility.require_slow_tests(test=self)
        report = coupling_checks(max_irrep=3, engine=RwcEngine())
        # Check orthogonality, completeness, structure and Racah sums
        self.assertTrue(report.passed, str(report))
        self.assertGreater(report.checked, 10000)
