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

import itertools
import unittest

from pysu3rwc import (Coupling,
                      DomainError,
                      InvalidCouplingError,
                      Partition3,
                      Su3Irrep,
                      U2Label,
                      decompose_product,
                      dim_su3,
                      lr_multiplicity,
                      multiplicity_range,
                      u2_sublabels)

from pysu3rwc.verify import multiplicity_check

import utility


class TestCaseRepresentation(unittest.TestCase):
    def test_01_dim_su3(self) -> None:
        """
        Get the Weyl dimensions
        """
        # Check the scalar, the adjoint and the (2,2) irreps
        self.assertEqual(dim_su3(irrep=Su3Irrep(0, 0)), 1)
        self.assertEqual(dim_su3(irrep=Su3Irrep(1, 1)), 8)
        self.assertEqual(dim_su3(irrep=Su3Irrep(2, 2)), 27)
        # Check the conjugate irreps have the same dimension
        self.assertEqual(dim_su3(irrep=Su3Irrep(3, 0)),
                         dim_su3(irrep=Su3Irrep(0, 3)))

    def test_02_multiplicity_range(self) -> None:
        """
        Get the range of the multiplicity label
        """
        # Check the multiplicity 2 of the adjoint in 8 x 8
        self.assertEqual(multiplicity_range(left=Su3Irrep(1, 1),
                                            right=Su3Irrep(1, 1),
                                            target=Partition3(3, 2, 1)),
                         (0, 1))
        # Check the coupling with the scalar irrep
        self.assertEqual(multiplicity_range(left=Su3Irrep(2, 1),
                                            right=Su3Irrep(0, 0),
                                            target=Partition3(3, 1, 0)),
                         (0, 0))
        # Check the multiplicity 3 of (2,2) in (2,2) x (2,2)
        self.assertEqual(multiplicity_range(left=Su3Irrep(2, 2),
                                            right=Su3Irrep(2, 2),
                                            target=Partition3(6, 4, 2)),
                         (0, 2))
        # Check a target not occurring in the product
        self.assertIsNone(multiplicity_range(left=Su3Irrep(1, 1),
                                             right=Su3Irrep(1, 1),
                                             target=Partition3(6, 0, 0)))
        # Check the box count mismatch
        with self.assertRaises(InvalidCouplingError):
            multiplicity_range(left=Su3Irrep(1, 1),
                               right=Su3Irrep(1, 1),
                               target=Partition3(3, 2, 2))

    def test_03_lr_multiplicity(self) -> None:
        """
        Count the Littlewood-Richardson tableaux
        """
        # Check the adjoint and the singlet in 8 x 8
        self.assertEqual(lr_multiplicity(left=Su3Irrep(1, 1),
                                         right=Su3Irrep(1, 1),
                                         target=Partition3(3, 2, 1)), 2)
        self.assertEqual(lr_multiplicity(left=Su3Irrep(1, 1),
                                         right=Su3Irrep(1, 1),
                                         target=Partition3(2, 2, 2)), 1)
        # Check the box count mismatch
        self.assertEqual(lr_multiplicity(left=Su3Irrep(1, 1),
                                         right=Su3Irrep(1, 1),
                                         target=Partition3(4, 2, 2)), 0)

    def test_04_range_matches_tableaux(self) -> None:
        """
        Compare the multiplicity range with the tableaux for small irreps
        """
        irreps = [Su3Irrep(lam, mu)
                  for lam, mu in itertools.product(range(3), repeat=2)]
        for left, right in itertools.product(irreps, repeat=2):
            boxes = left.box_count + right.box_count
            for m1 in range(boxes + 1):
                for m2 in range(min(m1, boxes - m1) + 1):
                    m3 = boxes - m1 - m2
                    if m3 > m2:
                        continue
                    target = Partition3(m1, m2, m3)
                    eta_range = multiplicity_range(left=left,
                                                   right=right,
                                                   target=target)
                    expected = (0 if eta_range is None
                                else eta_range[1] - eta_range[0] + 1)
                    # Check the multiplicity against the tableaux count
                    self.assertEqual(lr_multiplicity(left=left,
                                                     right=right,
                                                     target=target),
                                     expected,
                                     f'{left}x{right}->{target}')

    def test_05_decompose_product(self) -> None:
        """
        Decompose products of two irreps
        """
        results = dict(decompose_product(left=Su3Irrep(1, 1),
                                         right=Su3Irrep(1, 1)))
        # Check the targets of 8 x 8
        self.assertEqual(results, {Partition3(4, 2, 0): 1,
                                   Partition3(3, 2, 1): 2,
                                   Partition3(3, 3, 0): 1,
                                   Partition3(4, 1, 1): 1,
                                   Partition3(2, 2, 2): 1})
        # Check the dimension sum
        self.assertEqual(sum(multiplicity * dim_su3(irrep=target.su3)
                             for target, multiplicity in results.items()),
                         64)
        # Check the dimension sum of 3 x 3-bar
        results = decompose_product(left=Su3Irrep(1, 0),
                                    right=Su3Irrep(0, 1))
        self.assertEqual(sum(multiplicity * dim_su3(irrep=target.su3)
                             for target, multiplicity in results), 9)
        # Check the coupling with the scalar irrep
        self.assertEqual(decompose_product(left=Su3Irrep(2, 1),
                                           right=Su3Irrep(0, 0)),
                         [(Partition3(3, 1, 0), 1)])

    def test_06_u2_sublabels(self) -> None:
        """
        Enumerate the U(2) labels between the rows of a partition
        """
        # Check the adjoint partition
        self.assertEqual(u2_sublabels(parent=Partition3(3, 2, 1)),
                         [U2Label(3, 2), U2Label(3, 1),
                          U2Label(2, 2), U2Label(2, 1)])
        # Check the fundamental and the singlet partitions
        self.assertEqual(u2_sublabels(parent=Partition3(1, 0, 0)),
                         [U2Label(1, 0), U2Label(0, 0)])
        self.assertEqual(u2_sublabels(parent=Partition3(2, 2, 2)),
                         [U2Label(2, 2)])

    def test_07_coupling(self) -> None:
        """
        Build couplings and validate labels
        """
        coupling = utility.get_coupling(left='1,1',
                                        right='1,1',
                                        target='3,2,1')
        # Check the multiplicity labels
        self.assertEqual(coupling.multiplicity, 2)
        self.assertEqual(list(coupling.etas), [0, 1])
        # Check the swapped coupling
        self.assertEqual(coupling.swapped(), coupling)
        # Check the missing target
        self.assertIsNone(Coupling.create(left=Su3Irrep(1, 1),
                                          right=Su3Irrep(1, 1),
                                          target=Partition3(6, 0, 0)))
        with self.assertRaises(DomainError):
            utility.get_coupling(left='1,1', right='1,1', target='6,0,0')
        # Check the eta outside the range
        with self.assertRaises(DomainError):
            coupling.check_eta(eta=2)

    def test_08_labels(self) -> None:
        """
        Validate and parse the labels
        """
        # Check the partition of an SU(3) irrep
        self.assertEqual(Su3Irrep(2, 1).partition, Partition3(3, 1, 0))
        self.assertEqual(Partition3(4, 2, 1).su3, Su3Irrep(2, 1))
        # Check the parsing
        self.assertEqual(Partition3.parse(text='3,2,1'),
                         Partition3(3, 2, 1))
        # Check the invalid labels
        for builder in (lambda: Su3Irrep(-1, 0),
                        lambda: Partition3(1, 2, 0),
                        lambda: U2Label(0, 1),
                        lambda: Su3Irrep.parse(text='1'),
                        lambda: Su3Irrep.parse(text='a,b')):
            with self.assertRaises(DomainError):
                builder()

    def test_09_multiplicity_sweep(self) -> None:
        """
        Compare the multiplicity ranges with the tableaux up to 4
        """
        utility.require_slow_tests(test=self)
        report = multiplicity_check(max_irrep=4)
        # Check every target and the dimension sums
        self.assertTrue(report.passed, str(report))
        self.assertGreater(report.checked, 10000)
