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
import math
import unittest
from fractions import Fraction

from sympy import Rational
from sympy.physics.wigner import clebsch_gordan, racah

from pysu3rwc import (KernelArgs2,
                      KernelArgs3,
                      f2_kernel,
                      f3_kernel,
                      f_kernel,
                      su2_racah_unitary)
from pysu3rwc.surd import SurdSum, ZERO


def spin_label(twice: int) -> tuple[int, int]:
    return twice, 0


def half_spin(twice: int) -> Rational:
    return Rational(twice, 2)


def is_triad(a: int,
             b: int,
             c: int) -> bool:
    return abs(a - b) <= c <= a + b and (a + b + c) % 2 == 0


class TestCaseKernels(unittest.TestCase):
    def test_01_empty_ranges(self) -> None:
        """
        Get zero for empty summation ranges
        """
        # Check the U(3) kernel with q1 above h1
        self.assertEqual(f2_kernel(KernelArgs2(h=(1, 0, 0),
                                               m=(1, 0, 0),
                                               q=(2, 0),
                                               n=(1, 0))), 0)
        # Check the U(4) kernel with q1 above h1
        self.assertEqual(f3_kernel(KernelArgs3(h=(0, 0, 0),
                                               q=(1, 0, 0),
                                               m=(0, 0, 0),
                                               n=(0, 0, 0))), 0)
        # Check the symmetric kernel with p above mu2'
        self.assertEqual(f_kernel(l2p=2,
                                  top=1,
                                  mu2p=1,
                                  p=2,
                                  target2=(3, 1),
                                  sub2=(2, 1)), 0)

    def test_02_racah_against_sympy(self) -> None:
        """
        Compare the unitary Racah coefficients with sympy
        """
        for spins in itertools.product(range(3), repeat=6):
            j1, j2, j, j3, j12, j23 = spins
            value = su2_racah_unitary(*(spin_label(twice=twice)
                                        for twice in spins))
            if not (is_triad(j1, j2, j12) and is_triad(j, j3, j12) and
                    is_triad(j1, j, j23) and is_triad(j2, j3, j23)):
                # Check the vanishing of non triangular arguments
                self.assertTrue(value.is_zero(), str(spins))
                continue
            expected = float(racah(*(Rational(twice, 2)
                                     for twice in spins))) * math.sqrt(
                (j12 + 1) * (j23 + 1))
            # Check the value against sympy
            self.assertAlmostEqual(float(value), expected, places=12,
                                   msg=str(spins))

    def test_03_racah_half_spins(self) -> None:
        """
        Get U(1/2 1/2 1/2 1/2; 1 1), U(1 1/2 1/2 1; 1/2 3/2) and a
        coefficient with a zero spin
        """
        value = su2_racah_unitary(j1=(1, 0),
                                  j2=(1, 0),
                                  j=(1, 0),
                                  j3=(1, 0),
                                  j12=(2, 0),
                                  j23=(2, 0))
        half = Rational(1, 2)
        expected = float(racah(half, half, half, half, 1, 1)) * 3
        # Check the value against sympy
        self.assertAlmostEqual(float(value), expected, places=12)
        self.assertEqual(value, SurdSum.rational(Fraction(1, 2)))
        value = su2_racah_unitary(j1=(2, 0),
                                  j2=(1, 0),
                                  j=(1, 0),
                                  j3=(2, 0),
                                  j12=(1, 0),
                                  j23=(3, 0))
        expected = float(racah(1, half, half, 1, half,
                               Rational(3, 2))) * math.sqrt(8)
        self.assertAlmostEqual(float(value), expected, places=12)
        # Check the non-triangular spins give zero
        self.assertTrue(su2_racah_unitary(j1=(1, 0),
                                          j2=(1, 0),
                                          j=(2, 0),
                                          j3=(1, 0),
                                          j12=(2, 0),
                                          j23=(2, 0)).is_zero())
        # Check the spin zero in the second slot gives a phase
        value = su2_racah_unitary(j1=(2, 0),
                                  j2=(0, 0),
                                  j=(3, 0),
                                  j3=(1, 0),
                                  j12=(2, 0),
                                  j23=(1, 0))
        self.assertEqual(value.square(), 1)

    def test_03b_racah_recoupling(self) -> None:
        """
        Contract four Clebsch-Gordan coefficients into the unitary Racah
        coefficient
        """
        checked = 0
        for j1, j2, j3, j in itertools.product(range(3), range(3), range(3),
                                               range(4)):
            for j12 in range(5):
                if not (is_triad(j1, j2, j12) and is_triad(j12, j3, j)):
                    continue
                for j23 in range(5):
                    if not (is_triad(j2, j3, j23) and is_triad(j1, j23, j)):
                        continue
                    total = 0.0
                    for m1 in range(-j1, j1 + 1, 2):
                        for m2 in range(-j2, j2 + 1, 2):
                            m3 = j - m1 - m2
                            if abs(m3) > j3 or abs(m2 + m3) > j23:
                                continue
                            total += float(
                                clebsch_gordan(half_spin(j1), half_spin(j2),
                                               half_spin(j12),
                                               half_spin(m1), half_spin(m2),
                                               half_spin(m1 + m2)) *
                                clebsch_gordan(half_spin(j12), half_spin(j3),
                                               half_spin(j),
                                               half_spin(m1 + m2),
                                               half_spin(m3), half_spin(j)) *
                                clebsch_gordan(half_spin(j2), half_spin(j3),
                                               half_spin(j23),
                                               half_spin(m2), half_spin(m3),
                                               half_spin(m2 + m3)) *
                                clebsch_gordan(half_spin(j1), half_spin(j23),
                                               half_spin(j),
                                               half_spin(m1),
                                               half_spin(m2 + m3),
                                               half_spin(j)))
                    value = su2_racah_unitary(j1=spin_label(twice=j1),
                                              j2=spin_label(twice=j2),
                                              j=spin_label(twice=j),
                                              j3=spin_label(twice=j3),
                                              j12=spin_label(twice=j12),
                                              j23=spin_label(twice=j23))
                    # Check the overlap of the two coupling orders
                    self.assertAlmostEqual(float(value), total, places=12,
                                           msg=f'{j1} {j2} {j} {j3}; '
                                               f'{j12} {j23}')
                    checked += 1
        self.assertGreater(checked, 50)

    def test_04_racah_orthogonality(self) -> None:
        """
        Sum products of unitary Racah coefficients over the intermediate
        """
        for j1, j2, j, j3 in itertools.product(range(4), repeat=4):
            intermediates = [j12 for j12 in range(7)
                             if is_triad(j1, j2, j12) and
                             is_triad(j, j3, j12)]
            finals = [j23 for j23 in range(7)
                      if is_triad(j1, j, j23) and is_triad(j2, j3, j23)]
            for first, second in itertools.product(finals, repeat=2):
                total = sum((su2_racah_unitary(j1=spin_label(twice=j1),
                                               j2=spin_label(twice=j2),
                                               j=spin_label(twice=j),
                                               j3=spin_label(twice=j3),
                                               j12=spin_label(twice=j12),
                                               j23=spin_label(twice=first)) *
                             su2_racah_unitary(j1=spin_label(twice=j1),
                                               j2=spin_label(twice=j2),
                                               j=spin_label(twice=j),
                                               j3=spin_label(twice=j3),
                                               j12=spin_label(twice=j12),
                                               j23=spin_label(twice=second))
                             for j12 in intermediates), ZERO)
                # Check the orthonormality of the unitary matrix
                self.assertEqual(total, 1 if first == second else 0,
                                 f'{(j1, j2, j, j3, first, second)}')
