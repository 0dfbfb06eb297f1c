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

import os
import tempfile
import unittest
from fractions import Fraction

from pysu3rwc import Coupling, Partition3, RhoTriple, Su3Irrep, U2Label
from pysu3rwc.surd import SurdSum, parse_surd


def get_coupling(left: str,
                 right: str,
                 target: str) -> Coupling:
    """
    Get a Coupling object from textual labels

    :param left: first irrep like 1,1
    :param right: second irrep like 1,1
    :param target: coupled partition like 3,2,1
    :return: Coupling object
    """
    return Coupling.require(left=Su3Irrep.parse(text=left),
                            right=Su3Irrep.parse(text=right),
                            target=Partition3.parse(text=target))


def get_triple(rho1: str,
               rho2: str,
               rho: str) -> RhoTriple:
    """
    Get a RhoTriple object from textual U(2) labels

    :param rho1: label of the first irrep like 2,1
    :param rho2: label of the second irrep like 2,0
    :param rho: final label like 3,2
    :return: RhoTriple object
    """
    return RhoTriple(rho1=U2Label.parse(text=rho1),
                     rho2=U2Label.parse(text=rho2),
                     rho=U2Label.parse(text=rho))


def surd(text: str) -> SurdSum:
    """
    Get a SurdSum from its exact serialization

    :param text: string like -sqrt(1/42)
    :return: SurdSum object
    """
    return parse_surd(text=text)


def rational(numerator: int,
             denominator: int = 1) -> SurdSum:
    return SurdSum.rational(Fraction(numerator, denominator))


def get_temporary_directory() -> tempfile.TemporaryDirectory:
    """
    Get a temporary directory to be cleaned up by the caller

    :return: TemporaryDirectory object
    """
    return tempfile.TemporaryDirectory(prefix='pysu3rwc_test_')


def require_slow_tests(test: unittest.TestCase) -> None:
    """
    Skip a long-running test unless PYSU3RWC_SLOW_TESTS is set to 1

    :param test: running test case
    """
    if os.environ.get('PYSU3RWC_SLOW_TESTS') != '1':
        test.skipTest('Slow tests are disabled, set PYSU3RWC_SLOW_TESTS=1')
