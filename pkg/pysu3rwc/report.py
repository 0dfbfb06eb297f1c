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

import dataclasses
from typing import Optional


@dataclasses.dataclass
class CheckReport(object):
    """
    Outcome of a verification check

    Only the first violation is kept, later ones are just counted.
    """
    name: str
    passed: bool = True
    checked: int = 0
    failures: int = 0
    violation: Optional[str] = None
    residual: Optional[float] = None
    elapsed: Optional[float] = None

    def fail(self,
             description: str) -> None:
        self.failures += 1
        if self.passed:
            self.passed = False
            self.violation = description

    def merge(self,
              other: 'CheckReport') -> None:
        """
        Accumulate the counts of another report

        :param other: report to merge
        """
        self.checked += other.checked
        if not other.passed:
            self.failures += other.failures
            if self.passed:
                self.passed = False
                self.violation = f'{other.name}: {other.violation}'
        if other.residual is not None:
            self.residual = max(self.residual or 0.0, other.residual)

    def __str__(self) -> str:
        status = 'PASS' if self.passed else 'FAIL'
        text = f'{status} {self.name}: {self.checked} checks'
        if self.residual is not None:
            text += f', max residual {self.residual:.3e}'
        if self.elapsed is not None:
            text += f', {self.elapsed:.2f} s'
        if not self.passed:
            text += f', {self.failures} failures, first: {self.violation}'
        return text
