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

import logging
import threading
from fractions import Fraction
from typing import Iterable, Optional


logger = logging.getLogger(__name__)


class FactorialTable(object):
    """
    Append-only table of exact factorials, cache[n] = n!
    """
    def __init__(self,
                 size: int = 64):
        self._lock = threading.Lock()
        self._cache = [1]
        self.extend(size=size)

    def __len__(self) -> int:
        return len(self._cache)

    def extend(self,
               size: int) -> None:
        """
        Grow the table to hold at least size entries

        :param size: number of factorials required
        """
        with self._lock:
            cache = self._cache
            for n in range(len(cache), size):
                cache.append(cache[-1] * n)

    def get(self,
            n: int) -> int:
        """
        Get the factorial of a nonnegative integer

        :param n: nonnegative integer
        :return: n!
        """
        if n < 0:
            raise ArithmeticError(f'factorial of negative integer {n}')
        if n >= len(self._cache):
            logger.debug('Growing factorial table to %d entries', n + 1)
            self.extend(size=2 * n + 1)
        return self._cache[n]

    def ratio(self,
              numerators: Iterable[int],
              denominators: Iterable[int]) -> Optional[Fraction]:
        """
        Get the ratio of two factorial products

        Any negative argument makes the whole term vanish, this is signalled
        returning None so that summations can skip it.

        :param numerators: arguments of the factorials in the numerator
        :param denominators: arguments of the factorials in the denominator
        :return: exact ratio or None when any argument is negative
        """
        numerator = 1
        for value in numerators:
            if value < 0:
                return None
            numerator *= self.get(value)
        denominator = 1
        for value in denominators:
            if value < 0:
                return None
            denominator *= self.get(value)
        return Fraction(numerator, denominator)


# Shared table used by every kernel
FACTORIALS = FactorialTable()
