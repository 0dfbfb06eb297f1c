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

from pysu3rwc.errors import DomainError


def parse_integers(text: str,
                   count: int) -> tuple[int, ...]:
    """
    Parse a comma separated list of nonnegative integers

    :param text: string like 1,1 or 3,2,1
    :param count: expected number of values
    :return: tuple of integers
    """
    try:
        values = tuple(int(value) for value in text.split(','))
    except ValueError:
        raise DomainError(f'malformed label {text!r}') from None
    if len(values) != count:
        raise DomainError(f'label {text!r} needs {count} values')
    return values


@dataclasses.dataclass(frozen=True, order=True)
class Su3Irrep(object):
    """
    SU(3) irrep (lambda, mu), equivalent to the partition [lambda+mu, mu, 0]
    """
    lam: int
    mu: int

    def __post_init__(self):
        if self.lam < 0 or self.mu < 0:
            raise DomainError(f'invalid SU(3) irrep ({self.lam},{self.mu})')

    @classmethod
    def parse(cls,
              text: str) -> 'Su3Irrep':
        return cls(*parse_integers(text=text, count=2))

    @property
    def partition(self) -> 'Partition3':
        return Partition3(self.lam + self.mu, self.mu, 0)

    @property
    def box_count(self) -> int:
        return self.lam + 2 * self.mu

    def __str__(self) -> str:
        return f'({self.lam},{self.mu})'


@dataclasses.dataclass(frozen=True, order=True)
class Partition3(object):
    """
    Three-row partition [m1, m2, m3] labelling a U(3) irrep
    """
    m1: int
    m2: int
    m3: int

    def __post_init__(self):
        if not self.m1 >= self.m2 >= self.m3 >= 0:
            raise DomainError(f'invalid partition {list(self)}')

    @classmethod
    def parse(cls,
              text: str) -> 'Partition3':
        return cls(*parse_integers(text=text, count=3))

    def __iter__(self):
        return iter((self.m1, self.m2, self.m3))

    @property
    def rows(self) -> tuple[int, int, int]:
        return self.m1, self.m2, self.m3

    @property
    def box_count(self) -> int:
        return self.m1 + self.m2 + self.m3

    @property
    def su3(self) -> Su3Irrep:
        return Su3Irrep(self.m1 - self.m2, self.m2 - self.m3)

    def __str__(self) -> str:
        return f'[{self.m1},{self.m2},{self.m3}]'


@dataclasses.dataclass(frozen=True, order=True)
class U2Label(object):
    """
    Two-row Gelfand row [q1, q2] with the optional weight label q11
    """
    q1: int
    q2: int
    q11: Optional[int] = None

    def __post_init__(self):
        if self.q1 < self.q2:
            raise DomainError(f'invalid U(2) label [{self.q1},{self.q2}]')
        if self.q11 is not None and not self.q1 >= self.q11 >= self.q2:
            raise DomainError(f'invalid weight {self.q11} for '
                              f'[{self.q1},{self.q2}]')

    @classmethod
    def parse(cls,
              text: str) -> 'U2Label':
        return cls(*parse_integers(text=text, count=2))

    @property
    def rows(self) -> tuple[int, int]:
        return self.q1, self.q2

    @property
    def weight(self) -> int:
        return self.q1 + self.q2

    @property
    def twice_spin(self) -> int:
        return self.q1 - self.q2

    def is_between(self,
                   parent: Partition3) -> bool:
        """
        Check the betweenness conditions against a U(3) parent

        :param parent: parent partition
        :return: True if m1 >= q1 >= m2 >= q2 >= m3
        """
        return parent.m1 >= self.q1 >= parent.m2 >= self.q2 >= parent.m3

    def __str__(self) -> str:
        return f'[{self.q1},{self.q2}]'


def twice_spin(label: tuple[int, int]) -> int:
    """
    Convert a two-row U(2) label [p, q] to twice its SU(2) spin p - q

    :param label: pair of integers
    :return: 2j
    """
    return label[0] - label[1]


@dataclasses.dataclass(frozen=True, order=True)
class RhoTriple(object):
    """
    U(2) sublabels of the two coupled irreps and of the target
    """
    rho1: U2Label
    rho2: U2Label
    rho: U2Label

    def __str__(self) -> str:
        return f'{self.rho1}{self.rho2}{self.rho}'
