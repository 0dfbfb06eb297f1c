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
from typing import Iterator, Optional, Sequence

from pysu3rwc.errors import DomainError, InvalidCouplingError
from pysu3rwc.labels import Partition3, Su3Irrep, U2Label


logger = logging.getLogger(__name__)


def dim_su3(irrep: Su3Irrep) -> int:
    """
    Weyl dimension of an SU(3) irrep

    :param irrep: SU(3) irrep (lambda, mu)
    :return: (lambda+1)(mu+1)(lambda+mu+2)/2
    """
    return ((irrep.lam + 1) * (irrep.mu + 1) *
            (irrep.lam + irrep.mu + 2)) // 2


def is_horizontal_strip(inner: Sequence[int],
                        outer: Sequence[int],
                        size: int) -> bool:
    """
    Check if outer/inner is a horizontal strip of the given size

    :param inner: smaller partition
    :param outer: larger partition, same number of rows
    :param size: number of added boxes
    :return: True when outer is obtained adding a horizontal strip
    """
    if sum(outer) - sum(inner) != size:
        return False
    if any(o < i for o, i in zip(outer, inner)):
        return False
    # No two added boxes in the same column
    return all(outer[row + 1] <= inner[row]
               for row in range(len(outer) - 1))


def interlaces(top: Sequence[int],
               row: Sequence[int]) -> bool:
    """
    Check the Gelfand betweenness conditions top[i] >= row[i] >= top[i+1]

    :param top: upper row with n entries
    :param row: lower row with n - 1 entries
    :return: True if row lies between the entries of top
    """
    return all(top[index] >= value >= top[index + 1]
               for index, value in enumerate(row))


def multiplicity_range(left: Su3Irrep,
                       right: Su3Irrep,
                       target: Partition3) -> Optional[tuple[int, int]]:
    """
    Range of the outer multiplicity label eta for a coupling

    :param left: first irrep (lambda1, mu1)
    :param right: second irrep (lambda2, mu2)
    :param target: coupled U(3) partition
    :return: tuple (eta_min, eta_max) or None for an empty coupling
    """
    if target.box_count != left.box_count + right.box_count:
        raise InvalidCouplingError(
            f'{target} has {target.box_count} boxes, '
            f'{left}x{right} needs {left.box_count + right.box_count}')
    l1, u1 = left.lam, left.mu
    l2, u2 = right.lam, right.mu
    m1, m2, m3 = target.rows
    eta_max = min(m1 - l1 - u1, u2, m2 - u1, l2 + u2 - m3, u1 + u2 - m3,
                  m2 - m3)
    eta_min = max(0, u2 - m3, m2 - l1 - u1)
    if eta_min > eta_max:
        return None
    return eta_min, eta_max


def _lr_fillings(inner: Sequence[int],
                 outer: Sequence[int],
                 content: Sequence[int]) -> Iterator[list[list[int]]]:
    """
    Generate Littlewood-Richardson fillings of the skew shape outer/inner
    """
    letters = len(content)
    lengths = [o - i for o, i in zip(outer, inner)]
    rows: list[list[int]] = []

    def fill_row(index: int) -> Iterator[list[list[int]]]:
        if index == len(lengths):
            yield [list(row) for row in rows]
            return
        for row in _weak_rows(length=lengths[index], letters=letters):
            # Column strictness against the previous row
            if index > 0:
                above = rows[index - 1]
                offset = inner[index] - inner[index - 1]
                if any(0 <= column + offset < len(above) and
                       above[column + offset] >= value
                       for column, value in enumerate(row)):
                    continue
            rows.append(row)
            yield from fill_row(index + 1)
            rows.pop()

    yield from fill_row(0)


def _weak_rows(length: int,
               letters: int,
               start: int = 1) -> Iterator[list[int]]:
    if length == 0:
        yield []
        return
    for value in range(start, letters + 1):
        for tail in _weak_rows(length=length - 1,
                               letters=letters,
                               start=value):
            yield [value] + tail


def _is_lattice_filling(filling: list[list[int]],
                        content: Sequence[int]) -> bool:
    counts = [0] * (len(content) + 1)
    for row in filling:
        for value in reversed(row):
            counts[value] += 1
            if value > 1 and counts[value] > counts[value - 1]:
                return False
    return counts[1:] == list(content)


def lr_multiplicity(left: Su3Irrep,
                    right: Su3Irrep,
                    target: Partition3) -> int:
    """
    Count the Littlewood-Richardson tableaux of a coupling

    :param left: first irrep, giving the inner shape [lambda1+mu1, mu1]
    :param right: second irrep, giving the content [lambda2+mu2, mu2]
    :param target: outer shape
    :return: number of lattice skew tableaux
    """
    inner = left.partition.rows
    outer = target.rows
    if target.box_count != left.box_count + right.box_count:
        return 0
    if any(o < i for o, i in zip(outer, inner)):
        return 0
    content = [value for value in right.partition.rows if value]
    return sum(1 for filling in _lr_fillings(inner=inner,
                                             outer=outer,
                                             content=content)
               if _is_lattice_filling(filling=filling, content=content))


class Coupling(object):
    """
    A pair of SU(3) irreps coupled to a target partition
    """
    def __init__(self,
                 left: Su3Irrep,
                 right: Su3Irrep,
                 target: Partition3,
                 eta_min: int,
                 eta_max: int):
        if eta_min > eta_max:
            raise DomainError('empty coupling')
        self.left = left
        self.right = right
        self.target = target
        self.eta_min = eta_min
        self.eta_max = eta_max

    @classmethod
    def create(cls,
               left: Su3Irrep,
               right: Su3Irrep,
               target: Partition3) -> Optional['Coupling']:
        """
        Build a Coupling, or None when the target does not occur

        :param left: first irrep
        :param right: second irrep
        :param target: coupled partition
        :return: Coupling object or None
        """
        eta_range = multiplicity_range(left=left,
                                       right=right,
                                       target=target)
        if eta_range is None:
            return None
        return cls(left=left,
                   right=right,
                   target=target,
                   eta_min=eta_range[0],
                   eta_max=eta_range[1])

    @classmethod
    def require(cls,
                left: Su3Irrep,
                right: Su3Irrep,
                target: Partition3) -> 'Coupling':
        """
        Build a Coupling, raising DomainError when the target does not occur
        """
        coupling = cls.create(left=left, right=right, target=target)
        if coupling is None:
            raise DomainError(f'{target} does not occur in {left}x{right}')
        return coupling

    @property
    def multiplicity(self) -> int:
        return self.eta_max - self.eta_min + 1

    @property
    def etas(self) -> range:
        return range(self.eta_min, self.eta_max + 1)

    @property
    def key(self) -> tuple[int, ...]:
        return (self.left.lam, self.left.mu,
                self.right.lam, self.right.mu) + self.target.rows

    def swapped(self) -> 'Coupling':
        """
        Get the coupling with the two irreps exchanged
        """
        return Coupling.require(left=self.right,
                                right=self.left,
                                target=self.target)

    def check_eta(self,
                  eta: int) -> None:
        if eta not in self.etas:
            raise DomainError(f'eta {eta} outside [{self.eta_min},'
                              f'{self.eta_max}] for {self}')

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Coupling):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f'Coupling({self})'

    def __str__(self) -> str:
        return (f'{self.left}x{self.right}->{self.target}'
                f'{self.target.su3}')


def decompose_product(left: Su3Irrep,
                      right: Su3Irrep) -> list[tuple[Partition3, int]]:
    """
    Decompose the product of two SU(3) irreps

    :param left: first irrep
    :param right: second irrep
    :return: list of (target partition, multiplicity)
    """
    boxes = left.box_count + right.box_count
    results = []
    for m1 in range(boxes, -1, -1):
        for m2 in range(min(m1, boxes - m1), -1, -1):
            m3 = boxes - m1 - m2
            if m3 > m2:
                continue
            target = Partition3(m1, m2, m3)
            eta_range = multiplicity_range(left=left,
                                           right=right,
                                           target=target)
            if eta_range is not None:
                results.append((target, eta_range[1] - eta_range[0] + 1))
    logger.debug('%s x %s has %d targets', left, right, len(results))
    return results


def u2_sublabels(parent: Partition3) -> list[U2Label]:
    """
    All U(2) labels [q1, q2] between the rows of a U(3) partition

    :param parent: U(3) partition
    :return: list of U2Label, q1 then q2 descending
    """
    return [U2Label(q1, q2)
            for q1 in range(parent.m1, parent.m2 - 1, -1)
            for q2 in range(parent.m2, parent.m3 - 1, -1)]
