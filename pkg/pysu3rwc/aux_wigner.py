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
import logging
from fractions import Fraction
from typing import Callable, Optional

from pysu3rwc.errors import DomainError, InvalidCouplingError
from pysu3rwc.factorial import FACTORIALS
from pysu3rwc.g_polynomials import middle_rows, recoupled_sum
from pysu3rwc.kernels import (KernelArgs2,
                              f2_kernel,
                              f_kernel,
                              su2_racah_unitary)
from pysu3rwc.labels import Partition3, RhoTriple, Su3Irrep, U2Label
from pysu3rwc.multiplicity_free import bar_labels, horizontal_strips
from pysu3rwc.report import CheckReport
from pysu3rwc.representation import u2_sublabels
from pysu3rwc.surd import SurdSum, ZERO, surd_from_sqrt


logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, order=True)
class AuxLabel(object):
    """
    Intermediate U(3) label [u1, u2, u3] carrying the multiplicity
    """
    u1: int
    u2: int
    u3: int

    def __post_init__(self):
        if not self.u1 >= self.u2 >= self.u3 >= 0:
            raise DomainError(f'invalid auxiliary label '
                              f'[{self.u1},{self.u2},{self.u3}]')

    @property
    def rows(self) -> tuple[int, int, int]:
        return self.u1, self.u2, self.u3

    def __str__(self) -> str:
        return f'[{self.u1},{self.u2},{self.u3}]'


class AuxCoupling(object):
    """
    Coupling whose second irrep is built from [lambda2'+mu2'] x [mu2']
    """
    def __init__(self,
                 left: Su3Irrep,
                 right: Su3Irrep,
                 target: Partition3,
                 split: Optional[tuple[int, int]] = None):
        self.left = left
        self.right = right
        self.target = target
        # The split defaults to (lambda2, mu2) itself
        self.split = split if split is not None else (right.lam, right.mu)
        l2p, u2p = self.split
        if l2p < 0 or u2p < 0:
            raise DomainError(f'invalid split {self.split}')
        if l2p + 2 * u2p != right.box_count:
            raise InvalidCouplingError(
                f'split {self.split} does not carry the '
                f'{right.box_count} boxes of {right}')
        if target.box_count != left.box_count + right.box_count:
            raise InvalidCouplingError(
                f'{target} has {target.box_count} boxes, '
                f'{left}x{right} needs {left.box_count + right.box_count}')
        if right.partition.rows not in horizontal_strips(
                inner=(self.first_boxes, 0, 0), boxes=u2p):
            raise DomainError(f'{right} does not occur in '
                              f'[{self.first_boxes}]x[{u2p}]')

    @property
    def first_boxes(self) -> int:
        return self.split[0] + self.split[1]

    @property
    def second_boxes(self) -> int:
        return self.split[1]

    def labels(self) -> list[AuxLabel]:
        """
        Valid auxiliary labels of the coupling
        """
        return [AuxLabel(*rows)
                for rows in bar_labels(inner=self.left.partition.rows,
                                       boxes=self.first_boxes,
                                       target=self.target.rows)]

    def check(self,
              u: AuxLabel,
              q: RhoTriple) -> None:
        if u not in self.labels():
            raise DomainError(f'auxiliary label {u} not valid for {self}')
        for label, parent in ((q.rho1, self.left.partition),
                              (q.rho2, self.right.partition),
                              (q.rho, self.target)):
            if not label.is_between(parent=parent):
                raise DomainError(f'U(2) label {label} not between '
                                  f'{parent}')

    def __str__(self) -> str:
        return (f'{self.left}x{self.right}->{self.target} '
                f'split ({self.split[0]},{self.split[1]})')


def aux_rwc_recoupled(c: AuxCoupling,
                      u: AuxLabel,
                      q: RhoTriple) -> SurdSum:
    """
    Reduced auxiliary Wigner coefficient by the recoupling sum

    :param c: auxiliary coupling
    :param u: auxiliary label
    :param q: U(2) labels of the two irreps and of the target
    :return: exact value, zero for weight-violating labels
    """
    c.check(u=u, q=q)
    if q.rho.weight != q.rho1.weight + q.rho2.weight:
        return ZERO
    return recoupled_sum(inner=c.left.partition.rows,
                         first_boxes=c.first_boxes,
                         second_boxes=c.second_boxes,
                         right=c.right.partition.rows,
                         target=c.target.rows,
                         mbar=u.rows,
                         rho=q)


def _symmetric_kernel(first_boxes: int,
                      second_boxes: int,
                      a: int,
                      p: int,
                      right: tuple[int, int, int],
                      rho2: tuple[int, int]) -> Fraction:
    """
    U(3) kernel of [first_boxes] x [second_boxes] -> right through the
    single sum of two symmetric irreps
    """
    r1, r2 = rho2
    b1, b2, _ = right
    scale = FACTORIALS.ratio(numerators=(a, b1 + 1, b2),
                             denominators=(r2, r1 + 1, first_boxes + 1))
    if scale is None:
        return Fraction(0)
    return scale * f_kernel(l2p=first_boxes,
                            top=a,
                            mu2p=second_boxes,
                            p=p,
                            target2=(b1, b2),
                            sub2=rho2)


def _closed_radicand(c: AuxCoupling,
                     u: AuxLabel,
                     q: RhoTriple) -> Fraction:
    """
    Squared prefactor of the closed expression, free of p and q
    """
    a0, a1, _ = c.left.partition.rows
    b0, b1, _ = c.right.partition.rows
    m1, m2, m3 = c.target.rows
    u1, u2, u3 = u.rows
    a12, a22 = q.rho1.rows
    b12, b22 = q.rho2.rows
    c12, c22 = q.rho.rows
    n = c.first_boxes
    ratio = FACTORIALS.ratio(
        numerators=(a0 - a12, a0 - u2, a0 - a22 + 1, a0 - u3 + 1, a1 - a22,
                    a1 - u3, u1 - m2, c12 - m2, u1 - m3 + 1, c12 - m3 + 1,
                    u2 - m3, c22 - m3, n - b1, b12 - b1, n + 1, n + 1,
                    b12 + 1, b12 + 1, b22, b22),
        denominators=(u1 - a0, u1 - a1 + 1, a12 - a1, u1 + 2, a12 + 1,
                      u2 - a1, u2 + 1, a22, u3, m1 - u1, m1 - c12,
                      m1 - u2 + 1, m1 - c22 + 1, m1 - u3 + 2, m2 - u2,
                      m2 - c22, m2 - u3 + 1, m3 - u3, b0 - n, b0 - b12,
                      b0 + 1, b0 - b22 + 1, b0 + 2, b1, b1 - b22, b1 + 1))
    if ratio is None:
        return Fraction(0)
    return ratio * ((a12 - a22 + 1) * (u1 - u2 + 1) * (u1 - u3 + 2) *
                    (u2 - u3 + 1) * (m1 - m2 + 1) * (m1 - m3 + 2) *
                    (m2 - m3 + 1) * (b0 - b1 + 1) * (b0 + 2) * (b1 + 1))


def aux_rwc_closed(c: AuxCoupling,
                   u: AuxLabel,
                   q: RhoTriple) -> SurdSum:
    """
    Reduced auxiliary Wigner coefficient by the closed algebraic expression

    A single radical depending on the labels only multiplies a double sum
    over the U(2) row [p, 0] of [mu2'] and the lower row q of the U(2)
    label [c-p-q, q] of the auxiliary label, c being the weight of rho.
    Each term carries its own radical, the two U(3) kernels, the single
    sum kernel of the symmetric coupling and an SU(2) Racah coefficient.

    :param c: auxiliary coupling
    :param u: auxiliary label
    :param q: U(2) labels of the two irreps and of the target
    :return: exact value, zero for weight-violating labels
    """
    c.check(u=u, q=q)
    if q.rho.weight != q.rho1.weight + q.rho2.weight:
        return ZERO
    radicand = _closed_radicand(c=c, u=u, q=q)
    if not radicand:
        return ZERO
    inner = c.left.partition.rows
    right = c.right.partition.rows
    target = c.target.rows
    rows = u.rows
    rho1, rho2, rho = q.rho1.rows, q.rho2.rows, q.rho.rows
    a12, a22 = rho1
    b12, b22 = rho2
    c12, c22 = rho
    first = c.first_boxes
    weight = c12 + c22
    total = ZERO
    for p in range(c.second_boxes + 1):
        a = b12 + b22 - p
        if not 0 <= a <= first:
            continue
        symmetric = _symmetric_kernel(first_boxes=first,
                                      second_boxes=c.second_boxes,
                                      a=a,
                                      p=p,
                                      right=right,
                                      rho2=rho2)
        if not symmetric:
            continue
        for middle in middle_rows(mbar=rows, total=weight - p):
            low = middle[1]
            term = FACTORIALS.ratio(
                numerators=(first + p - b12 - b22, first + p - b12 - b22,
                            middle[0] - a12, middle[0] - a22 + 1,
                            low - a22, c.second_boxes - p,
                            c.second_boxes - p, p + low - c22,
                            c12 - low + 1, c22 - low, p - b22),
                denominators=(a12 - low, c12 - p - low, a, b12 - p, a + 1))
            if term is None:
                continue
            kernels = (f2_kernel(KernelArgs2(h=inner, m=rows,
                                             q=rho1, n=middle)) *
                       f2_kernel(KernelArgs2(h=rows, m=target,
                                             q=middle, n=rho)))
            if not kernels:
                continue
            total = total + (
                surd_from_sqrt(r=term * (middle[0] - low + 1) * (a + 1)) *
                symmetric * kernels *
                su2_racah_unitary(j1=rho1, j2=(a, 0), j=rho, j3=(p, 0),
                                  j12=middle, j23=rho2))
    return surd_from_sqrt(r=radicand) * total


AuxEvaluator = Callable[[AuxCoupling, AuxLabel, RhoTriple], SurdSum]


def aux_orthogonality_check(left: Su3Irrep,
                            split: tuple[int, int],
                            evaluate: AuxEvaluator = aux_rwc_recoupled
                            ) -> CheckReport:
    """
    Check both orthogonality relations over a family of couplings

    The family holds every (lambda2, mu2) coupled from the split and every
    pair of auxiliary label and target reached from the first irrep.
    For each final U(2) label the rows (u, m) and, within each
    (lambda2, mu2), the columns (rho1, rho2) must be orthonormal.

    :param left: first irrep
    :param split: (lambda2', mu2')
    :param evaluate: function computing a single coefficient
    :return: CheckReport
    """
    l2p, u2p = split
    first = l2p + u2p
    inner = left.partition.rows
    rights = [Su3Irrep(rows[0] - rows[1], rows[1])
              for rows in horizontal_strips(inner=(first, 0, 0),
                                            boxes=u2p)]
    pairs = [(AuxLabel(*rows), Partition3(*target))
             for rows in horizontal_strips(inner=inner, boxes=first)
             for target in horizontal_strips(inner=rows, boxes=u2p)]
    finals = sorted({label
                     for _, target in pairs
                     for label in u2_sublabels(parent=target)},
                    reverse=True)
    report = CheckReport(name=f'auxiliary orthogonality {left} '
                              f'split {split}')
    for final in finals:
        rows = [(u, target) for u, target in pairs
                if final.is_between(parent=target)]
        columns = []
        for right in rights:
            for rho1 in u2_sublabels(parent=left.partition):
                for rho2 in u2_sublabels(parent=right.partition):
                    if rho1.weight + rho2.weight != final.weight:
                        continue
                    if not (abs(rho1.twice_spin - rho2.twice_spin) <=
                            final.twice_spin <=
                            rho1.twice_spin + rho2.twice_spin):
                        continue
                    columns.append((right, RhoTriple(rho1=rho1,
                                                     rho2=rho2,
                                                     rho=final)))
        matrix = [[evaluate(AuxCoupling(left=left,
                                        right=right,
                                        target=target,
                                        split=split),
                            u,
                            triple)
                   for right, triple in columns]
                  for u, target in rows]
        for i, (u, target) in enumerate(rows):
            for j in range(i + 1):
                value = sum((a * b for a, b in zip(matrix[i], matrix[j])),
                            ZERO)
                report.checked += 1
                if value != (1 if i == j else 0):
                    report.fail(f'rows {u}{target} and '
                                f'{rows[j][0]}{rows[j][1]} at {final} '
                                f'give {value}')
        for i, (right, triple) in enumerate(columns):
            for j in range(i + 1):
                if columns[j][0] != right:
                    continue
                value = sum((row[i] * row[j] for row in matrix), ZERO)
                report.checked += 1
                if value != (1 if i == j else 0):
                    report.fail(f'columns {right}{triple} and '
                                f'{columns[j][0]}{columns[j][1]} give '
                                f'{value}')
    logger.info('Auxiliary orthogonality of %s split %s: %d checks, %s',
                left, split, report.checked,
                'passed' if report.passed else 'failed')
    return report


def aux_couplings(left: Su3Irrep,
                  split: tuple[int, int]) -> list[AuxCoupling]:
    """
    Every auxiliary coupling of the family of a first irrep and a split

    :param left: first irrep
    :param split: (lambda2', mu2')
    :return: list of AuxCoupling
    """
    first = split[0] + split[1]
    couplings = []
    for rows in horizontal_strips(inner=(first, 0, 0), boxes=split[1]):
        right = Su3Irrep(rows[0] - rows[1], rows[1])
        targets = {target
                   for label in horizontal_strips(inner=left.partition.rows,
                                                  boxes=first)
                   for target in horizontal_strips(inner=label,
                                                   boxes=split[1])}
        couplings.extend(AuxCoupling(left=left,
                                     right=right,
                                     target=Partition3(*target),
                                     split=split)
                         for target in sorted(targets, reverse=True))
    return couplings


def aux_closed_form_check(left: Su3Irrep,
                          split: tuple[int, int]) -> CheckReport:
    """
    Exact agreement of the closed expression with the recoupling sum

    :param left: first irrep
    :param split: (lambda2', mu2')
    :return: CheckReport
    """
    report = CheckReport(name=f'auxiliary closed form {left} split {split}')
    for c in aux_couplings(left=left, split=split):
        for u in c.labels():
            for rho1 in u2_sublabels(parent=c.left.partition):
                for rho2 in u2_sublabels(parent=c.right.partition):
                    for rho in u2_sublabels(parent=c.target):
                        if rho.weight != rho1.weight + rho2.weight:
                            continue
                        q = RhoTriple(rho1=rho1, rho2=rho2, rho=rho)
                        recoupled = aux_rwc_recoupled(c=c, u=u, q=q)
                        closed = aux_rwc_closed(c=c, u=u, q=q)
                        report.checked += 1
                        if recoupled != closed:
                            report.fail(f'{c} {u} {q}: recoupled '
                                        f'{recoupled}, closed {closed}')
    return report


def aux_table(c: AuxCoupling,
              rho: Optional[U2Label] = None,
              closed: bool = False
              ) -> dict[tuple[AuxLabel, RhoTriple], SurdSum]:
    """
    Every auxiliary coefficient of a coupling

    :param c: auxiliary coupling
    :param rho: optional final U(2) label
    :param closed: use the closed expression instead of the recoupling sum
    :return: dictionary (u, rho triple) -> value
    """
    evaluate = aux_rwc_closed if closed else aux_rwc_recoupled
    finals = ([U2Label(rho.q1, rho.q2)] if rho is not None
              else u2_sublabels(parent=c.target))
    values = {}
    for u in c.labels():
        for final in finals:
            for rho1 in u2_sublabels(parent=c.left.partition):
                for rho2 in u2_sublabels(parent=c.right.partition):
                    if rho1.weight + rho2.weight != final.weight:
                        continue
                    if not (abs(rho1.twice_spin - rho2.twice_spin) <=
                            final.twice_spin <=
                            rho1.twice_spin + rho2.twice_spin):
                        continue
                    q = RhoTriple(rho1=rho1, rho2=rho2, rho=final)
                    values[u, q] = evaluate(c, u, q)
    return values
