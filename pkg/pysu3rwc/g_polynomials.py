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
import functools
import logging
from fractions import Fraction
from typing import Callable, Optional

from pysu3rwc.errors import DomainError, KernelConsistencyError
from pysu3rwc.factorial import FACTORIALS
from pysu3rwc.kernels import (KernelArgs2,
                              KernelArgs3,
                              f2_kernel,
                              f3_kernel,
                              su2_racah_unitary)
from pysu3rwc.labels import Partition3, RhoTriple, Su3Irrep
from pysu3rwc.multiplicity_free import (bar_labels,
                                        mf_rwc3,
                                        mf_rwc4,
                                        multiplicity_free_prefactor,
                                        selection_rules)
from pysu3rwc.representation import Coupling
from pysu3rwc.surd import SurdSum, ZERO, surd_from_sqrt


logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, order=True)
class BarLabel(object):
    """
    Intermediate U(3) label [lambda-k1-k2, mu1+k1, k2] of the recoupling
    """
    k1: int
    k2: int
    partition: Partition3

    @classmethod
    def from_rows(cls,
                  rows: tuple[int, int, int],
                  left: Su3Irrep) -> 'BarLabel':
        return cls(k1=rows[1] - left.mu,
                   k2=rows[2],
                   partition=Partition3(*rows))

    def __str__(self) -> str:
        return str(self.partition)


def _left_rows(irrep: Su3Irrep) -> tuple[int, int, int]:
    return irrep.partition.rows


def k_ranges(coupling: Coupling) -> list[BarLabel]:
    """
    Bar labels of a coupling

    The printed k1, k2 bounds are intersected with the requirement that the
    derived partition is reached from [lambda1+mu1, mu1] by a horizontal
    strip of lambda2+mu2 boxes and interlaces the target.

    :param coupling: coupling
    :return: list of BarLabel
    """
    l1, u1 = coupling.left.lam, coupling.left.mu
    l2, u2 = coupling.right.lam, coupling.right.mu
    m1, m2, m3 = coupling.target.rows
    valid = set(bar_labels(inner=_left_rows(coupling.left),
                           boxes=l2 + u2,
                           target=coupling.target.rows))
    total = l1 + u1 + l2 + u2
    bars = []
    for k1 in range(max(m3 - u1, m2 - u1 - u2, 0),
                    min(m2 - u1, l1, l2 + u2) + 1):
        for k2 in range(max(0, m2 + m3 - u1 - u2 - k1),
                        min(u1, l2 + u2 - k1,
                            l2 + u2 - k1 + l1 + u1 - m2) + 1):
            rows = (total - k1 - k2, u1 + k1, k2)
            if rows in valid:
                bars.append(BarLabel.from_rows(rows=rows,
                                               left=coupling.left))
    return sorted(bars, key=lambda bar: bar.partition, reverse=True)


def _eta_partition(coupling: Coupling,
                   eta: int) -> tuple[int, int, int]:
    m1, m2, m3 = coupling.target.rows
    return m1, m2 - eta, m3 - coupling.right.mu + eta


def _check_bar(coupling: Coupling,
               bar: BarLabel,
               eta: int) -> None:
    coupling.check_eta(eta=eta)
    if bar not in k_ranges(coupling=coupling):
        raise DomainError(f'bar label {bar} outside the ranges of '
                          f'{coupling}')


def _g_eta_radicand(coupling: Coupling,
                    bar: BarLabel,
                    eta: int) -> Fraction:
    """
    Squared prefactor of the closed G([m-bar], eta) expression
    """
    l1, u1 = coupling.left.lam, coupling.left.mu
    l2, u2 = coupling.right.lam, coupling.right.mu
    m1, m2, m3 = coupling.target.rows
    k1, k2 = bar.k1, bar.k2
    lam = l1 + u1 + l2 + u2
    k = k1 + k2
    ratio = FACTORIALS.ratio(
        numerators=(m3 - u2 + eta, m3 - u2 + eta, m2 - eta + 1,
                    m2 - eta + 1, m1 + 2, lam - k - l1 - u1,
                    lam - k - u1 + 1, m1 - m2 + 1, m1 - m3 + 2, lam - k - m2,
                    lam - k - m3 + 1, lam - k + 2, u1 + k1 - m3, u1 + k1 + 1,
                    k1, k2, u2, m2 - m3 - eta, m1 - l1 - u1, m1 - u1 + 1,
                    m2 - u1 - eta),
        denominators=(l2 + u2, l2 + u2, u1 + u2 - m3 - eta, l1 - k1,
                      l1 + u1 - k2 + 1, u1 - k2, u2 - eta,
                      l1 + u1 - m2 + eta, l1 + u1 + u2 - m3 - eta + 1,
                      m1 - lam + k, m1 - u1 - k1 + 1, m1 - k2 + 2,
                      m2 - u1 - k1, m2 - k2 + 1, m2 + 1, m3, m3 - k2,
                      m1 - m2 + eta + 1, m1 - m3 + u2 - eta + 2, eta,
                      m2 - m3 + u2 - eta + 1))
    if ratio is None:
        return Fraction(0)
    linear = Fraction((lam - u1 - 2 * k1 - k2 + 1) *
                      (lam - k1 - 2 * k2 + 2) *
                      (u1 + k1 - k2 + 1) *
                      (l2 + 1) *
                      (m2 - m3 + 1),
                      l2 + u2 + 1)
    return ratio * linear if linear > 0 else Fraction(0)


@functools.lru_cache(maxsize=None)
def g_eta(coupling: Coupling,
          bar: BarLabel,
          eta: int) -> SurdSum:
    """
    Closed expression of G([m-bar], eta)

    A single radical multiplies a triple sum over the second irrep's
    symmetric split p and the rows (m23, m33) of the intermediate U(3)
    label, each term weighted by the U(4) kernel between [m-bar] and the
    target.

    :param coupling: coupling
    :param bar: intermediate label
    :param eta: multiplicity label
    :return: exact value
    """
    _check_bar(coupling=coupling, bar=bar, eta=eta)
    radicand = _g_eta_radicand(coupling=coupling, bar=bar, eta=eta)
    if not radicand:
        return ZERO
    l1, u1 = coupling.left.lam, coupling.left.mu
    l2, u2 = coupling.right.lam, coupling.right.mu
    lam = l1 + u1 + l2 + u2
    target = coupling.target.rows
    mbar = bar.partition.rows
    meta = _eta_partition(coupling=coupling, eta=eta)
    total = Fraction(0)
    for p in range(u2 + 1):
        for m23 in range(l1 + 1):
            for m33 in range(u1 + 1):
                top = lam - p - m23 - m33
                term = FACTORIALS.ratio(
                    numerators=(p, l1 - m23, l1 + u1 - m33 + 1, u1 - m33,
                                l2 + u2 - p),
                    denominators=(top - l1 - u1, top - u1 + 1, m23, top + 2,
                                  u1 + m23 + 1, m33))
                if term is None:
                    continue
                kernel = f3_kernel(KernelArgs3(h=mbar,
                                               q=(top, m23 + u1, m33),
                                               m=target,
                                               n=meta))
                if not kernel:
                    continue
                total += ((-1) ** p * term * kernel *
                          (top - m23 - u1 + 1) *
                          (top - m33 + 2) *
                          (m23 - m33 + u1 + 1))
    return surd_from_sqrt(r=radicand) * total


@functools.lru_cache(maxsize=None)
def recoupled_g_eta(coupling: Coupling,
                    bar: BarLabel,
                    eta: int) -> SurdSum:
    """
    G([m-bar], eta) as a contraction of multiplicity-free coefficients

    :param coupling: coupling
    :param bar: intermediate label
    :param eta: multiplicity label
    :return: exact value
    """
    _check_bar(coupling=coupling, bar=bar, eta=eta)
    inner = _left_rows(coupling.left)
    inner2 = inner[:2]
    boxes = coupling.right.lam + coupling.right.mu
    mu2 = coupling.right.mu
    right = _left_rows(coupling.right)
    target = coupling.target.rows
    mbar = bar.partition.rows
    meta = _eta_partition(coupling=coupling, eta=eta)
    norm = mf_rwc3(inner, inner2, meta, inner2, boxes, 0)
    if not norm:
        raise KernelConsistencyError(f'vanishing normalisation for eta '
                                     f'{eta} in {coupling}')
    total = ZERO
    weight = sum(inner) + boxes
    for t in range(min(mu2, boxes) + 1):
        symmetric = (mf_rwc4((boxes, 0, 0), (boxes - t, 0, 0), right,
                             (boxes, 0, 0), mu2, t) *
                     mf_rwc3((boxes - t, 0, 0), (0, 0), (boxes, 0, 0),
                             (0, 0), t, 0))
        if not symmetric:
            continue
        for q1 in range(mbar[0], -1, -1):
            for q2 in range(q1, -1, -1):
                q3 = weight - t - q1 - q2
                if not 0 <= q3 <= q2:
                    continue
                row = (q1, q2, q3)
                first = (mf_rwc4(inner, inner, mbar, row, boxes, boxes - t) *
                         mf_rwc3(inner, inner2, row, inner2, boxes - t, 0))
                if not first:
                    continue
                second = (mf_rwc4(mbar, row, target, meta, mu2, t) *
                          mf_rwc3(row, inner2, meta, inner2, t, 0))
                if second:
                    total = total + first * second * symmetric
    return total / norm


def middle_rows(mbar: tuple[int, int, int],
                total: int) -> list[tuple[int, int]]:
    """
    U(2) rows [total-q, q] between mbar, in decreasing order of the first

    :param mbar: intermediate U(3) label
    :param total: box count of the U(2) row
    :return: list of row pairs
    """
    low = max(mbar[2], total - mbar[0])
    high = min(mbar[1], total - mbar[1])
    return [(total - q, q) for q in range(low, high + 1)]


def _mf_weight(h: tuple[int, int, int],
               q: tuple[int, int],
               m: tuple[int, int, int],
               n: tuple[int, int],
               s: int,
               p: int) -> tuple[Fraction, Fraction]:
    """
    Squared prefactor and kernel of a multiplicity-free U(3) coefficient
    """
    if not selection_rules(h=h, q=q, m=m, n=n, s=s, p=p):
        return Fraction(0), Fraction(0)
    prefactor = multiplicity_free_prefactor(h=h, q=q, m=m, n=n, s=s, p=p)
    if not prefactor:
        return Fraction(0), Fraction(0)
    return prefactor, f2_kernel(KernelArgs2(h=h, m=m, q=q, n=n))


SymmetricFactor = Callable[[int, int], SurdSum]


def recoupled_sum(inner: tuple[int, int, int],
                  first_boxes: int,
                  second_boxes: int,
                  right: tuple[int, int, int],
                  target: tuple[int, int, int],
                  mbar: tuple[int, int, int],
                  rho: RhoTriple,
                  symmetric: Optional[SymmetricFactor] = None) -> SurdSum:
    """
    Double sum over p and q of the recoupled G([m-bar]; rho1 rho2 rho)

    The second irrep is coupled from the symmetric irreps [first_boxes] and
    [second_boxes]; [p, 0] is the U(2) row of the second one and
    [c-p-q, q] the U(2) row of mbar, where c is the weight of rho. Each
    term carries the radical of the two multiplicity-free normalisations,
    the two U(3) kernels, the symmetric coupling factor and an SU(2)
    Racah coefficient.

    :param inner: first irrep
    :param first_boxes: boxes of the first symmetric irrep
    :param second_boxes: boxes of the second symmetric irrep
    :param right: second irrep
    :param target: coupled irrep
    :param mbar: intermediate U(3) label
    :param rho: U(2) labels of the two irreps and of the target
    :param symmetric: factor of [first_boxes] x [second_boxes] -> right
                      given (a, p), the multiplicity-free coefficient when
                      omitted
    :return: exact value
    """
    rho1 = rho.rho1.rows
    rho2 = rho.rho2.rows
    rho3 = rho.rho.rows
    def multiplicity_free(a: int, p: int) -> SurdSum:
        return mf_rwc3((first_boxes, 0, 0), (a, 0), right, rho2,
                       second_boxes, p)

    factor = symmetric or multiplicity_free
    total = ZERO
    for p in range(second_boxes + 1):
        a = sum(rho2) - p
        if not 0 <= a <= first_boxes:
            continue
        outer = factor(a, p)
        if not outer:
            continue
        for middle in middle_rows(mbar=mbar, total=sum(rho3) - p):
            if sum(middle) != sum(rho1) + a:
                continue
            first_norm, first_kernel = _mf_weight(inner, rho1, mbar, middle,
                                                  first_boxes, a)
            second_norm, second_kernel = _mf_weight(mbar, middle, target,
                                                    rho3, second_boxes, p)
            kernels = first_kernel * second_kernel
            if not kernels:
                continue
            total = total + (surd_from_sqrt(r=first_norm * second_norm) *
                             kernels * outer *
                             su2_racah_unitary(j1=rho1, j2=(a, 0), j=rho3,
                                               j3=(p, 0), j12=middle,
                                               j23=rho2))
    return total


def check_rho(coupling: Coupling,
              rho: RhoTriple) -> None:
    """
    Validate the betweenness of the three U(2) labels

    :param coupling: coupling
    :param rho: U(2) labels of the two irreps and of the target
    """
    for label, parent in ((rho.rho1, coupling.left.partition),
                          (rho.rho2, coupling.right.partition),
                          (rho.rho, coupling.target)):
        if not label.is_between(parent=parent):
            raise DomainError(f'U(2) label {label} not between {parent}')


@functools.lru_cache(maxsize=None)
def g_rho(coupling: Coupling,
          bar: BarLabel,
          rho: RhoTriple) -> SurdSum:
    """
    Recoupled G([m-bar]; rho1 rho2 rho)

    :param coupling: coupling
    :param bar: intermediate label
    :param rho: U(2) labels
    :return: exact value, zero for weight-violating labels
    """
    check_rho(coupling=coupling, rho=rho)
    if rho.rho.weight != rho.rho1.weight + rho.rho2.weight:
        return ZERO
    return recoupled_sum(inner=_left_rows(coupling.left),
                         first_boxes=coupling.right.lam + coupling.right.mu,
                         second_boxes=coupling.right.mu,
                         right=_left_rows(coupling.right),
                         target=coupling.target.rows,
                         mbar=bar.partition.rows,
                         rho=rho)
