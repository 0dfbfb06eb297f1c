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

import functools
from fractions import Fraction
from typing import Optional, Sequence

from pysu3rwc.factorial import FACTORIALS
from pysu3rwc.kernels import (KernelArgs2,
                              KernelArgs3,
                              f2_kernel,
                              f3_kernel)
from pysu3rwc.representation import interlaces, is_horizontal_strip
from pysu3rwc.surd import SurdSum, ZERO, surd_from_sqrt


def _vandermonde(rows: Sequence[int]) -> int:
    result = 1
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            result *= rows[i] - rows[j] + j - i
    return result


def multiplicity_free_prefactor(h: Sequence[int],
                                q: Sequence[int],
                                m: Sequence[int],
                                n: Sequence[int],
                                s: int,
                                p: int) -> Optional[Fraction]:
    """
    Squared normalisation of <[h] q; [s] [p] || [m] n> for U(N) > U(N-1)

    :param h: first U(N) irrep, N rows
    :param q: its U(N-1) row
    :param m: coupled U(N) irrep, N rows
    :param n: its U(N-1) row
    :param s: boxes of the symmetric irrep [s, 0, ...]
    :param p: boxes of its U(N-1) row [p, 0, ...]
    :return: rational prefactor or None when a factorial argument is negative
    """
    size = len(m)
    numerators = [s - p]
    denominators = []
    for i in range(size):
        for j in range(i, size):
            if j > i:
                numerators.append(h[i] - m[j] + j - i - 1)
            denominators.append(m[i] - h[j] + j - i)
            if i < size - 1 and j > i:
                numerators.append(n[i] - m[j] + j - i - 1)
                denominators.append(q[i] - h[j] + j - i - 1)
            if j < size - 1:
                denominators.append(m[i] - n[j] + j - i)
                numerators.append(h[i] - q[j] + j - i)
                numerators.append(n[i] - q[j] + j - i)
                if j > i:
                    denominators.append(q[i] - n[j] + j - i - 1)
    ratio = FACTORIALS.ratio(numerators=numerators,
                             denominators=denominators)
    if ratio is None:
        return None
    return ratio * _vandermonde(q) * _vandermonde(m)


def selection_rules(h: tuple[int, ...],
                     q: tuple[int, ...],
                     m: tuple[int, ...],
                     n: tuple[int, ...],
                     s: int,
                     p: int) -> bool:
    return (interlaces(top=h, row=q) and
            interlaces(top=m, row=n) and
            is_horizontal_strip(inner=h, outer=m, size=s) and
            0 <= p <= s and
            sum(n) - sum(q) == p)


@functools.lru_cache(maxsize=None)
def mf_rwc3(h: tuple[int, int, int],
            q: tuple[int, int],
            m: tuple[int, int, int],
            n: tuple[int, int],
            s: int,
            p: int) -> SurdSum:
    """
    Multiplicity-free U(3) > U(2) coefficient <[h] q; [s00] [p0] || [m] n>

    :return: exact value, zero when a selection rule fails
    """
    if not selection_rules(h=h, q=q, m=m, n=n, s=s, p=p):
        return ZERO
    prefactor = multiplicity_free_prefactor(h=h, q=q, m=m, n=n, s=s, p=p)
    if not prefactor:
        return ZERO
    kernel = f2_kernel(KernelArgs2(h=h, m=m, q=q, n=n))
    return surd_from_sqrt(r=prefactor) * kernel


@functools.lru_cache(maxsize=None)
def mf_rwc4(h: tuple[int, int, int],
            q: tuple[int, int, int],
            m: tuple[int, int, int],
            n: tuple[int, int, int],
            s: int,
            p: int) -> SurdSum:
    """
    Multiplicity-free U(4) > U(3) coefficient <[h0] q; [s000] [p00] || [m0] n>

    The U(4) irreps h and m are given by their first three rows, the fourth
    row being zero.

    :return: exact value, zero when a selection rule fails
    """
    h4 = h + (0,)
    m4 = m + (0,)
    if not selection_rules(h=h4, q=q, m=m4, n=n, s=s, p=p):
        return ZERO
    prefactor = multiplicity_free_prefactor(h=h4, q=q, m=m4, n=n, s=s, p=p)
    if not prefactor:
        return ZERO
    kernel = f3_kernel(KernelArgs3(h=h, q=q, m=m, n=n))
    return surd_from_sqrt(r=prefactor) * kernel


def bar_labels(inner: tuple[int, int, int],
               boxes: int,
               target: tuple[int, int, int]) -> list[tuple[int, int, int]]:
    """
    Intermediate U(3) labels of the coupling inner x [boxes] -> ... -> target

    :param inner: first U(3) irrep
    :param boxes: boxes of the symmetric irrep coupled to it
    :param target: final partition, obtained from each label by a
                   horizontal strip
    :return: labels sorted by descending first row
    """
    return [label
            for label in horizontal_strips(inner=inner, boxes=boxes)
            if interlaces(top=target + (0,), row=label)]


def horizontal_strips(inner: tuple[int, int, int],
                      boxes: int) -> list[tuple[int, int, int]]:
    """
    U(3) labels of inner x [boxes], sorted by descending first row

    :param inner: U(3) irrep
    :param boxes: boxes of the symmetric irrep
    :return: list of partitions
    """
    labels = []
    for first in range(boxes, -1, -1):
        for second in range(boxes - first, -1, -1):
            label = (inner[0] + first,
                     inner[1] + second,
                     inner[2] + boxes - first - second)
            if is_horizontal_strip(inner=inner, outer=label, size=boxes):
                labels.append(label)
    return labels
