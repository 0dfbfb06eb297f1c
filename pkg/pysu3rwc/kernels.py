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
from fractions import Fraction

from pysu3rwc.factorial import FACTORIALS
from pysu3rwc.labels import twice_spin
from pysu3rwc.surd import SurdSum, ZERO, surd_from_sqrt


Triple = tuple[int, int, int]
Pair = tuple[int, int]


@dataclasses.dataclass(frozen=True)
class KernelArgs3(object):
    """
    Arguments of the U(4) kernel: irreps h, m and their U(3) rows q, n
    """
    h: Triple
    q: Triple
    m: Triple
    n: Triple


@dataclasses.dataclass(frozen=True)
class KernelArgs2(object):
    """
    Arguments of the U(3) kernel: irreps h, m and their U(2) rows q, n
    """
    h: Triple
    m: Triple
    q: Pair
    n: Pair


def _parity(value: int) -> int:
    return -1 if value % 2 else 1


@functools.lru_cache(maxsize=None)
def f3_kernel(args: KernelArgs3) -> Fraction:
    """
    Triple factorial sum of the multiplicity-free U(4) coefficients

    :param args: kernel arguments
    :return: exact rational value, zero for an empty summation range
    """
    h1, h2, h3 = args.h
    q1, q2, q3 = args.q
    m1, m2, m3 = args.m
    n1, n2, n3 = args.n
    x_low = max(h3 - 1, n2, n3 - 1, h2, q1, q2 - 1, q3 - 2, m2, m3 - 1)
    x_high = min(m1, n1, h1)
    y_low = max(n3, h3, q2, q3 - 1, m3)
    y_high = min(q1, m1 + 1, m2, h2, h1 + 1, n1 + 1, n2)
    z_low = q3
    z_high = min(q1 + 1, q2, m1 + 2, m2 + 1, m3, h2 + 1, h3, h1 + 2,
                 n1 + 2, n2 + 1, n3)
    total = Fraction(0)
    for x in range(x_low, x_high + 1):
        for y in range(y_low, y_high + 1):
            for z in range(z_low, z_high + 1):
                term = FACTORIALS.ratio(
                    numerators=(x - h3 + 1, q1 - y, q1 - z + 1, q2 - z,
                                x - n2, x - n3 + 1, y - n3, y - h3,
                                m1 - x, m1 - y + 1, m1 - z + 2, m2 - y,
                                m2 - z + 1, m3 - z, x - h2),
                    denominators=(h2 - y, h2 - z + 1, h3 - z, h1 - z + 2,
                                  h1 - y + 1, x - q1, x - q2 + 1,
                                  x - q3 + 2, y - q2, y - q3 + 1, z - q3,
                                  n1 - x, n1 - y + 1, n1 - z + 2, n2 - y,
                                  n2 - z + 1, n3 - z, x - m2, x - m3 + 1,
                                  y - m3, h1 - x))
                if term is None:
                    continue
                total += (_parity(x + y + z - q1 - q2 - q3) *
                          (x - y + 1) * (x - z + 2) * (y - z + 1) * term)
    return total


@functools.lru_cache(maxsize=None)
def f2_kernel(args: KernelArgs2) -> Fraction:
    """
    Double factorial sum of the multiplicity-free U(3) coefficients

    :param args: kernel arguments
    :return: exact rational value, zero for an empty summation range
    """
    h1, h2, h3 = args.h
    m1, m2, m3 = args.m
    q1, q2 = args.q
    n1, n2 = args.n
    x_low = max(n2, h2, h3 - 1, q1, q2 - 1, m2, m3 - 1)
    x_high = min(m1, n1, h1)
    y_low = max(h3, q2, m3)
    y_high = min(q1, m1 + 1, m2, n2, n1 + 1, h1 + 1, h2)
    total = Fraction(0)
    for x in range(x_low, x_high + 1):
        for y in range(y_low, min(y_high, x) + 1):
            term = FACTORIALS.ratio(
                numerators=(x - n2, m1 - x, x - h2, x - h3 + 1, q1 - y,
                            m1 - y + 1, m2 - y, y - h3),
                denominators=(x - q1, x - q2 + 1, n1 - x, x - m2,
                              x - m3 + 1, h1 - x, y - q2, n2 - y,
                              n1 - y + 1, y - m3, h1 - y + 1, h2 - y))
            if term is None:
                continue
            total += _parity(x + y - q1 - q2) * (x - y + 1) * term
    return total


def f_kernel(l2p: int,
             top: int,
             mu2p: int,
             p: int,
             target2: Pair,
             sub2: Pair) -> Fraction:
    """
    Single factorial sum coupling two symmetric irreps [l2p] x [mu2p]

    :param l2p: boxes of the first symmetric irrep
    :param top: boxes of its U(2) row [top, 0]
    :param mu2p: boxes of the second symmetric irrep
    :param p: boxes of its U(2) row [p, 0]
    :param target2: coupled irrep [lambda2+mu2, mu2]
    :param sub2: U(2) row of the coupled irrep
    :return: exact rational value
    """
    if not 0 <= p <= mu2p or top != sub2[0] + sub2[1] - p:
        return Fraction(0)
    b1, b2 = target2
    r1, r2 = sub2
    total = Fraction(0)
    for t in range(0, p - r2 + 1):
        term = FACTORIALS.ratio(numerators=(r1 - p + t, b1 - top - t),
                                denominators=(t, l2p - top - t,
                                              p - r2 - t, top - b2 + t))
        if term is not None:
            total += _parity(t) * term
    return total


def _triangle(a: int,
              b: int,
              c: int) -> Fraction:
    """
    Triangle coefficient of three doubled spins, zero when not coupled
    """
    if c < abs(a - b) or c > a + b or (a + b + c) % 2:
        return Fraction(0)
    return FACTORIALS.ratio(numerators=((a + b - c) // 2, (a - b + c) // 2,
                                        (-a + b + c) // 2),
                            denominators=((a + b + c) // 2 + 1,))


@functools.lru_cache(maxsize=None)
def racah_w(a: int,
            b: int,
            c: int,
            d: int,
            e: int,
            f: int) -> SurdSum:
    """
    Racah W(abcd;ef) with every spin given doubled

    :return: exact value
    """
    triangles = (_triangle(a, b, e) * _triangle(c, d, e) *
                 _triangle(a, c, f) * _triangle(b, d, f))
    if not triangles:
        return ZERO
    lower = max(a + b + e, c + d + e, a + c + f, b + d + f) // 2
    upper = min(a + b + c + d, a + d + e + f, b + c + e + f) // 2
    total = Fraction(0)
    for k in range(lower, upper + 1):
        term = FACTORIALS.ratio(
            numerators=(k + 1,),
            denominators=(k - (a + b + e) // 2, k - (c + d + e) // 2,
                          k - (a + c + f) // 2, k - (b + d + f) // 2,
                          (a + b + c + d) // 2 - k,
                          (a + d + e + f) // 2 - k,
                          (b + c + e + f) // 2 - k))
        if term is not None:
            total += _parity(k - (a + b + c + d) // 2) * term
    return surd_from_sqrt(r=triangles) * total


def su2_racah_unitary(j1: Pair,
                      j2: Pair,
                      j: Pair,
                      j3: Pair,
                      j12: Pair,
                      j23: Pair) -> SurdSum:
    """
    Unitary SU(2) Racah coefficient U(j1 j2 j j3; j12 j23)

    Every argument is a two-row U(2) label [p, q] with spin (p - q)/2.

    :return: sqrt((2j12+1)(2j23+1)) W(j1 j2 j j3; j12 j23)
    """
    spins = [twice_spin(label) for label in (j1, j2, j, j3, j12, j23)]
    value = racah_w(*spins)
    if not value:
        return ZERO
    return surd_from_sqrt(r=(spins[4] + 1) * (spins[5] + 1)) * value
