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

import decimal
import functools
import re
from fractions import Fraction
from typing import Iterator, Mapping, Optional, Union

import mpmath
import sympy

from pysu3rwc.errors import (DomainError,
                             SurdArithmeticError,
                             SurdParseError)


Number = Union[int, Fraction, 'SurdSum']

_TERM_SQRT = re.compile(r'^(-)?sqrt\((\d+)(?:/(\d+))?\)$')
_TERM_PRODUCT = re.compile(r'^(-?\d+(?:/\d+)?)\*sqrt\((\d+)\)$')
_TERM_RATIONAL = re.compile(r'^-?\d+(?:/\d+)?$')


@functools.lru_cache(maxsize=65536)
def squarefree_decomposition(n: int) -> tuple[int, int]:
    """
    Split a positive integer as n = square**2 * core with core squarefree

    :param n: positive integer
    :return: tuple (square, core)
    """
    if n < 1:
        raise DomainError(f'radicand must be positive, got {n}')
    square = 1
    core = 1
    for prime, exponent in sympy.factorint(n).items():
        square *= prime ** (exponent // 2)
        if exponent % 2:
            core *= prime
    return square, core


class SurdSum(object):
    """
    Finite rational combination of square roots of squarefree integers
    """
    __slots__ = ('_terms', '_hash')

    def __init__(self,
                 terms: Optional[Mapping[int, Union[int, Fraction]]] = None):
        canonical: dict[int, Fraction] = {}
        for radicand, coefficient in (terms or {}).items():
            if not coefficient:
                continue
            square, core = squarefree_decomposition(radicand)
            canonical[core] = (canonical.get(core, Fraction(0)) +
                               Fraction(coefficient) * square)
        self._terms = {radicand: coefficient
                       for radicand, coefficient in sorted(canonical.items())
                       if coefficient}
        self._hash = None

    @classmethod
    def rational(cls,
                 value: Union[int, Fraction]) -> 'SurdSum':
        """
        Build a purely rational value

        :param value: rational number
        :return: SurdSum with the single radicand 1
        """
        return cls({1: Fraction(value)})

    @classmethod
    def coerce(cls,
               value: Number) -> 'SurdSum':
        """
        Convert integers and fractions to SurdSum values

        :param value: number to convert
        :return: SurdSum object
        """
        if isinstance(value, SurdSum):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.rational(value)
        raise TypeError(f'cannot convert {type(value).__name__} to SurdSum')

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, Fraction]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return not self._terms or list(self._terms) == [1]

    def is_single_term(self) -> bool:
        return len(self._terms) == 1

    def rational_value(self) -> Fraction:
        """
        Get the value of a purely rational SurdSum

        :return: the rational value
        """
        if not self.is_rational():
            raise SurdArithmeticError(f'{self} is not rational')
        return self._terms.get(1, Fraction(0))

    def single_term(self) -> tuple[int, Fraction]:
        """
        Get the (radicand, coefficient) pair of a single-term value

        :return: tuple with radicand and coefficient
        """
        if not self.is_single_term():
            raise SurdArithmeticError(f'{self} is not a single surd')
        return next(iter(self._terms.items()))

    def square(self) -> Fraction:
        """
        Get the exact square of a single-term value (or zero)

        :return: rational square
        """
        if self.is_zero():
            return Fraction(0)
        radicand, coefficient = self.single_term()
        return coefficient * coefficient * radicand

    def sign(self) -> int:
        """
        Get the sign of a single-term value (or zero)

        :return: -1, 0 or +1
        """
        if self.is_zero():
            return 0
        return 1 if self.single_term()[1] > 0 else -1

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __neg__(self) -> 'SurdSum':
        return SurdSum({radicand: -coefficient
                        for radicand, coefficient in self._terms.items()})

    def __pos__(self) -> 'SurdSum':
        return self

    def __add__(self, other: Number) -> 'SurdSum':
        if not isinstance(other, (SurdSum, int, Fraction)):
            return NotImplemented
        other = SurdSum.coerce(other)
        terms = dict(self._terms)
        for radicand, coefficient in other._terms.items():
            terms[radicand] = terms.get(radicand, Fraction(0)) + coefficient
        return SurdSum(terms)

    __radd__ = __add__

    def __sub__(self, other: Number) -> 'SurdSum':
        if not isinstance(other, (SurdSum, int, Fraction)):
            return NotImplemented
        return self + (-SurdSum.coerce(other))

    def __rsub__(self, other: Number) -> 'SurdSum':
        if not isinstance(other, (SurdSum, int, Fraction)):
            return NotImplemented
        return SurdSum.coerce(other) - self

    def __mul__(self, other: Number) -> 'SurdSum':
        if not isinstance(other, (SurdSum, int, Fraction)):
            return NotImplemented
        return surd_mul(a=self, b=SurdSum.coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> 'SurdSum':
        if not isinstance(other, (SurdSum, int, Fraction)):
            return NotImplemented
        return surd_div_single(a=self, b=SurdSum.coerce(other))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SurdSum.rational(other)
        if not isinstance(other, SurdSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            # Rational values hash like the equal Fraction
            self._hash = (hash(self.rational_value()) if self.is_rational()
                          else hash(tuple(self._terms.items())))
        return self._hash

    def __float__(self) -> float:
        return float(surd_to_float(a=self, precision=20))

    def __repr__(self) -> str:
        return f'SurdSum({str(self)!r})'

    def __str__(self) -> str:
        if not self._terms:
            return '0'
        if self.is_single_term():
            radicand, coefficient = self.single_term()
            square = coefficient * coefficient * radicand
            prefix = '-' if coefficient < 0 else ''
            return f'{prefix}sqrt({square.numerator}/{square.denominator})'
        return ' + '.join(f'{coefficient}*sqrt({radicand})'
                          for radicand, coefficient in self._terms.items())


ZERO = SurdSum()
ONE = SurdSum.rational(1)


def surd_from_sqrt(r: Union[int, Fraction],
                   sign: int = 1) -> SurdSum:
    """
    Build sign * sqrt(r) in canonical form

    :param r: nonnegative rational
    :param sign: +1 or -1
    :return: the SurdSum value
    """
    r = Fraction(r)
    if r < 0:
        raise DomainError(f'square root of negative rational {r}')
    if sign not in (1, -1):
        raise DomainError(f'sign must be +1 or -1, got {sign}')
    if not r:
        return ZERO
    # sqrt(p/q) = sqrt(p*q)/q
    return SurdSum({r.numerator * r.denominator: Fraction(sign,
                                                          r.denominator)})


def sqrt_rational(value: SurdSum) -> SurdSum:
    """
    Positive square root of a rational SurdSum

    :param value: nonnegative rational value
    :return: canonical square root
    """
    if not value.is_rational():
        raise SurdArithmeticError(f'square root of irrational value {value}')
    return surd_from_sqrt(r=value.rational_value())


def surd_mul(a: SurdSum,
             b: SurdSum) -> SurdSum:
    """
    Exact product of two SurdSum values

    :param a: first factor
    :param b: second factor
    :return: canonical product
    """
    terms: dict[int, Fraction] = {}
    for radicand_a, coefficient_a in a.items():
        for radicand_b, coefficient_b in b.items():
            # sqrt(m)*sqrt(n) = g*sqrt(m*n/g**2) with g = gcd(m, n)
            common = sympy.igcd(radicand_a, radicand_b)
            radicand = (radicand_a // common) * (radicand_b // common)
            terms[radicand] = (terms.get(radicand, Fraction(0)) +
                               coefficient_a * coefficient_b * common)
    return SurdSum(terms)


def surd_div_single(a: SurdSum,
                    b: SurdSum) -> SurdSum:
    """
    Exact quotient by a single-term SurdSum

    :param a: dividend
    :param b: nonzero single-term divisor
    :return: canonical quotient
    """
    if b.is_zero():
        raise SurdArithmeticError('division by zero surd')
    if not b.is_single_term():
        raise SurdArithmeticError(f'multi-term divisor {b}')
    radicand, coefficient = b.single_term()
    # 1/(c*sqrt(n)) = sqrt(n)/(c*n)
    inverse = SurdSum({radicand: 1 / (coefficient * radicand)})
    return surd_mul(a=a, b=inverse)


def surd_to_float(a: SurdSum,
                  precision: int = 15) -> decimal.Decimal:
    """
    Evaluate a SurdSum rounded to the requested significant digits

    :param a: value to evaluate
    :param precision: number of significant digits
    :return: decimal value
    """
    if precision < 1:
        raise DomainError(f'precision must be positive, got {precision}')
    with mpmath.workdps(precision + 10):
        value = mpmath.mpf(0)
        for radicand, coefficient in a.items():
            value += (mpmath.mpf(coefficient.numerator) /
                      coefficient.denominator *
                      mpmath.sqrt(radicand))
        return decimal.Decimal(mpmath.nstr(value,
                                           precision,
                                           min_fixed=-precision,
                                           max_fixed=precision))


def parse_surd(text: str) -> SurdSum:
    """
    Parse the exact serialization back to a SurdSum

    :param text: string like 0, -sqrt(7/10), 1/2*sqrt(2) + -1/3*sqrt(3)
    :return: SurdSum value
    """
    result = ZERO
    pieces = text.strip().split(' + ')
    for piece in pieces:
        piece = piece.strip()
        if match := _TERM_SQRT.match(piece):
            sign = -1 if match.group(1) else 1
            value = Fraction(int(match.group(2)), int(match.group(3) or 1))
            result = result + surd_from_sqrt(r=value, sign=sign)
        elif match := _TERM_PRODUCT.match(piece):
            result = result + SurdSum({int(match.group(2)):
                                       Fraction(match.group(1))})
        elif _TERM_RATIONAL.match(piece):
            result = result + Fraction(piece)
        else:
            raise SurdParseError(f'malformed surd string {text!r}')
    return result
