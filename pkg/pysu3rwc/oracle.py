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
import itertools
import logging
from typing import Any, Iterable, Optional

import mpmath
from sympy import Rational
from sympy.physics.wigner import clebsch_gordan

from pysu3rwc.constants import DEFAULT_ORACLE_TOLERANCE, ORACLE_DIGITS
from pysu3rwc.engine import RwcTable, rho_triples
from pysu3rwc.errors import OracleError
from pysu3rwc.g_polynomials import g_eta, g_rho, k_ranges
from pysu3rwc.labels import Partition3, RhoTriple, U2Label
from pysu3rwc.report import CheckReport
from pysu3rwc.representation import (Coupling,
                                     lr_multiplicity,
                                     u2_sublabels)
from pysu3rwc.surd import ZERO, SurdSum


logger = logging.getLogger(__name__)

# Eigenvalue cutoff for the null space of the raising operators
NULL_SPACE_CUTOFF = mpmath.mpf('1e-30')

SparseVector = dict[Any, mpmath.mpf]
# Columns of a sparse matrix, each one a sparse vector of rows
SparseMatrix = dict[int, SparseVector]
ProductKey = tuple[int, int]
ProductVector = dict[ProductKey, mpmath.mpf]
Word = tuple[tuple[int, int], ...]


def _axpy(target: SparseVector,
          scale: Any,
          vector: SparseVector) -> None:
    for key, value in vector.items():
        target[key] = target.get(key, 0) + scale * value


def _apply(matrix: SparseMatrix,
           vector: SparseVector) -> SparseVector:
    result = {}
    for column, value in vector.items():
        _axpy(target=result, scale=value, vector=matrix.get(column, {}))
    return result


def _multiply(first: SparseMatrix,
              second: SparseMatrix) -> SparseMatrix:
    return {column: _apply(matrix=first, vector=entries)
            for column, entries in second.items()}


def _combine(first: SparseMatrix,
             second: SparseMatrix,
             scale: int) -> SparseMatrix:
    result = {column: dict(entries) for column, entries in first.items()}
    for column, entries in second.items():
        _axpy(target=result.setdefault(column, {}),
              scale=scale,
              vector=entries)
    return result


def _transpose(matrix: SparseMatrix) -> SparseMatrix:
    result = {}
    for column, entries in matrix.items():
        for row, value in entries.items():
            result.setdefault(row, {})[column] = value
    return result


def _max_abs(values: Iterable[Any]) -> mpmath.mpf:
    return max((abs(value) for value in values), default=mpmath.mpf(0))


def _max_entry(matrix: SparseMatrix) -> mpmath.mpf:
    return _max_abs(value
                    for entries in matrix.values()
                    for value in entries.values())


def _dot(first: SparseVector,
         second: SparseVector) -> mpmath.mpf:
    if len(first) > len(second):
        first, second = second, first
    return mpmath.fsum(value * second[key]
                       for key, value in first.items()
                       if key in second)


def _difference(first: SparseVector,
                second: SparseVector) -> SparseVector:
    result = dict(first)
    _axpy(target=result, scale=-1, vector=second)
    return result


def _surd_value(value: SurdSum) -> mpmath.mpf:
    return mpmath.fsum(mpmath.mpf(coefficient.numerator) /
                       coefficient.denominator *
                       mpmath.sqrt(radicand)
                       for radicand, coefficient in value.items())


@dataclasses.dataclass(frozen=True, order=True)
class GtPattern(object):
    """
    Gelfand-Tsetlin pattern of U(3) with middle row [q1, q2] and bottom q11
    """
    top: Partition3
    q1: int
    q2: int
    q11: int

    @property
    def middle(self) -> U2Label:
        return U2Label(self.q1, self.q2, self.q11)

    @property
    def weight(self) -> tuple[int, int, int]:
        return (self.q11,
                self.q1 + self.q2 - self.q11,
                self.top.box_count - self.q1 - self.q2)


def gt_patterns(irrep: Partition3) -> list[GtPattern]:
    """
    All the Gelfand-Tsetlin patterns with a given top row

    :param irrep: top row
    :return: list of GtPattern, dimension of the irrep
    """
    return [GtPattern(top=irrep, q1=q1, q2=q2, q11=q11)
            for q1 in range(irrep.m2, irrep.m1 + 1)
            for q2 in range(irrep.m3, irrep.m2 + 1)
            for q11 in range(q2, q1 + 1)]


class GtGenerators(object):
    """
    Sparse matrices of the u(3) generators E_ij in a Gelfand-Tsetlin basis
    """
    def __init__(self,
                 patterns: list[GtPattern],
                 matrices: dict[tuple[int, int], SparseMatrix]):
        self.patterns = patterns
        self.matrices = matrices
        self.index = {pattern: position
                      for position, pattern in enumerate(patterns)}

    @property
    def dimension(self) -> int:
        return len(self.patterns)

    def __getitem__(self, key: tuple[int, int]) -> SparseMatrix:
        return self.matrices[key]

    def apply_word(self,
                   word: Word,
                   vector: SparseVector) -> SparseVector:
        """
        Apply generators from the first to the last of a word

        :param word: generator indices (i, j)
        :param vector: sparse vector over the pattern positions
        :return: sparse vector
        """
        for key in word:
            vector = _apply(matrix=self.matrices[key], vector=vector)
        return vector


def _fill_generators(matrices: dict[tuple[int, int], SparseMatrix]) -> None:
    # E13 = [E12, E23] and lowering operators by transposition
    matrices[1, 3] = _combine(first=_multiply(first=matrices[1, 2],
                                              second=matrices[2, 3]),
                              second=_multiply(first=matrices[2, 3],
                                               second=matrices[1, 2]),
                              scale=-1)
    for i, j in ((1, 2), (2, 3), (1, 3)):
        matrices[j, i] = _transpose(matrix=matrices[i, j])


@functools.lru_cache(maxsize=None)
def gt_generator_matrices(irrep: Partition3) -> GtGenerators:
    """
    Build the u(3) generators with the standard Gelfand-Tsetlin elements

    :param irrep: U(3) irrep
    :return: GtGenerators
    """
    patterns = gt_patterns(irrep=irrep)
    index = {pattern: position for position, pattern in enumerate(patterns)}
    matrices = {key: {} for key in ((1, 1), (2, 2), (3, 3), (1, 2), (2, 3))}
    shifted_top = (irrep.m1 - 1, irrep.m2 - 2, irrep.m3 - 3)
    with mpmath.workdps(ORACLE_DIGITS):
        for position, pattern in enumerate(patterns):
            for axis, value in enumerate(pattern.weight, start=1):
                matrices[axis, axis][position] = {position: mpmath.mpf(value)}
            q1, q2, q11 = pattern.q1, pattern.q2, pattern.q11
            raised = GtPattern(top=irrep, q1=q1, q2=q2, q11=q11 + 1)
            if raised in index:
                matrices[1, 2].setdefault(position, {})[index[raised]] = (
                    mpmath.sqrt((q1 - q11) * (q11 - q2 + 1)))
            shifted = (q1 - 1, q2 - 2)
            for row in range(2):
                rows = [q1, q2]
                rows[row] += 1
                raised = GtPattern(top=irrep, q1=rows[0], q2=rows[1], q11=q11)
                if raised not in index:
                    continue
                numerator = -1
                for value in shifted_top:
                    numerator *= value - shifted[row]
                numerator *= q11 - 1 - shifted[row] - 1
                denominator = 1
                for other in range(2):
                    if other != row:
                        difference = shifted[other] - shifted[row]
                        denominator *= difference * (difference - 1)
                if numerator * denominator > 0:
                    matrices[2, 3].setdefault(position, {})[index[raised]] = (
                        mpmath.sqrt(mpmath.mpf(numerator) / denominator))
        _fill_generators(matrices=matrices)
    return GtGenerators(patterns=patterns, matrices=matrices)


def commutator_residual(generators: GtGenerators) -> float:
    """
    Largest deviation from [E_ij, E_kl] = d_jk E_il - d_il E_kj

    :param generators: generator matrices
    :return: maximum absolute residual
    """
    residual = mpmath.mpf(0)
    with mpmath.workdps(ORACLE_DIGITS):
        for i, j, k, l in itertools.product((1, 2, 3), repeat=4):
            difference = _combine(
                first=_multiply(first=generators[i, j],
                                second=generators[k, l]),
                second=_multiply(first=generators[k, l],
                                 second=generators[i, j]),
                scale=-1)
            if j == k:
                difference = _combine(first=difference,
                                      second=generators[i, l],
                                      scale=-1)
            if i == l:
                difference = _combine(first=difference,
                                      second=generators[k, j],
                                      scale=1)
            residual = max(residual, _max_entry(matrix=difference))
    return float(residual)


def casimir_check(irrep: Partition3) -> float:
    """
    Spread of the quadratic Casimir sum_ij E_ij E_ji over the basis

    :param irrep: U(3) irrep
    :return: maximum deviation from a multiple of the identity
    """
    generators = gt_generator_matrices(irrep=irrep)
    with mpmath.workdps(ORACLE_DIGITS):
        casimir = {}
        for i, j in itertools.product((1, 2, 3), repeat=2):
            casimir = _combine(first=casimir,
                               second=_multiply(first=generators[i, j],
                                                second=generators[j, i]),
                               scale=1)
        value = casimir.get(0, {}).get(0, 0)
        identity = {position: {position: value}
                    for position in range(generators.dimension)}
        return float(_max_entry(matrix=_combine(first=casimir,
                                                second=identity,
                                                scale=-1)))


@functools.lru_cache(maxsize=None)
def su2_clebsch_gordan(j1: Rational,
                       m1: Rational,
                       j2: Rational,
                       m2: Rational,
                       j: Rational,
                       m: Rational) -> mpmath.mpf:
    """
    Condon-Shortley SU(2) coefficient <j1 m1 j2 m2 | j m> at the oracle
    precision
    """
    value = clebsch_gordan(j1, j2, j, m1, m2, m)
    with mpmath.workdps(ORACLE_DIGITS):
        return mpmath.mpf(str(value.evalf(ORACLE_DIGITS + 10)))


class ProductSpace(object):
    """
    Tensor product of two Gelfand-Tsetlin bases, keyed by pattern positions
    """
    def __init__(self,
                 first: GtGenerators,
                 second: GtGenerators):
        self.first = first
        self.second = second

    @property
    def dimension(self) -> int:
        return self.first.dimension * self.second.dimension

    def key(self,
            first: GtPattern,
            second: GtPattern) -> ProductKey:
        return self.first.index[first], self.second.index[second]

    def keys(self,
             weight: tuple[int, int, int]) -> list[ProductKey]:
        """
        Product basis vectors of a given U(3) weight

        :param weight: weight (w1, w2, w3)
        :return: list of keys
        """
        return [(a, b)
                for a, first in enumerate(self.first.patterns)
                for b, second in enumerate(self.second.patterns)
                if tuple(x + y for x, y in zip(first.weight,
                                               second.weight)) == weight]

    def apply(self,
              key: tuple[int, int],
              vector: ProductVector) -> ProductVector:
        """
        Apply E_ij x 1 + 1 x E_ij

        :param key: generator indices (i, j)
        :param vector: sparse product vector
        :return: sparse product vector
        """
        first = self.first[key]
        second = self.second[key]
        result = {}
        for (a, b), value in vector.items():
            for row, entry in first.get(a, {}).items():
                result[row, b] = result.get((row, b), 0) + entry * value
            for row, entry in second.get(b, {}).items():
                result[a, row] = result.get((a, row), 0) + entry * value
        return result

    def apply_word(self,
                   word: Word,
                   vector: ProductVector) -> ProductVector:
        for key in word:
            vector = self.apply(key=key, vector=vector)
        return vector


@dataclasses.dataclass
class HighestWeightSpace(object):
    """
    Orthonormal highest weight vectors of a target in a product space
    """
    space: ProductSpace
    target: Partition3
    vectors: list[ProductVector]

    @property
    def shape(self) -> tuple[int, int]:
        return self.space.dimension, len(self.vectors)

    def project(self,
                vector: ProductVector) -> ProductVector:
        """
        Orthogonal projection onto the span of the vectors

        :param vector: sparse product vector
        :return: sparse product vector
        """
        result = {}
        for basis in self.vectors:
            _axpy(target=result,
                  scale=_dot(first=basis, second=vector),
                  vector=basis)
        return result


def highest_weight_multiplicity_space(left: Partition3,
                                      right: Partition3,
                                      target: Partition3
                                      ) -> HighestWeightSpace:
    """
    Orthonormal basis of the highest weight vectors of weight target

    The vectors are the null space of E12 and E23 restricted to the
    weight subspace of the product basis, from the eigenvectors of the
    Gram matrix of the raised basis vectors.

    :param left: first U(3) irrep
    :param right: second U(3) irrep
    :param target: coupled U(3) irrep
    :return: HighestWeightSpace
    """
    space = ProductSpace(first=gt_generator_matrices(irrep=left),
                         second=gt_generator_matrices(irrep=right))
    expected = lr_multiplicity(left=left.su3,
                               right=right.su3,
                               target=target)
    subspace = space.keys(weight=target.rows)
    vectors = []
    if subspace:
        with mpmath.workdps(ORACLE_DIGITS):
            images = [(space.apply(key=(1, 2), vector={key: 1}),
                       space.apply(key=(2, 3), vector={key: 1}))
                      for key in subspace]
            gram = mpmath.matrix(len(subspace))
            for row, first in enumerate(images):
                for column, second in enumerate(images):
                    gram[row, column] = (_dot(first[0], second[0]) +
                                         _dot(first[1], second[1]))
            eigenvalues, eigenvectors = mpmath.eigsy(gram)
            for column in range(len(subspace)):
                if abs(eigenvalues[column]) < NULL_SPACE_CUTOFF:
                    vectors.append({key: eigenvectors[row, column]
                                    for row, key in enumerate(subspace)})
    if len(vectors) != expected:
        raise OracleError(f'highest weight space of {target} in '
                          f'{left}x{right} has dimension {len(vectors)}, '
                          f'expected {expected}')
    logger.debug('Highest weight space of %s in %s x %s has dimension %d',
                 target, left, right, len(vectors))
    return HighestWeightSpace(space=space, target=target, vectors=vectors)


def _assemble(coupling: Coupling,
              space: ProductSpace,
              final: U2Label,
              coefficients: dict[RhoTriple, mpmath.mpf]) -> ProductVector:
    # State of label final with M = J from its (rho1, rho2) coefficients
    spin = Rational(final.twice_spin, 2)
    vector = {}
    for triple, value in coefficients.items():
        if not value:
            continue
        rho1, rho2 = triple.rho1, triple.rho2
        j1 = Rational(rho1.twice_spin, 2)
        j2 = Rational(rho2.twice_spin, 2)
        for r1 in range(rho1.q2, rho1.q1 + 1):
            r2 = final.q1 - r1
            if not rho2.q2 <= r2 <= rho2.q1:
                continue
            weight = su2_clebsch_gordan(
                j1=j1, m1=Rational(2 * r1 - rho1.weight, 2),
                j2=j2, m2=Rational(2 * r2 - rho2.weight, 2),
                j=spin, m=spin)
            key = space.key(
                first=GtPattern(top=coupling.left.partition,
                                q1=rho1.q1, q2=rho1.q2, q11=r1),
                second=GtPattern(top=coupling.right.partition,
                                 q1=rho2.q1, q2=rho2.q2, q11=r2))
            vector[key] = vector.get(key, 0) + value * weight
    return vector


def coupled_vectors(coupling: Coupling,
                    table: RwcTable,
                    space: ProductSpace,
                    final: Optional[U2Label] = None) -> list[ProductVector]:
    """
    Coupled states assembled from the reduced coefficients

    Each eta vector sums RWC times the SU(2) coefficient with M = J over
    the product patterns at the final label.

    :param coupling: nonempty coupling
    :param table: table holding the final label
    :param space: product space of the two irreps
    :param final: final U(2) label, [m1, m2] if missing
    :return: list of sparse product vectors, one for each eta
    """
    if final is None:
        final = U2Label(coupling.target.m1, coupling.target.m2)
    else:
        final = U2Label(final.q1, final.q2)
    with mpmath.workdps(ORACLE_DIGITS):
        return [_assemble(coupling=coupling,
                          space=space,
                          final=final,
                          coefficients={triple: _surd_value(value)
                                        for label, triple, value
                                        in table.items()
                                        if label == eta and
                                        triple.rho == final})
                for eta in coupling.etas]


def g_polynomial_vectors(coupling: Coupling,
                         space: ProductSpace) -> list[ProductVector]:
    """
    Highest weight states of the G polynomials before orthonormalisation

    :param coupling: nonempty coupling
    :param space: product space of the two irreps
    :return: list of sparse product vectors, one for each eta
    """
    final = U2Label(coupling.target.m1, coupling.target.m2)
    bars = k_ranges(coupling=coupling)
    triples = rho_triples(coupling=coupling, rho=final)
    vectors = []
    with mpmath.workdps(ORACLE_DIGITS):
        for eta in coupling.etas:
            coefficients = {
                triple: _surd_value(sum(
                    (g_eta(coupling=coupling, bar=bar, eta=eta) *
                     g_rho(coupling=coupling, bar=bar, rho=triple)
                     for bar in bars), ZERO))
                for triple in triples}
            vectors.append(_assemble(coupling=coupling,
                                     space=space,
                                     final=final,
                                     coefficients=coefficients))
    return vectors


def lowering_word(target: Partition3,
                  final: U2Label) -> tuple[Word, mpmath.mpf]:
    """
    Ordered product E21^z E31^x E32^y reaching the U(2) highest state of
    a final label from the highest weight of the target

    Among the words of the right weight the one with the largest overlap
    is chosen.

    :param target: U(3) irrep
    :param final: U(2) label between the rows of the target
    :return: tuple (word in order of application, overlap)
    """
    if not final.is_between(parent=target):
        raise OracleError(f'U(2) label {final} not between {target}')
    generators = gt_generator_matrices(irrep=target)
    highest = generators.index[GtPattern(top=target,
                                         q1=target.m1,
                                         q2=target.m2,
                                         q11=target.m1)]
    position = generators.index[GtPattern(top=target,
                                          q1=final.q1,
                                          q2=final.q2,
                                          q11=final.q1)]
    first_row = target.m1 - final.q1
    third_row = target.m1 + target.m2 - final.weight
    best = None
    with mpmath.workdps(ORACLE_DIGITS):
        for middle in range(min(first_row, third_row) + 1):
            word = (((3, 2),) * (third_row - middle) +
                    ((3, 1),) * middle +
                    ((2, 1),) * (first_row - middle))
            overlap = generators.apply_word(word=word,
                                            vector={highest: 1}
                                            ).get(position, 0)
            if best is None or abs(overlap) > abs(best[1]):
                best = word, overlap
    if abs(best[1]) < NULL_SPACE_CUTOFF:
        raise OracleError(f'no lowering word reaches {final} in {target}')
    return best


def _projector_residual(space: HighestWeightSpace,
                        vectors: list[ProductVector]) -> mpmath.mpf:
    keys = sorted({key
                   for vector in space.vectors + vectors
                   for key in vector})
    return _max_abs(
        mpmath.fsum(vector.get(a, 0) * vector.get(b, 0)
                    for vector in vectors) -
        mpmath.fsum(basis.get(a, 0) * basis.get(b, 0)
                    for basis in space.vectors)
        for a in keys for b in keys)


def _convention_residual(coupling: Coupling,
                         space: HighestWeightSpace,
                         vectors: list[ProductVector]) -> mpmath.mpf:
    # The table must be the ordered Gram-Schmidt basis of the G states
    seeds = g_polynomial_vectors(coupling=coupling, space=space.space)
    residual = _max_abs(value
                        for seed in seeds
                        for value in _difference(
                            first=seed,
                            second=space.project(vector=seed)).values())
    canonical = []
    for seed in seeds:
        vector = space.project(vector=seed)
        for previous in canonical:
            _axpy(target=vector,
                  scale=-_dot(first=previous, second=vector),
                  vector=previous)
        norm = mpmath.sqrt(_dot(first=vector, second=vector))
        if norm < NULL_SPACE_CUTOFF:
            logger.debug('Dependent G states in %s', coupling)
            return mpmath.inf
        canonical.append({key: value / norm for key, value in vector.items()})
    return max(residual,
               _max_abs(value
                        for expected, vector in zip(canonical, vectors)
                        for value in _difference(first=expected,
                                                 second=vector).values()))


def _lowering_residual(coupling: Coupling,
                       table: RwcTable,
                       space: ProductSpace,
                       vectors: list[ProductVector]) -> mpmath.mpf:
    # Lowered highest weight states against the states of each label
    residual = mpmath.mpf(0)
    highest = U2Label(coupling.target.m1, coupling.target.m2)
    for final in u2_sublabels(coupling.target):
        if final == highest:
            continue
        word, overlap = lowering_word(target=coupling.target, final=final)
        lowered = [space.apply_word(word=word, vector=vector)
                   for vector in vectors]
        states = coupled_vectors(coupling=coupling,
                                 table=table,
                                 space=space,
                                 final=final)
        for xi, state in enumerate(states):
            residual = max(residual,
                           abs(_dot(first=state, second=state) - 1))
            for eta, vector in enumerate(lowered):
                value = _dot(first=state, second=vector) / overlap
                residual = max(residual,
                               abs(value - (1 if xi == eta else 0)))
    return residual


def oracle_projector_check(coupling: Coupling,
                           table: RwcTable,
                           tol: Optional[float] = None) -> CheckReport:
    """
    Compare the engine coefficients with the independent null space

    The highest weight states of the table are compared with the null
    space, with the ordered orthonormalisation of the G states and,
    through lowering operators, with the states of every other final
    label of the table.

    :param coupling: nonempty coupling
    :param table: table of the coupling for every final label
    :param tol: absolute tolerance, DEFAULT_ORACLE_TOLERANCE if missing
    :return: CheckReport with the largest residual
    """
    tol = DEFAULT_ORACLE_TOLERANCE if tol is None else tol
    report = CheckReport(name=f'oracle {coupling}')
    space = highest_weight_multiplicity_space(
        left=coupling.left.partition,
        right=coupling.right.partition,
        target=coupling.target)
    with mpmath.workdps(ORACLE_DIGITS):
        vectors = coupled_vectors(coupling=coupling,
                                  table=table,
                                  space=space.space)
        residuals = {
            'highest weight': _max_abs(
                value
                for vector in vectors
                for value in _difference(
                    first=vector,
                    second=space.project(vector=vector)).values()),
            'orthonormality': _max_abs(
                _dot(first=first, second=second) - (1 if i == j else 0)
                for i, first in enumerate(vectors)
                for j, second in enumerate(vectors)),
            'projector': _projector_residual(space=space, vectors=vectors),
            'convention': _convention_residual(coupling=coupling,
                                               space=space,
                                               vectors=vectors),
            'lowering': _lowering_residual(coupling=coupling,
                                           table=table,
                                           space=space.space,
                                           vectors=vectors),
        }
    residuals = {name: float(value) for name, value in residuals.items()}
    for name, residual in residuals.items():
        report.checked += 1
        logger.debug('Oracle %s residual for %s: %.3e',
                     name, coupling, residual)
        if residual > tol:
            report.fail(f'{name} residual {residual:.3e} above {tol:.1e}')
    report.residual = max(residuals.values())
    return report
