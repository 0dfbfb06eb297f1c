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
import logging
import threading
from typing import TYPE_CHECKING, Iterator, Optional

from pysu3rwc.convention import Convention
from pysu3rwc.errors import (DomainError,
                             KernelConsistencyError,
                             SurdArithmeticError)
from pysu3rwc.g_polynomials import BarLabel, g_eta, g_rho, k_ranges
from pysu3rwc.labels import RhoTriple, Su3Irrep, U2Label
from pysu3rwc.multiplicity_free import mf_rwc3
from pysu3rwc.report import CheckReport
from pysu3rwc.representation import (Coupling,
                                     decompose_product,
                                     u2_sublabels)
from pysu3rwc.surd import SurdSum, ZERO, sqrt_rational

if TYPE_CHECKING:
    from pysu3rwc.cache import RwcCache


logger = logging.getLogger(__name__)

Matrix = tuple[tuple[SurdSum, ...], ...]


class GramMatrix(object):
    """
    Inner products (eta_i / eta_j) of the multiplicity vectors
    """
    def __init__(self,
                 coupling: Coupling,
                 entries: Matrix):
        self.coupling = coupling
        self.entries = entries

    def __getitem__(self, index: int) -> tuple[SurdSum, ...]:
        return self.entries[index]

    def __len__(self) -> int:
        return len(self.entries)

    def is_symmetric(self) -> bool:
        size = len(self.entries)
        return all(self.entries[i][j] == self.entries[j][i]
                   for i in range(size) for j in range(i))


class SpecialRwcMatrix(object):
    """
    Special RWCs <eta_j / eta_k>, row = multiplicity label, column = eta
    """
    def __init__(self,
                 coupling: Coupling,
                 entries: Matrix):
        self.coupling = coupling
        self.entries = entries

    def __getitem__(self, index: int) -> tuple[SurdSum, ...]:
        return self.entries[index]

    def __len__(self) -> int:
        return len(self.entries)

    def is_triangular(self) -> bool:
        """
        Check the vanishing of <eta_j / eta_k> for j > k
        """
        size = len(self.entries)
        return all(self.entries[j][k].is_zero()
                   for j in range(size) for k in range(j))

    def has_positive_diagonal(self) -> bool:
        return all(self.entries[k][k].is_single_term() and
                   self.entries[k][k].sign() > 0
                   for k in range(len(self.entries)))

    def gram(self) -> Matrix:
        """
        Get the product M^T M

        :return: matrix equal to the Gram matrix of the coupling
        """
        size = len(self.entries)
        return tuple(tuple(sum((self.entries[j][k] * self.entries[j][l]
                                for j in range(size)), ZERO)
                           for l in range(size))
                     for k in range(size))


class RwcTable(object):
    """
    SU(3) > U(2) reduced Wigner coefficients of a coupling by (eta, rho)
    """
    def __init__(self,
                 coupling: Coupling,
                 cells: dict[tuple[int, RhoTriple], SurdSum],
                 convention: str = Convention.TRIANGULAR_POSITIVE):
        self.coupling = coupling
        self.cells = cells
        self.convention = convention

    def __len__(self) -> int:
        return len(self.cells)

    def get(self,
            eta: int,
            rho: RhoTriple) -> SurdSum:
        """
        Get a single coefficient, zero for labels without a cell

        :param eta: multiplicity label
        :param rho: U(2) labels
        :return: exact value
        """
        self.coupling.check_eta(eta=eta)
        return self.cells.get((eta, rho), ZERO)

    def rhos(self) -> list[RhoTriple]:
        return sorted({rho for _, rho in self.cells}, reverse=True)

    def items(self) -> Iterator[tuple[int, RhoTriple, SurdSum]]:
        for (eta, rho), value in sorted(self.cells.items(),
                                        key=lambda item: (item[0][0],
                                                          item[0][1]),
                                        reverse=False):
            yield eta, rho, value


def rho_triples(coupling: Coupling,
                rho: Optional[U2Label] = None) -> list[RhoTriple]:
    """
    All the U(2) label triples allowed by betweenness, weights and the
    SU(2) triangle rule

    :param coupling: coupling
    :param rho: optional final U(2) label
    :return: list of RhoTriple
    """
    finals = [rho] if rho is not None else u2_sublabels(coupling.target)
    results = []
    for final in finals:
        final = U2Label(final.q1, final.q2)
        for rho1 in u2_sublabels(coupling.left.partition):
            for rho2 in u2_sublabels(coupling.right.partition):
                if rho1.weight + rho2.weight != final.weight:
                    continue
                if not (abs(rho1.twice_spin - rho2.twice_spin) <=
                        final.twice_spin <=
                        rho1.twice_spin + rho2.twice_spin):
                    continue
                results.append(RhoTriple(rho1=rho1, rho2=rho2, rho=final))
    return results


@functools.lru_cache(maxsize=None)
def _g_vectors(coupling: Coupling) -> tuple[tuple[BarLabel, ...],
                                            tuple[tuple[SurdSum, ...], ...]]:
    bars = tuple(k_ranges(coupling=coupling))
    vectors = tuple(tuple(g_eta(coupling=coupling, bar=bar, eta=eta)
                          for bar in bars)
                    for eta in coupling.etas)
    return bars, vectors


def _dot(first: tuple[SurdSum, ...],
         second: tuple[SurdSum, ...]) -> SurdSum:
    return sum((a * b for a, b in zip(first, second)), ZERO)


@functools.lru_cache(maxsize=None)
def build_gram(coupling: Coupling) -> GramMatrix:
    """
    Gram matrix (eta' eta) = sum over bars of G(bar, eta) G(bar, eta')

    :param coupling: nonempty coupling
    :return: exact Gram matrix
    """
    _, vectors = _g_vectors(coupling=coupling)
    entries = tuple(tuple(_dot(first, second) for second in vectors)
                    for first in vectors)
    logger.debug('Gram matrix of %s built over %d bar labels',
                 coupling, len(vectors[0]))
    return GramMatrix(coupling=coupling, entries=entries)


@functools.lru_cache(maxsize=None)
def special_rwc(coupling: Coupling) -> SpecialRwcMatrix:
    """
    Special RWCs by triangular extraction with positive diagonal

    This is the exact Cholesky factorisation M^T M = Gram with M upper
    triangular in the [multiplicity label][eta] indexing.

    :param coupling: nonempty coupling
    :return: SpecialRwcMatrix
    """
    gram = build_gram(coupling=coupling)
    size = len(gram)
    entries = [[ZERO] * size for _ in range(size)]
    for k in range(size):
        residual = gram[k][k] - sum((entries[j][k] * entries[j][k]
                                     for j in range(k)), ZERO)
        if not residual.is_rational():
            raise SurdArithmeticError(f'irrational diagonal residual '
                                      f'{residual} in {coupling}')
        if residual.rational_value() <= 0:
            raise KernelConsistencyError(f'nonpositive diagonal residual '
                                         f'{residual} for eta index {k} '
                                         f'in {coupling}')
        entries[k][k] = sqrt_rational(value=residual)
        for column in range(k + 1, size):
            entries[k][column] = (
                gram[k][column] - sum((entries[j][k] * entries[j][column]
                                       for j in range(k)), ZERO)
            ) / entries[k][k]
    logger.debug('Special RWCs of %s extracted', coupling)
    return SpecialRwcMatrix(coupling=coupling,
                            entries=tuple(tuple(row) for row in entries))


@functools.lru_cache(maxsize=None)
def recoupling_matrix(coupling: Coupling) -> dict[int, dict[BarLabel,
                                                            SurdSum]]:
    """
    SU(3) Racah coefficients R_eta([m-bar]) for every eta and bar label

    Obtained by forward substitution of the G vectors against the special
    RWC matrix.

    :param coupling: nonempty coupling
    :return: dictionary eta -> bar label -> value
    """
    bars, vectors = _g_vectors(coupling=coupling)
    special = special_rwc(coupling=coupling)
    solved: list[tuple[SurdSum, ...]] = []
    for k in range(coupling.multiplicity):
        solved.append(tuple(
            (vectors[k][index] - sum((special[j][k] * solved[j][index]
                                      for j in range(k)), ZERO)
             ) / special[k][k]
            for index in range(len(bars))))
    return {eta: dict(zip(bars, solved[k]))
            for k, eta in enumerate(coupling.etas)}


def racah_su3(coupling: Coupling,
              bar: BarLabel,
              eta: int) -> SurdSum:
    """
    SU(3) Racah coefficient R_eta([m-bar])

    :param coupling: nonempty coupling
    :param bar: intermediate label
    :param eta: multiplicity label
    :return: exact value
    """
    coupling.check_eta(eta=eta)
    values = recoupling_matrix(coupling=coupling)[eta]
    if bar not in values:
        raise DomainError(f'bar label {bar} outside the ranges of '
                          f'{coupling}')
    return values[bar]


def rwc_cell(coupling: Coupling,
             eta: int,
             rho: RhoTriple) -> SurdSum:
    """
    A single coefficient <eta / rho1 rho2 rho>

    :return: exact value
    """
    coupling.check_eta(eta=eta)
    return sum((value * g_rho(coupling=coupling, bar=bar, rho=rho)
                for bar, value in
                recoupling_matrix(coupling=coupling)[eta].items()),
               ZERO)


def rwc_table(coupling: Coupling,
              rho: Optional[U2Label] = None) -> RwcTable:
    """
    Full table of SU(3) > U(2) RWCs of a coupling

    :param coupling: nonempty coupling
    :param rho: optional final U(2) label restricting the table
    :return: RwcTable
    """
    cells = {}
    for triple in rho_triples(coupling=coupling, rho=rho):
        for eta in coupling.etas:
            cells[eta, triple] = rwc_cell(coupling=coupling,
                                          eta=eta,
                                          rho=triple)
    logger.debug('Table of %s holds %d cells', coupling, len(cells))
    return RwcTable(coupling=coupling, cells=cells)


def direct_mf_table(coupling: Coupling,
                    rho: Optional[U2Label] = None) -> RwcTable:
    """
    Multiplicity-free table of a mu2 = 0 coupling from the U(3) kernel

    :param coupling: coupling with the second irrep (lambda2, 0)
    :param rho: optional final U(2) label restricting the table
    :return: RwcTable
    """
    if coupling.right.mu:
        raise DomainError(f'{coupling} is not a mu2 = 0 coupling')
    inner = coupling.left.partition.rows
    boxes = coupling.right.lam
    cells = {}
    for triple in rho_triples(coupling=coupling, rho=rho):
        cells[coupling.eta_min, triple] = mf_rwc3(inner,
                                                  triple.rho1.rows,
                                                  coupling.target.rows,
                                                  triple.rho.rows,
                                                  boxes,
                                                  triple.rho2.q1)
    return RwcTable(coupling=coupling, cells=cells)


def _exchange_sign(triple: RhoTriple) -> int:
    phase = (triple.rho1.twice_spin + triple.rho2.twice_spin -
             triple.rho.twice_spin) // 2
    return -1 if phase % 2 else 1


def exchange_z_matrix(coupling: Coupling) -> Matrix:
    """
    Overlap matrix relating the tables of the two coupling orders

    Z[eta][eta'] = sum over rho1, rho2 of (-)^(j1+j2-j) times
    <eta / rho2 rho1 rho> of the swapped coupling times <eta' / rho1 rho2 rho>
    at the highest final label rho = [m1, m2].

    :param coupling: nonempty coupling
    :return: orthogonal matrix, rows for the swapped coupling
    """
    swapped = coupling.swapped()
    final = U2Label(coupling.target.m1, coupling.target.m2)
    triples = rho_triples(coupling=coupling, rho=final)
    entries = []
    for eta_swapped in swapped.etas:
        row = []
        for eta in coupling.etas:
            total = ZERO
            for triple in triples:
                exchanged = RhoTriple(rho1=triple.rho2,
                                      rho2=triple.rho1,
                                      rho=triple.rho)
                total = total + (_exchange_sign(triple=triple) *
                                 rwc_cell(coupling=swapped,
                                          eta=eta_swapped,
                                          rho=exchanged) *
                                 rwc_cell(coupling=coupling,
                                          eta=eta,
                                          rho=triple))
            row.append(total)
        entries.append(tuple(row))
    return tuple(entries)


def exchange_phase_mf(coupling: Coupling) -> int:
    """
    Exchange phase of a multiplicity-free coupling

    :param coupling: coupling with multiplicity 1
    :return: +1 or -1
    """
    if coupling.multiplicity != 1:
        raise DomainError(f'{coupling} has multiplicity '
                          f'{coupling.multiplicity}, use exchange_z_matrix')
    value = exchange_z_matrix(coupling=coupling)[0][0]
    if value not in (SurdSum.rational(1), SurdSum.rational(-1)):
        raise KernelConsistencyError(f'exchange overlap {value} of '
                                     f'{coupling} is not a phase')
    return 1 if value == 1 else -1


def orthogonality_report(coupling: Coupling,
                         table: Optional[RwcTable] = None) -> CheckReport:
    """
    Exact orthonormality of the eta columns for every final U(2) label

    :param coupling: nonempty coupling
    :param table: precomputed table, built when missing
    :return: CheckReport
    """
    if table is None:
        table = rwc_table(coupling=coupling)
    report = CheckReport(name=f'orthogonality {coupling}')
    for final in u2_sublabels(coupling.target):
        triples = rho_triples(coupling=coupling, rho=final)
        for eta in coupling.etas:
            for other in coupling.etas:
                if other > eta:
                    continue
                value = sum((table.get(eta=eta, rho=triple) *
                             table.get(eta=other, rho=triple)
                             for triple in triples), ZERO)
                report.checked += 1
                if value != (1 if eta == other else 0):
                    report.fail(f'eta {eta} and {other} at {final} '
                                f'give {value}')
    return report


def completeness_report(left: Su3Irrep,
                        right: Su3Irrep,
                        engine: Optional['RwcEngine'] = None
                        ) -> CheckReport:
    """
    Exact completeness of the tables summed over every target and eta

    For each final U(2) label rho the rows (rho1, rho2) of all the tables
    of left x right containing rho must be orthonormal.

    :param left: first irrep
    :param right: second irrep
    :param engine: engine providing the tables
    :return: CheckReport
    """
    engine = engine or RwcEngine()
    report = CheckReport(name=f'completeness {left}x{right}')
    columns: dict[U2Label, list[tuple[Coupling, int]]] = {}
    tables = {}
    for target, _ in decompose_product(left=left, right=right):
        coupling = Coupling.require(left=left, right=right, target=target)
        tables[coupling] = engine.table(coupling=coupling)
        for final in u2_sublabels(target):
            columns.setdefault(final, []).extend(
                (coupling, eta) for eta in coupling.etas)
    for final, pairs in sorted(columns.items(), reverse=True):
        rows = [(rho1, rho2)
                for rho1 in u2_sublabels(left.partition)
                for rho2 in u2_sublabels(right.partition)
                if rho1.weight + rho2.weight == final.weight and
                abs(rho1.twice_spin - rho2.twice_spin) <=
                final.twice_spin <= rho1.twice_spin + rho2.twice_spin]
        vectors = [[tables[coupling].get(eta=eta,
                                         rho=RhoTriple(rho1=rho1,
                                                       rho2=rho2,
                                                       rho=final))
                    for coupling, eta in pairs]
                   for rho1, rho2 in rows]
        for i in range(len(rows)):
            for j in range(i + 1):
                value = _dot(tuple(vectors[i]), tuple(vectors[j]))
                report.checked += 1
                if value != (1 if i == j else 0):
                    report.fail(f'rows {rows[i][0]}{rows[i][1]} and '
                                f'{rows[j][0]}{rows[j][1]} at {final} '
                                f'give {value}')
    return report


class RwcEngine(object):
    """
    Table computation with an in-memory store and an optional disk cache
    """
    def __init__(self,
                 cache: Optional['RwcCache'] = None):
        self.cache = cache
        self._lock = threading.Lock()
        self._tables: dict[Coupling, tuple[SpecialRwcMatrix, RwcTable]] = {}

    def _compute(self,
                 coupling: Coupling) -> tuple[SpecialRwcMatrix, RwcTable]:
        with self._lock:
            if coupling in self._tables:
                return self._tables[coupling]
        loaded = (self.cache.load(coupling=coupling)
                  if self.cache is not None
                  else None)
        if loaded is None:
            loaded = (special_rwc(coupling=coupling),
                      rwc_table(coupling=coupling))
            if self.cache is not None:
                self.cache.store(special=loaded[0], table=loaded[1])
        with self._lock:
            return self._tables.setdefault(coupling, loaded)

    def special(self,
                coupling: Coupling) -> SpecialRwcMatrix:
        """
        Get the special RWC matrix of a coupling

        :param coupling: nonempty coupling
        :return: SpecialRwcMatrix
        """
        return self._compute(coupling=coupling)[0]

    def table(self,
              coupling: Coupling,
              rho: Optional[U2Label] = None,
              eta: Optional[int] = None) -> RwcTable:
        """
        Get the table of a coupling, optionally restricted

        :param coupling: nonempty coupling
        :param rho: optional final U(2) label
        :param eta: optional multiplicity label
        :return: RwcTable
        """
        table = self._compute(coupling=coupling)[1]
        if rho is None and eta is None:
            return table
        if eta is not None:
            coupling.check_eta(eta=eta)
        final = U2Label(rho.q1, rho.q2) if rho is not None else None
        return RwcTable(coupling=coupling,
                        cells={(key_eta, triple): value
                               for key_eta, triple, value in table.items()
                               if (eta is None or key_eta == eta) and
                               (final is None or triple.rho == final)},
                        convention=table.convention)


def special_structure_report(coupling: Coupling) -> CheckReport:
    """
    Triangularity, positive diagonal and Gram reproduction of the special
    RWC matrix

    :param coupling: nonempty coupling
    :return: CheckReport
    """
    report = CheckReport(name=f'special matrix {coupling}')
    gram = build_gram(coupling=coupling)
    special = special_rwc(coupling=coupling)
    checks = (('symmetric Gram matrix', gram.is_symmetric()),
              ('triangular', special.is_triangular()),
              ('positive diagonal', special.has_positive_diagonal()),
              ('Gram reproduction', special.gram() == gram.entries))
    for name, passed in checks:
        report.checked += 1
        if not passed:
            report.fail(name)
    return report


def racah_orthogonality_report(coupling: Coupling) -> CheckReport:
    """
    Exact orthonormality of the SU(3) Racah vectors over the bar labels

    :param coupling: nonempty coupling
    :return: CheckReport
    """
    report = CheckReport(name=f'Racah orthogonality {coupling}')
    values = recoupling_matrix(coupling=coupling)
    for eta in coupling.etas:
        for other in coupling.etas:
            if other > eta:
                continue
            value = sum((values[eta][bar] * values[other][bar]
                         for bar in values[eta]), ZERO)
            report.checked += 1
            if value != (1 if eta == other else 0):
                report.fail(f'eta {eta} and {other} give {value}')
    return report


def multiplicity_free_report(coupling: Coupling) -> CheckReport:
    """
    Entry by entry agreement of a mu2 = 0 table with the direct kernel path

    :param coupling: coupling with the second irrep (lambda2, 0)
    :return: CheckReport
    """
    report = CheckReport(name=f'multiplicity-free {coupling}')
    direct = direct_mf_table(coupling=coupling)
    table = rwc_table(coupling=coupling)
    for eta, triple, value in direct.items():
        report.checked += 1
        if table.get(eta=eta, rho=triple) != value:
            report.fail(f'{triple}: engine {table.get(eta=eta, rho=triple)}'
                        f', direct {value}')
    return report
