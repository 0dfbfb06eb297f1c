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
import pathlib
from typing import Optional, Union

from pysu3rwc.convention import Convention
from pysu3rwc.engine import Matrix, RwcEngine
from pysu3rwc.errors import DomainError, SurdParseError
from pysu3rwc.labels import Partition3, RhoTriple, Su3Irrep, U2Label
from pysu3rwc.report import CheckReport
from pysu3rwc.representation import Coupling
from pysu3rwc.surd import SurdSum, ZERO, parse_surd, surd_to_float


logger = logging.getLogger(__name__)

DATA_DIRECTORY = pathlib.Path(__file__).parent / 'data'
MISPRINT_MARKER = 'misprint'

Column = tuple[Partition3, int, str]


@dataclasses.dataclass
class ReferenceTable(object):
    """
    Hand transcribed coefficients at a single final U(2) label
    """
    path: pathlib.Path
    left: Su3Irrep
    right: Su3Irrep
    rho: U2Label
    rows: list[tuple[U2Label, U2Label]]
    values: dict[tuple[tuple[U2Label, U2Label], Column], SurdSum]
    misprints: set[tuple[tuple[U2Label, U2Label], Column]] = (
        dataclasses.field(default_factory=set))

    def columns(self,
                convention: Optional[str] = None) -> list[Column]:
        """
        Get the (target, eta, convention) columns in file order

        :param convention: optional convention filter
        :return: list of columns
        """
        columns = []
        for _, column in self.values:
            if column not in columns and (convention is None or
                                          column[2] == convention):
                columns.append(column)
        return columns

    def column(self,
               column: Column) -> tuple[SurdSum, ...]:
        return tuple(self.values.get((row, column), ZERO)
                     for row in self.rows)

    def triple(self,
               row: tuple[U2Label, U2Label]) -> RhoTriple:
        return RhoTriple(rho1=row[0], rho2=row[1], rho=self.rho)


def bundled_references() -> list[pathlib.Path]:
    """
    Reference files shipped with the package

    :return: sorted list of paths
    """
    return sorted(DATA_DIRECTORY.glob('rwc_*.txt'))


def load_reference(path: Union[str, pathlib.Path]) -> ReferenceTable:
    """
    Load a reference file

    Lines starting with # are comments, the lhs, rhs and rho lines give
    the coupling and the following lines hold
    rho1 rho2 rho target eta convention value, optionally followed by the
    misprint marker for a printed value known to be wrong.

    :param path: file path
    :return: ReferenceTable
    """
    path = pathlib.Path(path)
    header: dict[str, str] = {}
    entries = []
    with open(path, 'r', encoding='utf-8') as file:
        for number, line in enumerate(file, start=1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            fields = line.split()
            if len(fields) == 2:
                header[fields[0]] = fields[1]
            elif len(fields) == 7:
                entries.append((number, fields, False))
            elif len(fields) == 8 and fields[7] == MISPRINT_MARKER:
                entries.append((number, fields[:7], True))
            else:
                raise DomainError(f'{path}:{number}: malformed line')
    try:
        left = Su3Irrep.parse(text=header['lhs'])
        right = Su3Irrep.parse(text=header['rhs'])
        rho = U2Label.parse(text=header['rho'])
    except KeyError as error:
        raise DomainError(f'{path}: missing header {error}') from None
    rows = []
    values = {}
    misprints = set()
    for number, (rho1, rho2, final, target, eta, convention,
                 value), misprint in entries:
        try:
            row = (U2Label.parse(text=rho1), U2Label.parse(text=rho2))
            column = (Partition3.parse(text=target), int(eta), convention)
            values[row, column] = parse_surd(text=value)
            if misprint:
                misprints.add((row, column))
        except (ValueError, SurdParseError) as error:
            raise DomainError(f'{path}:{number}: {error}') from None
        if U2Label.parse(text=final) != rho:
            raise DomainError(f'{path}:{number}: final label {final} '
                              f'differs from {rho}')
        if row not in rows:
            rows.append(row)
    logger.debug('Loaded %d reference values from %s', len(values), path)
    return ReferenceTable(path=path,
                          left=left,
                          right=right,
                          rho=rho,
                          rows=rows,
                          values=values,
                          misprints=misprints)


def fit_orthogonal_transform(engine_columns: list[tuple[SurdSum, ...]],
                             reference_columns: list[tuple[SurdSum, ...]]
                             ) -> tuple[Matrix, SurdSum]:
    """
    Exact orthogonal transform mapping the engine eta columns onto the
    reference ones

    Both sets of columns are orthonormal over the full row set, so
    O[i][j] is the overlap of reference column i with engine column j.

    :param engine_columns: engine values, one tuple per eta
    :param reference_columns: reference values, one tuple per eta
    :return: tuple (O, largest exact residual by absolute value)
    """
    if len(engine_columns) != len(reference_columns):
        raise DomainError(f'{len(engine_columns)} engine columns against '
                          f'{len(reference_columns)} reference columns')
    transform = tuple(
        tuple(sum((a * b for a, b in zip(reference, engine)), ZERO)
              for engine in engine_columns)
        for reference in reference_columns)
    residual = ZERO
    for i, reference in enumerate(reference_columns):
        for row, expected in enumerate(reference):
            difference = expected - sum(
                (transform[i][j] * engine[row]
                 for j, engine in enumerate(engine_columns)), ZERO)
            if abs(float(difference)) > abs(float(residual)):
                residual = difference
    return transform, residual


@dataclasses.dataclass(frozen=True)
class Misprint(object):
    """
    Printed value marked as wrong, next to the computed one
    """
    target: Partition3
    eta: int
    row: tuple[U2Label, U2Label]
    printed: SurdSum
    computed: SurdSum

    def __str__(self) -> str:
        return (f'{self.target} eta {self.eta} '
                f'row {self.row[0]}{self.row[1]}: '
                f'printed {self.printed}, computed {self.computed}')


@dataclasses.dataclass
class ReferenceComparison(object):
    """
    Result of the comparison of a reference file with the engine
    """
    reference: ReferenceTable
    report: CheckReport
    transforms: dict[Partition3, Matrix] = dataclasses.field(
        default_factory=dict)
    misprints: list[Misprint] = dataclasses.field(default_factory=list)


def compare_reference(reference: ReferenceTable,
                      engine: Optional[RwcEngine] = None
                      ) -> ReferenceComparison:
    """
    Compare a reference table with the engine tables

    Triangular-positive columns must match exactly, the other conventions
    must match after a single orthogonal transform per target. Values
    marked as misprints are collected with the computed ones and fail only
    when they agree with the engine.

    :param reference: loaded reference table
    :param engine: engine providing the tables
    :return: ReferenceComparison
    """
    engine = engine or RwcEngine()
    report = CheckReport(name=f'reference {reference.path.name}')
    comparison = ReferenceComparison(reference=reference, report=report)
    targets = sorted({column[0] for column in reference.columns()},
                     reverse=True)
    for target in targets:
        coupling = Coupling.require(left=reference.left,
                                    right=reference.right,
                                    target=target)
        table = engine.table(coupling=coupling, rho=reference.rho)
        engine_columns = [tuple(table.get(eta=eta,
                                          rho=reference.triple(row=row))
                                for row in reference.rows)
                          for eta in coupling.etas]
        for column in reference.columns(
                convention=Convention.TRIANGULAR_POSITIVE):
            if column[0] != target:
                continue
            if column[1] not in coupling.etas:
                report.checked += 1
                report.fail(f'{target} eta {column[1]} outside '
                            f'[{coupling.eta_min},{coupling.eta_max}]')
                continue
            expected = reference.column(column=column)
            computed = engine_columns[column[1] - coupling.eta_min]
            for row, value, engine_value in zip(reference.rows,
                                                expected,
                                                computed):
                report.checked += 1
                if (row, column) in reference.misprints:
                    if value == engine_value:
                        report.fail(f'{target} eta {column[1]} row '
                                    f'{row[0]}{row[1]}: marked misprint '
                                    f'{value} agrees with the engine')
                    else:
                        comparison.misprints.append(
                            Misprint(target=target,
                                     eta=column[1],
                                     row=row,
                                     printed=value,
                                     computed=engine_value))
                elif value != engine_value:
                    report.fail(f'{target} eta {column[1]} row '
                                f'{row[0]}{row[1]}: reference {value}, '
                                f'engine {engine_value}')
        others = [column for column in reference.columns()
                  if column[0] == target and
                  column[2] != Convention.TRIANGULAR_POSITIVE]
        if not others:
            continue
        if len(others) != coupling.multiplicity:
            report.fail(f'{target} has {len(others)} {others[0][2]} '
                        f'columns for multiplicity '
                        f'{coupling.multiplicity}')
            continue
        transform, residual = fit_orthogonal_transform(
            engine_columns=engine_columns,
            reference_columns=[reference.column(column=column)
                               for column in sorted(others)])
        comparison.transforms[target] = transform
        report.checked += 1
        report.residual = max(report.residual or 0.0,
                              abs(float(surd_to_float(a=residual))))
        if residual:
            report.fail(f'{target} {others[0][2]} columns not reached by '
                        f'an orthogonal transform, residual {residual}')
    for misprint in comparison.misprints:
        logger.info('Misprint in %s: %s', reference.path.name, misprint)
    logger.info('%s', report)
    return comparison
