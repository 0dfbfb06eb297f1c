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

import csv
import dataclasses
import json
from typing import TextIO

from pysu3rwc.aux_wigner import AuxCoupling, AuxLabel
from pysu3rwc.constants import DEFAULT_FLOAT_DIGITS
from pysu3rwc.convention import Convention
from pysu3rwc.engine import RwcTable
from pysu3rwc.errors import DomainError
from pysu3rwc.g_polynomials import BarLabel
from pysu3rwc.labels import Partition3, RhoTriple, Su3Irrep, U2Label
from pysu3rwc.output_format import OutputFormat
from pysu3rwc.representation import Coupling
from pysu3rwc.surd import SurdSum, surd_to_float


def _irrep(irrep: Su3Irrep) -> str:
    return f'{irrep.lam},{irrep.mu}'


def _u2(label: U2Label) -> str:
    return f'{label.q1},{label.q2}'


@dataclasses.dataclass(frozen=True)
class OutputRecord(object):
    """
    A single emitted coefficient with its labels
    """
    lhs: str
    rhs: str
    target: str
    group: str
    labels: tuple[tuple[str, str], ...]
    value: SurdSum
    convention: str = Convention.TRIANGULAR_POSITIVE

    @property
    def exact(self) -> str:
        return str(self.value)

    @property
    def target_irrep(self) -> str:
        return _irrep(Partition3.parse(text=self.target).su3)

    def float_text(self,
                   digits: int = DEFAULT_FLOAT_DIGITS) -> str:
        return str(surd_to_float(a=self.value, precision=digits))


def table_records(table: RwcTable) -> list[OutputRecord]:
    """
    Records of an RWC table grouped by eta
    """
    coupling = table.coupling
    return [OutputRecord(lhs=_irrep(coupling.left),
                         rhs=_irrep(coupling.right),
                         target=','.join(map(str, coupling.target)),
                         group=str(eta),
                         labels=_rho_labels(triple=triple),
                         value=value,
                         convention=table.convention)
            for eta, triple, value in table.items()]


def _rho_labels(triple: RhoTriple) -> tuple[tuple[str, str], ...]:
    return (('rho1', _u2(triple.rho1)),
            ('rho2', _u2(triple.rho2)),
            ('rho', _u2(triple.rho)))


def aux_records(c: AuxCoupling,
                values: dict[tuple[AuxLabel, RhoTriple], SurdSum]
                ) -> list[OutputRecord]:
    """
    Records of auxiliary coefficients grouped by the auxiliary label
    """
    return [OutputRecord(lhs=_irrep(c.left),
                         rhs=_irrep(c.right),
                         target=','.join(map(str, c.target)),
                         group=','.join(map(str, u.rows)),
                         labels=_rho_labels(triple=triple),
                         value=value)
            for (u, triple), value in sorted(values.items(),
                                             key=lambda item: item[0],
                                             reverse=True)]


def racah_records(coupling: Coupling,
                  values: dict[int, dict[BarLabel, SurdSum]]
                  ) -> list[OutputRecord]:
    """
    Records of the SU(3) Racah coefficients grouped by eta
    """
    return [OutputRecord(lhs=_irrep(coupling.left),
                         rhs=_irrep(coupling.right),
                         target=','.join(map(str, coupling.target)),
                         group=str(eta),
                         labels=(('bar', ','.join(map(str, bar.partition))),
                                 ('k1', str(bar.k1)),
                                 ('k2', str(bar.k2))),
                         value=value)
            for eta, bars in values.items()
            for bar, value in bars.items()]


def emit(records: list[OutputRecord],
         output_format: str,
         stream: TextIO,
         digits: int = DEFAULT_FLOAT_DIGITS,
         group_name: str = 'eta') -> None:
    """
    Write the records in one of the output formats

    :param records: records to write
    :param output_format: OutputFormat value
    :param stream: text stream
    :param digits: significant digits of the float values
    :param group_name: name of the grouping label
    """
    if output_format in (OutputFormat.EXACT, OutputFormat.FLOAT):
        current = None
        for record in records:
            header = (f'# ({record.lhs})x({record.rhs})->[{record.target}] '
                      f'({record.target_irrep}) '
                      f'convention {record.convention}')
            if header != current:
                stream.write(f'{header}\n')
                current = header
            value = (record.exact if output_format == OutputFormat.EXACT
                     else record.float_text(digits=digits))
            labels = ' '.join(label for _, label in record.labels)
            stream.write(f'{group_name} {record.group} {labels} {value}\n')
    elif output_format == OutputFormat.CSV:
        writer = csv.writer(stream, lineterminator='\n')
        names = [name for name, _ in records[0].labels] if records else []
        writer.writerow(['lhs', 'rhs', 'target', group_name, *names,
                         'exact', 'float', 'convention'])
        for record in records:
            writer.writerow([record.lhs, record.rhs, record.target,
                             record.group,
                             *(label for _, label in record.labels),
                             record.exact,
                             record.float_text(digits=digits),
                             record.convention])
    elif output_format == OutputFormat.JSON:
        document = {}
        for record in records:
            coupling = document.setdefault(
                f'({record.lhs})x({record.rhs})->[{record.target}]',
                {'lhs': record.lhs,
                 'rhs': record.rhs,
                 'target': record.target,
                 'convention': record.convention,
                 group_name: {}})
            coupling[group_name].setdefault(record.group, []).append(
                {**dict(record.labels),
                 'exact': record.exact,
                 'float': record.float_text(digits=digits)})
        json.dump(document, stream, indent=2)
        stream.write('\n')
    else:
        raise DomainError(f'unknown output format {output_format!r}')
