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

import argparse
import logging
import sys
from typing import Callable, Optional, Sequence, TextIO

from pysu3rwc.aux_wigner import AuxCoupling, aux_table
from pysu3rwc.cache import RwcCache
from pysu3rwc.constants import (APP_NAME,
                                APP_VERSION,
                                CACHE_ENVIRONMENT_VARIABLE,
                                DEFAULT_FLOAT_DIGITS,
                                DEFAULT_ORACLE_TOLERANCE)
from pysu3rwc.engine import RwcEngine, recoupling_matrix
from pysu3rwc.errors import Su3RwcError
from pysu3rwc.exit_code import ExitCode
from pysu3rwc.labels import Partition3, Su3Irrep, U2Label, parse_integers
from pysu3rwc.oracle import oracle_projector_check
from pysu3rwc.output import aux_records, emit, racah_records, table_records
from pysu3rwc.output_format import OutputFormat
from pysu3rwc.reference import (bundled_references,
                                compare_reference,
                                load_reference)
from pysu3rwc.representation import Coupling, decompose_product, dim_su3
from pysu3rwc.verify import run_suite


logger = logging.getLogger(__name__)


def _label_type(parser: Callable[[str], object],
                description: str) -> Callable[[str], object]:
    def convert(text: str) -> object:
        try:
            return parser(text)
        except Su3RwcError as error:
            raise argparse.ArgumentTypeError(
                f'invalid {description} {text!r}: {error}') from None
    convert.__name__ = description
    return convert


irrep_type = _label_type(parser=lambda text: Su3Irrep.parse(text=text),
                         description='irrep')
partition_type = _label_type(parser=lambda text: Partition3.parse(text=text),
                             description='partition')
u2_type = _label_type(parser=lambda text: U2Label.parse(text=text),
                      description='U(2) label')
split_type = _label_type(parser=lambda text: parse_integers(text=text,
                                                             count=2),
                         description='split')


def build_parser() -> argparse.ArgumentParser:
    """
    Build the argument parser with every command

    :return: ArgumentParser object
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format',
                        choices=OutputFormat.ALL,
                        default=OutputFormat.EXACT,
                        help='output format (default: exact)')
    common.add_argument('--digits',
                        type=int,
                        default=DEFAULT_FLOAT_DIGITS,
                        help='significant digits of the float values')
    common.add_argument('--cache-dir',
                        help=f'cache directory (default: '
                             f'${CACHE_ENVIRONMENT_VARIABLE} or .rwc-cache)')
    common.add_argument('--no-cache',
                        action='store_true',
                        help='do not read or write the disk cache')
    common.add_argument('-v', '--verbose',
                        action='store_true',
                        help='show progress messages')
    common.add_argument('--debug',
                        action='store_true',
                        help='show debug messages')

    parser = argparse.ArgumentParser(
        prog=APP_NAME.lower(),
        description='Exact SU(3) > U(2) reduced Wigner coefficients with '
                    'outer multiplicity')
    parser.add_argument('--version',
                        action='version',
                        version=f'{APP_NAME} {APP_VERSION}')
    commands = parser.add_subparsers(dest='command', required=True)

    def coupling_command(name: str,
                         help_text: str,
                         target: bool = True) -> argparse.ArgumentParser:
        command = commands.add_parser(name, parents=[common], help=help_text)
        command.add_argument('--lhs', type=irrep_type, required=True,
                             help='first irrep as lambda,mu')
        command.add_argument('--rhs', type=irrep_type, required=True,
                             help='second irrep as lambda,mu')
        if target:
            command.add_argument('--target', type=partition_type,
                                 required=True,
                                 help='coupled irrep as m1,m2,m3')
        return command

    coupling_command(name='decompose',
                     help_text='decompose a product of two irreps',
                     target=False)
    command = coupling_command(name='rwc',
                               help_text='reduced Wigner coefficients')
    command.add_argument('--eta', type=int,
                         help='only this multiplicity label')
    command.add_argument('--rho', type=u2_type,
                         help='only this final U(2) label as q1,q2')
    command = coupling_command(name='aux',
                               help_text='auxiliary Wigner coefficients')
    command.add_argument('--split', type=split_type,
                         help="split of the second irrep as lambda2',mu2'")
    command.add_argument('--closed', action='store_true',
                         help='use the closed expression')
    command.add_argument('--rho', type=u2_type,
                         help='only this final U(2) label as q1,q2')
    command = coupling_command(name='racah',
                               help_text='SU(3) Racah coefficients')
    command.add_argument('--eta', type=int,
                         help='only this multiplicity label')
    command = coupling_command(name='oracle-check',
                               help_text='compare with the Gelfand-Tsetlin '
                                         'oracle')
    command.add_argument('--tol', type=float,
                         default=DEFAULT_ORACLE_TOLERANCE,
                         help='absolute tolerance (default: 1e-10)')
    command = commands.add_parser('verify', parents=[common],
                                  help='run the verification suites')
    command.add_argument('--max', type=int, default=1, dest='max_irrep',
                         help='largest lambda and mu of the sweep')
    command = commands.add_parser('compare-reference', parents=[common],
                                  help='compare with reference tables')
    command.add_argument('files', nargs='*',
                         help='reference files (default: bundled ones)')
    command = commands.add_parser('cache', parents=[common],
                                  help='manage the disk cache')
    group = command.add_mutually_exclusive_group(required=True)
    group.add_argument('--clear', action='store_true',
                       help='remove every cache file')
    group.add_argument('--list', action='store_true',
                       help='list the cache files')
    return parser


def _engine(arguments: argparse.Namespace) -> RwcEngine:
    if arguments.no_cache:
        return RwcEngine()
    return RwcEngine(cache=RwcCache(directory=arguments.cache_dir))


def _coupling(arguments: argparse.Namespace) -> Coupling:
    return Coupling.require(left=arguments.lhs,
                            right=arguments.rhs,
                            target=arguments.target)


def cmd_decompose(arguments: argparse.Namespace,
                  stream: TextIO) -> int:
    total = 0
    for target, multiplicity in decompose_product(left=arguments.lhs,
                                                  right=arguments.rhs):
        dimension = dim_su3(irrep=target.su3)
        total += multiplicity * dimension
        stream.write(f'{target} {target.su3} multiplicity {multiplicity} '
                     f'dimension {dimension}\n')
    expected = dim_su3(irrep=arguments.lhs) * dim_su3(irrep=arguments.rhs)
    status = 'OK' if total == expected else 'MISMATCH'
    stream.write(f'dimension sum {total} = {dim_su3(irrep=arguments.lhs)} '
                 f'x {dim_su3(irrep=arguments.rhs)} {status}\n')
    return ExitCode.SUCCESS if total == expected else ExitCode.DOMAIN_ERROR


def cmd_rwc(arguments: argparse.Namespace,
            stream: TextIO) -> int:
    table = _engine(arguments=arguments).table(coupling=_coupling(arguments),
                                               rho=arguments.rho,
                                               eta=arguments.eta)
    emit(records=table_records(table=table),
         output_format=arguments.format,
         stream=stream,
         digits=arguments.digits)
    return ExitCode.SUCCESS


def cmd_aux(arguments: argparse.Namespace,
            stream: TextIO) -> int:
    c = AuxCoupling(left=arguments.lhs,
                    right=arguments.rhs,
                    target=arguments.target,
                    split=arguments.split)
    values = aux_table(c=c, rho=arguments.rho, closed=arguments.closed)
    emit(records=aux_records(c=c, values=values),
         output_format=arguments.format,
         stream=stream,
         digits=arguments.digits,
         group_name='u')
    return ExitCode.SUCCESS


def cmd_racah(arguments: argparse.Namespace,
              stream: TextIO) -> int:
    coupling = _coupling(arguments)
    values = recoupling_matrix(coupling=coupling)
    if arguments.eta is not None:
        coupling.check_eta(eta=arguments.eta)
        values = {arguments.eta: values[arguments.eta]}
    emit(records=racah_records(coupling=coupling, values=values),
         output_format=arguments.format,
         stream=stream,
         digits=arguments.digits)
    return ExitCode.SUCCESS


def cmd_oracle_check(arguments: argparse.Namespace,
                     stream: TextIO) -> int:
    coupling = _coupling(arguments)
    table = _engine(arguments=arguments).table(coupling=coupling)
    report = oracle_projector_check(coupling=coupling,
                                    table=table,
                                    tol=arguments.tol)
    stream.write(f'{report}\n')
    return ExitCode.SUCCESS if report.passed else ExitCode.DOMAIN_ERROR


def cmd_verify(arguments: argparse.Namespace,
               stream: TextIO) -> int:
    reports = run_suite(max_irrep=arguments.max_irrep,
                        engine=_engine(arguments=arguments))
    for report in reports:
        stream.write(f'{report}\n')
    passed = all(report.passed for report in reports)
    stream.write(f'verify --max {arguments.max_irrep}: '
                 f'{"all passed" if passed else "FAILED"}\n')
    return ExitCode.SUCCESS if passed else ExitCode.DOMAIN_ERROR


def cmd_compare_reference(arguments: argparse.Namespace,
                          stream: TextIO) -> int:
    engine = _engine(arguments=arguments)
    paths = arguments.files or bundled_references()
    passed = True
    for path in paths:
        comparison = compare_reference(reference=load_reference(path=path),
                                       engine=engine)
        stream.write(f'{comparison.report}\n')
        for target, transform in comparison.transforms.items():
            rows = ', '.join('[' + ', '.join(str(value) for value in row) +
                             ']' for row in transform)
            stream.write(f'  {target} transform [{rows}]\n')
        for misprint in comparison.misprints:
            stream.write(f'  misprint {misprint}\n')
        passed = passed and comparison.report.passed
    return ExitCode.SUCCESS if passed else ExitCode.DOMAIN_ERROR


def cmd_cache(arguments: argparse.Namespace,
              stream: TextIO) -> int:
    cache = RwcCache(directory=arguments.cache_dir)
    if arguments.clear:
        stream.write(f'removed {cache.clear()} files from '
                     f'{cache.directory}\n')
    else:
        for path, error in cache.verify():
            stream.write(f'{path} {"OK" if error is None else error}\n')
    return ExitCode.SUCCESS


COMMANDS = {
    'decompose': cmd_decompose,
    'rwc': cmd_rwc,
    'aux': cmd_aux,
    'racah': cmd_racah,
    'oracle-check': cmd_oracle_check,
    'verify': cmd_verify,
    'compare-reference': cmd_compare_reference,
    'cache': cmd_cache,
}


def main(argv: Optional[Sequence[str]] = None,
         stream: Optional[TextIO] = None) -> int:
    """
    Run the command line interface

    :param argv: arguments, sys.argv[1:] if missing
    :param stream: output stream, sys.stdout if missing
    :return: ExitCode value
    """
    if stream is None:
        stream = sys.stdout
    try:
        arguments = build_parser().parse_args(argv)
    except SystemExit as error:
        return (ExitCode.USAGE_ERROR if error.code else ExitCode.SUCCESS)
    logging.basicConfig(
        level=(logging.DEBUG if arguments.debug
               else logging.INFO if arguments.verbose
               else logging.WARNING),
        format='%(levelname)s %(name)s: %(message)s')
    try:
        return COMMANDS[arguments.command](arguments, stream)
    except Su3RwcError as error:
        logger.debug('Command %s failed', arguments.command, exc_info=True)
        sys.stderr.write(f'{APP_NAME.lower()}: error: {error}\n')
        return ExitCode.DOMAIN_ERROR
