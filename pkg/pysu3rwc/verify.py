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

import itertools
import logging
import time
from typing import Callable, Iterator, Optional

from pysu3rwc.aux_wigner import aux_closed_form_check, aux_orthogonality_check
from pysu3rwc.cache import RwcCache
from pysu3rwc.engine import (RwcEngine,
                             completeness_report,
                             multiplicity_free_report,
                             orthogonality_report,
                             racah_orthogonality_report,
                             special_structure_report)
from pysu3rwc.errors import Su3RwcError
from pysu3rwc.labels import Partition3, Su3Irrep
from pysu3rwc.oracle import oracle_projector_check
from pysu3rwc.report import CheckReport
from pysu3rwc.representation import (Coupling,
                                     decompose_product,
                                     dim_su3,
                                     lr_multiplicity,
                                     multiplicity_range)


logger = logging.getLogger(__name__)

# Couplings compared with the Gelfand-Tsetlin oracle as (lhs, rhs, target)
ORACLE_COUPLINGS = (((1, 1), (1, 1), (3, 2, 1)),
                    ((2, 2), (2, 2), (6, 4, 2)),
                    ((1, 0), (0, 1), (2, 1, 0)),
                    ((1, 1), (1, 1), (3, 3, 0)),
                    ((1, 1), (1, 1), (4, 2, 0)),
                    ((1, 1), (1, 1), (2, 2, 2)),
                    ((2, 0), (1, 1), (3, 2, 0)))


def irreps(max_irrep: int) -> list[Su3Irrep]:
    """
    All the SU(3) irreps with lambda, mu <= max_irrep

    :param max_irrep: largest lambda and mu
    :return: list of Su3Irrep
    """
    return [Su3Irrep(lam, mu)
            for lam in range(max_irrep + 1)
            for mu in range(max_irrep + 1)]


def partitions(boxes: int) -> Iterator[Partition3]:
    """
    Three-row partitions of a box count
    """
    for m1 in range(boxes, -1, -1):
        for m2 in range(min(m1, boxes - m1), -1, -1):
            m3 = boxes - m1 - m2
            if m3 <= m2:
                yield Partition3(m1, m2, m3)


def multiplicity_check(max_irrep: int) -> CheckReport:
    """
    Multiplicity range size against the Littlewood-Richardson count and
    dimension sums of the decompositions

    :param max_irrep: largest lambda and mu
    :return: CheckReport
    """
    report = CheckReport(name=f'multiplicity up to {max_irrep}')
    for left, right in itertools.product(irreps(max_irrep), repeat=2):
        for target in partitions(left.box_count + right.box_count):
            eta_range = multiplicity_range(left=left,
                                           right=right,
                                           target=target)
            size = 0 if eta_range is None else (eta_range[1] -
                                                eta_range[0] + 1)
            expected = lr_multiplicity(left=left, right=right, target=target)
            report.checked += 1
            if size != expected:
                report.fail(f'{left}x{right}->{target}: range {size}, '
                            f'tableaux {expected}')
        total = sum(multiplicity * dim_su3(irrep=target.su3)
                    for target, multiplicity in decompose_product(
                        left=left, right=right))
        report.checked += 1
        if total != dim_su3(irrep=left) * dim_su3(irrep=right):
            report.fail(f'{left}x{right}: dimension sum {total}')
    return report


def cache_check(cache: RwcCache) -> CheckReport:
    """
    Version and checksum of every cache file

    :param cache: disk cache
    :return: CheckReport
    """
    report = CheckReport(name=f'cache {cache.directory}')
    for path, error in cache.verify():
        report.checked += 1
        if error is not None:
            report.fail(error)
    return report


def _timed(name: str,
           check: Callable[[], CheckReport]) -> CheckReport:
    start = time.perf_counter()
    try:
        report = check()
    except Su3RwcError as error:
        report = CheckReport(name=name)
        report.fail(str(error))
    report.elapsed = time.perf_counter() - start
    logger.info('%s', report)
    return report


def coupling_checks(max_irrep: int,
                    engine: RwcEngine) -> CheckReport:
    """
    Structure, orthogonality, Racah and multiplicity-free checks of every
    coupling of the sweep

    :param max_irrep: largest lambda and mu
    :param engine: engine providing the tables
    :return: merged CheckReport
    """
    report = CheckReport(name=f'couplings up to {max_irrep}')
    for left, right in itertools.product(irreps(max_irrep), repeat=2):
        for target, _ in decompose_product(left=left, right=right):
            coupling = Coupling.require(left=left,
                                        right=right,
                                        target=target)
            table = engine.table(coupling=coupling)
            report.merge(special_structure_report(coupling=coupling))
            report.merge(orthogonality_report(coupling=coupling,
                                              table=table))
            report.merge(racah_orthogonality_report(coupling=coupling))
            if not right.mu:
                report.merge(multiplicity_free_report(coupling=coupling))
        report.merge(completeness_report(left=left,
                                         right=right,
                                         engine=engine))
    return report


def oracle_checks(max_irrep: int,
                  engine: RwcEngine) -> CheckReport:
    """
    Gelfand-Tsetlin oracle on the fixed couplings within the sweep bound

    :param max_irrep: largest lambda and mu
    :param engine: engine providing the tables
    :return: merged CheckReport
    """
    report = CheckReport(name=f'oracle up to {max_irrep}')
    for lhs, rhs, target in ORACLE_COUPLINGS:
        if max(lhs + rhs) > max_irrep:
            continue
        coupling = Coupling.require(left=Su3Irrep(*lhs),
                                    right=Su3Irrep(*rhs),
                                    target=Partition3(*target))
        report.merge(oracle_projector_check(
            coupling=coupling,
            table=engine.table(coupling=coupling)))
    return report


def aux_checks(max_irrep: int) -> CheckReport:
    """
    Closed form and orthogonality of the auxiliary coefficients

    :param max_irrep: largest lambda, mu and split entries
    :return: merged CheckReport
    """
    report = CheckReport(name=f'auxiliary coefficients up to {max_irrep}')
    for left in irreps(max_irrep):
        for split in itertools.product(range(max_irrep + 1), repeat=2):
            report.merge(aux_closed_form_check(left=left, split=split))
            report.merge(aux_orthogonality_check(left=left, split=split))
    return report


def run_suite(max_irrep: int,
              engine: Optional[RwcEngine] = None) -> list[CheckReport]:
    """
    Run every verification suite

    :param max_irrep: largest lambda and mu of the sweep
    :param engine: engine providing the tables, its cache is checked too
    :return: list of CheckReport
    """
    engine = engine or RwcEngine()
    checks = []
    if engine.cache is not None:
        checks.append(('cache',
                       lambda: cache_check(cache=engine.cache)))
    checks.extend((
        ('multiplicity',
         lambda: multiplicity_check(max_irrep=max_irrep)),
        ('couplings',
         lambda: coupling_checks(max_irrep=max_irrep, engine=engine)),
        ('auxiliary coefficients',
         lambda: aux_checks(max_irrep=max_irrep)),
        ('oracle',
         lambda: oracle_checks(max_irrep=max_irrep, engine=engine)),
    ))
    return [_timed(name=name, check=check) for name, check in checks]
