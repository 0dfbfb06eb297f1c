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

from .aux_wigner import (AuxCoupling,                              # noqa: F401
                         AuxLabel,
                         aux_orthogonality_check,
                         aux_rwc_closed,
                         aux_rwc_recoupled)
from .cache import RwcCache                                        # noqa: F401
from .constants import APP_VERSION as __version__                  # noqa: F401
from .convention import Convention                                 # noqa: F401
from .engine import (GramMatrix,                                   # noqa: F401
                     RwcEngine,
                     RwcTable,
                     SpecialRwcMatrix,
                     build_gram,
                     exchange_phase_mf,
                     exchange_z_matrix,
                     racah_su3,
                     rwc_table,
                     special_rwc)
from .errors import (CacheError,                                   # noqa: F401
                     DomainError,
                     InvalidCouplingError,
                     KernelConsistencyError,
                     OracleError,
                     Su3RwcError,
                     SurdArithmeticError,
                     SurdParseError)
from .exit_code import ExitCode                                    # noqa: F401
from .factorial import FactorialTable                              # noqa: F401
from .g_polynomials import BarLabel, g_eta, g_rho, k_ranges        # noqa: F401
from .kernels import (KernelArgs2,                                 # noqa: F401
                      KernelArgs3,
                      f2_kernel,
                      f3_kernel,
                      f_kernel,
                      su2_racah_unitary)
from .labels import Partition3, RhoTriple, Su3Irrep, U2Label       # noqa: F401
from .output_format import OutputFormat                            # noqa: F401
from .report import CheckReport                                    # noqa: F401
from .representation import (Coupling,                             # noqa: F401
                             decompose_product,
                             dim_su3,
                             lr_multiplicity,
                             multiplicity_range,
                             u2_sublabels)
from .surd import (SurdSum,                                        # noqa: F401
                   parse_surd,
                   surd_div_single,
                   surd_from_sqrt,
                   surd_mul,
                   surd_to_float)
