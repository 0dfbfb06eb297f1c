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

APP_NAME = 'PySU3RWC'
APP_VERSION = '0.1.0'
APP_DESCRIPTION = ('Exact SU(3) reduced Wigner coefficients '
                   'with outer multiplicity')
APP_DOMAIN = 'pysu3rwc'
APP_ID = f'{APP_DOMAIN}.github.io'
APP_AUTHOR = 'PySU3RWC contributors'
APP_AUTHOR_EMAIL = 'pysu3rwc@users.noreply.github.com'
APP_COPYRIGHT = f'Copyright 2026 {APP_AUTHOR}'
URL_AUTHOR = 'https://github.com/pysu3rwc/'
URL_APPLICATION = f'{URL_AUTHOR}{APP_DOMAIN}/'
URL_SOURCES = f'https://github.com/pysu3rwc/{APP_DOMAIN}/'

# Disk cache
CACHE_DIRECTORY = '.rwc-cache'
CACHE_ENVIRONMENT_VARIABLE = 'PYSU3RWC_CACHE_DIR'
CACHE_FORMAT_VERSION = 1

# Output defaults
DEFAULT_FLOAT_DIGITS = 15
DEFAULT_ORACLE_TOLERANCE = 1e-10

# Working precision of the Gelfand-Tsetlin oracle, in decimal digits
ORACLE_DIGITS = 50
