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

import hashlib
import json
import logging
import os
import pathlib
import tempfile
from typing import Any, Optional, Union

from pysu3rwc.constants import (CACHE_DIRECTORY,
                                CACHE_ENVIRONMENT_VARIABLE,
                                CACHE_FORMAT_VERSION)
from pysu3rwc.engine import RwcTable, SpecialRwcMatrix
from pysu3rwc.errors import CacheError, DomainError, SurdParseError
from pysu3rwc.labels import RhoTriple, U2Label
from pysu3rwc.representation import Coupling
from pysu3rwc.surd import parse_surd


logger = logging.getLogger(__name__)

Payload = dict[str, Any]


def default_cache_directory() -> pathlib.Path:
    """
    Get the cache directory from the environment or the local default

    :return: directory path
    """
    return pathlib.Path(os.environ.get(CACHE_ENVIRONMENT_VARIABLE,
                                       CACHE_DIRECTORY))


def payload_checksum(payload: Payload) -> str:
    """
    SHA-256 of the canonical JSON serialization of a payload

    :param payload: cached data
    :return: hexadecimal digest
    """
    canonical = json.dumps(payload,
                           sort_keys=True,
                           separators=(',', ':'))
    return hashlib.sha256(canonical.encode('utf-8')).hexdigest()


def _label(label: U2Label) -> str:
    return f'{label.q1},{label.q2}'


def encode_tables(special: SpecialRwcMatrix,
                  table: RwcTable) -> Payload:
    """
    Exact-string payload of the special matrix and of the full table
    """
    coupling = table.coupling
    return {
        'coupling': list(coupling.key),
        'eta_range': [coupling.eta_min, coupling.eta_max],
        'convention': table.convention,
        'special': [[str(value) for value in row] for row in special],
        'cells': [[eta,
                   _label(rho.rho1),
                   _label(rho.rho2),
                   _label(rho.rho),
                   str(value)]
                  for eta, rho, value in table.items()],
    }


def decode_tables(coupling: Coupling,
                  payload: Payload) -> tuple[SpecialRwcMatrix, RwcTable]:
    """
    Rebuild the special matrix and the table from a payload

    :param coupling: coupling the payload belongs to
    :param payload: cached data
    :return: tuple (SpecialRwcMatrix, RwcTable)
    """
    try:
        if payload['coupling'] != list(coupling.key):
            raise CacheError(f'cached coupling {payload["coupling"]} does '
                             f'not match {coupling}')
        convention = payload['convention']
        special = SpecialRwcMatrix(
            coupling=coupling,
            entries=tuple(tuple(parse_surd(text=value) for value in row)
                          for row in payload['special']))
        cells = {}
        for eta, rho1, rho2, rho, value in payload['cells']:
            triple = RhoTriple(rho1=U2Label.parse(text=rho1),
                               rho2=U2Label.parse(text=rho2),
                               rho=U2Label.parse(text=rho))
            cells[eta, triple] = parse_surd(text=value)
    except (KeyError, TypeError, ValueError, DomainError,
            SurdParseError) as error:
        raise CacheError(f'malformed cache payload for {coupling}: '
                         f'{error!r}') from error
    return special, RwcTable(coupling=coupling,
                             cells=cells,
                             convention=convention)


class RwcCache(object):
    """
    Disk cache of the computed tables, one JSON file per coupling
    """
    def __init__(self,
                 directory: Optional[Union[str, pathlib.Path]] = None):
        self.directory = (pathlib.Path(directory)
                          if directory is not None
                          else default_cache_directory())

    def path(self,
             coupling: Coupling) -> pathlib.Path:
        """
        Get the cache file path for a coupling

        :param coupling: coupling
        :return: path like rwc_1_1_1_1_3_2_1.json
        """
        name = '_'.join(str(value) for value in coupling.key)
        return self.directory / f'rwc_{name}.json'

    def read(self,
             path: pathlib.Path) -> Payload:
        """
        Read a cache file, checking its version and checksum

        :param path: cache file path
        :return: the verified payload
        """
        try:
            with open(path, 'r', encoding='utf-8') as file:
                document = json.load(file)
        except (OSError, json.JSONDecodeError) as error:
            raise CacheError(f'unreadable cache file {path}: '
                             f'{error}') from error
        if not isinstance(document, dict):
            raise CacheError(f'malformed cache file {path}')
        if document.get('format_version') != CACHE_FORMAT_VERSION:
            raise CacheError(f'cache file {path} has format version '
                             f'{document.get("format_version")}, '
                             f'expected {CACHE_FORMAT_VERSION}')
        payload = document.get('payload')
        if (not isinstance(payload, dict) or
                document.get('sha256') != payload_checksum(payload)):
            logger.warning('Checksum failure for cache file %s', path)
            raise CacheError(f'checksum mismatch in cache file {path}')
        return payload

    def load(self,
             coupling: Coupling) -> Optional[tuple[SpecialRwcMatrix,
                                                   RwcTable]]:
        """
        Load the tables of a coupling

        :param coupling: coupling
        :return: tuple (SpecialRwcMatrix, RwcTable) or None on a miss
        """
        path = self.path(coupling=coupling)
        if not path.exists():
            logger.info('Cache miss for %s', coupling)
            return None
        logger.info('Cache hit for %s', coupling)
        return decode_tables(coupling=coupling,
                             payload=self.read(path=path))

    def store(self,
              special: SpecialRwcMatrix,
              table: RwcTable) -> pathlib.Path:
        """
        Write the tables of a coupling through a temporary file

        :param special: special RWC matrix
        :param table: full table
        :return: path of the cache file
        """
        payload = encode_tables(special=special, table=table)
        document = {'format_version': CACHE_FORMAT_VERSION,
                    'sha256': payload_checksum(payload),
                    'payload': payload}
        path = self.path(coupling=table.coupling)
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            descriptor, temporary = tempfile.mkstemp(dir=self.directory,
                                                     prefix='.rwc_',
                                                     suffix='.tmp')
            with os.fdopen(descriptor, 'w', encoding='utf-8') as file:
                json.dump(document, file, indent=1)
            os.replace(temporary, path)
        except OSError as error:
            raise CacheError(f'cannot write cache file {path}: '
                             f'{error}') from error
        logger.info('Cache write for %s to %s', table.coupling, path)
        return path

    def files(self) -> list[pathlib.Path]:
        """
        List the cache files

        :return: sorted list of paths
        """
        if not self.directory.is_dir():
            return []
        return sorted(self.directory.glob('rwc_*.json'))

    def verify(self) -> list[tuple[pathlib.Path, Optional[str]]]:
        """
        Check version and checksum of every cache file

        :return: list of (path, error message or None)
        """
        results = []
        for path in self.files():
            try:
                self.read(path=path)
                results.append((path, None))
            except CacheError as error:
                results.append((path, str(error)))
        return results

    def clear(self) -> int:
        """
        Remove every cache file

        :return: number of removed files
        """
        paths = self.files()
        for path in paths:
            path.unlink()
        logger.info('Removed %d cache files from %s',
                    len(paths), self.directory)
        return len(paths)
