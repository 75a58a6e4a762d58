# -*- coding: utf-8 -*-

# This file is part of VbDist.
#
# VbDist is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# VbDist is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with VbDist. If not, see <http://www.gnu.org/licenses/>.

""" Writing the CSV and JSON output files.

    CSV files are comma separated with '\\n' line endings and floats with 17 significant digits,
    so that identical runs give identical files. Complex columns are split in a real and an
    imaginary column.
"""
import json
import logging
import os.path

from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from vbdist.distributions import hatNodes
from vbdist.sections import Section
from vbdist.smoothing import ConvergenceRow
from vbdist.utils.dirs import ensureDirectoryExists
from vbdist.utils.misc import formatFloat
from vbdist.vdist import CoordRep, coordPairings

logger = logging.getLogger(__name__)

CSV_FORMAT = '%.17g'


def splitComplexColumns(names: Sequence[str],
                        columns: Sequence[np.ndarray]) -> Tuple[List[str], List[np.ndarray]]:
    """ Replaces every complex column 'c' by the columns 'c_re' and 'c_im'.
    """
    outNames, outColumns = [], []
    for name, column in zip(names, columns):
        column = np.asarray(column)
        if np.iscomplexobj(column):
            outNames += [name + '_re', name + '_im']
            outColumns += [column.real, column.imag]
        else:
            outNames.append(name)
            outColumns.append(column)
    return outNames, outColumns


def writeCsv(fileName: str, names: Sequence[str], columns: Sequence[np.ndarray]) -> None:
    """ Writes the columns to a CSV file with a header line.

        Columns may be empty, in which case only the header is written.
    """
    names, columns = splitComplexColumns(names, columns)
    nRows = len(columns[0]) if columns else 0
    table = np.column_stack([np.asarray(col, dtype=float) for col in columns]) \
        if nRows else np.zeros((0, len(names)))

    dirName = os.path.dirname(fileName)
    if dirName:
        ensureDirectoryExists(dirName)

    logger.debug("Writing {} rows to: {}".format(nRows, fileName))
    with open(fileName, 'w', encoding='utf-8', newline='') as stream:
        np.savetxt(stream, table, fmt=CSV_FORMAT, delimiter=',', newline='\n',
                   header=','.join(names), comments='')


def _nodeColumns(section: Section) -> Tuple[List[str], List[np.ndarray]]:
    m = section.base
    names = ['x{}'.format(axis) for axis in range(m.dim)]
    return names, [m.coordinate(axis) for axis in range(m.dim)]


def writeSection(fileName: str, section: Section) -> None:
    """ Dumps a section: the node coordinates followed by the ambient components.
    """
    names, columns = _nodeColumns(section)
    for i in range(section.bundle.ambientDim):
        names.append('s{}'.format(i))
        columns.append(section.values[:, i])
    writeCsv(fileName, names, columns)


def writeCoords(outputDir: str, coords: CoordRep) -> List[str]:
    """ Writes coords_<i>.csv per coordinate: the pairings with the hat density of every
        admissible node.

        Returns the file names.
    """
    m = coords.bundle.base
    nodes = hatNodes(m)
    pairings = coordPairings(coords)
    fileNames = []
    for i in range(coords.bundle.ambientDim):
        names = ['node'] + ['x{}'.format(axis) for axis in range(m.dim)] + ['pairing']
        columns = [nodes] + [m.coordinate(axis)[nodes] for axis in range(m.dim)] + \
            [pairings[:, i]]
        fileName = os.path.join(outputDir, 'coords_{}.csv'.format(i))
        writeCsv(fileName, names, columns)
        fileNames.append(fileName)
    return fileNames


def sectionFileName(outputDir: str, eps: float) -> str:
    """ The name of the dump of the section smoothed with width eps. """
    return os.path.join(outputDir, 'section_eps_{}.csv'.format(formatFloat(eps)))


def writeConvergence(outputDir: str, rows: Sequence[ConvergenceRow],
                     writeErrors: bool = True) -> List[str]:
    """ Writes the smoothed sections and, if writeErrors is True, convergence.csv.

        Returns the file names.
    """
    fileNames = []
    if writeErrors:
        fileName = os.path.join(outputDir, 'convergence.csv')
        writeCsv(fileName, ['eps', 'sup_error'],
                 [np.array([row.eps for row in rows]),
                  np.array([row.supError for row in rows], dtype=float)])
        fileNames.append(fileName)

    for row in rows:
        fileName = sectionFileName(outputDir, row.eps)
        writeSection(fileName, row.section)
        fileNames.append(fileName)
    return fileNames


def writeJsonReport(fileName: str, report: Dict[str, Any]) -> None:
    """ Writes the report with sorted keys, so that identical runs give identical files.
    """
    dirName = os.path.dirname(fileName)
    if dirName:
        ensureDirectoryExists(dirName)

    logger.debug("Writing report: {}".format(fileName))
    with open(fileName, 'w', encoding='utf-8', newline='\n') as stream:
        json.dump(report, stream, sort_keys=True, indent=2)
        stream.write('\n')
