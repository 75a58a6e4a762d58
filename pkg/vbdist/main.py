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

""" VbDist command line program.

    Subcommands:

        check       runs all registered invariants and writes check_report.json
        coords      writes the coordinates of a distributional section, coords_<i>.csv
        regularize  smooths a distributional section for a list of widths

    Exit codes: 0 success, 1 one or more invariants failed, 2 usage or parse error.
"""
import argparse
import logging
import os
import os.path
import sys

from typing import Any, Dict, List, Optional, Sequence, Tuple

logger = logging.getLogger('vbdist')

# Import in functions where possible, so that the --version and --help options stay fast.


def cmdCheck(config: Any, sceneSpec: Optional[Dict[str, Any]] = None) -> int:
    """ Runs every registered invariant and writes check_report.json to the output directory.

        If a scene is given it is built first, so that malformed scenes are reported.

        Returns EXIT_CODE_SUCCESS if all invariants pass, EXIT_CODE_ERROR otherwise.
    """
    from vbdist.info import EXIT_CODE_ERROR, EXIT_CODE_SUCCESS, KEY_PROGRAM, KEY_VERSION
    from vbdist.info import PROJECT_NAME, VERSION
    from vbdist.output import writeJsonReport
    from vbdist.reg.invariantreg import InvariantRegistry
    from vbdist.scene import buildScene
    from vbdist.suites.context import CheckContext

    if sceneSpec is not None:
        buildScene(sceneSpec, config)

    registry = InvariantRegistry()
    logger.info("Running {} invariants".format(len(registry.items)))
    results = registry.runAll(CheckContext(config))
    failed = [result.name for result in results if not result.passed]

    configDict = config.marshall()
    configDict.pop('outputDir', None)
    report = {
        KEY_PROGRAM: PROJECT_NAME,
        KEY_VERSION: VERSION,
        'config': configDict,
        'passed': not failed,
        'failed': failed,
        'invariants': [result.asDict() for result in results],
    }
    writeJsonReport(os.path.join(config.outputDir, 'check_report.json'), report)

    if failed:
        logger.warning("{} of {} invariants failed".format(len(failed), len(results)))
        for name in failed:
            print("FAILED: {}".format(name), file=sys.stderr)
        return EXIT_CODE_ERROR
    else:
        logger.info("All {} invariants passed".format(len(results)))
        return EXIT_CODE_SUCCESS


def cmdCoords(config: Any, sceneSpec: Optional[Dict[str, Any]] = None) -> int:
    """ Writes the canonical coordinates of the scene's distributional section, paired with the
        hat density of every admissible node, to coords_<i>.csv.
    """
    from vbdist.info import EXIT_CODE_SUCCESS
    from vbdist.output import writeCoords
    from vbdist.scene import DEFAULT_COORDS_SCENE, buildScene
    from vbdist.vdist import toCoords

    scene = buildScene(DEFAULT_COORDS_SCENE if sceneSpec is None else sceneSpec, config)
    fileNames = writeCoords(config.outputDir, toCoords(scene.vdist))
    logger.info("Wrote: {}".format(', '.join(fileNames)))
    return EXIT_CODE_SUCCESS


def cmdRegularize(config: Any, epsList: Sequence[float],
                  sceneSpec: Optional[Dict[str, Any]] = None) -> int:
    """ Runs a convergence study on the scene's distributional section.

        Writes the smoothed sections to section_eps_<eps>.csv. If every coefficient of the input
        is regular, the input is a smooth section and the sup errors are written to
        convergence.csv.
    """
    from vbdist.info import EXIT_CODE_SUCCESS
    from vbdist.output import writeConvergence
    from vbdist.scene import DEFAULT_REGULARIZE_SCENE, buildScene
    from vbdist.smoothing import convergenceStudy
    from vbdist.vdist import asSmoothSection

    scene = buildScene(DEFAULT_REGULARIZE_SCENE if sceneSpec is None else sceneSpec, config)
    reference = asSmoothSection(scene.vdist)
    if reference is None:
        logger.info("The input is not smooth, no convergence errors are computed.")

    rows = convergenceStudy(epsList, scene.vdist, reference=reference)
    fileNames = writeConvergence(config.outputDir, rows, writeErrors=reference is not None)
    logger.info("Wrote: {}".format(', '.join(fileNames)))
    return EXIT_CODE_SUCCESS


def printInvariants() -> None:
    """ Prints the names of the registered invariants.
    """
    from vbdist.reg.invariantreg import InvariantRegistry

    print("# VbDist's registered invariants")
    for regItem in InvariantRegistry().items:
        print(regItem.name)


def makeConfig(args: argparse.Namespace) -> Tuple[Any, Optional[Dict[str, Any]]]:
    """ Creates the run configuration.

        The 'config' entry of the scene file is applied first. Options given on the command line
        override it.

        Returns a (config, sceneSpec) tuple. The scene spec is None if no scene file is given.
    """
    from vbdist.config.runconfig import RunConfig
    from vbdist.scene import applySceneConfig, loadSceneFile
    from vbdist.utils.misc import parseNameValue

    config = RunConfig()
    sceneSpec = None
    if args.scene:
        config.scene = args.scene
        sceneSpec = loadSceneFile(args.scene)
        applySceneConfig(sceneSpec, config)

    if args.seed is not None:
        config.seed = args.seed
    if args.resolution is not None:
        config.resolution = args.resolution
    if args.field is not None:
        config.field = args.field
    if args.outputDir is not None:
        config.outputDir = args.outputDir
    for text in args.tolerances or []:
        name, value = parseNameValue(text)
        config.setTolerance(name, value)

    return config, sceneSpec


def _addRunArguments(parser: argparse.ArgumentParser) -> None:
    """ Adds the options that all subcommands share. """
    parser.add_argument('--seed', type=lambda s: int(s, 0), default=None,
        help="Seed of all random generators. Decimal or hexadecimal (0x...). Default: 0x5EED")

    parser.add_argument('--resolution', type=int, default=None,
        help="Number of nodes per axis, at least 8. Default: 128")

    parser.add_argument('--field', choices=('real', 'complex'), default=None,
        help="Whether random test data is real or complex. Default: real")

    parser.add_argument('--out', dest='outputDir', metavar='DIR', default=None,
        help="Directory where the output files are written. Default: the current directory")

    parser.add_argument('--scene', metavar='FILE', default=None,
        help="JSON file with a manifold, bundle and distributional section. Its 'config' entry "
             "may set any of the options above; options on the command line take precedence.")

    parser.add_argument('--tol', dest='tolerances', metavar='NAME=VALUE', action='append',
        help="Overrides a named tolerance. May be given more than once. "
             "E.g. --tol stencil=1e-7")


def main(argv: Optional[List[str]] = None) -> int:
    """ Parses the command line and runs the subcommand. Returns the exit code.
    """
    # Import in functions. See comments at the top for more details
    from vbdist.info import (DEBUGGING, EXIT_CODE_COMMAND_ARGS, EXIT_CODE_SUCCESS,
                             PROJECT_NAME, VERSION)
    from vbdist.utils.defs import VbDistError
    from vbdist.utils.logs import LOG_LEVEL_NAMES, initLogging, logDictionary
    from vbdist.utils.misc import parseFloatList

    aboutStr = "{} version: {}".format(PROJECT_NAME, VERSION)
    parser = argparse.ArgumentParser(description=aboutStr)

    parser.add_argument('-v', '--version', action='store_true',
        help="Prints the program version and exits")

    parser.add_argument('--list-invariants', dest='list_invariants', action='store_true',
        help="Prints a list of the registered invariants and exits.")

    cfgGroup = parser.add_argument_group(
        "config options", description="Options related to logging.")

    cfgGroup.add_argument('--log-config', metavar='FILE', dest='logConfigFileName',
        help='Logging configuration file. If not set a default will be used.')

    cfgGroup.add_argument('-l', '--log-level', dest='log_level', default='',
        help="Log level. If set, only log messages with a level higher or equal than this will be "
             "printed to screen (stderr). Overrides the log level of the StreamHandlers in the "
             "--log-config file. Does not alter the log level of log handlers that write to a "
             "file.",
        choices=LOG_LEVEL_NAMES)

    devGroup = parser.add_argument_group(
        "developer options", description="Options that are mainly useful for VbDist developers.")

    devGroup.add_argument('-d', '--debugging-mode', dest='debugging', action='store_true',
        help="Run VbDist in debugging mode. Useful during development.")

    subParsers = parser.add_subparsers(dest='command', metavar='COMMAND')

    checkParser = subParsers.add_parser('check', help="Runs all invariants.")
    _addRunArguments(checkParser)

    coordsParser = subParsers.add_parser(
        'coords', help="Writes the coordinates of a distributional section.")
    _addRunArguments(coordsParser)

    regularizeParser = subParsers.add_parser(
        'regularize', help="Smooths a distributional section for a list of widths.")
    _addRunArguments(regularizeParser)
    regularizeParser.add_argument('--eps', dest='epsList', default='0.4,0.2,0.1',
        help="Comma separated list of mollifier widths. Default: 0.4,0.2,0.1")

    try:
        args = parser.parse_args(sys.argv[1:] if argv is None else argv)
    except SystemExit as ex:
        return EXIT_CODE_SUCCESS if ex.code in (0, None) else EXIT_CODE_COMMAND_ARGS

    try:
        initLogging(args.logConfigFileName, args.log_level)
    except VbDistError as ex:
        print("{}: error: {}".format(parser.prog, ex), file=sys.stderr)
        return EXIT_CODE_COMMAND_ARGS

    if args.version:
        print(aboutStr)
        return EXIT_CODE_SUCCESS

    if args.list_invariants:
        printInvariants()
        return EXIT_CODE_SUCCESS

    if not args.command:
        parser.print_usage(sys.stderr)
        print("{}: error: a command is required".format(parser.prog), file=sys.stderr)
        return EXIT_CODE_COMMAND_ARGS

    logger.info("######################################")
    logger.info("####        Starting VbDist       ####")
    logger.info("######################################")
    logger.info(aboutStr)

    logger.debug("argv: {}".format(sys.argv if argv is None else argv))
    logger.debug("Main vbdist module file: {}".format(__file__))
    logger.debug("PID: {}".format(os.getpid()))

    if DEBUGGING or args.debugging:
        logger.warning("Debugging flag is on!")

    logger.info("Python version: {}".format(sys.version).replace('\n', ''))

    try:
        config, sceneSpec = makeConfig(args)
        logDictionary(config.getNonDefaultsDict(), msg="Non default settings", logger=logger)
        config.logConfig()

        if args.command == 'check':
            exitCode = cmdCheck(config, sceneSpec)
        elif args.command == 'coords':
            exitCode = cmdCoords(config, sceneSpec)
        elif args.command == 'regularize':
            exitCode = cmdRegularize(config, parseFloatList(args.epsList), sceneSpec)
        else:
            raise AssertionError("Unexpected command: {}".format(args.command))
    except VbDistError as ex:
        logger.error("{}: {}".format(type(ex).__name__, ex))
        print("{}: error: {}".format(parser.prog, ex), file=sys.stderr)
        return EXIT_CODE_COMMAND_ARGS

    logger.info("Done {}, exit code: {}".format(PROJECT_NAME, exitCode))
    return exitCode


if __name__ == "__main__":
    sys.exit(main())
