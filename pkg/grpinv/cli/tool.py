"""Compute and verify invariants of finite permutation groups.

Usage:
  grpinv-tool info <group> [--catalog=FILE]... [options]
  grpinv-tool verify <suite> [--catalog=FILE]... [options]
  grpinv-tool (-h | --help)
  grpinv-tool --version

Suites: ranks, classification, vgg, pqpair, orientation, all.

Options:
  -h --help                  Show this screen.
  --version                  Show version.
  --catalog=FILE             Extra group file, may be repeated.
  --max-order=N              Enumeration cap (overrides the configured element-cap).
  --exact-gap                Decide gap status by linear programming.
  --include-heavy            Include the heavy groups and the heavy gap cap.
  --json=FILE                Also write the report as JSON to FILE.
  -f FORMAT --format=FORMAT  Output format: json, tsv or text [default: text].
  --table=FILE               Write the character table as TSV to FILE (info only).
  --config=FILE              Configuration file.
  -s SECTION --section=SECTION  Configuration section to use.
  --log-level=LEVEL          Log level: debug, info, warning, error [default: warning].
  --debug                    Same as --log-level=debug.

Exit status: 0 when every check passes, 1 when a check fails or a
computation aborts, 2 on usage and parse errors.
"""

__all__ = ["main"]

import logging
import os
import sys

from docopt import DocoptExit, docopt

from grpinv import __version__
from grpinv.algebra.chartab import character_table
from grpinv.catalog.loader import save
from grpinv.catalog.registry import Catalog, CatalogEntry, default_catalog
from grpinv.cli.report import FORMATS, build_report, exit_code, render
from grpinv.cli.suites import GroupRecord, SuiteRunner, group_summary
from grpinv.core.common import (
    GAP_MODE,
    SUITE,
    GroupComputationError,
    ParseError,
    UnknownName,
)
from grpinv.core.config import Config, set_config
from grpinv.util import setup_logging

USAGE_ERROR = 2
FAILURE = 1

logger = logging.getLogger(__name__)


class UsageError(Exception):
    pass


def _configure(args):
    level_name = "debug" if args["--debug"] else args["--log-level"]
    level = getattr(logging, level_name.upper(), None)
    if not isinstance(level, int):
        raise UsageError("unknown log level {!r}".format(level_name))
    setup_logging(level, console=True)
    max_order = None
    if args["--max-order"] is not None:
        try:
            max_order = int(args["--max-order"])
        except ValueError:
            raise UsageError("--max-order must be an integer")
    if args["--config"] is not None and not os.path.exists(args["--config"]):
        raise UsageError("no configuration file {}".format(args["--config"]))
    if args["--format"] not in FORMATS:
        raise UsageError("unknown format {!r}".format(args["--format"]))
    return set_config(
        Config(args["--section"], args["--config"], element_cap=max_order)
    )


def _catalog(args, config):
    """the default catalog, or a fresh one when extra group files are given"""
    if not args["--catalog"]:
        return default_catalog()
    catalog = Catalog()
    for path in list(config.extra_catalogs) + args["--catalog"]:
        for name in catalog.add_group_file(path):
            if catalog.entry(name) is None:
                catalog.add_entry(
                    CatalogEntry({"name": name, "suites": ["ranks", "classification"]})
                )
    return catalog


def _gap_settings(args, config):
    mode = GAP_MODE.EXACT if args["--exact-gap"] else GAP_MODE.SUFFICIENT
    cap = config.heavy_gap_cap if args["--include-heavy"] else config.exact_gap_cap
    return mode, cap


def _emit(report, args):
    sys.stdout.write(render(report, args["--format"]))
    if args["--json"]:
        save(report, args["--json"], "json")


def info(args, catalog, config):
    G = catalog.build(args["<group>"])
    mode, cap = _gap_settings(args, config)
    summary, _, _ = group_summary(G, mode, cap)
    _emit(build_report([GroupRecord(summary)]), args)
    if args["--table"]:
        character_table(G).to_frame().to_csv(args["--table"], sep="\t")
        logger.info("Character table of %s written to %s", G.name, args["--table"])
    return 0


def verify(args, catalog, config):
    suite = args["<suite>"].upper()
    if suite not in SUITE:
        raise UsageError("unknown suite {!r}".format(args["<suite>"]))
    runner = SuiteRunner(
        catalog,
        exact_gap=args["--exact-gap"],
        include_heavy=args["--include-heavy"],
    )
    report = build_report(runner.run(suite))
    _emit(report, args)
    summary = report["summary"]
    logger.info(
        "%s: %d pass, %d fail, %d warn, %d skip",
        args["<suite>"],
        summary["pass"],
        summary["fail"],
        summary["warn"],
        summary["skip"],
    )
    return exit_code(report)


def main(argv=None):
    try:
        args = docopt(__doc__, argv=argv, version=__version__)
    except DocoptExit as e:
        sys.stderr.write("{}\n".format(e))
        return USAGE_ERROR
    try:
        config = _configure(args)
        catalog = _catalog(args, config)
        if args["info"]:
            return info(args, catalog, config)
        return verify(args, catalog, config)
    except (UsageError, UnknownName, ParseError) as e:
        sys.stderr.write("ERROR: {}\n".format(e))
        return USAGE_ERROR
    except (IOError, GroupComputationError) as e:
        logger.error("%s", e)
        sys.stderr.write("ERROR: {}\n".format(e))
        return FAILURE


if __name__ == "__main__":
    sys.exit(main())
