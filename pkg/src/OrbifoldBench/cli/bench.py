# bench.py - OrbifoldBench - command line front end

# Copyright (c) 2024 Coburn Wightman
# AGPL-3.0-or-later

import argparse
import logging
import sys

import OrbifoldBench.blocks.cohomology as cohomology
import OrbifoldBench.blocks.ring as ring
import OrbifoldBench.cli.sinks as sinks
import OrbifoldBench.cli.sources as sources
from OrbifoldBench.cli.parameters import COMMANDS, FORMATS, RunConfig
from OrbifoldBench.core.errors import OrbifoldError
from OrbifoldBench.core.exact import format_fraction

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVALID = 3
EXIT_FAILED = 4
EXIT_INCOMPLETE = 5


def cmd_sectors(config):
    """ Sector and multisector inventory.

    Returns:
        (tuple): (report document, exit status)
    """
    atlas, _ = sources.load_input(config.input_path)

    document = {'command': 'sectors',
                'kind': atlas.kind,
                'ambient_dim': atlas.ambient_dim,
                'group': 'x'.join('Z_{}'.format(n) for n in atlas.group.cyclic_orders),
                'sectors': [],
                'multisectors': []}

    for s in atlas.sectors:
        document['sectors'].append({'label': s.label_text,
                                    'model': s.model.name,
                                    'dim': s.dim,
                                    'iota': format_fraction(s.iota),
                                    'weight': format_fraction(s.weight)})

    for ms in atlas.multisectors:
        document['multisectors'].append({'labels': list(ms.label_parts),
                                         'model': ms.model.name,
                                         'dim': ms.dim,
                                         'K_order': ms.K_order,
                                         'branch_orders': list(ms.branch_orders),
                                         'genus': ms.genus,
                                         'rank_E': ms.rank_E})

    return document, EXIT_OK


def cmd_cohomology(config):
    atlas, _ = sources.load_input(config.input_path)

    document = {'command': 'cohomology'}
    document.update(cohomology.assemble(atlas).to_document())

    return document, EXIT_OK


def cmd_ring(config):
    """ Structure constants; incomplete when oracle entries are missing. """
    atlas, input_document = sources.load_input(config.input_path)
    oracle = sources.load_oracle(config, atlas, input_document)

    constants = ring.structure_constants(atlas, oracle)

    document = {'command': 'ring',
                'status': 'complete' if constants.is_complete else 'incomplete',
                'normalization': '' if oracle is None else oracle.normalization}
    document.update(constants.to_document())

    if not constants.is_complete:
        for labels in constants.missing_multisectors():
            logger.warning('pending oracle values for multisector %s', atlas.format_triple(labels))
        return document, EXIT_INCOMPLETE

    return document, EXIT_OK


def cmd_verify(config):
    """ Invariants, X x R comparison, duality, and the ring checks on the known products. """
    atlas, input_document = sources.load_input(config.input_path)
    oracle = sources.load_oracle(config, atlas, input_document)

    report = cohomology.verify_atlas(atlas)
    try:
        ring_report, constants = ring.verify_ring(atlas, oracle)
        report.extend(ring_report)
    except OrbifoldError as err:
        report.add('ring', 'atlas', False, str(err))
        constants = None

    if constants is not None and not constants.is_complete:
        report.notes.append('{} products pending oracle entries for {} multisectors were skipped'.format(
            sum(1 for r in constants.table.values() if not r.is_complete), len(constants.missing_multisectors())))

    document = {'command': 'verify'}
    document.update(report.to_document())

    if not report.passed:
        for check in report.failures:
            logger.warning('%s failed at %s: %s', check.name, check.location, check.detail)
        return document, EXIT_FAILED

    return document, EXIT_OK


COMMAND_TABLE = {'sectors': cmd_sectors,
                 'cohomology': cmd_cohomology,
                 'ring': cmd_ring,
                 'verify': cmd_verify}


def build_parser():
    parser = argparse.ArgumentParser(prog='orbifold-bench',
                                     description='Chen-Ruan cohomology of almost contact orbifolds, exactly.')
    parser.add_argument('command', choices=COMMANDS, help='what to compute')
    parser.add_argument('input', help='yaml or json input document')
    parser.add_argument('--oracle', default=None, help='Euler oracle document')
    parser.add_argument('--format', choices=FORMATS, default='table', help='report format')
    parser.add_argument('--out', default=None, help='write the report to this file')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v info, -vv debug')

    return parser


def configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG

    logging.basicConfig(level=level, format='%(name)s:%(levelname)s:%(message)s', stream=sys.stderr)
    return


def main(argv=None):
    """
    Args:
        argv (list of str): arguments, sys.argv[1:] when None

    Returns:
        (int): exit status
    """
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)

    try:
        config = RunConfig.from_arguments(args)
        document, status = COMMAND_TABLE[config.command](config)
    except (OrbifoldError, OSError) as err:
        sys.stderr.write('orbifold-bench: error: {}\n'.format(err))
        return EXIT_INVALID

    sinks.write(sinks.render(document, config.output_format), config.out_path)
    return status


if __name__ == '__main__':
    sys.exit(main())
