# sources.py - OrbifoldBench - readers for input and oracle documents

# Copyright (c) 2024 Coburn Wightman
# AGPL-3.0-or-later

import json
import logging
import os

import yaml

import OrbifoldBench.blocks.presentations as presentations
from OrbifoldBench.core.errors import ValidationError

logger = logging.getLogger(__name__)


def read_document(path):
    """ Read a yaml or json document, chosen by file suffix.

    Args:
        path (str): .yaml, .yml or .json file

    Returns:
        (dict): the document
    """
    suffix = os.path.splitext(path)[1].lower()

    with open(path, encoding='utf-8') as f:
        try:
            if suffix in ('.yaml', '.yml'):
                document = yaml.safe_load(f)
            elif suffix == '.json':
                document = json.load(f)
            else:
                raise ValidationError('unknown document type {!r}, expected .yaml, .yml or .json'.format(suffix),
                                      path)
        except (yaml.YAMLError, json.JSONDecodeError) as err:
            raise ValidationError('not a readable document: {}'.format(err), path)

    if not isinstance(document, dict):
        raise ValidationError('the document must be a mapping', path)

    logger.debug('read %s document %s', suffix, path)
    return document


def load_input(path):
    """
    Returns:
        (tuple): (SectorAtlas, dict) the atlas and the document it came from
    """
    document = read_document(path)
    return presentations.load_atlas(document), document


def load_oracle(config, atlas, document):
    """ The Euler oracle of a run.

    An --oracle file wins over an euler_oracle section in the input
    document.

    Returns:
        (EulerOracle): the oracle, None when neither is given
    """
    if config.oracle_path is not None:
        oracle = presentations.load_oracle(read_document(config.oracle_path), atlas)
    elif 'euler_oracle' in document:
        oracle = presentations.load_oracle(document, atlas)
    else:
        return None

    logger.info('euler oracle with %d entries', len(oracle))
    return oracle
