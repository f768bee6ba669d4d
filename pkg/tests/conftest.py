# conftest.py - OrbifoldBench - shared fixtures and random presentations

# Copyright (c) 2024 Coburn Wightman
# AGPL-3.0-or-later

import math
import pathlib
from fractions import Fraction

import pytest

import OrbifoldBench.blocks.presentations as presentations
import OrbifoldBench.cli.sources as sources
from OrbifoldBench.core.exact import format_fraction, frac
from OrbifoldBench.core.groups import GroupSpec

INPUTS = pathlib.Path(__file__).resolve().parent.parent / 'inputs'


def input_path(name):
    return str(INPUTS / name)


def random_sphere_quotient(rng, max_order=12, max_coordinates=4):
    """ A random effective sphere quotient presentation.

    Group orders stay at or below max_order; non-effective draws are
    rejected and redrawn.

    Returns:
        (SphereQuotientPresentation): the presentation
    """
    while True:
        n_plus_1 = rng.randint(1, max_coordinates)
        if rng.random() < 0.7 or max_order < 4:
            orders = [rng.randint(1, max_order)]
        else:
            a = rng.randint(2, max_order // 2)
            orders = [a, rng.randint(2, max_order // a)]

        rows = [[rng.randrange(n) for _ in range(n_plus_1)] for n in orders]
        p = presentations.SphereQuotientPresentation(n_plus_1, GroupSpec(orders), rows)
        if p.is_effective():
            return p


def random_raw_wps_document(rng, max_weight=4, max_coordinates=4):
    """ A raw_atlas document for P(w) x S^1 written out sector by sector.

    Multisector weights are left out at random where a sector shares the
    multisector model; integral shifts are sometimes plain integers and the
    version field is sometimes missing.

    Returns:
        (tuple): (document, weights)
    """
    while True:
        weights = sorted(rng.randint(1, max_weight) for _ in range(rng.randint(1, max_coordinates)))
        if math.gcd(*weights) == 1:
            break

    L = math.lcm(*weights)
    fixed = {}
    for l in range(L):
        indices = [j for j, w in enumerate(weights) if (l * w) % L == 0]
        if len(indices) > 0:
            fixed[l] = indices

    def model(indices):
        return {'type': 'product',
                'factors': [{'type': 'weighted_proj', 'weights': [weights[j] for j in indices]}, {'type': 'circle'}]}

    def weight(indices):
        return format_fraction(Fraction(1, math.gcd(*[weights[j] for j in indices])))

    def label(l):
        return format_fraction(Fraction(l, L))

    sector_docs = []
    for l, indices in fixed.items():
        iota = sum((frac(Fraction(l * w, L)) for w in weights), Fraction(0))
        iota_value = int(iota) if iota.denominator == 1 and rng.random() < 0.5 else format_fraction(iota)
        sector_docs.append({'label': label(l), 'model': model(indices), 'iota': iota_value, 'weight': weight(indices)})

    multisector_docs = []
    for l1 in fixed:
        for l2 in fixed:
            l3 = (-(l1 + l2)) % L
            if l3 not in fixed:
                continue

            common = sorted(set(fixed[l1]) & set(fixed[l2]) & set(fixed[l3]))
            if len(common) == 0:
                continue

            entry = {'labels': [label(l1), label(l2), label(l3)], 'model': model(common)}
            shared = any(fixed[l] == common for l in (l1, l2, l3))
            if not shared or rng.random() < 0.5:
                entry['weight'] = weight(common)
            multisector_docs.append(entry)

    document = {'kind': 'raw_atlas',
                'group': {'cyclic_orders': [L]},
                'labels': 'fraction',
                'ambient_dim': 2 * len(weights) - 1,
                'sectors': sector_docs,
                'multisectors': multisector_docs}
    if rng.random() < 0.5:
        document['version'] = 1

    return document, weights


@pytest.fixture(scope='session')
def s3():
    atlas, _ = sources.load_input(input_path('s3_mod_z3.yaml'))
    return atlas


@pytest.fixture(scope='session')
def s3_raw():
    atlas, _ = sources.load_input(input_path('s3_mod_z3_raw.yaml'))
    return atlas


@pytest.fixture(scope='session')
def s3_trivial():
    atlas, _ = sources.load_input(input_path('s3_trivial.yaml'))
    return atlas


@pytest.fixture(scope='session')
def wps():
    atlas, _ = sources.load_input(input_path('wps_122333.yaml'))
    return atlas


@pytest.fixture(scope='session')
def wps_oracle(wps):
    return presentations.load_oracle(sources.read_document(input_path('wps_122333_oracle.yaml')), wps)
