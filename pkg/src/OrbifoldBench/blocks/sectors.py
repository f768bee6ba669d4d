# sectors.py - OrbifoldBench - degree shifting, branched cover genus and obstruction rank

# Copyright (c) 2024 Coburn Wightman
# AGPL-3.0-or-later

import logging
from fractions import Fraction

import OrbifoldBench.core.models as models
from OrbifoldBench.core.errors import (InconsistentAtlasError, InvalidBranchDataError,
                                       UnsupportedRestrictionError, ValidationError)
from OrbifoldBench.core.report import Report

logger = logging.getLogger(__name__)


def degree_shift(exponents, m_g):
    """ The degree shifting number of an element from its rotation exponents.

    The element acts on the i-th complex direction by exp(2 pi i m_i / m_g).

    Args:
        exponents (list of int): m_i with 0 <= m_i < m_g
        m_g (int): order of the element, >= 1

    Returns:
        (Fraction): sum of m_i / m_g
    """
    if m_g < 1:
        raise ValidationError('element order must be >= 1, got {}'.format(m_g))

    for m in exponents:
        if not 0 <= m < m_g:
            raise ValidationError('rotation exponent {} out of range [0, {})'.format(m, m_g))

    return sum((Fraction(m, m_g) for m in exponents), Fraction(0))


def rotation_exponents(rotations, m_g):
    """ Exponents m_i of an element of order m_g from its fractional rotation angles.

    Args:
        rotations (list of Fraction): angles in [0, 1), each a multiple of 1/m_g
        m_g (int): order of the element

    Returns:
        (list of int): m_i = rotation_i * m_g
    """
    exponents = []
    for r in rotations:
        m = Fraction(r) * m_g
        if m.denominator != 1:
            raise ValidationError('rotation {} is not a multiple of 1/{}'.format(r, m_g))
        exponents.append(int(m))

    return exponents


def is_integral_shift(exponents, m_g):
    """ True when the exponents sum to a multiple of the element order,
    i.e. the element lies in SL(n) x 1.
    """
    return sum(exponents) % m_g == 0


def genus(K_order, k):
    """ Genus of the branched cover of the three-pointed sphere (Riemann-Hurwitz).

    Args:
        K_order (int): order of the group K generated by the triple
        k (tuple of int): branch orders (k1, k2, k3), each dividing K_order

    Returns:
        (Fraction): (2 + |K| - sum |K|/k_i) / 2
    """
    if K_order < 1:
        raise InvalidBranchDataError('group order must be >= 1, got {}'.format(K_order))

    for k_i in k:
        if k_i < 1 or K_order % k_i != 0:
            raise InvalidBranchDataError('branch order {} does not divide |K| = {}'.format(k_i, K_order))

    return Fraction(2 + K_order - sum(K_order // k_i for k_i in k), 2)


def obstruction_rank(dim_sector, dim_X, iotas):
    """ Real rank of the obstruction bundle over a 3-multisector.

    Args:
        dim_sector (int): real dimension of the multisector
        dim_X (int): real dimension of the orbifold
        iotas (tuple of Fraction): degree shifts of the three labels

    Returns:
        (int): dim_sector - dim_X + 2 * sum(iotas)
    """
    rank = dim_sector - dim_X + 2 * sum((Fraction(i) for i in iotas), Fraction(0))
    if rank.denominator != 1:
        raise InconsistentAtlasError('obstruction rank {} is not an integer'.format(rank))

    return int(rank)


def lifted_obstruction_rank(dim_sector, dim_X, iotas):
    """ Rank of the obstruction bundle computed on X x R, where the multisector
    and the orbifold both gain the line direction.
    """
    return obstruction_rank(dim_sector + 1, dim_X + 1, iotas)


def annotate_multisectors(atlas):
    """ Fill in the group, genus, rank and restriction data of every multisector.

    Args:
        atlas (SectorAtlas): atlas whose multisectors carry labels, model and weight

    Returns:
        (SectorAtlas): a new atlas with annotated multisectors
    """
    group = atlas.group

    annotated = []
    for index, ms in enumerate(atlas.multisectors):
        location = 'multisectors[{}]'.format(index)
        g1, g2, g3 = ms.labels

        if not group.is_identity(group.multiply(group.multiply(g1, g2), g3)):
            raise ValidationError('labels {} do not multiply to the identity'.format(ms.label_text), location)

        parts = []
        for g in ms.labels:
            if not atlas.has_sector(g):
                raise ValidationError('label {} has no sector'.format(atlas.format_label(g)), location)
            parts.append(atlas.sector(g))

        K_order = group.subgroup_order([g1, g2])
        branch_orders = tuple(group.order(g) for g in ms.labels)
        g_sigma = genus(K_order, branch_orders)

        iotas = tuple(s.iota for s in parts)
        try:
            rank = obstruction_rank(ms.model.dim, atlas.ambient_dim, iotas)
        except InconsistentAtlasError as err:
            raise InconsistentAtlasError('{}: {}'.format(location, err))

        if lifted_obstruction_rank(ms.model.dim, atlas.ambient_dim, iotas) != rank:
            raise InconsistentAtlasError('{}: rank on X x R differs from rank on X'.format(location))

        if rank < 0 or rank % 2 != 0:
            raise ValidationError('obstruction rank {} must be even and >= 0'.format(rank), location)

        if g_sigma.denominator != 1 or g_sigma < 0:
            raise ValidationError('genus {} must be a non-negative integer'.format(g_sigma), location)

        restrictions = []
        for s in parts:
            try:
                restrictions.append(models.restriction_map(s.model, ms.model))
            except UnsupportedRestrictionError as err:
                raise ValidationError('model is not contained in sector {}: {}'.format(s.label_text, err),
                                      location)

        logger.debug('%s %s: |K|=%d k=%s genus=%s rank=%d', location, ms.label_text,
                     K_order, branch_orders, g_sigma, rank)

        annotated.append(ms.annotated(K_order, branch_orders, int(g_sigma), rank, tuple(restrictions)))

    return atlas.with_multisectors(annotated)


def invariant_report(atlas):
    """ Check the structural invariants of an annotated atlas.

    Covers obstruction rank evenness, genus integrality, the shift-sum
    identity 2(iota_g + iota_g^-1) = dim X - dim X_g, identity shifts,
    integrality of shifts against rotation exponents, and rank equality
    between X and X x R.

    Returns:
        (Report): one check per sector or multisector and property
    """
    report = Report('invariants')
    D = atlas.ambient_dim

    for index, s in enumerate(atlas.sectors):
        location = 'sectors[{}] {}'.format(index, s.label_text)

        is_identity = atlas.group.is_identity(s.element)
        report.add('identity-shift', location, (s.iota == 0) == is_identity,
                   '' if (s.iota == 0) == is_identity else 'iota {} for label {}'.format(s.iota, s.label_text))

        inverse = atlas.group.inverse(s.element)
        if atlas.has_sector(inverse):
            total = 2 * (s.iota + atlas.sector(inverse).iota)
            ok = total == D - s.dim
            report.add('shift-sum', location, ok,
                       '' if ok else '2(iota_g + iota_g^-1) = {} but dim X - dim X_g = {}'.format(total, D - s.dim))
        else:
            report.add('shift-sum', location, False, 'inverse sector missing')

        if s.exponents is not None:
            ok = (s.iota.denominator == 1) == is_integral_shift(s.exponents, s.element_order)
            report.add('shift-integrality', location, ok,
                       '' if ok else 'iota {} against exponents {}'.format(s.iota, list(s.exponents)))

    for index, ms in enumerate(atlas.multisectors):
        location = 'multisectors[{}] {}'.format(index, ms.label_text)

        ok = ms.rank_E >= 0 and ms.rank_E % 2 == 0
        report.add('rank-even', location, ok, '' if ok else 'rank {}'.format(ms.rank_E))

        ok = Fraction(ms.genus).denominator == 1 and ms.genus >= 0
        report.add('genus-integral', location, ok, '' if ok else 'genus {}'.format(ms.genus))

        iotas = tuple(atlas.sector(g).iota for g in ms.labels)
        ok = lifted_obstruction_rank(ms.model.dim, D, iotas) == ms.rank_E
        report.add('lifted-rank', location, ok, '' if ok else 'rank on X x R differs')

    return report
