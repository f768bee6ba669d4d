# cohomology.py - OrbifoldBench - orbifold cohomology groups, Poincare polynomials and duality

# Copyright (c) 2024 Coburn Wightman
# AGPL-3.0-or-later

import collections
import logging

import OrbifoldBench.blocks.presentations as presentations
import OrbifoldBench.blocks.sectors as sectors
import OrbifoldBench.core.models as models
from OrbifoldBench.core.errors import AtlasIntegrityError, ValidationError
from OrbifoldBench.core.exact import GradedDims, format_fraction, series_string, shift
from OrbifoldBench.core.report import Report

logger = logging.getLogger(__name__)

SHIFT_SUM_NOTE = ('shift-sum identity is checked as 2(iota_g + iota_g^-1) = (2n+1) - dim X_g; '
                  'the form 2n - dim X_g is off by one on S^3/Z_3, where 2(1/3 + 2/3) = 3 - 1')

PAIRING_DEGREE_NOTE = ('degree d pairs with degree D - d, D = 2n+1 the real dimension; '
                       'with 2n - d the integrand falls one degree short of the sector dimension')

ASSOCIATIVITY_SIGN_NOTE = ('three-point functions are used as defined, with no sign from the X x R '
                           'comparison; associativity is checked on the computed tables')


BasisElement = collections.namedtuple('BasisElement', ['sector', 'generator', 'degree'])


class OrbCohomology(object):
    """ H_orb^*(X) as a graded vector space with a deterministic basis.

    Basis elements are ordered by sector (atlas order) then by model
    generator; the degree of a basis element is its model degree plus twice
    the degree shift of its sector.
    """

    def __init__(self, atlas, per_sector, basis):
        self.atlas = atlas
        self.per_sector = per_sector
        self.basis = basis

        self.total = GradedDims()
        for dims in per_sector.values():
            self.total = self.total + dims

        self._index = {(b.sector, b.generator): i for i, b in enumerate(basis)}
        return

    def __len__(self):
        return len(self.basis)

    def __repr__(self):
        return 'OrbCohomology({})'.format(self.poincare_polynomial())

    def poincare_polynomial(self):
        return series_string(self.total)

    def index(self, sector, generator):
        """
        Args:
            sector (tuple): sector label
            generator (str): model generator label

        Returns:
            (int): position in the basis
        """
        return self._index[(tuple(sector), generator)]

    def element_label(self, i):
        b = self.basis[i]
        return '{}[{}]'.format(b.generator, self.atlas.format_label(b.sector))

    def block(self, sector, degree):
        """ Basis positions on one sector in one orbifold degree. """
        sector = tuple(sector)
        return [i for i, b in enumerate(self.basis) if b.sector == sector and b.degree == degree]

    def to_document(self):
        sectors_doc = []
        for s in self.atlas.sectors:
            sectors_doc.append({'label': s.label_text,
                                'model': s.model.name,
                                'shift': format_fraction(2 * s.iota),
                                'series': series_string(self.per_sector[s.element]),
                                'dims': self.per_sector[s.element].to_document()})

        return {'poincare_polynomial': self.poincare_polynomial(),
                'total': self.total.to_document(),
                'sectors': sectors_doc,
                'basis': [{'sector': self.atlas.format_label(b.sector),
                           'generator': b.generator,
                           'degree': format_fraction(b.degree)} for b in self.basis]}


def assemble(atlas):
    """ Sum the shifted sector cohomologies.

    Args:
        atlas (SectorAtlas): the atlas

    Returns:
        (OrbCohomology): H_orb^d = sum over g of H^(d - 2 iota_g)(X_g)
    """
    per_sector = {}
    basis = []
    for s in atlas.sectors:
        per_sector[s.element] = shift(models.betti(s.model), 2 * s.iota)
        for g in s.model.basis:
            basis.append(BasisElement(s.element, g.label, g.degree + 2 * s.iota))

    cohomology = OrbCohomology(atlas, per_sector, basis)
    logger.debug('assembled %s: %s', atlas.kind, cohomology.poincare_polynomial())

    return cohomology


class LiftedAtlas(presentations.SectorAtlas):
    """ The sector atlas of X x R: even dimensional, every model crossed with a line. """

    dim_parity = 0


def cross_r_atlas(atlas):
    """ Build the X x R atlas, every sector and multisector model times a line.

    Returns:
        (LiftedAtlas): annotated, with ambient dimension one higher
    """
    line = models.RealLine()

    lifted_sectors = []
    for s in atlas.sectors:
        lifted_sectors.append(presentations.Sector(s.element, s.label_text, models.product(s.model, line),
                                                   s.iota, s.weight, s.exponents, s.element_order,
                                                   s.components))

    lifted_multisectors = []
    for ms in atlas.multisectors:
        lifted_multisectors.append(presentations.MultiSector(ms.labels, ms.label_parts,
                                                             models.product(ms.model, line), ms.weight,
                                                             components=ms.components))

    lifted = LiftedAtlas(atlas.group, atlas.ambient_dim + 1, lifted_sectors, lifted_multisectors,
                         atlas.label_style, atlas.kind)

    return sectors.annotate_multisectors(lifted)


def cross_r_compare(atlas, lifted=None):
    """ Compare H_orb^*(X) with the Chen-Ruan cohomology of X x R degree by degree.

    Args:
        atlas (SectorAtlas): the atlas of X
        lifted (LiftedAtlas): the atlas of X x R, built from atlas when None

    Returns:
        (Report): one check per degree, one per multisector rank
    """
    if lifted is None:
        lifted = cross_r_atlas(atlas)

    report = Report('cross-r')
    here = assemble(atlas).total
    there = assemble(lifted).total

    for degree in sorted(set(here) | set(there)):
        ok = here[degree] == there[degree]
        report.add('cross-r-degree', 'degree {}'.format(format_fraction(degree)), ok,
                   '' if ok else 'dim {} on X, {} on X x R'.format(here[degree], there[degree]))

    for ms in atlas.multisectors:
        other = lifted.multisector(ms.labels)
        if other is None:
            report.add('cross-r-rank', ms.label_text, False, 'multisector missing on X x R')
            continue

        ok = other.rank_E == ms.rank_E
        report.add('cross-r-rank', ms.label_text, ok,
                   '' if ok else 'rank {} on X, {} on X x R'.format(ms.rank_E, other.rank_E))

    return report


def duality_report(atlas):
    """ Check the dimensions paired by the orbifold Poincare pairing.

    H^(d - 2 iota_g)(X_g) pairs with H^(D - d - 2 iota_g^-1)(X_g^-1), D the
    ambient dimension.

    Returns:
        (Report): one check per sector and degree, with the pairing table as rows

    Raises:
        AtlasIntegrityError: a sector has no inverse sector
    """
    cohomology = assemble(atlas)
    D = atlas.ambient_dim

    report = Report('duality')
    for s in atlas.sectors:
        inverse = atlas.group.inverse(s.element)
        if not atlas.has_sector(inverse):
            raise AtlasIntegrityError('sector {} has no inverse sector {}'.format(
                s.label_text, atlas.format_label(inverse)))

        mine = cohomology.per_sector[s.element]
        theirs = cohomology.per_sector[inverse]
        for degree in sorted(set(mine) | set(theirs.reflect(D))):
            ok = mine[degree] == theirs[D - degree]
            report.rows.append({'sector': s.label_text,
                                'degree': format_fraction(degree),
                                'dim': mine[degree],
                                'partner': atlas.format_label(inverse),
                                'partner_degree': format_fraction(D - degree),
                                'partner_dim': theirs[D - degree]})
            report.add('duality', '{} degree {}'.format(s.label_text, format_fraction(degree)), ok,
                       '' if ok else 'dim {} against {}'.format(mine[degree], theirs[D - degree]))

    total = cohomology.total
    ok = total.reflect(D) == total
    report.add('duality-symmetry', 'total', ok, '' if ok else '{} is not symmetric about {}/2'.format(
        total.series_string(), D))

    report.notes.append(PAIRING_DEGREE_NOTE)

    return report


def verify_atlas(atlas):
    """ Structural checks that need no ring computation.

    Returns:
        (Report): invariants, X x R comparison and duality
    """
    report = Report('verify')
    report.extend(sectors.invariant_report(atlas))
    report.extend(cross_r_compare(atlas))

    try:
        report.extend(duality_report(atlas))
    except (AtlasIntegrityError, ValidationError) as err:
        report.add('duality', 'atlas', False, str(err))
        report.notes.append(PAIRING_DEGREE_NOTE)

    report.notes.insert(0, SHIFT_SUM_NOTE)
    return report
