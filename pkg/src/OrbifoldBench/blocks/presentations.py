# presentations.py - OrbifoldBench - from orbifold descriptions to sector atlases

# Copyright (c) 2024 Coburn Wightman
# AGPL-3.0-or-later

import logging
import math
from fractions import Fraction

import numpy as np

import OrbifoldBench.blocks.sectors as sectors
import OrbifoldBench.core.models as models
from OrbifoldBench.core.errors import OracleValidationError, OrbifoldError, ValidationError
from OrbifoldBench.core.exact import format_fraction, frac, parse_fraction
from OrbifoldBench.core.groups import GroupSpec, Triple

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


class Sector(object):
    """ A twisted sector X_(g), or the untwisted sector when g is the identity.

    Attributes:
        element (tuple): the group element labelling the sector
        label_text (str): the label as shown in reports and documents
        model (ModelSpace): the underlying space
        iota (Fraction): degree shifting number
        weight (Fraction): orbifold integration weight
        exponents (tuple of int): rotation exponents m_i, None if unknown
        element_order (int): m_g, None if unknown
        components (int): number of connected components of the fixed locus
    """

    def __init__(self, element, label_text, model, iota, weight, exponents=None, element_order=None,
                 components=1):
        self.element = tuple(element)
        self.label_text = label_text
        self.model = model
        self.iota = Fraction(iota)
        self.weight = Fraction(weight)
        self.exponents = None if exponents is None else tuple(exponents)
        self.element_order = element_order
        self.components = components

        return

    def __eq__(self, other):
        if not isinstance(other, Sector):
            return NotImplemented

        return (self.element, self.model, self.iota, self.weight) == \
               (other.element, other.model, other.iota, other.weight)

    def __repr__(self):
        return 'Sector({}, {}, iota={})'.format(self.label_text, self.model.name, format_fraction(self.iota))

    @property
    def label(self):
        return self.element

    @property
    def dim(self):
        return self.model.dim

    def to_document(self):
        return {'label': self.label_text,
                'model': self.model.to_document(),
                'iota': format_fraction(self.iota),
                'weight': format_fraction(self.weight)}


class MultiSector(object):
    """ A 3-multisector X_(g1,g2,g3) with g1*g2*g3 = 1.

    The group and obstruction data are filled in by
    sectors.annotate_multisectors; until then they are None.
    """

    def __init__(self, labels, label_parts, model, weight, K_order=None, branch_orders=None, genus=None,
                 rank_E=None, restrictions=None, components=1):
        self.labels = Triple(*labels)
        self.label_parts = tuple(label_parts)
        self.model = model
        self.weight = Fraction(weight)
        self.K_order = K_order
        self.branch_orders = branch_orders
        self.genus = genus
        self.rank_E = rank_E
        self.restrictions = restrictions
        self.components = components

        return

    def __eq__(self, other):
        if not isinstance(other, MultiSector):
            return NotImplemented

        return (self.labels, self.model, self.weight, self.rank_E, self.genus) == \
               (other.labels, other.model, other.weight, other.rank_E, other.genus)

    def __repr__(self):
        return 'MultiSector({}, {}, rank={})'.format(self.label_text, self.model.name, self.rank_E)

    @property
    def label_text(self):
        return '({})'.format(', '.join(self.label_parts))

    @property
    def dim(self):
        return self.model.dim

    @property
    def is_annotated(self):
        return self.rank_E is not None

    def annotated(self, K_order, branch_orders, genus, rank_E, restrictions):
        return MultiSector(self.labels, self.label_parts, self.model, self.weight, K_order, branch_orders,
                           genus, rank_E, restrictions, self.components)

    def to_document(self):
        document = {'labels': list(self.label_parts),
                    'model': self.model.to_document(),
                    'weight': format_fraction(self.weight)}
        if self.is_annotated:
            document['K_order'] = self.K_order
            document['genus'] = self.genus
            document['rank_E'] = self.rank_E

        return document


class Labelling(object):
    """ How sector labels are written in documents and reports.

    Style 'element' writes a group element as its residues joined by ','.
    Style 'fraction' needs a cyclic group of order L and writes element (l,)
    as the rational l/L in [0, 1), the labelling of weighted projective input.
    """

    def __init__(self, group, style='element'):
        if style not in ('element', 'fraction'):
            raise ValidationError('label style must be element or fraction, got {!r}'.format(style), 'labels')

        if style == 'fraction' and group.rank != 1:
            raise ValidationError('fraction labels need a cyclic label group', 'group')

        self.group = group
        self.style = style

        return

    def format_label(self, element):
        element = tuple(element)
        if self.style == 'fraction':
            return format_fraction(Fraction(element[0], self.group.cyclic_orders[0]))

        return ','.join(str(r) for r in element)

    def format_parts(self, labels):
        return tuple(self.format_label(g) for g in labels)

    def format_triple(self, labels):
        return '({})'.format(', '.join(self.format_parts(labels)))

    def parse_label(self, value, location=None):
        """ Read a label from a document value.

        Element labels are an integer, a list of residues or "r1,r2";
        fraction labels are "p/q" strings or 0.

        Returns:
            (tuple): the group element
        """
        if self.style == 'fraction':
            f = parse_fraction(value, location)
            L = self.group.cyclic_orders[0]
            if not 0 <= f < 1 or (f * L).denominator != 1:
                raise ValidationError('label {} is not a multiple of 1/{} in [0, 1)'.format(value, L), location)
            return (int(f * L),)

        if isinstance(value, (list, tuple)):
            element = tuple(value)
        elif isinstance(value, int) and not isinstance(value, bool):
            element = (value,)
        elif isinstance(value, str):
            try:
                element = tuple(int(r) for r in value.strip('()[] ').split(','))
            except ValueError:
                raise ValidationError('label {!r} is not a list of residues'.format(value), location)
        else:
            raise ValidationError('label {!r} is not a group element'.format(value), location)

        try:
            return self.group.validate(element)
        except OrbifoldError as err:
            raise ValidationError(str(err), location)


class SectorAtlas(object):
    """ The normalized combinatorial description of an almost contact orbifold.

    Labels are group elements, written per the atlas Labelling.
    """

    dim_parity = 1

    def __init__(self, group, ambient_dim, sectors, multisectors, label_style='element', kind='raw_atlas'):
        """
        Args:
            group (GroupSpec): the label group
            ambient_dim (int): odd real dimension 2n+1
            sectors (list of Sector): untwisted sector included
            multisectors (list of MultiSector): 3-multisectors
            label_style (str): 'element' or 'fraction'
            kind (str): the presentation family the atlas came from
        """
        self.group = group
        self.ambient_dim = ambient_dim
        self.sectors = list(sectors)
        self.multisectors = list(multisectors)
        self.labelling = Labelling(group, label_style)
        self.kind = kind

        self._by_label = {s.element: s for s in self.sectors}
        self._by_triple = {ms.labels: ms for ms in self.multisectors}

        self._validate()
        return

    def __eq__(self, other):
        if not isinstance(other, SectorAtlas):
            return NotImplemented

        return (self.group, self.ambient_dim, self.label_style, self.sectors, self.multisectors) == \
               (other.group, other.ambient_dim, other.label_style, other.sectors, other.multisectors)

    def __repr__(self):
        return 'SectorAtlas({}, dim={}, {} sectors, {} multisectors)'.format(
            self.kind, self.ambient_dim, len(self.sectors), len(self.multisectors))

    def _validate(self):
        if isinstance(self.ambient_dim, bool) or not isinstance(self.ambient_dim, int) \
                or self.ambient_dim < 1 or self.ambient_dim % 2 != self.dim_parity:
            raise ValidationError('ambient dimension {!r} must be positive with parity {}'.format(
                self.ambient_dim, self.dim_parity), 'ambient_dim')

        if len(self._by_label) != len(self.sectors):
            raise ValidationError('sector labels are not unique', 'sectors')

        if len(self._by_triple) != len(self.multisectors):
            raise ValidationError('multisector labels are not unique', 'multisectors')

        identity = self.group.identity
        if identity not in self._by_label:
            raise ValidationError('the untwisted sector is mandatory', 'sectors')

        untwisted = self._by_label[identity]
        if untwisted.model.dim != self.ambient_dim:
            raise ValidationError('untwisted model {} does not have dimension {}'.format(
                untwisted.model.name, self.ambient_dim), 'sectors')

        for index, s in enumerate(self.sectors):
            location = 'sectors[{}]'.format(index)
            self.group.validate(s.element)

            if s.weight <= 0:
                raise ValidationError('weight must be positive, got {}'.format(s.weight), location + '.weight')
            if s.iota < 0:
                raise ValidationError('iota must be non-negative, got {}'.format(s.iota), location + '.iota')
            if (s.iota == 0) != self.group.is_identity(s.element):
                raise ValidationError('iota is zero exactly on the untwisted sector, got {} for {}'.format(
                    s.iota, s.label_text), location + '.iota')
            if s.model.dim > self.ambient_dim:
                raise ValidationError('model {} is larger than the orbifold'.format(s.model.name),
                                      location + '.model')

        for index, ms in enumerate(self.multisectors):
            location = 'multisectors[{}]'.format(index)
            for g in ms.labels:
                self.group.validate(g)
            if ms.weight <= 0:
                raise ValidationError('weight must be positive, got {}'.format(ms.weight), location + '.weight')

        return

    @property
    def label_style(self):
        return self.labelling.style

    @property
    def untwisted(self):
        return self._by_label[self.group.identity]

    def has_sector(self, label):
        return tuple(label) in self._by_label

    def sector(self, label):
        """
        Args:
            label (tuple or str): group element or its text form

        Returns:
            (Sector): the sector
        """
        if isinstance(label, str):
            label = self.parse_label(label)

        return self._by_label[tuple(label)]

    def inverse_label(self, label):
        return self.group.inverse(label)

    def multisector(self, labels):
        """
        Returns:
            (MultiSector): the multisector with these labels, None if absent
        """
        labels = tuple(self.parse_label(g) if isinstance(g, str) else tuple(g) for g in labels)
        return self._by_triple.get(labels)

    def with_multisectors(self, multisectors):
        return type(self)(self.group, self.ambient_dim, self.sectors, multisectors, self.label_style, self.kind)

    def with_sectors(self, sectors):
        return type(self)(self.group, self.ambient_dim, sectors, self.multisectors, self.label_style, self.kind)

    def format_label(self, element):
        return self.labelling.format_label(element)

    def format_triple(self, labels):
        return self.labelling.format_triple(labels)

    def parse_label(self, value, location=None):
        return self.labelling.parse_label(value, location)


class SphereQuotientPresentation(object):
    """ S^(2n+1) in C^(n+1) divided by a diagonal unitary abelian action.

    Generator i of the group rotates coordinate j by exp(2 pi i a_ij / n_i).
    """

    def __init__(self, n_plus_1, group, weight_matrix):
        """
        Args:
            n_plus_1 (int): number of complex coordinates, >= 1
            group (GroupSpec): the acting group
            weight_matrix (list of list of int): one row of n+1 weights per cyclic factor
        """
        if isinstance(n_plus_1, bool) or not isinstance(n_plus_1, int) or n_plus_1 < 1:
            raise ValidationError('n_plus_1 must be an integer >= 1, got {!r}'.format(n_plus_1), 'n_plus_1')

        if not isinstance(weight_matrix, (list, tuple)) or len(weight_matrix) != group.rank:
            raise ValidationError('weight matrix {!r} needs one row per cyclic factor, {} rows'.format(
                weight_matrix, group.rank), 'weight_matrix')

        rows = []
        for i, (row, n) in enumerate(zip(weight_matrix, group.cyclic_orders)):
            if not isinstance(row, (list, tuple)) or len(row) != n_plus_1:
                raise ValidationError('row {!r} does not have {} weights'.format(row, n_plus_1),
                                      'weight_matrix[{}]'.format(i))
            for a in row:
                if isinstance(a, bool) or not isinstance(a, int):
                    raise ValidationError('weights must be integers, got {!r}'.format(a),
                                          'weight_matrix[{}]'.format(i))
            rows.append([a % n for a in row])

        self.n_plus_1 = n_plus_1
        self.group = group
        self.weight_matrix = rows

        self._weights = np.array(rows, dtype=object).reshape(group.rank, n_plus_1)
        return

    @property
    def ambient_dim(self):
        return 2 * self.n_plus_1 - 1

    def rotations(self, g):
        """ Fractional rotation angles of g on each complex coordinate.

        Returns:
            (list of Fraction): values in [0, 1)
        """
        g = self.group.validate(g)
        angles = np.array([Fraction(r, n) for r, n in zip(g, self.group.cyclic_orders)], dtype=object)

        return [frac(a) for a in angles.dot(self._weights)]

    def fixed_coordinates(self, g):
        return [j for j, angle in enumerate(self.rotations(g)) if angle == 0]

    def is_effective(self):
        for g in self.group.elements():
            if not self.group.is_identity(g) and len(self.fixed_coordinates(g)) == self.n_plus_1:
                return False

        return True


class WpsCirclePresentation(object):
    """ The weighted projective space P(w_0, ..., w_n) times a circle. """

    def __init__(self, weights):
        weights = list(weights)
        if len(weights) == 0:
            raise ValidationError('at least one weight is needed', 'weights')

        for w in weights:
            if isinstance(w, bool) or not isinstance(w, int) or w < 1:
                raise ValidationError('weights must be positive integers, got {!r}'.format(w), 'weights')

        if math.gcd(*weights) != 1:
            raise ValidationError('weights {} have a common factor, the action is not effective'.format(weights),
                                  'weights')

        self.weights = weights
        return

    @property
    def ambient_dim(self):
        return 2 * (len(self.weights) - 1) + 1

    @property
    def label_order(self):
        return math.lcm(*self.weights)

    def fixed_weights(self, l):
        # indices j with (l/L) * w_j an integer
        L = self.label_order
        return [j for j, w in enumerate(self.weights) if (l * w) % L == 0]

    def rotations(self, l):
        L = self.label_order
        return [frac(Fraction(l * w, L)) for w in self.weights]

    def model(self, indices):
        return models.product(models.WeightedProj([self.weights[j] for j in indices]), models.Circle())

    def weight(self, indices):
        return Fraction(1, math.gcd(*[self.weights[j] for j in indices]))


def sphere_quotient_atlas(p):
    """ Sector atlas of a sphere quotient S^(2n+1)/G.

    The sector of g is the fixed sphere S^(2k-1) of its k fixed coordinates,
    divided by G; elements without fixed coordinates give no sector. Every
    sector and multisector has integration weight 1/|G|, the models being
    normalized on the covering fixed spheres.

    Args:
        p (SphereQuotientPresentation): the presentation

    Returns:
        (SectorAtlas): annotated atlas
    """
    group = p.group
    if not p.is_effective():
        raise ValidationError('the action is not effective', 'weight_matrix')

    weight = Fraction(1, group.group_order)
    labelling = Labelling(group, 'element')

    fixed = {}
    sector_list = []
    for g in group.elements():
        fixed[g] = set(p.fixed_coordinates(g))
        k = len(fixed[g])
        if k == 0:
            continue

        m_g = group.order(g)
        exponents = sectors.rotation_exponents(p.rotations(g), m_g)
        iota = sectors.degree_shift(exponents, m_g)
        sector_list.append(Sector(g, labelling.format_label(g), models.odd_sphere(2 * k - 1), iota, weight,
                                  exponents, m_g))

    multisector_list = []
    for triple in group.enumerate_triples():
        common = fixed[triple.g1] & fixed[triple.g2] & fixed[triple.g3]
        if len(common) == 0:
            continue

        multisector_list.append(MultiSector(triple, labelling.format_parts(triple),
                                            models.odd_sphere(2 * len(common) - 1), weight))

    atlas = SectorAtlas(group, p.ambient_dim, sector_list, multisector_list, 'element', 'sphere_quotient')
    atlas = sectors.annotate_multisectors(atlas)

    logger.info('sphere quotient S^%d/%s: %d sectors, %d multisectors', p.ambient_dim,
                'x'.join('Z_{}'.format(n) for n in group.cyclic_orders), len(atlas.sectors),
                len(atlas.multisectors))
    return atlas


def wps_circle_atlas(p):
    """ Sector atlas of P(w_0, ..., w_n) x S^1.

    Sector labels are the rationals f in the union of {l/w_j}; the sector of
    f is P(w_j : f w_j integral) x S^1 with integration weight one over the
    gcd of those weights.

    Args:
        p (WpsCirclePresentation): the presentation

    Returns:
        (SectorAtlas): annotated atlas with fraction labels
    """
    L = p.label_order
    group = GroupSpec([L])
    labelling = Labelling(group, 'fraction')

    fixed = {}
    sector_list = []
    for l in range(L):
        indices = p.fixed_weights(l)
        if len(indices) == 0:
            continue

        fixed[l] = set(indices)
        m_g = group.order((l,))
        exponents = sectors.rotation_exponents(p.rotations(l), m_g)
        iota = sectors.degree_shift(exponents, m_g)
        sector_list.append(Sector((l,), labelling.format_label((l,)), p.model(indices), iota, p.weight(indices),
                                  exponents, m_g))

    multisector_list = []
    for l1 in fixed:
        for l2 in fixed:
            l3 = (-(l1 + l2)) % L
            if l3 not in fixed:
                continue

            common = sorted(fixed[l1] & fixed[l2] & fixed[l3])
            if len(common) == 0:
                continue

            triple = Triple((l1,), (l2,), (l3,))
            multisector_list.append(MultiSector(triple, labelling.format_parts(triple), p.model(common),
                                                p.weight(common)))

    atlas = SectorAtlas(group, p.ambient_dim, sector_list, multisector_list, 'fraction', 'wps_circle')
    atlas = sectors.annotate_multisectors(atlas)

    logger.info('P(%s) x S^1: %d sectors, %d multisectors', ','.join(str(w) for w in p.weights),
                len(atlas.sectors), len(atlas.multisectors))
    return atlas


class EulerOracle(object):
    """ User supplied integrals of Euler forms of positive rank obstruction bundles.

    An entry keyed by (multisector labels, monomial) holds the orbifold
    integral over the multisector of the monomial (a generator of the
    multisector model of degree dim - rank) against the Euler form.
    """

    def __init__(self, table=None, normalization=''):
        """
        Args:
            table (dict): (Triple, str) -> Fraction
            normalization (str): free text stating the convention the values use
        """
        self.table = dict(table or {})
        self.normalization = normalization

        return

    def __len__(self):
        return len(self.table)

    def lookup(self, labels, monomial):
        """
        Returns:
            (Fraction): the integral, None when the oracle has no entry
        """
        return self.table.get((tuple(labels), monomial))

    def validate(self, atlas):
        """ Check every entry against an annotated atlas. """
        for (labels, monomial), value in self.table.items():
            ms = atlas.multisector(labels)
            key = atlas.format_triple(labels)
            if ms is None:
                raise OracleValidationError('oracle entry {} names no multisector'.format(key))
            if not 0 < ms.rank_E <= ms.dim:
                raise OracleValidationError('oracle entry {} is for a multisector of rank {} and dim {}'.format(
                    key, ms.rank_E, ms.dim))
            try:
                degree = ms.model.degree_of(monomial)
            except OrbifoldError:
                raise OracleValidationError('oracle entry {}: {} has no generator {!r}'.format(
                    key, ms.model.name, monomial))
            if degree != ms.dim - ms.rank_E:
                raise OracleValidationError('oracle entry {}: monomial {} has degree {}, expected {}'.format(
                    key, monomial, degree, ms.dim - ms.rank_E))

        return

    def to_document(self, atlas):
        entries = []
        for (labels, monomial), value in sorted(self.table.items()):
            entries.append({'labels': [atlas.format_label(g) for g in labels],
                            'monomial': monomial,
                            'value': format_fraction(value)})

        return {'normalization': self.normalization, 'entries': entries}


def load_oracle(document, atlas):
    """ Read an Euler oracle from a document.

    The 'euler_oracle' value is either a list of entries or a mapping with
    'normalization' and 'entries'. Each entry is
    {labels: [l1, l2, l3], monomial: label or list of factor labels, value: "p/q"}.

    Returns:
        (EulerOracle): validated against the atlas
    """
    section = document.get('euler_oracle', [])
    normalization = document.get('normalization', '')
    if isinstance(section, dict):
        normalization = section.get('normalization', normalization)
        section = section.get('entries', [])

    if not isinstance(section, list):
        raise ValidationError('euler_oracle must be a list of entries', 'euler_oracle')

    table = {}
    for i, entry in enumerate(section):
        location = 'euler_oracle[{}]'.format(i)
        if not isinstance(entry, dict) or not {'labels', 'monomial', 'value'} <= set(entry):
            raise ValidationError('entry needs labels, monomial and value', location)

        if len(entry['labels']) != 3:
            raise ValidationError('entry needs three labels', location + '.labels')

        labels = tuple(atlas.parse_label(g, location + '.labels') for g in entry['labels'])
        monomial = entry['monomial']
        if isinstance(monomial, list):
            monomial = '*'.join(str(m) for m in monomial)

        table[(labels, str(monomial))] = parse_fraction(entry['value'], location + '.value')

    oracle = EulerOracle(table, str(normalization or ''))
    oracle.validate(atlas)

    return oracle


def _require(document, field, location):
    if not isinstance(document, dict):
        raise ValidationError('expected a mapping with field {!r}'.format(field), location)

    if field not in document:
        raise ValidationError('missing field {!r}'.format(field), location)

    return document[field]


def _group(orders, location):
    if not isinstance(orders, list):
        raise ValidationError('cyclic orders must be a list, got {!r}'.format(orders), location)

    try:
        return GroupSpec(orders)
    except ValidationError as err:
        raise ValidationError(err.message, location)


def _default_multisector_weight(triple, model, models_by_label, weights, location):
    """ Integration weight of a multisector whose document leaves it out.

    The multisector inherits the weight of the first of its sectors with the
    same model, e.g. X_f for (1, f, f^-1). Failing that, the three sectors
    must agree on one weight.

    Raises:
        ValidationError: no sector shares the model and the sector weights differ
    """
    for g in triple:
        if models_by_label[g] == model:
            return weights[g]

    candidates = {weights[g] for g in triple}
    if len(candidates) == 1:
        return candidates.pop()

    raise ValidationError('weight is required, sector weights {} differ'.format(
        ', '.join(format_fraction(weights[g]) for g in triple)), location + '.weight')


def _raw_atlas(document):
    group_doc = _require(document, 'group', 'document')
    group = _group(_require(group_doc, 'cyclic_orders', 'group'), 'group.cyclic_orders')

    label_style = document.get('labels', 'element')
    ambient_dim = _require(document, 'ambient_dim', 'document')

    sector_docs = _require(document, 'sectors', 'document')
    if not isinstance(sector_docs, list) or len(sector_docs) == 0:
        raise ValidationError('the untwisted sector is mandatory', 'sectors')

    labelling = Labelling(group, label_style)

    sector_list = []
    for i, entry in enumerate(sector_docs):
        location = 'sectors[{}]'.format(i)
        element = labelling.parse_label(_require(entry, 'label', location), location + '.label')
        model = models.model_from_document(_require(entry, 'model', location), location + '.model')
        iota = parse_fraction(_require(entry, 'iota', location), location + '.iota')
        weight = parse_fraction(_require(entry, 'weight', location), location + '.weight')
        sector_list.append(Sector(element, labelling.format_label(element), model, iota, weight))

    weights = {s.element: s.weight for s in sector_list}
    models_by_label = {s.element: s.model for s in sector_list}

    multisector_list = []
    declared = []
    for i, entry in enumerate(document.get('multisectors', [])):
        location = 'multisectors[{}]'.format(i)
        labels = _require(entry, 'labels', location)
        if not isinstance(labels, list) or len(labels) != 3:
            raise ValidationError('a multisector needs three labels', location + '.labels')

        triple = Triple(*[labelling.parse_label(g, location + '.labels') for g in labels])
        model = models.model_from_document(_require(entry, 'model', location), location + '.model')
        for g in triple:
            if g not in models_by_label:
                raise ValidationError('label {} has no sector'.format(labelling.format_label(g)), location)

        if 'weight' in entry:
            weight = parse_fraction(entry['weight'], location + '.weight')
        else:
            weight = _default_multisector_weight(triple, model, models_by_label, weights, location)

        multisector_list.append(MultiSector(triple, labelling.format_parts(triple), model, weight))
        declared.append({k: entry[k] for k in ('K_order', 'genus', 'rank_E') if k in entry})

    atlas = SectorAtlas(group, ambient_dim, sector_list, multisector_list, label_style, 'raw_atlas')
    atlas = sectors.annotate_multisectors(atlas)

    for i, (ms, fields) in enumerate(zip(atlas.multisectors, declared)):
        location = 'multisectors[{}]'.format(i)
        for field, value in fields.items():
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValidationError('{} must be an integer, got {!r}'.format(field, value),
                                      '{}.{}'.format(location, field))
            if field == 'rank_E' and (value < 0 or value % 2 != 0):
                raise ValidationError('rank_E must be even and >= 0, got {}'.format(value), location + '.rank_E')
            computed = getattr(ms, field)
            if value != computed:
                raise ValidationError('declared {} = {} but the labels give {}'.format(field, value, computed),
                                      '{}.{}'.format(location, field))

    return atlas


def load_atlas(document):
    """ Build a validated atlas from an input document.

    Args:
        document (dict): {version: 1, kind: 'sphere_quotient' | 'wps_circle' | 'raw_atlas', ...}

    Returns:
        (SectorAtlas): annotated atlas
    """
    if not isinstance(document, dict):
        raise ValidationError('the document must be a mapping', 'document')

    version = document.get('version', SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise ValidationError('unsupported schema version {!r}'.format(version), 'version')

    kind = _require(document, 'kind', 'document')
    if kind == 'sphere_quotient':
        group = _group(_require(document, 'cyclic_orders', 'document'), 'cyclic_orders')
        p = SphereQuotientPresentation(_require(document, 'n_plus_1', 'document'), group,
                                       _require(document, 'weight_matrix', 'document'))
        return sphere_quotient_atlas(p)

    if kind == 'wps_circle':
        return wps_circle_atlas(WpsCirclePresentation(_require(document, 'weights', 'document')))

    if kind == 'raw_atlas':
        return _raw_atlas(document)

    raise ValidationError('unknown kind {!r}'.format(kind), 'kind')


def atlas_to_document(atlas):
    """ Export any atlas as a raw_atlas document; load_atlas reads it back equal. """
    return {'version': SCHEMA_VERSION,
            'kind': 'raw_atlas',
            'group': {'cyclic_orders': list(atlas.group.cyclic_orders)},
            'labels': atlas.label_style,
            'ambient_dim': atlas.ambient_dim,
            'sectors': [s.to_document() for s in atlas.sectors],
            'multisectors': [ms.to_document() for ms in atlas.multisectors]}
