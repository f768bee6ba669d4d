# ring.py - OrbifoldBench - three-point functions, the Poincare pairing and the orbifold cup product

# Copyright (c) 2024 Coburn Wightman
# AGPL-3.0-or-later

import collections
import itertools
import logging
from fractions import Fraction

import sympy as sp

import OrbifoldBench.blocks.cohomology as cohomology
from OrbifoldBench.core.errors import AtlasIntegrityError, DualityFailureError, MalformedClassError
from OrbifoldBench.core.exact import format_fraction
from OrbifoldBench.core.report import Report

logger = logging.getLogger(__name__)

VALUE = 'value'
NEEDS_ORACLE = 'needs-oracle'
FORCED_ZERO = 'forced-zero'

NO_MULTISECTOR = 'no-multisector'
RANK_EXCEEDS_DIM = 'rank-exceeds-dim'
DEGREE_MISMATCH = 'degree-mismatch'


class MissingEntry(collections.namedtuple('MissingEntry', ['labels', 'monomial', 'rank_E', 'dim'])):
    """ An Euler oracle value a computation needed and did not find. """

    def to_document(self, atlas):
        return {'labels': [atlas.format_label(g) for g in self.labels],
                'monomial': self.monomial,
                'rank_E': self.rank_E,
                'dim': self.dim}


class CohClass(object):
    """ A class in H_orb^*(X): rational coefficients on (sector, generator) pairs. """

    def __init__(self, coefficients=None):
        """
        Args:
            coefficients (dict): (sector label, generator label) -> Fraction
        """
        self.coefficients = {}
        for (sector, generator), c in dict(coefficients or {}).items():
            if c != 0:
                self.coefficients[(tuple(sector), generator)] = Fraction(c)

        return

    @classmethod
    def basis(cls, sector, generator, c=1):
        return cls({(sector, generator): c})

    def __eq__(self, other):
        if not isinstance(other, CohClass):
            return NotImplemented

        return self.coefficients == other.coefficients

    def __repr__(self):
        terms = ['{}*{}[{}]'.format(format_fraction(c), g, ','.join(str(r) for r in s))
                 for (s, g), c in sorted(self.coefficients.items())]
        return 'CohClass({})'.format(' + '.join(terms) if terms else '0')

    def __add__(self, other):
        merged = dict(self.coefficients)
        for key, c in other.coefficients.items():
            merged[key] = merged.get(key, 0) + c

        return CohClass(merged)

    def scaled(self, c):
        return CohClass({key: c * v for key, v in self.coefficients.items()})

    @property
    def is_zero(self):
        return len(self.coefficients) == 0

    def sectors(self):
        return sorted({s for s, _ in self.coefficients})

    def on_sector(self, sector):
        """
        Returns:
            (dict): the model class on one sector, generator label -> Fraction
        """
        sector = tuple(sector)
        return {g: c for (s, g), c in self.coefficients.items() if s == sector}

    def to_document(self, atlas):
        return [[atlas.format_label(s), g, format_fraction(c)] for (s, g), c in sorted(self.coefficients.items())]


class ThreePointEvaluation(object):
    """ A value, or the reason there is none.

    status is 'value', 'needs-oracle' or 'forced-zero'. Forced zeros carry a
    reason; oracle requests carry the missing entries.
    """

    def __init__(self, status, value=None, reason=None, labels=None, missing=()):
        self.status = status
        self.value = value
        self.reason = reason
        self.labels = labels
        self.missing = tuple(missing)

        return

    def __repr__(self):
        if self.status == VALUE:
            return 'ThreePointEvaluation({})'.format(format_fraction(self.value))

        return 'ThreePointEvaluation({}, {})'.format(self.status, self.reason or list(self.missing))

    @classmethod
    def of(cls, value, labels=None):
        return cls(VALUE, Fraction(value), labels=labels)

    @classmethod
    def forced_zero(cls, reason, labels=None):
        return cls(FORCED_ZERO, reason=reason, labels=labels)

    @property
    def is_known(self):
        return self.status != NEEDS_ORACLE

    @property
    def numeric(self):
        """
        Returns:
            (Fraction): the value, 0 when forced to zero, None when pending an oracle
        """
        if self.status == VALUE:
            return self.value
        if self.status == FORCED_ZERO:
            return Fraction(0)

        return None


class CupResult(object):
    """ A cup product, or the oracle entries it is waiting on. """

    def __init__(self, value=None, missing=()):
        self.value = value
        self.missing = tuple(sorted(set(missing)))

        return

    def __repr__(self):
        if self.is_complete:
            return 'CupResult({})'.format(self.value)

        return 'CupResult(missing {})'.format(len(self.missing))

    @property
    def is_complete(self):
        return len(self.missing) == 0


def _single_sector(atlas, eta):
    sectors = eta.sectors()
    if len(sectors) != 1:
        raise MalformedClassError('expected a class on a single sector, got sectors {}'.format(
            [atlas.format_label(s) for s in sectors]))

    sector = sectors[0]
    if not atlas.has_sector(sector):
        raise MalformedClassError('label {} has no sector'.format(atlas.format_label(sector)))

    model = atlas.sector(sector).model
    part = eta.on_sector(sector)
    degrees = {model.degree_of(g) for g in part}
    if len(degrees) != 1:
        raise MalformedClassError('class on sector {} is not homogeneous'.format(atlas.format_label(sector)))

    return sector, part, degrees.pop()


def integrate(target, cls):
    """ Orbifold integral of a model class over a sector or multisector.

    Args:
        target (Sector or MultiSector): where to integrate
        cls (dict): model class, generator label -> Fraction

    Returns:
        (Fraction): weight times the model integral, 0 without a top component
    """
    return target.weight * target.model.integrate(cls)


def three_point(atlas, oracle, eta1, eta2, eta3):
    """ The degree zero three-point function <eta1, eta2, eta3>.

    Args:
        atlas (SectorAtlas): annotated atlas
        oracle (EulerOracle): Euler form integrals, may be None
        eta1 (CohClass): homogeneous, on a single sector
        eta2 (CohClass): homogeneous, on a single sector
        eta3 (CohClass): homogeneous, on a single sector

    Returns:
        (ThreePointEvaluation): value, forced zero or an oracle request
    """
    if eta1.is_zero or eta2.is_zero or eta3.is_zero:
        return ThreePointEvaluation.of(0)

    parts = [_single_sector(atlas, eta) for eta in (eta1, eta2, eta3)]
    labels = tuple(p[0] for p in parts)

    ms = atlas.multisector(labels)
    if ms is None:
        return ThreePointEvaluation.forced_zero(NO_MULTISECTOR, labels)

    if ms.rank_E > ms.dim:
        return ThreePointEvaluation.forced_zero(RANK_EXCEEDS_DIM, labels)

    if sum(p[2] for p in parts) + ms.rank_E != ms.dim:
        return ThreePointEvaluation.forced_zero(DEGREE_MISMATCH, labels)

    product = {ms.model.unit_label: Fraction(1)}
    for restriction, (_, part, _) in zip(ms.restrictions, parts):
        product = ms.model.multiply(product, restriction.apply(part))

    if ms.rank_E == 0:
        return ThreePointEvaluation.of(integrate(ms, product), labels)

    # rank_E > 0: the Euler form pairs with the restricted product
    value = Fraction(0)
    missing = []
    for monomial, c in sorted(product.items()):
        entry = None if oracle is None else oracle.lookup(labels, monomial)
        if entry is None:
            missing.append(MissingEntry(labels, monomial, ms.rank_E, ms.dim))
        else:
            value += c * entry

    if len(missing) > 0:
        return ThreePointEvaluation(NEEDS_ORACLE, labels=labels, missing=missing)

    return ThreePointEvaluation.of(value, labels)


def pairing(atlas, alpha, beta):
    """ The orbifold Poincare pairing, extended bilinearly.

    The part of alpha on X_g pairs with the part of beta on X_g^-1 through
    the identification of the two sector models.

    Returns:
        (Fraction): the pairing
    """
    total = Fraction(0)
    for sector in alpha.sectors():
        inverse = atlas.group.inverse(sector)
        theirs = beta.on_sector(inverse)
        if len(theirs) == 0:
            continue

        s = atlas.sector(sector)
        if atlas.sector(inverse).model != s.model:
            raise AtlasIntegrityError('sectors {} and {} have different models'.format(
                s.label_text, atlas.format_label(inverse)))

        total += integrate(s, s.model.multiply(alpha.on_sector(sector), theirs))

    return total


def _to_sympy(q):
    return sp.Rational(q.numerator, q.denominator)


def _from_sympy(x):
    x = sp.Rational(x)
    return Fraction(int(x.p), int(x.q))


class OrbifoldRing(object):
    """ The cup product of H_orb^*(X), computed on basis elements and cached.

    The product of basis elements a, b is the class c on the sector g_a g_b
    in degree deg a + deg b with <c, z> = <a, b, z> for every z in the
    complementary block.
    """

    def __init__(self, atlas, oracle=None):
        self.atlas = atlas
        self.oracle = oracle
        self.cohomology = cohomology.assemble(atlas)

        self._pairings = {}
        self._products = {}
        return

    def basis_class(self, i):
        b = self.cohomology.basis[i]
        return CohClass.basis(b.sector, b.generator)

    def complement(self, sector, degree):
        """ Basis positions of the block dual to (sector, degree). """
        inverse = self.atlas.group.inverse(sector)
        return self.cohomology.block(inverse, self.atlas.ambient_dim - degree)

    def pairing_block(self, sector, degree):
        """ Pairing matrix between a degree block of a sector and its complement.

        Returns:
            (tuple): target positions, complement positions, sympy Matrix
        """
        key = (tuple(sector), degree)
        if key not in self._pairings:
            targets = self.cohomology.block(sector, degree)
            others = self.complement(sector, degree)
            matrix = sp.Matrix(len(targets), len(others),
                               lambda a, b: _to_sympy(pairing(self.atlas, self.basis_class(targets[a]),
                                                              self.basis_class(others[b]))))
            self._pairings[key] = (targets, others, matrix)

        return self._pairings[key]

    def cup_basis(self, i, j):
        """
        Returns:
            (CupResult): the product of basis elements i and j
        """
        if (i, j) in self._products:
            return self._products[(i, j)]

        group = self.atlas.group
        a = self.cohomology.basis[i]
        b = self.cohomology.basis[j]
        sector = group.multiply(a.sector, b.sector)
        degree = a.degree + b.degree

        if not self.atlas.has_sector(sector):
            result = CupResult(CohClass())
        else:
            result = self._solve(i, j, sector, degree)

        self._products[(i, j)] = result
        return result

    def _solve(self, i, j, sector, degree):
        targets, others, matrix = self.pairing_block(sector, degree)
        if len(targets) == 0 and len(others) == 0:
            return CupResult(CohClass())

        where = '{} in degree {}'.format(self.atlas.format_label(sector), format_fraction(degree))
        if len(targets) != len(others) or matrix.det() == 0:
            raise DualityFailureError('pairing block of sector {} is degenerate'.format(where))

        rhs = []
        missing = []
        for k in others:
            evaluation = three_point(self.atlas, self.oracle, self.basis_class(i), self.basis_class(j),
                                     self.basis_class(k))
            if evaluation.is_known:
                rhs.append(_to_sympy(evaluation.numeric))
            else:
                missing.extend(evaluation.missing)

        if len(missing) > 0:
            return CupResult(None, missing)

        solution = matrix.T.LUsolve(sp.Matrix(rhs))
        logger.debug('%s x %s solved on %s', self.cohomology.element_label(i), self.cohomology.element_label(j), where)

        value = {}
        for position, x in zip(targets, solution):
            b = self.cohomology.basis[position]
            value[(b.sector, b.generator)] = _from_sympy(x)

        return CupResult(CohClass(value))

    def cup(self, alpha, beta):
        """ The cup product of two classes, by bilinearity over the basis.

        Returns:
            (CupResult): the product, or the oracle entries it needs
        """
        total = CohClass()
        missing = []
        for (s1, g1), c1 in sorted(alpha.coefficients.items()):
            for (s2, g2), c2 in sorted(beta.coefficients.items()):
                result = self.cup_basis(self.cohomology.index(s1, g1), self.cohomology.index(s2, g2))
                if result.is_complete:
                    total = total + result.value.scaled(c1 * c2)
                else:
                    missing.extend(result.missing)

        if len(missing) > 0:
            return CupResult(None, missing)

        return CupResult(total)


def cup(atlas, oracle, alpha, beta):
    return OrbifoldRing(atlas, oracle).cup(alpha, beta)


def pairing_report(atlas):
    """ Check every degree block of the pairing is square and nondegenerate.

    Returns:
        (Report): one check per (sector, degree) block
    """
    ring = OrbifoldRing(atlas)
    report = Report('pairing')

    blocks = sorted({(b.sector, b.degree) for b in ring.cohomology.basis})
    for sector, degree in blocks:
        targets, others, matrix = ring.pairing_block(sector, degree)
        location = '{} degree {}'.format(atlas.format_label(sector), format_fraction(degree))
        if len(targets) != len(others):
            report.add('pairing-block', location, False, '{} classes against {}'.format(len(targets), len(others)))
        else:
            ok = matrix.det() != 0
            report.add('pairing-block', location, ok, '' if ok else 'degenerate {0}x{0} block'.format(len(targets)))

    return report


class StructureConstants(object):
    """ The cup product table on the basis of H_orb^*(X).

    Attributes:
        cohomology (OrbCohomology): supplies the basis
        table (dict): (i, j) -> CupResult
    """

    def __init__(self, cohomology, table):
        self.cohomology = cohomology
        self.table = table

        return

    def __len__(self):
        return len(self.table)

    @property
    def atlas(self):
        return self.cohomology.atlas

    def entry(self, i, j):
        return self.table[(i, j)]

    @property
    def is_complete(self):
        return all(r.is_complete for r in self.table.values())

    @property
    def missing(self):
        """
        Returns:
            (list of MissingEntry): each needed oracle entry once, sorted
        """
        entries = set()
        for r in self.table.values():
            entries.update(r.missing)

        return sorted(entries)

    def missing_multisectors(self):
        return sorted({m.labels for m in self.missing})

    def degree(self, i):
        return self.cohomology.basis[i].degree

    def to_document(self):
        atlas = self.atlas
        entries = []
        for (i, j), r in sorted(self.table.items()):
            entry = {'left': self.cohomology.element_label(i),
                     'right': self.cohomology.element_label(j),
                     'status': 'complete' if r.is_complete else 'needs-oracle'}
            if r.is_complete:
                entry['result'] = r.value.to_document(atlas)
            entries.append(entry)

        return {'basis': [self.cohomology.element_label(i) for i in range(len(self.cohomology))],
                'complete': self.is_complete,
                'products': entries,
                'missing': [m.to_document(atlas) for m in self.missing]}


def structure_constants(atlas, oracle=None):
    """ Cup products of all pairs of basis elements.

    Products blocked on a missing oracle value are kept, with the entries
    they need, rather than guessed.

    Returns:
        (StructureConstants): the table
    """
    ring = OrbifoldRing(atlas, oracle)
    size = len(ring.cohomology)

    table = {}
    for i, j in itertools.product(range(size), repeat=2):
        table[(i, j)] = ring.cup_basis(i, j)

    constants = StructureConstants(ring.cohomology, table)
    logger.info('%d structure constants, %d pending oracle entries', len(table), len(constants.missing))

    return constants


def _times_basis(constants, cls, k, left):
    # cls * e_k when left, e_k * cls otherwise, None if any entry is pending
    total = CohClass()
    for (s, g), c in cls.coefficients.items():
        a = constants.cohomology.index(s, g)
        r = constants.entry(a, k) if left else constants.entry(k, a)
        if not r.is_complete:
            return None
        total = total + r.value.scaled(c)

    return total


def associativity_check(constants):
    """ Check (a b) c = a (b c) on every triple of basis elements whose
    products are all known.

    Returns:
        (Report): one check per triple, unknown triples counted as skipped
    """
    report = Report('associativity')
    size = len(constants.cohomology)

    for i, j, k in itertools.product(range(size), repeat=3):
        ij = constants.entry(i, j)
        jk = constants.entry(j, k)
        if not (ij.is_complete and jk.is_complete):
            report.skipped += 1
            continue

        left = _times_basis(constants, ij.value, k, True)
        right = _times_basis(constants, jk.value, i, False)
        if left is None or right is None:
            report.skipped += 1
            continue

        if left != right:
            witness = '({}, {}, {})'.format(*[constants.cohomology.element_label(x) for x in (i, j, k)])
            report.add('associativity', witness, False, '(ab)c = {} but a(bc) = {}'.format(left, right))

    report.add('associativity', 'table', len(report.failures) == 0,
               '' if len(report.failures) == 0 else '{} violating triples'.format(len(report.failures)))
    report.notes.append(cohomology.ASSOCIATIVITY_SIGN_NOTE)

    return report


def unit_law_check(constants):
    """ The untwisted unit is a two-sided identity. """
    atlas = constants.atlas
    untwisted = atlas.untwisted
    unit = constants.cohomology.index(untwisted.element, untwisted.model.unit_label)

    report = Report('unit-law')
    for i in range(len(constants.cohomology)):
        expected = CohClass.basis(constants.cohomology.basis[i].sector, constants.cohomology.basis[i].generator)
        for r in (constants.entry(unit, i), constants.entry(i, unit)):
            if not r.is_complete:
                report.skipped += 1
                continue

            ok = r.value == expected
            report.add('unit-law', constants.cohomology.element_label(i), ok,
                       '' if ok else '1 x e = {}'.format(r.value))

    return report


def degree_additivity_check(constants):
    """ Nonzero products sit in degree deg a + deg b on the sector g_a g_b. """
    group = constants.atlas.group

    report = Report('degree-additivity')
    for (i, j), r in sorted(constants.table.items()):
        if not r.is_complete:
            report.skipped += 1
            continue
        if r.value.is_zero:
            continue

        a = constants.cohomology.basis[i]
        b = constants.cohomology.basis[j]
        sector = group.multiply(a.sector, b.sector)
        degree = a.degree + b.degree

        ok = True
        for s, g in r.value.coefficients:
            position = constants.cohomology.index(s, g)
            ok = ok and s == sector and constants.degree(position) == degree

        location = '{} x {}'.format(constants.cohomology.element_label(i), constants.cohomology.element_label(j))
        report.add('degree-additivity', location, ok, '' if ok else 'product {} off degree {}'.format(
            r.value, format_fraction(degree)))

    return report


def _forced_zero_reason(atlas, ms, classes):
    if ms is None:
        return NO_MULTISECTOR
    if ms.rank_E > ms.dim:
        return RANK_EXCEEDS_DIM
    if sum(atlas.sector(b.sector).model.degree_of(b.generator) for b in classes) + ms.rank_E != ms.dim:
        return DEGREE_MISMATCH

    return None


def _filter_violation(atlas, ms, classes, evaluation):
    expected = _forced_zero_reason(atlas, ms, classes)
    if expected is not None:
        if evaluation.status != FORCED_ZERO or evaluation.reason != expected:
            return 'expected a forced zero ({}), got {}'.format(expected, evaluation)
        return None

    if evaluation.status == FORCED_ZERO:
        return 'forced zero ({}) where the degrees match'.format(evaluation.reason)

    # a surviving value needs orbifold degrees summing to the real dimension
    degree = sum(b.degree for b in classes)
    if degree != atlas.ambient_dim:
        return 'orbifold degrees sum to {}, not {}'.format(format_fraction(degree), atlas.ambient_dim)

    if evaluation.status == NEEDS_ORACLE and ms.rank_E == 0:
        return 'oracle requested on a rank 0 multisector'

    return None


def degree_filter_check(atlas, oracle=None):
    """ Three-point functions vanish exactly where the degree filter says.

    Every triple of basis classes whose labels multiply to the identity is
    evaluated. A forced zero must carry the reason the multisector data
    gives; anything else must have orbifold degrees summing to dim X.

    Returns:
        (Report): one check per label triple
    """
    h = cohomology.assemble(atlas)
    by_sector = collections.defaultdict(list)
    for b in h.basis:
        by_sector[b.sector].append(b)

    report = Report('degree-filter')
    for triple in atlas.group.enumerate_triples():
        if not all(atlas.has_sector(g) for g in triple):
            continue

        ms = atlas.multisector(triple)
        problem = None
        for classes in itertools.product(*[by_sector[g] for g in triple]):
            evaluation = three_point(atlas, oracle, *[CohClass.basis(b.sector, b.generator) for b in classes])
            problem = _filter_violation(atlas, ms, classes, evaluation)
            if problem is not None:
                problem = '{}: {}'.format(', '.join(h.element_label(h.index(b.sector, b.generator))
                                                    for b in classes), problem)
                break

        report.add('degree-filter', atlas.format_triple(triple), problem is None, problem or '')

    return report


def verify_ring(atlas, oracle=None):
    """ Pairing, degree filter, associativity, unit and degree checks on the computable part of the ring.

    Returns:
        (tuple): (Report, StructureConstants)
    """
    report = Report('ring')
    report.extend(pairing_report(atlas))
    if not report.passed:
        return report, None

    report.extend(degree_filter_check(atlas, oracle))

    constants = structure_constants(atlas, oracle)
    report.extend(associativity_check(constants))
    report.extend(unit_law_check(constants))
    report.extend(degree_additivity_check(constants))

    return report, constants
