import copy
from fractions import Fraction

import pytest

import OrbifoldBench.blocks.presentations as presentations
import OrbifoldBench.core.models as models
from OrbifoldBench.core.errors import OracleValidationError, ValidationError
from OrbifoldBench.core.groups import GroupSpec



def test_s3_sectors(s3):
    assert s3.kind == 'sphere_quotient'
    assert s3.ambient_dim == 3
    assert [s.element for s in s3.sectors] == [(0,), (1,), (2,)]
    assert [s.iota for s in s3.sectors] == [0, Fraction(1, 3), Fraction(2, 3)]
    assert [s.model for s in s3.sectors] == [models.OddSphere(3), models.Circle(), models.Circle()]
    assert all(s.weight == Fraction(1, 3) for s in s3.sectors)
    assert s3.untwisted.model.betti.to_document() == {'0': 1, '3': 1}
    assert len(s3.multisectors) == 9


def test_raw_twin_loads_equal(s3, s3_raw):
    assert s3_raw.kind == 'raw_atlas'
    assert s3_raw == s3


def test_trivial_group(s3_trivial):
    assert len(s3_trivial.sectors) == 1
    assert [ms.labels for ms in s3_trivial.multisectors] == [((0,), (0,), (0,))]
    assert s3_trivial.untwisted.weight == 1


def test_wps_sectors(wps):
    assert wps.ambient_dim == 11
    assert wps.label_style == 'fraction'
    assert [s.label_text for s in wps.sectors] == ['0', '1/3', '1/2', '2/3']
    assert [s.iota for s in wps.sectors] == [0, Fraction(5, 3), Fraction(2), Fraction(4, 3)]

    p333 = models.product(models.WeightedProj([3, 3, 3]), models.Circle())
    assert wps.sector('1/3').model == p333
    assert wps.sector('2/3').model == p333
    assert wps.sector('1/2').model == models.product(models.WeightedProj([2, 2]), models.Circle())

    assert wps.sector('1/3').weight == Fraction(1, 3)
    assert wps.sector('1/2').weight == Fraction(1, 2)
    assert wps.untwisted.weight == 1


def test_wps_multisector_ranks(wps):
    assert wps.multisector(['1/3', '1/3', '1/3']).rank_E == 4
    assert wps.multisector(['2/3', '2/3', '2/3']).rank_E == 2
    assert wps.multisector(['1/3', '2/3', '0']).rank_E == 0
    assert wps.multisector(['1/2', '1/2', '0']).rank_E == 0
    assert wps.multisector(['1/3', '1/2', '1/6']) is None

    positive = [ms.label_text for ms in wps.multisectors if ms.rank_E > 0]
    assert positive == ['(1/3, 1/3, 1/3)', '(2/3, 2/3, 2/3)']


def test_wps_requires_coprime_weights():
    with pytest.raises(ValidationError):
        presentations.WpsCirclePresentation([2, 4])
    with pytest.raises(ValidationError):
        presentations.WpsCirclePresentation([1, 0])


def test_non_effective_sphere_quotient():
    p = presentations.SphereQuotientPresentation(2, GroupSpec([3]), [[0, 0]])
    assert not p.is_effective()
    with pytest.raises(ValidationError):
        presentations.sphere_quotient_atlas(p)


def test_sphere_quotient_weight_is_one_over_the_group_order():
    # Z_4 on C^2 with weights (1, 2): the element 2 fixes the second circle,
    # where only {0, 2} acts trivially
    p = presentations.SphereQuotientPresentation(2, GroupSpec([4]), [[1, 2]])
    atlas = presentations.sphere_quotient_atlas(p)

    assert [s.element for s in atlas.sectors] == [(0,), (2,)]
    assert atlas.sector((2,)).model == models.Circle()
    assert all(s.weight == Fraction(1, 4) for s in atlas.sectors)
    assert all(ms.weight == Fraction(1, 4) for ms in atlas.multisectors)


def test_sphere_quotient_rotations():
    p = presentations.SphereQuotientPresentation(3, GroupSpec([2, 3]), [[1, 0, 1], [0, 1, 2]])
    assert p.rotations((1, 1)) == [Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)]
    assert p.fixed_coordinates((0, 0)) == [0, 1, 2]
    assert p.fixed_coordinates((1, 0)) == [1]
    assert p.ambient_dim == 5


@pytest.mark.parametrize('weight_matrix', [[[1]], [[1, 0], [1, 0]], [[1, 0.5]], 'x'])
def test_bad_weight_matrix(weight_matrix):
    with pytest.raises(ValidationError):
        presentations.SphereQuotientPresentation(2, GroupSpec([3]), weight_matrix)


def test_labelling():
    element = presentations.Labelling(GroupSpec([2, 3]))
    assert element.parse_label([1, 2]) == (1, 2)
    assert element.parse_label('1,2') == (1, 2)
    assert element.format_label((1, 2)) == '1,2'
    with pytest.raises(ValidationError):
        element.parse_label([2, 0])

    fraction = presentations.Labelling(GroupSpec([6]), 'fraction')
    assert fraction.parse_label('1/3') == (2,)
    assert fraction.parse_label(0) == (0,)
    assert fraction.format_triple([(2,), (3,), (1,)]) == '(1/3, 1/2, 1/6)'
    with pytest.raises(ValidationError):
        fraction.parse_label('1/4')
    with pytest.raises(ValidationError):
        fraction.parse_label('1')

    with pytest.raises(ValidationError):
        presentations.Labelling(GroupSpec([2, 3]), 'fraction')


def raw_document(atlas):
    # raw atlas document without declared annotations, free to edit
    document = presentations.atlas_to_document(atlas)
    for ms in document['multisectors']:
        for field in ('K_order', 'genus', 'rank_E'):
            ms.pop(field, None)

    return document


def test_raw_atlas_declared_mismatch(s3):
    document = presentations.atlas_to_document(s3)
    document['multisectors'][4]['genus'] = 0

    with pytest.raises(ValidationError) as info:
        presentations.load_atlas(document)

    assert info.value.location == 'multisectors[4].genus'


@pytest.mark.parametrize('edit, location', [
    (lambda d: d['sectors'][0].update(iota='1/3'), 'sectors[0].iota'),
    (lambda d: d['sectors'][1].update(iota=0.25), 'sectors[1].iota'),
    (lambda d: d['sectors'][1].update(weight='0'), 'sectors[1].weight'),
    (lambda d: d.update(ambient_dim=4), 'ambient_dim'),
    (lambda d: d['sectors'].pop(0), 'sectors'),
    (lambda d: d['sectors'][2].update(label=1), 'sectors'),
    (lambda d: d.update(version=2), 'version'),
    (lambda d: d.update(kind='torus'), 'kind'),
    (lambda d: d['group'].update(cyclic_orders=3), 'group.cyclic_orders'),
    (lambda d: d['multisectors'][0].update(labels=[0, 1]), 'multisectors[0].labels'),
    (lambda d: d['sectors'][1].update(model={'type': 'torus'}), 'sectors[1].model'),
])
def test_raw_atlas_rejects(s3, edit, location):
    document = raw_document(s3)
    edit(document)

    with pytest.raises(ValidationError) as info:
        presentations.load_atlas(document)

    assert info.value.location == location


def test_load_atlas_requires_mapping():
    with pytest.raises(ValidationError):
        presentations.load_atlas([1, 2])


def without_multisector_weights(atlas):
    document = raw_document(atlas)
    for ms in document['multisectors']:
        ms.pop('weight')

    return document


def test_raw_multisector_weight_defaults(s3):
    atlas = presentations.load_atlas(without_multisector_weights(s3))
    assert all(ms.weight == Fraction(1, 3) for ms in atlas.multisectors)


def test_raw_multisector_weight_follows_the_matching_sector(wps):
    atlas = presentations.load_atlas(without_multisector_weights(wps))
    assert atlas == wps

    assert atlas.multisector(['0', '1/3', '2/3']).weight == Fraction(1, 3)
    assert atlas.multisector(['0', '1/2', '1/2']).weight == Fraction(1, 2)
    assert atlas.multisector(['0', '0', '0']).weight == 1


def test_raw_multisector_weight_required_when_ambiguous(wps):
    document = without_multisector_weights(wps)
    index = [ms['labels'] for ms in document['multisectors']].index(['0', '1/3', '2/3'])
    document['multisectors'][index]['model'] = models.product(models.WeightedProj([3, 3]), models.Circle()).to_document()

    with pytest.raises(ValidationError) as info:
        presentations.load_atlas(document)

    assert info.value.location == 'multisectors[{}].weight'.format(index)


def test_wps_document_round_trip(wps):
    assert presentations.load_atlas(copy.deepcopy(presentations.atlas_to_document(wps))) == wps


def test_oracle_loads(wps, wps_oracle):
    assert len(wps_oracle) == 2
    assert wps_oracle.lookup([(2,), (2,), (2,)], '1*s') == Fraction(1, 9)
    assert wps_oracle.lookup([(4,), (4,), (4,)], 'h*s') == Fraction(2, 27)
    assert wps_oracle.lookup([(4,), (4,), (4,)], '1*s') is None
    assert wps_oracle.normalization.startswith('synthetic')

    document = wps_oracle.to_document(wps)
    assert document['entries'][0] == {'labels': ['1/3', '1/3', '1/3'], 'monomial': '1*s', 'value': '1/9'}


def test_oracle_list_form(wps):
    document = {'euler_oracle': [{'labels': ['2/3', '2/3', '2/3'], 'monomial': 'h*s', 'value': '1/2'}]}
    oracle = presentations.load_oracle(document, wps)
    assert oracle.lookup([(4,), (4,), (4,)], 'h*s') == Fraction(1, 2)
    assert oracle.normalization == ''


@pytest.mark.parametrize('entry', [
    {'labels': ['2/3', '2/3', '2/3'], 'monomial': '1*s', 'value': '1'},
    {'labels': ['2/3', '2/3', '2/3'], 'monomial': 'x*s', 'value': '1'},
    {'labels': ['1/3', '2/3', '0'], 'monomial': ['h^2', 's'], 'value': '1'},
    {'labels': ['1/3', '1/3', '1/2'], 'monomial': '1*s', 'value': '1'},
])
def test_oracle_validation(wps, entry):
    with pytest.raises(OracleValidationError):
        presentations.load_oracle({'euler_oracle': [entry]}, wps)


@pytest.mark.parametrize('entry', [
    {'labels': ['2/3', '2/3'], 'monomial': 'h*s', 'value': '1'},
    {'labels': ['2/3', '2/3', '2/3'], 'monomial': 'h*s', 'value': 0.5},
    {'labels': ['2/3', '2/3', '2/3'], 'monomial': 'h*s'},
])
def test_oracle_schema(wps, entry):
    with pytest.raises(ValidationError):
        presentations.load_oracle({'euler_oracle': [entry]}, wps)
