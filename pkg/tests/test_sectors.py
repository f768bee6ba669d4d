from fractions import Fraction

import pytest

import OrbifoldBench.blocks.presentations as presentations
import OrbifoldBench.blocks.sectors as sectors
from OrbifoldBench.core.errors import InconsistentAtlasError, InvalidBranchDataError, ValidationError



def test_degree_shift():
    assert sectors.degree_shift([1, 0], 3) == Fraction(1, 3)
    assert sectors.degree_shift([2, 0], 3) == Fraction(2, 3)
    assert sectors.degree_shift([1, 2, 2, 0, 0, 0], 3) == Fraction(5, 3)
    assert sectors.degree_shift([], 1) == 0

    with pytest.raises(ValidationError):
        sectors.degree_shift([3], 3)


def test_rotation_exponents():
    assert sectors.rotation_exponents([Fraction(1, 3), Fraction(0)], 3) == [1, 0]
    with pytest.raises(ValidationError):
        sectors.rotation_exponents([Fraction(1, 2)], 3)


def test_is_integral_shift():
    assert sectors.is_integral_shift([1, 0, 0, 1, 1, 1], 2)
    assert not sectors.is_integral_shift([1, 0], 3)


def test_genus():
    assert sectors.genus(3, (3, 3, 3)) == 1
    assert sectors.genus(1, (1, 1, 1)) == 0
    assert sectors.genus(3, (3, 3, 1)) == 0
    assert sectors.genus(2, (2, 2, 1)) == 0

    with pytest.raises(InvalidBranchDataError):
        sectors.genus(2, (3, 1, 1))
    with pytest.raises(InvalidBranchDataError):
        sectors.genus(0, (1, 1, 1))


def test_obstruction_rank():
    third = Fraction(1, 3)
    assert sectors.obstruction_rank(1, 3, (third, third, third)) == 0
    assert sectors.obstruction_rank(1, 3, (2 * third, 2 * third, 2 * third)) == 2
    assert sectors.lifted_obstruction_rank(1, 3, (2 * third, 2 * third, 2 * third)) == 2

    with pytest.raises(InconsistentAtlasError):
        sectors.obstruction_rank(1, 3, (third, 0, 0))


def test_annotated_s3(s3):
    g = s3.multisector([(1,), (1,), (1,)])
    assert (g.K_order, g.branch_orders, g.genus, g.rank_E) == (3, (3, 3, 3), 1, 0)

    g2 = s3.multisector([(2,), (2,), (2,)])
    assert (g2.genus, g2.rank_E, g2.dim) == (1, 2, 1)

    assert s3.multisector([(0,), (0,), (0,)]).rank_E == 0
    assert s3.multisector([(0,), (1,), (2,)]).genus == 0


def test_annotate_rejects_bad_triples(s3):
    bad = presentations.MultiSector([(1,), (1,), (0,)], ('1', '1', '0'), s3.sector((1,)).model, Fraction(1, 3))
    with pytest.raises(ValidationError) as info:
        sectors.annotate_multisectors(s3.with_multisectors([bad]))

    assert info.value.location == 'multisectors[0]'


def test_invariant_report_passes(s3, s3_trivial, wps):
    for atlas in (s3, s3_trivial, wps):
        report = sectors.invariant_report(atlas)
        assert report.passed, report.failures
        assert len(report) > 0


