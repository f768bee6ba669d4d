import math
import random
from fractions import Fraction

import pytest

from OrbifoldBench.core.errors import ValidationError
from OrbifoldBench.core.exact import GradedDims, format_fraction, frac, parse_fraction, series_string, shift


def test_frac():
    assert frac(Fraction(7, 3)) == Fraction(1, 3)
    assert frac(Fraction(-1, 3)) == Fraction(2, 3)
    assert frac(2) == 0


@pytest.mark.parametrize('value, expected', [(3, Fraction(3)), ('5/3', Fraction(5, 3)), (' -2/4 ', Fraction(-1, 2)),
                                             ('0', Fraction(0))])
def test_parse_fraction(value, expected):
    assert parse_fraction(value) == expected


@pytest.mark.parametrize('value', [0.5, 1.0, '0.5', '1e3', True, None, [1, 3], '1/0', 'x'])
def test_parse_fraction_rejects(value):
    with pytest.raises(ValidationError):
        parse_fraction(value, 'sectors[1].iota')


def test_parse_fraction_location():
    with pytest.raises(ValidationError) as info:
        parse_fraction(0.25, 'sectors[1].iota')

    assert info.value.location == 'sectors[1].iota'
    assert str(info.value).startswith('sectors[1].iota:')


def test_format_fraction():
    assert format_fraction(Fraction(10, 6)) == '5/3'
    assert format_fraction(Fraction(4, 2)) == '2'
    assert format_fraction(0) == '0'


def test_shift():
    d = GradedDims({0: 1, 1: 1})
    assert shift(d, Fraction(2, 3)) == GradedDims({Fraction(2, 3): 1, Fraction(5, 3): 1})
    assert shift(d, 0) == d


def test_graded_dims_drops_zeros_and_merges():
    d = GradedDims({0: 1, '2/3': 0, Fraction(3): 2})
    assert len(d) == 2
    assert d[Fraction(2, 3)] == 0
    assert d[3] == 2
    assert d.total() == 3


def test_graded_dims_rejects_negative():
    with pytest.raises(ValidationError):
        GradedDims({0: -1})


def test_reflect_and_convolve():
    sphere = GradedDims({0: 1, 3: 1})
    assert sphere.reflect(3) == sphere

    circle = GradedDims({0: 1, 1: 1})
    assert circle.convolve(circle) == GradedDims({0: 1, 1: 2, 2: 1})


def test_series_string():
    assert series_string(GradedDims({0: 1, 3: 1})) == '1 + t^3'
    assert series_string(GradedDims({0: 1, Fraction(2, 3): 1, 1: 2})) == '1 + t^{2/3} + 2*t'
    assert series_string(GradedDims()) == '0'


def test_document_round_trip():
    d = GradedDims({0: 1, Fraction(7, 3): 2})
    assert d.to_document() == {'0': 1, '7/3': 2}
    assert GradedDims.from_document(d.to_document()) == d


def random_dims(rng, max_terms=5):
    return GradedDims({Fraction(rng.randint(0, 20), rng.randint(1, 6)): rng.randint(1, 3)
                       for _ in range(rng.randint(0, max_terms))})


@pytest.mark.parametrize('seed', range(20))
def test_shift_and_frac_laws(seed):
    rng = random.Random(seed)
    d = random_dims(rng)
    a = Fraction(rng.randint(-12, 12), rng.randint(1, 6))
    assert shift(shift(d, a), -a) == d

    q = Fraction(rng.randint(-50, 50), rng.randint(1, 12))
    n = rng.randint(-5, 5)
    assert frac(q + n) == frac(q)
    assert frac(q) + math.floor(q) == q
    assert 0 <= frac(q) < 1


def test_series_string_is_injective():
    rng = random.Random(11)
    seen = {}
    for _ in range(500):
        d = random_dims(rng)
        text = series_string(d)
        assert seen.setdefault(text, d) == d

    assert series_string(GradedDims({2: 1})) != series_string(GradedDims({0: 2}))
    assert series_string(GradedDims({Fraction(2, 3): 2})) == '2*t^{2/3}'
    assert series_string(GradedDims()) == '0'
