# exact.py - OrbifoldBench - exact rationals, fractional parts and graded dimension series

# Copyright (c) 2024 Coburn Wightman
# AGPL-3.0-or-later

import math
import numbers
from fractions import Fraction

from OrbifoldBench.core.errors import ValidationError


def frac(q):
    """ Fractional part of a rational.

    Args:
        q (Fraction or int): any rational

    Returns:
        (Fraction): q - floor(q), in [0, 1)
    """
    q = Fraction(q)
    return q - math.floor(q)


def parse_fraction(value, location=None):
    """ Read an exact rational from a document value.

    Integers and "p/q" strings are accepted. Floats never are, not even
    when they happen to be integral.

    Args:
        value (int or str): the document value
        location (str): where the value came from, for error messages

    Returns:
        (Fraction): the value
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValidationError('expected an exact fraction "p/q", got {!r}'.format(value), location)

    if isinstance(value, numbers.Integral):
        return Fraction(int(value))

    if isinstance(value, Fraction):
        return value

    if not isinstance(value, str):
        raise ValidationError('expected an exact fraction "p/q", got {!r}'.format(value), location)

    text = value.strip()
    if '.' in text or 'e' in text.lower():
        raise ValidationError('expected an exact fraction "p/q", got {!r}'.format(value), location)

    try:
        result = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValidationError('expected an exact fraction "p/q", got {!r}'.format(value), location)

    return result


def format_fraction(q):
    """
    Returns:
        (str): "p/q", or "p" when q is an integer.
    """
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)

    return '{}/{}'.format(q.numerator, q.denominator)


class GradedDims(object):
    """ A finitely supported map from rational degree to dimension.

    Think of it as a Poincare polynomial with rational exponents. Values are
    immutable; every operation returns a new GradedDims. Zero dimensions are
    never stored.
    """

    def __init__(self, entries=None):
        """
        Args:
            entries (dict): degree (Fraction, int or "p/q") -> dimension (int >= 0)
        """
        merged = {}
        if entries is not None:
            for degree, dim in dict(entries).items():
                degree = parse_fraction(degree)
                if isinstance(dim, bool) or not isinstance(dim, numbers.Integral):
                    raise ValidationError('dimension must be an integer, got {!r}'.format(dim))
                if dim < 0:
                    raise ValidationError('dimension must be non-negative, got {}'.format(dim))

                merged[degree] = merged.get(degree, 0) + int(dim)

        self._items = tuple(sorted((d, v) for d, v in merged.items() if v != 0))

        return

    def __len__(self):
        return len(self._items)

    def __iter__(self):
        return iter(d for d, _ in self._items)

    def __getitem__(self, degree):
        for d, v in self._items:
            if d == degree:
                return v

        return 0

    def __eq__(self, other):
        if not isinstance(other, GradedDims):
            return NotImplemented

        return self._items == other._items

    def __hash__(self):
        return hash(self._items)

    def __repr__(self):
        return 'GradedDims({})'.format(self.series_string())

    def __add__(self, other):
        merged = dict(self._items)
        for d, v in other.items():
            merged[d] = merged.get(d, 0) + v

        return GradedDims(merged)

    def items(self):
        """
        Returns:
            (list): (degree, dimension) pairs in ascending degree order
        """
        return list(self._items)

    def as_dict(self):
        return dict(self._items)

    def total(self):
        """
        Returns:
            (int): sum of all dimensions
        """
        return sum(v for _, v in self._items)

    def shift(self, s):
        return shift(self, s)

    def reflect(self, top):
        """ Mirror every degree d to top - d. """
        top = Fraction(top)
        return GradedDims({top - d: v for d, v in self._items})

    def convolve(self, other):
        """ Kunneth product over the rationals. """
        merged = {}
        for d1, v1 in self._items:
            for d2, v2 in other.items():
                merged[d1 + d2] = merged.get(d1 + d2, 0) + v1 * v2

        return GradedDims(merged)

    def series_string(self):
        return series_string(self)

    def to_document(self):
        """
        Returns:
            (dict): "p/q" degree -> dimension, degree ordered
        """
        return {format_fraction(d): v for d, v in self._items}

    @classmethod
    def from_document(cls, document, location=None):
        entries = {}
        for key, value in dict(document).items():
            entries[parse_fraction(key, location)] = value

        return cls(entries)


def shift(d, s):
    """ Move every degree of a series up by s.

    Args:
        d (GradedDims): series to shift
        s (Fraction): the shift, may be negative

    Returns:
        (GradedDims): the shifted series
    """
    s = Fraction(s)
    return GradedDims({degree + s: dim for degree, dim in d.items()})


def _power_string(degree):
    if degree == 1:
        return 't'

    if degree.denominator == 1:
        return 't^{}'.format(degree.numerator)

    return 't^{{{}}}'.format(format_fraction(degree))


def series_string(d):
    """ Render a series as "1 + t^{2/3} + 2*t^3" in ascending degree.

    Returns:
        (str): the rendering, "0" for the empty series
    """
    terms = []
    for degree, dim in d.items():
        if degree == 0:
            terms.append(str(dim))
        elif dim == 1:
            terms.append(_power_string(degree))
        else:
            terms.append('{}*{}'.format(dim, _power_string(degree)))

    if len(terms) == 0:
        return '0'

    return ' + '.join(terms)
