# models.py - OrbifoldBench - closed form rational cohomology of the spaces sectors are made of

# Copyright (c) 2024 Coburn Wightman
# AGPL-3.0-or-later

import collections
import itertools
import math
from fractions import Fraction

from OrbifoldBench.core.errors import (MalformedClassError, UnsupportedRestrictionError,
                                       ValidationError)
from OrbifoldBench.core.exact import GradedDims, format_fraction, parse_fraction


Generator = collections.namedtuple('Generator', ['label', 'degree'])


def _add_into(total, cls, scale=1):
    # accumulate a generator combination into total, dropping zeros
    for label, coefficient in cls.items():
        value = total.get(label, 0) + scale * coefficient
        if value == 0:
            total.pop(label, None)
        else:
            total[label] = value

    return total


class ModelSpace(object):
    """ A catalog space with closed form rational cohomology.

    The cohomology is described by a canonical basis of generators, a
    product on them, and the integral of the top class. Subclasses supply
    the basis, the product of two basis labels and the top integral.

    A class on a model is a dict mapping generator label to Fraction.
    """

    variant = 'model'

    def __eq__(self, other):
        if not isinstance(other, ModelSpace):
            return NotImplemented

        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return '{}({})'.format(type(self).__name__, self.name)

    def key(self):
        raise NotImplementedError

    @property
    def name(self):
        raise NotImplementedError

    @property
    def dim(self):
        """
        Returns:
            (int): real dimension
        """
        raise NotImplementedError

    @property
    def is_closed(self):
        return True

    @property
    def basis(self):
        """
        Returns:
            (list of Generator): canonical generators, the unit first
        """
        raise NotImplementedError

    @property
    def labels(self):
        return [g.label for g in self.basis]

    @property
    def unit_label(self):
        return self.basis[0].label

    @property
    def top_label(self):
        """
        Returns:
            (str): the generator spanning the top degree, None if not closed
        """
        if not self.is_closed:
            return None

        return self.basis[-1].label

    @property
    def top_integral(self):
        """
        Returns:
            (Fraction): integral of the top generator over the model
        """
        raise NotImplementedError

    @property
    def betti(self):
        """
        Returns:
            (GradedDims): Betti numbers by degree
        """
        return betti(self)

    def degree_of(self, label):
        for g in self.basis:
            if g.label == label:
                return g.degree

        raise MalformedClassError('{} has no generator {!r}'.format(self.name, label))

    def product(self, a, b):
        """ Product of two generators.

        Args:
            a (str): generator label
            b (str): generator label

        Returns:
            (dict): generator label -> Fraction
        """
        raise NotImplementedError

    def multiply(self, x, y):
        """ Bilinear product of two classes. """
        result = {}
        for a, ca in x.items():
            for b, cb in y.items():
                _add_into(result, self.product(a, b), ca * cb)

        return result

    def integrate(self, cls):
        """ Integral of a class over the model, ignoring any orbifold weight.

        Args:
            cls (dict): generator label -> Fraction

        Returns:
            (Fraction): top coefficient times top_integral, 0 if no top part
        """
        for label, coefficient in cls.items():
            degree = self.degree_of(label)
            if degree > self.dim:
                raise MalformedClassError('degree {} of {!r} exceeds dim {} of {}'.format(
                    degree, label, self.dim, self.name))

        if not self.is_closed:
            raise MalformedClassError('{} is not closed, it has no top class'.format(self.name))

        return Fraction(cls.get(self.top_label, 0)) * self.top_integral

    def ring_table(self):
        return ring_table(self)

    def to_document(self):
        raise NotImplementedError


class Point(ModelSpace):
    variant = 'point'

    def key(self):
        return ('point',)

    @property
    def name(self):
        return 'pt'

    @property
    def dim(self):
        return 0

    @property
    def basis(self):
        return [Generator('1', 0)]

    @property
    def top_integral(self):
        return Fraction(1)

    def product(self, a, b):
        return {'1': Fraction(1)}

    def to_document(self):
        return {'type': 'point'}


class _SphereLike(ModelSpace):
    # unit plus one odd top class that squares to zero
    top_symbol = 'v'

    def product(self, a, b):
        if a == '1':
            return {b: Fraction(1)}
        if b == '1':
            return {a: Fraction(1)}

        return {}

    @property
    def basis(self):
        return [Generator('1', 0), Generator(self.top_symbol, self.dim)]

    @property
    def top_integral(self):
        return Fraction(1)


class Circle(_SphereLike):
    variant = 'circle'
    top_symbol = 's'

    def key(self):
        return ('circle',)

    @property
    def name(self):
        return 'S^1'

    @property
    def dim(self):
        return 1

    def to_document(self):
        return {'type': 'circle'}


class OddSphere(_SphereLike):
    variant = 'odd_sphere'
    top_symbol = 'v'

    def __init__(self, dim):
        """
        Args:
            dim (int): odd real dimension >= 3; use odd_sphere(1) for the circle
        """
        if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1 or dim % 2 == 0:
            raise ValidationError('odd sphere dimension must be an odd integer >= 1, got {!r}'.format(dim))

        self._dim = dim
        return

    def key(self):
        return ('odd_sphere', self._dim)

    @property
    def name(self):
        return 'S^{}'.format(self._dim)

    @property
    def dim(self):
        return self._dim

    def to_document(self):
        return {'type': 'odd_sphere', 'dim': self._dim}


class WeightedProj(ModelSpace):
    """ Weighted projective space P(w_0, ..., w_k).

    Rationally this is CP^k: generators h^i in degree 2i. The hyperplane
    class is normalized so the top power integrates to 1/(w_0 * ... * w_k).
    """

    variant = 'weighted_proj'

    def __init__(self, weights):
        weights = list(weights)
        if len(weights) == 0:
            raise ValidationError('weighted projective space needs at least one weight')

        for w in weights:
            if isinstance(w, bool) or not isinstance(w, int) or w < 1:
                raise ValidationError('weights must be positive integers, got {!r}'.format(w))

        self._weights = tuple(sorted(weights))
        return

    def key(self):
        return ('weighted_proj', self._weights)

    @property
    def weights(self):
        return self._weights

    @property
    def complex_dim(self):
        return len(self._weights) - 1

    @property
    def name(self):
        return 'P({})'.format(','.join(str(w) for w in self._weights))

    @property
    def dim(self):
        return 2 * self.complex_dim

    @staticmethod
    def power_label(i):
        if i == 0:
            return '1'
        if i == 1:
            return 'h'

        return 'h^{}'.format(i)

    @property
    def basis(self):
        return [Generator(self.power_label(i), 2 * i) for i in range(self.complex_dim + 1)]

    def power_of(self, label):
        return self.degree_of(label) // 2

    @property
    def top_integral(self):
        return Fraction(1, math.prod(self._weights))

    def product(self, a, b):
        i = self.power_of(a) + self.power_of(b)
        if i > self.complex_dim:
            return {}

        return {self.power_label(i): Fraction(1)}

    def to_document(self):
        return {'type': 'weighted_proj', 'weights': list(self._weights)}


class RealLine(ModelSpace):
    """ The contractible line used for the X x R comparison. Not closed. """

    variant = 'line'

    def key(self):
        return ('line',)

    @property
    def name(self):
        return 'R'

    @property
    def dim(self):
        return 1

    @property
    def is_closed(self):
        return False

    @property
    def basis(self):
        return [Generator('1', 0)]

    @property
    def top_integral(self):
        return None

    def product(self, a, b):
        return {'1': Fraction(1)}

    def to_document(self):
        return {'type': 'line'}


class Product(ModelSpace):
    """ A finite product of catalog spaces, flattened.

    Generators are tensor products of factor generators, labelled by joining
    the factor labels with '*', units included ('h*1', '1*s'). Products
    follow the graded Kunneth sign rule.
    """

    variant = 'product'

    def __init__(self, factors):
        flat = []
        for f in factors:
            if isinstance(f, Product):
                flat.extend(f.factors)
            else:
                flat.append(f)

        if len(flat) < 2:
            raise ValidationError('a product needs at least two factors, use product() to collapse')

        self._factors = tuple(flat)
        self._basis = None
        return

    def key(self):
        return ('product',) + tuple(f.key() for f in self._factors)

    @property
    def factors(self):
        return self._factors

    @property
    def name(self):
        return ' x '.join(f.name for f in self._factors)

    @property
    def dim(self):
        return sum(f.dim for f in self._factors)

    @property
    def is_closed(self):
        return all(f.is_closed for f in self._factors)

    @property
    def basis(self):
        if self._basis is None:
            self._basis = []
            for parts in itertools.product(*[f.basis for f in self._factors]):
                label = '*'.join(p.label for p in parts)
                self._basis.append(Generator(label, sum(p.degree for p in parts)))

        return self._basis

    @property
    def top_label(self):
        if not self.is_closed:
            return None

        return '*'.join(f.top_label for f in self._factors)

    @property
    def top_integral(self):
        if not self.is_closed:
            return None

        return math.prod((f.top_integral for f in self._factors), start=Fraction(1))

    def split(self, label):
        parts = label.split('*')
        if len(parts) != len(self._factors):
            raise MalformedClassError('{} has no generator {!r}'.format(self.name, label))

        return parts

    def degree_of(self, label):
        return sum(f.degree_of(p) for f, p in zip(self._factors, self.split(label)))

    def product(self, a, b):
        xs = self.split(a)
        ys = self.split(b)

        # moving y_j left past x_i for every i > j
        sign = 0
        for i, (f, x) in enumerate(zip(self._factors, xs)):
            for j in range(i):
                sign += f.degree_of(x) * self._factors[j].degree_of(ys[j])

        partials = [[('', Fraction(1 if sign % 2 == 0 else -1))]]
        for f, x, y in zip(self._factors, xs, ys):
            factor = f.product(x, y)
            if len(factor) == 0:
                return {}
            partials.append(list(factor.items()))

        result = {}
        for combo in itertools.product(*partials):
            label = '*'.join(c[0] for c in combo[1:])
            coefficient = math.prod((c[1] for c in combo), start=Fraction(1))
            _add_into(result, {label: coefficient})

        return result

    def to_document(self):
        return {'type': 'product', 'factors': [f.to_document() for f in self._factors]}


class CustomModel(ModelSpace):
    """ A closed model outside the catalog, with user-supplied ring data.

    The first basis generator must be the degree 0 unit. Products not listed
    are zero; a listed product a*b also fixes b*a by graded commutativity.
    """

    variant = 'custom'

    def __init__(self, name, basis, products, top_label, top_integral):
        """
        Args:
            name (str): display name
            basis (list of (str, int)): generator labels and degrees
            products (dict): (label, label) -> {label: Fraction}
            top_label (str): generator spanning the top degree
            top_integral (Fraction): integral of the top generator
        """
        self._name = name
        self._basis = [Generator(str(label), int(degree)) for label, degree in basis]

        labels = [g.label for g in self._basis]
        if len(self._basis) == 0 or self._basis[0].degree != 0:
            raise ValidationError('custom model {} must list its degree 0 unit first'.format(name))
        if len(set(labels)) != len(labels):
            raise ValidationError('custom model {} repeats a generator label'.format(name))
        for label in labels:
            if '*' in label:
                raise ValidationError('generator label {!r} may not contain "*"'.format(label))
        if top_label not in labels:
            raise ValidationError('top label {!r} is not a generator of {}'.format(top_label, name))
        if [g.degree for g in self._basis].count(0) != 1:
            raise ValidationError('custom model {} needs exactly one degree 0 generator'.format(name))

        self._top_label = top_label
        self._top_integral = Fraction(top_integral)
        self._dim = self.degree_of(top_label)

        self._products = {}
        for (a, b), value in products.items():
            for label in [a, b] + list(value):
                if label not in labels:
                    raise ValidationError('product {}*{} of {} mentions unknown generator {!r}'.format(
                        a, b, name, label))

            value = {k: Fraction(v) for k, v in value.items() if v != 0}
            self._products[(a, b)] = value
            sign = (-1) ** (self.degree_of(a) * self.degree_of(b))
            self._products.setdefault((b, a), {k: sign * v for k, v in value.items()})

        return

    def key(self):
        products = tuple(sorted((a, b, tuple(sorted(v.items()))) for (a, b), v in self._products.items()))
        return ('custom', self._name, tuple(self._basis), products, self._top_label, self._top_integral)

    @property
    def name(self):
        return self._name

    @property
    def dim(self):
        return self._dim

    @property
    def basis(self):
        return list(self._basis)

    @property
    def top_label(self):
        return self._top_label

    @property
    def top_integral(self):
        return self._top_integral

    def product(self, a, b):
        unit = self.unit_label
        if a == unit:
            return {b: Fraction(1)}
        if b == unit:
            return {a: Fraction(1)}

        return dict(self._products.get((a, b), {}))

    def to_document(self):
        products = []
        for (a, b), value in sorted(self._products.items()):
            products.append({'left': a, 'right': b,
                             'result': [[k, format_fraction(v)] for k, v in sorted(value.items())]})

        return {'type': 'custom',
                'name': self._name,
                'basis': [{'label': g.label, 'degree': g.degree} for g in self._basis],
                'products': products,
                'top': self._top_label,
                'top_integral': format_fraction(self._top_integral)}


def odd_sphere(dim):
    """ Catalog entry for S^dim, the circle when dim is 1. """
    if dim == 1:
        return Circle()

    return OddSphere(dim)


def product(*factors):
    """ Catalog entry for a product, collapsing a single factor. """
    flat = []
    for f in factors:
        if isinstance(f, Product):
            flat.extend(f.factors)
        else:
            flat.append(f)

    if len(flat) == 1:
        return flat[0]

    return Product(flat)


def betti(m):
    """ Betti numbers of a model.

    Args:
        m (ModelSpace): the model

    Returns:
        (GradedDims): degree -> dimension
    """
    if isinstance(m, Product):
        result = GradedDims({0: 1})
        for f in m.factors:
            result = result.convolve(betti(f))

        return result

    counts = collections.Counter(g.degree for g in m.basis)
    return GradedDims(counts)


def kunneth_check(a, b):
    return betti(product(a, b)) == betti(a).convolve(betti(b))


def is_poincare_symmetric(m):
    """ True when the Betti numbers are symmetric about dim/2 with top Betti number 1. """
    b = betti(m)
    return b[m.dim] == 1 and b.reflect(m.dim) == b


class RingTable(object):
    """ The multiplication table of a model on its canonical generators.

    Attributes:
        generators (list of (int, str)): (degree, label), unit first
        products (dict): (label, label) -> {label: Fraction}
        top_degree (int): real dimension
        top_integral (Fraction): integral of the top generator
    """

    def __init__(self, generators, products, top_degree, top_integral):
        self.generators = generators
        self.products = products
        self.top_degree = top_degree
        self.top_integral = top_integral

        self._degrees = {label: degree for degree, label in generators}
        return

    def multiply(self, x, y):
        result = {}
        for a, ca in x.items():
            for b, cb in y.items():
                _add_into(result, self.products[(a, b)], ca * cb)

        return result

    def unit_labels(self):
        return [label for degree, label in self.generators if degree == 0]

    def is_graded_commutative(self):
        for (a, b), ab in self.products.items():
            sign = (-1) ** (self._degrees[a] * self._degrees[b])
            ba = {k: sign * v for k, v in self.products[(b, a)].items()}
            if ab != ba:
                return False

        return True

    def is_associative(self):
        labels = [label for _, label in self.generators]
        for a, b, c in itertools.product(labels, repeat=3):
            left = self.multiply(self.products[(a, b)], {c: Fraction(1)})
            right = self.multiply({a: Fraction(1)}, self.products[(b, c)])
            if left != right:
                return False

        return True

    def has_unit(self):
        units = self.unit_labels()
        if len(units) != 1:
            return False

        unit = units[0]
        for _, label in self.generators:
            if self.products[(unit, label)] != {label: 1} or self.products[(label, unit)] != {label: 1}:
                return False

        return True


def ring_table(m):
    """ Multiplication table of a model on its canonical generators.

    Args:
        m (ModelSpace): the model

    Returns:
        (RingTable): the table
    """
    generators = [(g.degree, g.label) for g in m.basis]

    products = {}
    for a, b in itertools.product(m.labels, repeat=2):
        products[(a, b)] = m.product(a, b)

    return RingTable(generators, products, m.dim, m.top_integral)


class RestrictionMap(object):
    """ A degree preserving linear map between model generators, the pullback
    along the inclusion of sub into ambient.
    """

    def __init__(self, ambient, sub, images):
        """
        Args:
            ambient (ModelSpace): source of the pullback
            sub (ModelSpace): target of the pullback
            images (dict): ambient label -> {sub label: Fraction}
        """
        self.ambient = ambient
        self.sub = sub
        self.images = images

        return

    def __eq__(self, other):
        if not isinstance(other, RestrictionMap):
            return NotImplemented

        return (self.ambient, self.sub, self.images) == (other.ambient, other.sub, other.images)

    def __repr__(self):
        return 'RestrictionMap({} -> {})'.format(self.ambient.name, self.sub.name)

    def is_identity(self):
        return self.ambient == self.sub

    def apply(self, cls):
        result = {}
        for label, coefficient in cls.items():
            if label not in self.images:
                raise MalformedClassError('{} has no generator {!r}'.format(self.ambient.name, label))
            _add_into(result, self.images[label], coefficient)

        return result


def _identity_images(m):
    return {label: {label: Fraction(1)} for label in m.labels}


def _truncating_images(ambient, sub, lookup):
    # generators surviving the inclusion map to lookup(label), the rest to zero
    images = {}
    for label in ambient.labels:
        image = lookup(label)
        images[label] = {} if image is None else {image: Fraction(1)}

    return images


def _factor_images(ambient, sub):
    if ambient == sub:
        return _identity_images(ambient)

    if isinstance(sub, Point) and ambient.is_closed:
        return _truncating_images(ambient, sub, lambda label: '1' if label == ambient.unit_label else None)

    if isinstance(ambient, WeightedProj) and isinstance(sub, WeightedProj):
        remaining = collections.Counter(ambient.weights)
        remaining.subtract(collections.Counter(sub.weights))
        if min(remaining.values()) < 0:
            raise UnsupportedRestrictionError('{} is not a weighted subspace of {}'.format(sub.name, ambient.name))

        def lookup(label):
            i = ambient.power_of(label)
            return sub.power_label(i) if i <= sub.complex_dim else None

        return _truncating_images(ambient, sub, lookup)

    if isinstance(ambient, _SphereLike) and isinstance(sub, _SphereLike) and sub.dim <= ambient.dim:
        return _truncating_images(ambient, sub, lambda label: '1' if label == '1' else None)

    raise UnsupportedRestrictionError('no catalog inclusion of {} into {}'.format(sub.name, ambient.name))


def restriction_map(ambient, sub):
    """ Pullback of classes along a catalog inclusion sub -> ambient.

    Supported inclusions: identity, weighted projective subspaces on a
    weight subset, lower odd spheres (circles included), points, and
    factorwise combinations of these between products with the same
    number of factors.

    Args:
        ambient (ModelSpace): the containing model
        sub (ModelSpace): the contained model

    Returns:
        (RestrictionMap): the pullback
    """
    if ambient == sub:
        return RestrictionMap(ambient, sub, _identity_images(ambient))

    if isinstance(ambient, Product) or isinstance(sub, Product):
        if not (isinstance(ambient, Product) and isinstance(sub, Product)) \
                or len(ambient.factors) != len(sub.factors):
            raise UnsupportedRestrictionError('no catalog inclusion of {} into {}'.format(sub.name, ambient.name))

        factor_maps = [_factor_images(a, s) for a, s in zip(ambient.factors, sub.factors)]

        images = {}
        for label in ambient.labels:
            parts = ambient.split(label)
            image = {'': Fraction(1)}
            for fmap, part in zip(factor_maps, parts):
                grown = {}
                for prefix, c in image.items():
                    for k, v in fmap[part].items():
                        key = k if prefix == '' else prefix + '*' + k
                        grown[key] = c * v
                image = grown

            images[label] = {k: v for k, v in image.items() if v != 0}

        return RestrictionMap(ambient, sub, images)

    return RestrictionMap(ambient, sub, _factor_images(ambient, sub))


def model_from_document(document, location='model'):
    """ Build a model from its document form.

    Args:
        document (dict): {'type': 'point' | 'circle' | 'odd_sphere' | 'weighted_proj'
                          | 'product' | 'line' | 'custom', ...}
        location (str): position in the input, for error messages

    Returns:
        (ModelSpace): the model
    """
    if not isinstance(document, dict) or 'type' not in document:
        raise ValidationError('a model needs a "type" field', location)

    kind = document['type']
    try:
        if kind == 'point':
            return Point()
        if kind == 'circle':
            return Circle()
        if kind == 'line':
            return RealLine()
        if kind == 'odd_sphere':
            return odd_sphere(document['dim'])
        if kind == 'weighted_proj':
            return WeightedProj(document['weights'])
        if kind == 'product':
            factors = [model_from_document(f, '{}.factors[{}]'.format(location, i))
                       for i, f in enumerate(document['factors'])]
            return product(*factors)
        if kind == 'custom':
            return _custom_from_document(document, location)
    except KeyError as err:
        raise ValidationError('model of type {!r} is missing field {}'.format(kind, err), location)
    except ValidationError as err:
        if err.location is None:
            raise ValidationError(err.message, location)
        raise

    raise ValidationError('unknown model type {!r}'.format(kind), location)


def _custom_from_document(document, location):
    basis = [(g['label'], g['degree']) for g in document['basis']]

    products = {}
    for i, entry in enumerate(document.get('products', [])):
        where = '{}.products[{}]'.format(location, i)
        value = {}
        for label, coefficient in entry.get('result', []):
            value[str(label)] = parse_fraction(coefficient, where)
        products[(str(entry['left']), str(entry['right']))] = value

    top_integral = parse_fraction(document['top_integral'], location + '.top_integral')
    return CustomModel(document.get('name', 'custom'), basis, products, str(document['top']), top_integral)
