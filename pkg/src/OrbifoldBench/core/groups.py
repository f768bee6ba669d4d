# groups.py - OrbifoldBench - finite abelian groups and sector-index tuples

# Copyright (c) 2024 Coburn Wightman
# AGPL-3.0-or-later

import math
import numpy as np

from OrbifoldBench.core.errors import MalformedElementError, ValidationError


class Triple(tuple):
    """ A triple (g1, g2, g3) of group elements with g1*g2*g3 = identity. """

    def __new__(cls, g1, g2, g3):
        return super().__new__(cls, (tuple(g1), tuple(g2), tuple(g3)))

    @property
    def g1(self):
        return self[0]

    @property
    def g2(self):
        return self[1]

    @property
    def g3(self):
        return self[2]


class GroupSpec(object):
    """ A finite abelian group, the product of cyclic groups of the given orders.

    Elements are tuples of residues, one per cyclic factor, with residue i in
    [0, cyclic_orders[i]). The group law is componentwise addition.
    """

    def __init__(self, cyclic_orders):
        """
        Args:
            cyclic_orders (list of int): nonempty, every order >= 1
        """
        cyclic_orders = tuple(cyclic_orders)
        if len(cyclic_orders) == 0:
            raise ValidationError('a group needs at least one cyclic factor')

        for n in cyclic_orders:
            if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
                raise ValidationError('cyclic orders must be integers >= 1, got {!r}'.format(n))

        self._orders = tuple(int(n) for n in cyclic_orders)
        self._moduli = np.array(self._orders, dtype=object)

        return

    def __eq__(self, other):
        if not isinstance(other, GroupSpec):
            return NotImplemented

        return self._orders == other._orders

    def __hash__(self):
        return hash(self._orders)

    def __repr__(self):
        return 'GroupSpec({})'.format(list(self._orders))

    @property
    def cyclic_orders(self):
        """
        Returns:
            (tuple of int): orders of the cyclic factors
        """
        return self._orders

    @property
    def rank(self):
        return len(self._orders)

    @property
    def group_order(self):
        """
        Returns:
            (int): |G|, the product of the cyclic orders
        """
        return math.prod(self._orders)

    @property
    def identity(self):
        return tuple(0 for _ in self._orders)

    def is_identity(self, g):
        return all(r == 0 for r in g)

    def validate(self, g):
        """ Check g is an element of this group.

        Returns:
            (tuple): g as a tuple of python ints
        """
        g = tuple(g)
        if len(g) != len(self._orders):
            raise MalformedElementError('element {} has {} residues, group {} needs {}'.format(
                g, len(g), list(self._orders), len(self._orders)))

        for r, n in zip(g, self._orders):
            if isinstance(r, bool) or not isinstance(r, (int, np.integer)) or not 0 <= r < n:
                raise MalformedElementError('residue {!r} of element {} out of range for order {}'.format(r, g, n))

        return tuple(int(r) for r in g)

    def _reduce(self, residues):
        return tuple(int(r) for r in np.mod(residues, self._moduli))

    def multiply(self, a, b):
        """ The group law.

        Args:
            a (tuple): element
            b (tuple): element

        Returns:
            (tuple): a*b, componentwise sum modulo the cyclic orders
        """
        a = self.validate(a)
        b = self.validate(b)

        return self._reduce(np.array(a, dtype=object) + np.array(b, dtype=object))

    def inverse(self, g):
        """
        Returns:
            (tuple): g^-1, componentwise negation modulo the cyclic orders
        """
        g = self.validate(g)
        return self._reduce(-np.array(g, dtype=object))

    def power(self, g, k):
        g = self.validate(g)
        return self._reduce(np.array(g, dtype=object) * k)

    def order(self, g):
        """ The order m_g of an element.

        Returns:
            (int): least k >= 1 with g^k = identity
        """
        g = self.validate(g)

        m = 1
        for r, n in zip(g, self._orders):
            m = math.lcm(m, n // math.gcd(n, r))

        return m

    def elements(self):
        """ All elements in lexicographic residue order.

        Returns:
            (list of tuple): the |G| elements, identity first
        """
        return [tuple(int(r) for r in index) for index in np.ndindex(*self._orders)]

    def subgroup_order(self, gens):
        """ Order of the subgroup generated by gens, by closure enumeration.

        Args:
            gens (list of tuple): generators, possibly empty

        Returns:
            (int): the subgroup order
        """
        gens = [self.validate(g) for g in gens]

        closure = {self.identity}
        frontier = [self.identity]
        while len(frontier) > 0:
            grown = []
            for h in frontier:
                for g in gens:
                    x = self.multiply(h, g)
                    if x not in closure:
                        closure.add(x)
                        grown.append(x)

            frontier = grown

        return len(closure)

    def enumerate_triples(self):
        """ The set T_3^0 of triples multiplying to the identity.

        One triple per pair (g1, g2), g3 = (g1*g2)^-1, pairs in lexicographic
        order.

        Returns:
            (list of Triple): |G|^2 triples
        """
        elements = self.elements()

        triples = []
        for g1 in elements:
            for g2 in elements:
                g3 = self.inverse(self.multiply(g1, g2))
                triples.append(Triple(g1, g2, g3))

        return triples


def multiply(group, a, b):
    return group.multiply(a, b)


def order(group, g):
    return group.order(g)


def inverse(group, g):
    return group.inverse(g)


def subgroup_order(group, gens):
    return group.subgroup_order(gens)


def enumerate_triples(group):
    return group.enumerate_triples()
