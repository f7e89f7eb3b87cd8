#!/usr/bin/env python
# encoding: utf-8
"""
Created on '05/10/2026'.

Root systems given by a Cartan matrix in the row convention: alpha_i is
row i of the matrix in the fundamental weight basis, so a_ij = alpha_i(h_j)
and the simple reflection is s_i(lambda) = lambda - lambda_i * alpha_i.
"""

import json
import logging

from sympy import Matrix
from sympy.polys.domains import QQ

from kostant_whittaker.lib.errors import UnsupportedRootSystemError, WeightError

logger = logging.getLogger('luigi-interface')

BUILTIN_CARTAN = {
    'A1': ((2,),),
    'A2': ((2, -1), (-1, 2)),
    # alpha_1 long
    'B2': ((2, -2), (-1, 2)),
    'G2': ((2, -1), (-3, 2)),
}

# Stops the Weyl group enumeration for matrices of non-finite type
MAX_WEYL_ORDER = 5000


class Weight(object):
    """
    Integer coordinates in the fundamental weight basis
    """
    __slots__ = ('coords',)

    def __init__(self, coords):
        self.coords = tuple(int(c) for c in coords)

    @property
    def rank(self):
        return len(self.coords)

    def _check(self, other):
        if other.rank != self.rank:
            raise WeightError('Weights of rank %d and %d cannot be combined' % (self.rank, other.rank))

    def __add__(self, other):
        self._check(other)
        return Weight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        self._check(other)
        return Weight(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return Weight(-a for a in self.coords)

    def __mul__(self, k):
        return Weight(k * a for a in self.coords)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Weight) and self.coords == other.coords

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self.coords < other.coords

    def __hash__(self):
        return hash(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    @property
    def is_dominant(self):
        return all(c >= 0 for c in self.coords)

    @property
    def is_zero(self):
        return not any(self.coords)

    def __repr__(self):
        return 'Weight%s' % (self.coords,)


class WeylElement(object):
    """
    A word in the simple reflections with its action matrix on weight coordinates
    """
    __slots__ = ('word', 'matrix')

    def __init__(self, word, matrix):
        self.word = tuple(word)
        self.matrix = tuple(tuple(int(x) for x in row) for row in matrix)

    def act(self, weight):
        return Weight(sum(m * c for m, c in zip(row, weight.coords)) for row in self.matrix)

    @property
    def length(self):
        return len(self.word)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return 'WeylElement(%s)' % ('s' + ''.join(str(i + 1) for i in self.word) if self.word else 'e')


class RootSystem(object):
    """
    :param cartan: square integer matrix, rows are the simple roots
    :param tag: display name ("A2" or "cartan")
    """

    def __init__(self, cartan, tag='cartan'):
        self.cartan = tuple(tuple(int(a) for a in row) for row in cartan)
        self.tag = tag
        self.rank = len(self.cartan)
        self._validate()
        self._group = None
        self._positive_roots = None
        self.symmetrizer = self._symmetrizer()
        self.gram = self._gram()

    def _validate(self):
        for i, row in enumerate(self.cartan):
            if len(row) != self.rank:
                raise UnsupportedRootSystemError('Cartan matrix must be square')
            if row[i] != 2:
                raise UnsupportedRootSystemError('Cartan matrix diagonal must be 2')
            for j, a in enumerate(row):
                if i == j:
                    continue
                if a > 0:
                    raise UnsupportedRootSystemError('Off-diagonal Cartan entries must be <= 0')
                if (a == 0) != (self.cartan[j][i] == 0):
                    raise UnsupportedRootSystemError('Cartan entries a_ij and a_ji must vanish together')

    def _symmetrizer(self):
        """
        d with a_ij * d_j = a_ji * d_i, i.e. half the squared root lengths
        """
        d = [None] * self.rank
        for start in range(self.rank):
            if d[start] is not None:
                continue
            d[start] = QQ(1)
            queue = [start]
            while queue:
                i = queue.pop()
                for j in range(self.rank):
                    if j != i and self.cartan[i][j]:
                        value = QQ(self.cartan[j][i]) * d[i] / QQ(self.cartan[i][j])
                        if d[j] is None:
                            d[j] = value
                            queue.append(j)
                        elif d[j] != value:
                            raise UnsupportedRootSystemError('Cartan matrix is not symmetrizable')
        return tuple(d)

    def _gram(self):
        # (omega_i, omega_j) = (A^-1 D)_ij
        if not self.rank:
            return ()
        inverse = Matrix(self.cartan).inv()
        return tuple(
            tuple(QQ.from_sympy(inverse[i, j]) * self.symmetrizer[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.cartan == other.cartan

    def __hash__(self):
        return hash(self.cartan)

    def __repr__(self):
        return 'RootSystem(%s)' % self.tag

    def weight(self, coords):
        """
        :raises WeightError: wrong number of coordinates
        """
        weight = coords if isinstance(coords, Weight) else Weight(coords)
        if weight.rank != self.rank:
            raise WeightError('%s has rank %d, weight %s has %d coordinates' % (self.tag, self.rank, weight.coords, weight.rank))
        return weight

    @property
    def zero(self):
        return Weight([0] * self.rank)

    @property
    def simple_roots(self):
        return [Weight(row) for row in self.cartan]

    @property
    def fundamental_weights(self):
        return [Weight([1 if i == j else 0 for j in range(self.rank)]) for i in range(self.rank)]

    @property
    def rho(self):
        return Weight([1] * self.rank)

    def coroot_pairing(self, weight, i):
        """
        <weight, h_i> - the i-th fundamental weight coordinate
        """
        return self.weight(weight)[i]

    def reflect(self, weight, i):
        return weight - self.simple_roots[i] * weight[i]

    def reflection_matrix(self, i):
        # column k is the image of omega_k
        return tuple(
            tuple((1 if j == k else 0) - (self.cartan[i][j] if k == i else 0) for k in range(self.rank))
            for j in range(self.rank)
        )

    def inner(self, a, b):
        """
        Invariant form on weights, rational valued
        """
        return sum((self.gram[i][j] * a[i] * b[j] for i in range(self.rank) for j in range(self.rank)), QQ(0))

    def root_coordinates(self, weight):
        """
        Coordinates in the simple root basis: c with lambda = sum c_i alpha_i
        :return: tuple of QQ
        """
        if not self.rank:
            return ()
        c = Matrix(self.cartan).T.inv() * Matrix(weight.coords)
        return tuple(QQ.from_sympy(x) for x in c)

    def in_root_lattice(self, weight):
        return all(QQ.denom(c) == 1 for c in self.root_coordinates(weight))

    def dominant_conjugate(self, weight):
        weight = self.weight(weight)
        while True:
            i = next((k for k, c in enumerate(weight.coords) if c < 0), None)
            if i is None:
                return weight
            weight = self.reflect(weight, i)

    def weyl_group(self):
        """
        All elements, breadth first, so words are reduced
        :raises UnsupportedRootSystemError: the group is not finite
        """
        if self._group is None:
            identity = WeylElement((), [[1 if i == j else 0 for j in range(self.rank)] for i in range(self.rank)])
            seen = {identity.matrix: identity}
            frontier = [identity]
            reflections = [Matrix(self.reflection_matrix(i)) for i in range(self.rank)]
            while frontier:
                following = []
                for element in frontier:
                    for i, s in enumerate(reflections):
                        product = s * Matrix(element.matrix)
                        candidate = WeylElement((i,) + element.word, product.tolist())
                        if candidate.matrix not in seen:
                            seen[candidate.matrix] = candidate
                            following.append(candidate)
                if len(seen) > MAX_WEYL_ORDER:
                    raise UnsupportedRootSystemError('Weyl group of %s is not finite' % self.tag)
                frontier = following
            self._group = list(seen.values())
            logger.debug('Weyl group of %s has %d elements', self.tag, len(self._group))
        return self._group

    def positive_roots(self):
        """
        Positive roots from the orbits of the simple roots
        """
        if self._positive_roots is None:
            roots = set()
            for alpha in self.simple_roots:
                roots |= weyl_orbit(self, alpha)
            self._positive_roots = sorted(
                root for root in roots if all(c >= 0 for c in self.root_coordinates(root))
            )
        return self._positive_roots


def weyl_orbit(w_system, weight):
    """
    Full W-orbit by closing under the simple reflections
    :param w_system: RootSystem
    :param weight: Weight
    :return: frozenset of Weight
    """
    weight = w_system.weight(weight)
    orbit = {weight}
    frontier = [weight]
    while frontier:
        following = []
        for mu in frontier:
            for i in range(w_system.rank):
                image = w_system.reflect(mu, i)
                if image not in orbit:
                    orbit.add(image)
                    following.append(image)
        frontier = following
    return frozenset(orbit)


def root_system(tag):
    """
    Resolve "A1" | "A2" | "B2" | "G2" | {"cartan": [[...]]} (dict or its JSON text)
    :raises UnsupportedRootSystemError:
    """
    if isinstance(tag, RootSystem):
        return tag
    if isinstance(tag, str):
        stripped = tag.strip()
        if stripped in BUILTIN_CARTAN:
            return RootSystem(BUILTIN_CARTAN[stripped], stripped)
        if stripped.startswith('{'):
            try:
                tag = json.loads(stripped)
            except ValueError:
                raise UnsupportedRootSystemError('Cannot parse root system %s' % stripped)
        else:
            raise UnsupportedRootSystemError('Unknown root system type %s' % stripped)
    if isinstance(tag, dict) and 'cartan' in tag:
        try:
            return RootSystem(tag['cartan'], 'cartan')
        except (TypeError, ValueError):
            raise UnsupportedRootSystemError('Malformed Cartan matrix %s' % (tag['cartan'],))
    raise UnsupportedRootSystemError('Unknown root system %r' % (tag,))
