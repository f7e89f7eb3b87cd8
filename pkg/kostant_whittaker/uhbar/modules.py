#!/usr/bin/env python
# encoding: utf-8
"""
Created on '06/10/2026'.

Modules over U_hbar(sl2): the universal Verma module M(-rho) with basis
m_{-1}, m_{-3}, ... over Q[hbar, x], the representations V_n with basis
v_{-n}, ..., v_n over Q[hbar] and the tensor product M(-rho) (x) V_n with
the diagonal action g (x) 1 + 1 (x) g.
"""

from collections import namedtuple

from sympy.polys.domains import QQ

from kostant_whittaker.exactalg import MultiPoly, RatFunc, base_variables, HBAR
from kostant_whittaker.uhbar.pbw import PBW_VARIABLES, GENERATORS
from kostant_whittaker.lib.errors import KostantError, WeightError

MODULE_VARIABLES = base_variables(1)

WhittakerData = namedtuple('WhittakerData', ['psi_f'])
# the character is 1 on f and vanishes on the rest of n_-
WHITTAKER = WhittakerData(psi_f=1)


def _x():
    return MultiPoly.gen(MODULE_VARIABLES, 'x')


def _hbar(variables=MODULE_VARIABLES):
    return MultiPoly.gen(variables, HBAR)


def verma_h(j):
    """
    h-eigenvalue x + j hbar of m_j
    """
    return _x() + _hbar() * j


def verma_e(j):
    """
    e m_j = ((-j-1)/2) hbar (x + ((j+1)/2) hbar) m_{j+2}
    Sign of the inner hbar term is the one compatible with [e, f] = hbar h
    """
    return _hbar() * QQ(-j - 1, 2) * (_x() + _hbar() * QQ(j + 1, 2))


def rep_e(n, i):
    """
    e v_i = ((n+i+2)/2) hbar v_{i+2}, zero at the top
    """
    return _hbar(PBW_VARIABLES) * QQ(n + i + 2, 2) if i + 2 <= n else MultiPoly(PBW_VARIABLES)


def rep_f(n, i):
    """
    f v_i = ((n-i+2)/2) hbar v_{i-2}, zero at the bottom
    """
    return _hbar(PBW_VARIABLES) * QQ(n - i + 2, 2) if i - 2 >= -n else MultiPoly(PBW_VARIABLES)


class ModuleVector(object):
    """
    Finite sum of basis vectors with coefficients (MultiPoly or RatFunc)
    Subclasses define the basis labels and how e, h, f act on one of them.
    """
    variables = MODULE_VARIABLES

    def __init__(self, coefficients=None):
        self.coefficients = {}
        for key, coef in (coefficients or {}).items():
            self._validate(key)
            if isinstance(coef, MultiPoly):
                coef = coef.coerce(self.variables)
            elif not isinstance(coef, RatFunc):
                coef = MultiPoly.constant(self.variables, coef)
            if coef:
                total = self.coefficients[key] + coef if key in self.coefficients else coef
                if total:
                    self.coefficients[key] = total
                else:
                    del self.coefficients[key]

    def _validate(self, key):
        raise NotImplementedError

    def _new(self, coefficients):
        return self.__class__(coefficients)

    def _generator(self, name):
        """
        Image under one generator as a dict key -> coefficient
        """
        raise NotImplementedError

    def generator(self, name):
        if name not in GENERATORS:
            raise KostantError('Unknown sl2 generator %s' % name)
        return self._new(self._generator(name))

    def __add__(self, other):
        coefficients = dict(self.coefficients)
        for key, coef in other.coefficients.items():
            coefficients[key] = coefficients[key] + coef if key in coefficients else coef
        return self._new(coefficients)

    def __neg__(self):
        return self._new({key: -coef for key, coef in self.coefficients.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        if isinstance(scalar, MultiPoly):
            scalar = scalar.coerce(self.variables)
        return self._new({key: coef * scalar for key, coef in self.coefficients.items()})

    def __eq__(self, other):
        if not isinstance(other, self.__class__):
            return NotImplemented
        keys = set(self.coefficients) | set(other.coefficients)
        return all(self.coefficient(key) == other.coefficient(key) for key in keys)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def coefficient(self, key):
        return self.coefficients.get(key, MultiPoly(self.variables))

    @property
    def is_zero(self):
        return not self.coefficients

    def act(self, element):
        """
        Action of a PBWElem: f^a h^b e^c acts as f^a(h^b(e^c(.)))
        """
        result = self._new({})
        powers = {}
        for (a, b, c), coef in sorted(element.terms.items()):
            if c not in powers:
                w = self
                for _ in range(c):
                    w = w.generator('e')
                powers[c] = w
            w = powers[c]
            for _ in range(b):
                w = w.generator('h')
            for _ in range(a):
                w = w.generator('f')
            result = result + w.scale(coef)
        return result

    def _terms_json(self, names):
        terms = []
        for key, coef in sorted(self.coefficients.items()):
            key = key if isinstance(key, tuple) else (key,)
            item = dict(zip(names, key))
            item['coef'] = coef.to_json()
            terms.append(item)
        return terms


class VermaVec(ModuleVector):
    """
    sum c_j m_j, j odd and <= -1
    """

    def _validate(self, j):
        if j > -1 or j % 2 == 0:
            raise WeightError('Verma basis index must be odd and <= -1, got %s' % j)

    @classmethod
    def basis(cls, j):
        return cls({j: 1})

    def _generator(self, name):
        image = {}
        for j, coef in self.coefficients.items():
            if name == 'h':
                image[j] = coef * verma_h(j)
            elif name == 'f':
                image[j - 2] = coef
            elif name == 'e':
                if j != -1:
                    image[j + 2] = coef * verma_e(j)
            else:
                raise KostantError('Unknown sl2 generator %s' % name)
        return image

    def to_json(self):
        return {'terms': self._terms_json(['j'])}


class RepVec(ModuleVector):
    """
    sum c_i v_i in V_n, coefficients in Q[hbar]
    """
    variables = PBW_VARIABLES

    def __init__(self, n, coefficients=None):
        if n < 0:
            raise WeightError('V_n needs n >= 0, got %s' % n)
        self.n = n
        super(RepVec, self).__init__(coefficients)

    def _validate(self, i):
        if abs(i) > self.n or (i - self.n) % 2:
            raise WeightError('v_%s is not a basis vector of V_%d' % (i, self.n))

    def _new(self, coefficients):
        return RepVec(self.n, coefficients)

    @classmethod
    def basis(cls, n, i):
        return cls(n, {i: 1})

    def __eq__(self, other):
        if isinstance(other, RepVec) and other.n != self.n:
            return False
        return super(RepVec, self).__eq__(other)

    def _generator(self, name):
        image = {}
        for i, coef in self.coefficients.items():
            if name == 'h':
                image[i] = coef * (_hbar(PBW_VARIABLES) * i)
            elif name == 'e':
                if i + 2 <= self.n:
                    image[i + 2] = coef * rep_e(self.n, i)
            elif name == 'f':
                if i - 2 >= -self.n:
                    image[i - 2] = coef * rep_f(self.n, i)
            else:
                raise KostantError('Unknown sl2 generator %s' % name)
        return image

    def to_json(self):
        return {'n': self.n, 'terms': self._terms_json(['i'])}


class TensorVec(ModuleVector):
    """
    sum c_{ji} m_j (x) v_i over Q[hbar, x]; coefficients may also be RatFunc
    """

    def __init__(self, n, coefficients=None):
        if n < 0:
            raise WeightError('V_n needs n >= 0, got %s' % n)
        self.n = n
        super(TensorVec, self).__init__(coefficients)

    def _validate(self, key):
        j, i = key
        if j > -1 or j % 2 == 0:
            raise WeightError('Verma basis index must be odd and <= -1, got %s' % j)
        if abs(i) > self.n or (i - self.n) % 2:
            raise WeightError('v_%s is not a basis vector of V_%d' % (i, self.n))

    def _new(self, coefficients):
        return TensorVec(self.n, coefficients)

    @classmethod
    def basis(cls, n, j, i):
        return cls(n, {(j, i): 1})

    def __eq__(self, other):
        if isinstance(other, TensorVec) and other.n != self.n:
            return False
        return super(TensorVec, self).__eq__(other)

    @staticmethod
    def weight(j, i):
        """
        h-eigenvalue of m_j (x) v_i is x + (i + j) hbar
        """
        return verma_h(j + i)

    def _generator(self, name):
        image = {}

        def put(key, value):
            image[key] = image[key] + value if key in image else value

        for (j, i), coef in self.coefficients.items():
            if name == 'h':
                put((j, i), coef * self.weight(j, i))
            elif name == 'e':
                if j != -1:
                    put((j + 2, i), coef * verma_e(j))
                if i + 2 <= self.n:
                    put((j, i + 2), coef * rep_e(self.n, i).coerce(MODULE_VARIABLES))
            elif name == 'f':
                put((j - 2, i), coef)
                if i - 2 >= -self.n:
                    put((j, i - 2), coef * rep_f(self.n, i).coerce(MODULE_VARIABLES))
            else:
                raise KostantError('Unknown sl2 generator %s' % name)
        return image

    def to_json(self):
        return {'n': self.n, 'terms': self._terms_json(['j', 'i'])}


def verma_act(u, m):
    """
    :param u: PBWElem
    :param m: VermaVec
    :return: VermaVec
    """
    return m.act(u)


def rep_act(u, w):
    """
    :param u: PBWElem
    :param w: RepVec
    :return: RepVec
    """
    return w.act(u)


def tensor_act(u, t):
    """
    Diagonal action: each generator g acts as g (x) 1 + 1 (x) g
    :param u: PBWElem
    :param t: TensorVec
    :return: TensorVec
    """
    return t.act(u)
