#!/usr/bin/env python
# encoding: utf-8
"""
Created on '06/10/2026'.

U_hbar(sl2) in PBW normal order f^a h^b e^c, coefficients in Q[hbar].
Relations: he - eh = 2 hbar e, hf - fh = -2 hbar f, ef - fe = hbar h.
"""

import functools
from math import comb

from sympy.polys.domains import QQ

from kostant_whittaker.exactalg import MultiPoly, HBAR
from kostant_whittaker.lib.errors import KostantError

PBW_VARIABLES = (HBAR,)
GENERATORS = ('e', 'h', 'f')


def _hbar_power(k, scalar=1):
    return MultiPoly.from_terms(PBW_VARIABLES, {(k,): scalar})


class PBWElem(object):
    """
    Sum of coef(hbar) * f^a h^b e^c
    :param terms: dict (a, b, c) -> MultiPoly in hbar (or scalar)
    """
    __slots__ = ('terms',)

    def __init__(self, terms=None):
        self.terms = {}
        for key, coef in (terms or {}).items():
            if not isinstance(coef, MultiPoly):
                coef = MultiPoly.constant(PBW_VARIABLES, coef)
            coef = coef.coerce(PBW_VARIABLES)
            if any(k < 0 for k in key) or len(key) != 3:
                raise KostantError('Invalid PBW exponent %s' % (key,))
            if coef:
                key = tuple(key)
                total = self.terms.get(key, MultiPoly(PBW_VARIABLES)) + coef
                if total:
                    self.terms[key] = total
                else:
                    self.terms.pop(key, None)

    @classmethod
    def monomial(cls, a=0, b=0, c=0, coef=1):
        return cls({(a, b, c): coef})

    @classmethod
    def one(cls):
        return cls.monomial()

    @classmethod
    def generator(cls, name):
        """
        :param name: 'e', 'h' or 'f'
        """
        if name not in GENERATORS:
            raise KostantError('Unknown sl2 generator %s' % name)
        return cls.monomial(a=int(name == 'f'), b=int(name == 'h'), c=int(name == 'e'))

    def __add__(self, other):
        terms = dict(self.terms)
        for key, coef in other.terms.items():
            terms[key] = terms[key] + coef if key in terms else coef
        return PBWElem(terms)

    def __neg__(self):
        return PBWElem({key: -coef for key, coef in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PBWElem):
            return pbw_mul(self, other)
        return PBWElem({key: coef * other for key, coef in self.terms.items()})

    def __rmul__(self, scalar):
        return PBWElem({key: scalar * coef for key, coef in self.terms.items()})

    def __pow__(self, k):
        result = PBWElem.one()
        for _ in range(k):
            result = pbw_mul(result, self)
        return result

    def __eq__(self, other):
        return isinstance(other, PBWElem) and self.terms == other.terms

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    @property
    def is_zero(self):
        return not self.terms

    def degree(self):
        """
        Largest a + b + c, -1 for zero
        """
        return max((sum(key) for key in self.terms), default=-1)

    def coefficient(self, a, b, c):
        return self.terms.get((a, b, c), MultiPoly(PBW_VARIABLES))

    def specialize(self, value):
        """
        Substitute a rational for hbar
        """
        return PBWElem({key: coef.subs(HBAR, value) for key, coef in self.terms.items()})

    def to_json(self):
        return {'terms': [
            {'f': a, 'h': b, 'e': c, 'coef': coef.to_json()}
            for (a, b, c), coef in sorted(self.terms.items())
        ]}

    def __str__(self):
        if not self.terms:
            return '0'
        parts = []
        for (a, b, c), coef in sorted(self.terms.items()):
            word = ''.join('%s^%d' % (g, k) if k > 1 else g for g, k in (('f', a), ('h', b), ('e', c)) if k)
            parts.append('(%s)%s' % (coef, '*' + word if word else ''))
        return ' + '.join(parts)

    def __repr__(self):
        return 'PBWElem(%s)' % self


@functools.lru_cache(maxsize=None)
def _left_generator(name, a, b, c):
    """
    generator * f^a h^b e^c in normal order
    :return: tuple of ((a, b, c), coef) pairs
    """
    if name == 'f':
        return (((a + 1, b, c), _hbar_power(0)),)
    if name == 'h':
        # h f^a = f^a (h - 2a hbar)
        result = [((a, b + 1, c), _hbar_power(0))]
        if a:
            result.append(((a, b, c), _hbar_power(1, -2 * a)))
        return tuple(result)
    # e f^a = f^a e + a hbar f^(a-1) (h - (a-1) hbar) and e h^b = (h - 2 hbar)^b e
    result = []
    for j in range(b + 1):
        result.append(((a, j, c + 1), _hbar_power(b - j, comb(b, j) * (-2) ** (b - j))))
    if a:
        result.append(((a - 1, b + 1, c), _hbar_power(1, a)))
        result.append(((a - 1, b, c), _hbar_power(2, -a * (a - 1))))
    return tuple(result)


def left_generator(name, element):
    """
    Multiply a PBWElem on the left by one generator
    """
    terms = {}
    for key, coef in element.terms.items():
        for target, factor in _left_generator(name, *key):
            product = factor * coef
            terms[target] = terms[target] + product if target in terms else product
    return PBWElem(terms)


def pbw_mul(u, v):
    """
    Normal-ordered product u * v
    Each monomial f^a h^b e^c of u acts on v through its generators, rightmost first
    :param u: PBWElem
    :param v: PBWElem
    :return: PBWElem
    """
    result = PBWElem()
    for (a, b, c), coef in u.terms.items():
        w = v
        for name, k in (('e', c), ('h', b), ('f', a)):
            for _ in range(k):
                w = left_generator(name, w)
        result = result + w * coef
    return result


def commutator(u, v):
    return pbw_mul(u, v) - pbw_mul(v, u)


def casimir():
    """
    C = ef + fe + h^2 / 2 = 2fe + hbar h + h^2 / 2
    """
    return PBWElem({
        (1, 0, 1): 2,
        (0, 1, 0): _hbar_power(1),
        (0, 2, 0): QQ(1, 2),
    })
