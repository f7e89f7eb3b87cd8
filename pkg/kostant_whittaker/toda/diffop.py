#!/usr/bin/env python
# encoding: utf-8
"""
Created on '12/10/2026'.

hbar-differential operators on the big cell with coordinates u, v, t (t
invertible). Monomials are stored in normal order

    u^a v^b t^k d_u^c d_v^d d_t^m        (k may be negative)

with coefficients in Q[hbar] and [d_w, w] = hbar.
"""

import itertools
from math import comb

from kostant_whittaker.exactalg import MultiPoly, HBAR
from kostant_whittaker.lib.errors import KostantError

DIFFOP_VARIABLES = (HBAR,)
COORDINATES = ('u', 'v', 't')


def falling(b, j):
    """
    b (b - 1) ... (b - j + 1), any integer b
    """
    value = 1
    for r in range(j):
        value *= b - r
    return value


def _move_derivative(c, b):
    """
    d^c w^b = sum_j C(c, j) hbar^j [b]_j w^(b-j) d^(c-j)
    :return: list of (power of w, power of d, hbar power, rational factor)
    """
    moves = []
    for j in range(c + 1):
        factor = comb(c, j) * falling(b, j)
        if factor:
            moves.append((b - j, c - j, j, factor))
    return moves


class DiffOp(object):
    """
    :param terms: dict (a, b, k, c, d, m) -> MultiPoly in hbar (or scalar)
    """
    __slots__ = ('terms',)

    def __init__(self, terms=None):
        self.terms = {}
        for key, coef in (terms or {}).items():
            key = tuple(int(e) for e in key)
            if len(key) != 6 or min(key[0], key[1], key[3], key[4], key[5]) < 0:
                raise KostantError('Invalid differential monomial %s' % (key,))
            if not isinstance(coef, MultiPoly):
                coef = MultiPoly.constant(DIFFOP_VARIABLES, coef)
            if coef:
                total = self.terms[key] + coef if key in self.terms else coef
                if total:
                    self.terms[key] = total
                else:
                    del self.terms[key]

    @classmethod
    def constant(cls, value):
        return cls({(0,) * 6: value})

    @classmethod
    def coordinate(cls, name, power=1):
        """
        u, v, t or a (possibly negative) power of t
        """
        if name not in COORDINATES:
            raise KostantError('Unknown coordinate %s' % name)
        if power < 0 and name != 't':
            raise KostantError('Only t is invertible')
        key = [0] * 6
        key[COORDINATES.index(name)] = power
        return cls({tuple(key): 1})

    @classmethod
    def derivative(cls, name):
        if name not in COORDINATES:
            raise KostantError('Unknown coordinate %s' % name)
        key = [0] * 6
        key[3 + COORDINATES.index(name)] = 1
        return cls({tuple(key): 1})

    @classmethod
    def hbar(cls):
        return cls.constant(MultiPoly.gen(DIFFOP_VARIABLES, HBAR))

    def __add__(self, other):
        other = _as_diffop(other)
        terms = dict(self.terms)
        for key, coef in other.terms.items():
            terms[key] = terms[key] + coef if key in terms else coef
        return DiffOp(terms)

    __radd__ = __add__

    def __neg__(self):
        return DiffOp({key: -coef for key, coef in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_diffop(other))

    def __rsub__(self, other):
        return _as_diffop(other) - self

    def __mul__(self, other):
        if not isinstance(other, DiffOp):
            return DiffOp({key: coef * other for key, coef in self.terms.items()})
        terms = {}
        hbar = MultiPoly.gen(DIFFOP_VARIABLES, HBAR)
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                # move each derivative of the left monomial past the matching coordinate power on the right
                per_coordinate = [_move_derivative(left[3 + w], right[w]) for w in range(3)]
                for choice in itertools.product(*per_coordinate):
                    key = tuple(left[w] + choice[w][0] for w in range(3)) + \
                        tuple(choice[w][1] + right[3 + w] for w in range(3))
                    power = sum(move[2] for move in choice)
                    factor = 1
                    for move in choice:
                        factor *= move[3]
                    value = a * b * (hbar ** power) * factor
                    terms[key] = terms[key] + value if key in terms else value
        return DiffOp(terms)

    def __rmul__(self, scalar):
        return DiffOp({key: scalar * coef for key, coef in self.terms.items()})

    def __pow__(self, k):
        result = DiffOp.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    @property
    def is_zero(self):
        return not self.terms

    def specialize(self, value):
        """
        Substitute a rational for hbar
        """
        return DiffOp({key: coef.subs(HBAR, value) for key, coef in self.terms.items()})

    def derivative_order(self):
        return max((key[3] + key[4] + key[5] for key in self.terms), default=-1)

    def involves_unipotent(self):
        """
        True when u, v, d_u or d_v occurs
        """
        return any(key[0] or key[1] or key[3] or key[4] for key in self.terms)

    def __str__(self):
        if not self.terms:
            return '0'
        names = ('u', 'v', 't', 'd_u', 'd_v', 'd_t')
        parts = []
        for key, coef in sorted(self.terms.items()):
            word = '*'.join(name if e == 1 else '%s^%d' % (name, e) for name, e in zip(names, key) if e)
            parts.append('(%s)%s' % (coef, '*' + word if word else ''))
        return ' + '.join(parts)

    def __repr__(self):
        return 'DiffOp(%s)' % self


def _as_diffop(value):
    return value if isinstance(value, DiffOp) else DiffOp.constant(value)


def commutator(a, b):
    return a * b - b * a


class TodaOp(DiffOp):
    """
    Operator in t, t^-1 and d_t only
    """
    __slots__ = ()

    def __init__(self, terms=None):
        super(TodaOp, self).__init__(terms)
        if self.involves_unipotent():
            raise KostantError('Toda operators only involve t and d_t')

    @classmethod
    def from_diffop(cls, op):
        return cls(op.terms)

    def coefficient(self, t_power, dt_power):
        return self.terms.get((0, 0, t_power, 0, 0, dt_power), MultiPoly(DIFFOP_VARIABLES))

    def to_json(self):
        return {'terms': [
            {'t': key[2], 'dt': key[5], 'coef': coef.to_json()}
            for key, coef in sorted(self.terms.items(), key=lambda item: (item[0][2], item[0][5]))
        ]}

    @classmethod
    def from_json(cls, data):
        return cls({(0, 0, term['t'], 0, 0, term['dt']): MultiPoly.from_json(term['coef']) for term in data['terms']})
