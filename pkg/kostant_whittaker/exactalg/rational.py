#!/usr/bin/env python
# encoding: utf-8
"""
Created on '03/10/2026'.
"""

from fractions import Fraction

from sympy.polys.domains import QQ

from kostant_whittaker.lib.serialize import rational_from_str


def to_rational(value):
    """
    Coerce int / Fraction / "p/q" / QQ element into a QQ element
    The coefficient field is always QQ - gcd(p, q) = 1 and q > 0 is kept by the domain
    :param value:
    :return: QQ element
    """
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        return rational_from_str(value)
    return QQ.convert(value)
