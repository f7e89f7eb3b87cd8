#!/usr/bin/env python
# encoding: utf-8
"""
Created on '03/10/2026'.
"""

import io
import csv
import json

from sympy.polys.domains import QQ


def dumps(payload):
    """
    Canonical JSON - sorted keys, fixed indent, trailing newline
    Two runs over the same payload are byte identical
    :param payload: json-able object
    :return: str
    """
    return json.dumps(payload, sort_keys=True, indent=2) + '\n'


def rational_to_str(value):
    """
    Serialise a rational as "p/q"
    :param value: QQ element or int
    :return: str
    """
    value = QQ.convert(value)
    return '%d/%d' % (int(QQ.numer(value)), int(QQ.denom(value)))


def rational_from_str(value):
    """
    Parse "p/q" (or a bare integer) into a QQ element
    :param value: str
    :return: QQ element
    """
    if '/' in value:
        p, q = value.split('/', 1)
        return QQ(int(p), int(q))
    return QQ(int(value))


def series_to_csv(rows):
    """
    Render (degree, coefficient) rows as CSV with a header
    :param rows: iterable of tuples
    :return: str
    """
    output = io.StringIO()
    writer = csv.writer(output, lineterminator='\n')
    writer.writerow(['degree', 'coefficient'])
    for row in rows:
        writer.writerow(row)
    return output.getvalue()
