#!/usr/bin/env python
# encoding: utf-8
"""
Created on '17/10/2026'.
"""
try:
    from setuptools import setup
except:
    from distutils.core import setup


__version__ = '1.0'

setup(
    name='kostant-whittaker',
    version=__version__,
    description='Exact computations for the Kostant-Whittaker reduction of sl2 representations and '
                'the equivariant cohomology of affine Grassmannian orbits',
    license='Apache License 2.0',
    packages=[
        'kostant_whittaker',
        'kostant_whittaker.commands',
        'kostant_whittaker.exactalg',
        'kostant_whittaker.grcoh',
        'kostant_whittaker.grgraph',
        'kostant_whittaker.kostant',
        'kostant_whittaker.lib',
        'kostant_whittaker.rootdata',
        'kostant_whittaker.tasks',
        'kostant_whittaker.tests',
        'kostant_whittaker.toda',
        'kostant_whittaker.uhbar',
    ],
    package_data={
        'kostant_whittaker': ['default.cfg', 'test.cfg'],
    },
    install_requires=[
        'click',
        'luigi',
        'prompter',
        'sympy',
    ],
    entry_points={
        'console_scripts': [
            'kostant-whittaker=kostant_whittaker.commands.cli:main',
        ],
    },
)
