#!/usr/bin/env python
# encoding: utf-8
"""
Created on '05/10/2026'.
"""

from kostant_whittaker.rootdata.system import RootSystem, Weight, WeylElement, weyl_orbit, root_system, BUILTIN_CARTAN
from kostant_whittaker.rootdata.characters import (
    invariant_degrees, InvariantDegrees, weight_multiplicity, character, weyl_dimension, molien_series
)
