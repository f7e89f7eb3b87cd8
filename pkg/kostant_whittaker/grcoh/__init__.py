#!/usr/bin/env python
# encoding: utf-8
"""
Created on '11/10/2026'.
"""

from kostant_whittaker.grcoh.cohomology import (
    CohModule, sl2_action, coh_module, filtration_generators, cohomology_generator, lattice_compare, LatticeReport
)
from kostant_whittaker.grcoh.normal_cone import NormalConeSeries, normal_cone_hilbert, normal_cone_degrees, series_json
