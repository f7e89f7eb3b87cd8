#!/usr/bin/env python
# encoding: utf-8
"""
Created on '10/10/2026'.
"""

from kostant_whittaker.grgraph.model import (
    GraphModel, LocalizedElement, graph_model, graph_convolve, casimir_spectrum, weight_eigenvalue
)
from kostant_whittaker.grgraph.levi import (
    levi_coarsen, levi_decomposition, levi_partition, transitivity_check, key_to_str
)
from kostant_whittaker.grgraph.palpha import p_alpha, p_alpha_matches_idiot, denominator_degrees
