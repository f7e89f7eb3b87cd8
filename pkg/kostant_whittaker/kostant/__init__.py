#!/usr/bin/env python
# encoding: utf-8
"""
Created on '07/10/2026'.
"""

from kostant_whittaker.kostant.coinvariants import coinvariant_reduce, basis_labels
from kostant_whittaker.kostant.phi import (
    PhiModule, phi_module, quasiclassical_jordan, cyclic_generator_check, annihilator_polynomial, casimir_eigenvalue
)
from kostant_whittaker.kostant.split import (
    SplitBasis, highest_weight_split, idiot_expansion, idiot_report, raised_idiot_expansion, filtration_check,
    idiot_product
)
from kostant_whittaker.kostant.convolution import (
    clebsch_convolution, convolution_passes, exactness_check, ConvolutionReport
)
