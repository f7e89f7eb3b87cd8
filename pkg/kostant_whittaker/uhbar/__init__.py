#!/usr/bin/env python
# encoding: utf-8
"""
Created on '06/10/2026'.
"""

from kostant_whittaker.uhbar.pbw import PBWElem, pbw_mul, casimir, commutator, PBW_VARIABLES
from kostant_whittaker.uhbar.modules import (
    VermaVec, RepVec, TensorVec, verma_act, rep_act, tensor_act, WhittakerData, WHITTAKER, MODULE_VARIABLES
)
