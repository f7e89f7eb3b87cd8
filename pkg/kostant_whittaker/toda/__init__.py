#!/usr/bin/env python
# encoding: utf-8
"""
Created on '12/10/2026'.
"""

from kostant_whittaker.toda.diffop import DiffOp, TodaOp, commutator
from kostant_whittaker.toda.reduction import (
    invariant_fields, realize, kk_reduce, reduced_casimir, reduce_central_power, classical_symbol,
    classical_toda_hamiltonian
)
