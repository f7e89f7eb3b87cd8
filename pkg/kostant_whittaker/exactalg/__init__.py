#!/usr/bin/env python
# encoding: utf-8
"""
Created on '03/10/2026'.

Exact arithmetic foundation: rationals, sparse multivariate polynomials,
rational functions, matrices over them and graded Hilbert series.
"""

from kostant_whittaker.exactalg.rational import to_rational
from kostant_whittaker.exactalg.poly import MultiPoly, poly_arith, base_variables, HBAR
from kostant_whittaker.exactalg.ratfunc import RatFunc, ratfunc_arith
from kostant_whittaker.exactalg.linalg import solve_linear, LinearSolution, matrix_rank, determinant, jordan_type
from kostant_whittaker.exactalg.hilbert import HilbertSeries, Grading, free_graded_hilbert
