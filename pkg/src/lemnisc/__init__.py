"""Elliptic Gauss sums for the lemniscate: series, l-adic and analytic routes to A_lambda,
congruences for the vanishing primes, and the matching curves over Q(i).
"""
from __future__ import annotations

__version__ = "0.1.0"

from .gauss import GaussianInt, PrimaryPrime, primary_decompose, quartic_symbol
from .series import cl_factorial_series, sl_factorial_series
from .analytic import a_lambda_numeric, egs_numeric, lemniscate_constant
from .ladic import a_lambda_ladic, egs_ladic
from .congruence import a_lambda_congruence_signed, hurwitz_check, kummer_table
from .curves import CurvePoint, QiNumber

__all__ = [
    "GaussianInt", "PrimaryPrime", "primary_decompose", "quartic_symbol",
    "cl_factorial_series", "sl_factorial_series",
    "a_lambda_numeric", "egs_numeric", "lemniscate_constant",
    "a_lambda_ladic", "egs_ladic",
    "a_lambda_congruence_signed", "hurwitz_check", "kummer_table",
    "CurvePoint", "QiNumber",
]
