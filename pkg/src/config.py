"""
config.py
---------

Description:
    Runtime settings for the Cayley spectra toolkit. Values are read from the
    environment (or a local .env file) so that tolerances and the dense-oracle
    cap can be tuned without editing code.

This program:
    Loads variables from .env if one exists.
    Exposes the oracle cap, eigensolver and grouping tolerances, and the
    folder used for saved CSV reports.

    None of the variables are required; the defaults below are the ones the
    test suite is written against.
"""

import os
from dotenv import load_dotenv

load_dotenv()

# Largest group order the dense adjacency oracle will accept
MAX_ORDER = int(os.getenv("CAYLEY_MAX_ORDER", "4096"))

# Jacobi sweeps stop once the off-diagonal norm falls below this (relative)
EIGEN_TOL = float(os.getenv("CAYLEY_EIGEN_TOL", "1e-10"))
MAX_SWEEPS = int(os.getenv("CAYLEY_MAX_SWEEPS", "100"))

# Closed form vs oracle eigenvalue tolerance
VALUE_TOL = float(os.getenv("CAYLEY_VALUE_TOL", "1e-7"))

# Neighbouring eigenvalues closer than this are one eigenvalue
GROUP_TOL = float(os.getenv("CAYLEY_GROUP_TOL", "1e-6"))

# Ramanujan direct-summation imaginary residual limit
RAMANUJAN_TOL = 1e-8

# Integer inputs above this are refused (trial division only)
MAX_INT = 2**31 - 1

REPORTS_DIR = os.getenv("CAYLEY_REPORTS_DIR", "reports")
