"""
oracle.py
---------

Description:
    Brute-force check of every closed-form spectrum. Builds the adjacency
    matrix explicitly, diagonalizes it with a cyclic Jacobi eigensolver, and
    compares the grouped eigenvalues with the closed form.

This program:
    Runs Jacobi rotation sweeps in row-major upper-triangle order until the
    off-diagonal Frobenius norm drops below tol times the matrix norm, so
    runs are reproducible on a fixed platform.
    Groups sorted eigenvalues into (value, multiplicity) pairs.
    Produces a VerificationReport: the worst eigenvalue error and every
    multiplicity that disagrees with the closed form.

    The solver works on its own copy of the matrix; nothing is shared
    between calls.
"""

import math
from dataclasses import dataclass

import numpy as np

from src import config
from src.cayley import build_adjacency, validate_connection_set
from src.errors import ConvergenceFailure, InvalidInput, NotSymmetric, TooLargeForDenseOracle
from src.spectrum import Spectrum


@dataclass(frozen=True)
class VerificationReport:
    matched: bool
    max_value_error: float
    multiplicity_mismatches: tuple
    tolerance: float
    order: int = 0
    oracle: Spectrum = None

    def to_dict(self):
        return {
            "matched": self.matched,
            "max_value_error": self.max_value_error,
            "multiplicity_mismatches": [
                {"value": v, "closed_multiplicity": c, "oracle_multiplicity": o}
                for v, c, o in self.multiplicity_mismatches
            ],
            "tolerance": self.tolerance,
            "order": self.order,
        }


def _off_norm(A):
    return float(np.linalg.norm(A - np.diag(np.diag(A))))


def symmetric_eigenvalues(matrix, tol=None, max_sweeps=None, max_order=None):
    """
    Eigenvalues of a real symmetric matrix, descending, by cyclic Jacobi.
    """
    tol = config.EIGEN_TOL if tol is None else tol
    max_sweeps = config.MAX_SWEEPS if max_sweeps is None else max_sweeps
    max_order = config.MAX_ORDER if max_order is None else max_order

    A = np.array(matrix, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {A.shape}")
    n = A.shape[0]
    if n > max_order:
        raise TooLargeForDenseOracle(f"matrix of size {n} is above the dense oracle cap of {max_order}")
    if n == 0:
        return np.array([])
    if np.max(np.abs(A - A.T)) > 1e-12:
        raise NotSymmetric("matrix is not symmetric within 1e-12")

    scale = float(np.linalg.norm(A))
    if scale == 0.0:
        return np.zeros(n)

    for _ in range(max_sweeps):
        if _off_norm(A) < tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                tau = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = 1.0 / (tau + math.copysign(math.hypot(1.0, tau), tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p = A[:, p].copy()
                col_q = A[:, q].copy()
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p = A[p, :].copy()
                row_q = A[q, :].copy()
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
                A[p, q] = A[q, p] = 0.0
    else:
        if _off_norm(A) >= tol * scale:
            raise ConvergenceFailure(f"Jacobi did not converge in {max_sweeps} sweeps (size {n})")

    return np.sort(np.diag(A))[::-1]


def group_multiplicities(values, gap_tol=None):
    """
    Merges consecutive eigenvalues closer than gap_tol; each group becomes
    one pair valued at the group mean.
    """
    gap_tol = config.GROUP_TOL if gap_tol is None else gap_tol
    values = [float(v) for v in values]
    for a, b in zip(values, values[1:]):
        if a < b:
            raise InvalidInput("eigenvalues must be sorted in descending order")
    return Spectrum.from_values(values, tol=gap_tol)


def oracle_spectrum(group, S, gap_tol=None, tol=None, max_order=None):
    """Spectrum of X_S(G) measured from its adjacency matrix."""
    S = validate_connection_set(group, S)
    A = build_adjacency(group, S, max_order=max_order)
    values = symmetric_eigenvalues(A, tol=tol, max_order=max_order)
    grouped = group_multiplicities(values, gap_tol)
    return Spectrum(grouped.pairs, S.size)


def compare_spectra(closed, oracle, tol=None, gap_tol=None):
    """Pair-by-pair comparison of a closed-form spectrum with a measured one."""
    tol = config.VALUE_TOL if tol is None else tol
    gap_tol = config.GROUP_TOL if gap_tol is None else gap_tol
    window = max(tol, gap_tol)

    errors = [0.0]
    for o in oracle.pairs:
        errors.append(min((abs(o.value - c.value) for c in closed.pairs), default=math.inf))
    for c in closed.pairs:
        errors.append(min((abs(o.value - c.value) for o in oracle.pairs), default=math.inf))

    mismatches = []
    for c in closed.pairs:
        found = oracle.multiplicity_of(c.value, window)
        if found != c.multiplicity:
            mismatches.append((c.value, c.multiplicity, found))
    for o in oracle.pairs:
        if not any(abs(o.value - c.value) <= window for c in closed.pairs):
            mismatches.append((o.value, 0, o.multiplicity))

    worst = max(errors)
    return VerificationReport(
        matched=worst <= tol and not mismatches,
        max_value_error=worst,
        multiplicity_mismatches=tuple(mismatches),
        tolerance=tol,
        order=oracle.order,
        oracle=oracle,
    )


def verify_spectrum(closed, group, S, tol=None, gap_tol=None, max_order=None):
    """Builds, eigensolves and compares; see compare_spectra."""
    oracle = oracle_spectrum(group, S, gap_tol=gap_tol, max_order=max_order)
    return compare_spectra(closed, oracle, tol=tol, gap_tol=gap_tol)
