"""
numtheory.py
------------

Description:
    Exact integer arithmetic behind every spectral formula in the toolkit:
    Euler's totient, the Moebius function, divisor lists, the residue classes
    B(d, n) = {t : 1 <= t <= n, gcd(t, n) = d}, and the Ramanujan sum C(r, n)
    in two independent forms.

This program:
    Factorizes by trial division (inputs are desk scale, at most 2^31 - 1).
    Evaluates C(r, n) exactly with Hoelder's closed form
        C(r, n) = phi(n) / phi(n / (n, r)) * mu(n / (n, r))
    and numerically by summing the r-th powers of the primitive n-th roots
    of unity, so the two can be checked against each other.

    All functions are pure; results of the factorization are cached.
"""

import math
from functools import lru_cache

import numpy as np

from src import config
from src.errors import InternalInconsistency, InvalidInput


def _check_positive(n, name="n"):
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise InvalidInput(f"{name} must be an integer, got {n!r}")
    if n < 1:
        raise InvalidInput(f"{name} must be a positive integer, got {n}")
    if n > config.MAX_INT:
        raise InvalidInput(f"{name} = {n} exceeds the supported limit {config.MAX_INT}")
    return int(n)


@lru_cache(maxsize=4096)
def factorize(n):
    """
    Returns the prime factorization of n as a tuple of (prime, exponent)
    pairs in ascending prime order. factorize(1) is the empty tuple.
    """
    n = _check_positive(n)
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return tuple(factors)


def euler_phi(n):
    """Count of 1 <= k <= n with gcd(k, n) = 1."""
    result = _check_positive(n)
    for p, _ in factorize(result):
        result -= result // p
    return result


def moebius(n):
    """
    mu(1) = 1, mu(n) = 0 when a prime square divides n, otherwise (-1)^k
    for the k distinct primes of n.
    """
    factors = factorize(n)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def prime_omega(n):
    """Number of distinct primes dividing n."""
    return len(factorize(n))


def is_squarefree(n):
    return all(e == 1 for _, e in factorize(n))


def divisors(n):
    """Ascending list of the positive divisors of n."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def totient_divisor_sum(n):
    """Sum of phi(d) over the divisors d of n; always equals n."""
    return sum(euler_phi(d) for d in divisors(n))


def residue_class(d, n):
    """
    B(d, n): the t with 1 <= t <= n and gcd(t, n) = d.
    Has phi(n / d) elements.
    """
    n = _check_positive(n)
    d = _check_positive(d, "d")
    if n % d:
        raise InvalidInput(f"{d} does not divide {n}")
    return {t for t in range(d, n + 1, d) if math.gcd(t, n) == d}


def gcd_class_divisors(n, exponents):
    """
    Returns the sorted divisors d for which the exponent set is exactly the
    union of the classes B(d, n), or None when some class is only partly
    present. Exponents are read mod n, so n itself stands for 0.
    """
    n = _check_positive(n)
    present = {e % n or n for e in exponents}
    found = sorted({math.gcd(t, n) for t in present})
    covered = set()
    for d in found:
        covered |= residue_class(d, n)
    return found if covered == present else None


def ramanujan_hoelder(r, n):
    """
    C(r, n) by Hoelder's closed form. r is reduced mod n first, and
    gcd(0, n) = n so that C(0, n) = phi(n).
    """
    n = _check_positive(n)
    if isinstance(r, bool) or not isinstance(r, (int, np.integer)) or r < 0:
        raise InvalidInput(f"r must be a nonnegative integer, got {r!r}")
    q = n // math.gcd(int(r) % n, n)
    return euler_phi(n) // euler_phi(q) * moebius(q)


def ramanujan_direct(r, n, tol=config.RAMANUJAN_TOL):
    """
    C(r, n) summed directly over the primitive n-th roots of unity in
    ascending k order. Returns the real part; an imaginary residual of tol
    or more means the summation itself is wrong.
    """
    n = _check_positive(n)
    if isinstance(r, bool) or not isinstance(r, (int, np.integer)) or r < 0:
        raise InvalidInput(f"r must be a nonnegative integer, got {r!r}")
    k = np.array(sorted(residue_class(1, n)), dtype=np.int64)
    # reduce k*r mod n before scaling to keep the angles small
    angles = 2.0 * np.pi * ((k * (int(r) % n)) % n) / n
    total = np.sum(np.exp(1j * angles))
    if abs(total.imag) >= tol:
        raise InternalInconsistency(
            f"direct Ramanujan sum C({r}, {n}) has imaginary part {total.imag:.3e}"
        )
    return float(total.real)


def ramanujan_table(n, direct=False):
    """
    Rows (r, C(r, n)) for r = 0..n-1, with the direct sum appended to each
    row when direct is set.
    """
    n = _check_positive(n)
    rows = []
    for r in range(n):
        row = {"r": r, "hoelder": ramanujan_hoelder(r, n)}
        if direct:
            row["direct"] = ramanujan_direct(r, n)
        rows.append(row)
    return rows
