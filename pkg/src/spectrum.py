"""
spectrum.py
-----------

Description:
    Closed-form adjacency spectra of Cayley graphs, computed from characters
    instead of from matrices.

This program:
    Gives the spectrum of the unitary Cayley graph on C_n exactly: for each
    divisor d of n the eigenvalue mu(d) phi(n) / phi(d) with multiplicity
    phi(d), zeros from all non-square-free d pooled together.
    Gives circulant spectra lambda_j = sum_{i in S} cos(2 pi i j / n), using
    integer Ramanujan sums when S is a union of gcd classes.
    Evaluates Babai power sums sum_{s1..st in S} chi(s1 ... st) for t = 1, 2
    and recovers the two eigenvalues of a degree-2 character block from them.
    Assembles the spectrum of any supported product group from its product
    characters, and independently as the tensor product of factor spectra.

    Eigenvalues are grouped into (value, multiplicity) pairs sorted in
    descending order. Values produced by an integer formula are tagged exact
    and are never merged with a different integer.
"""

import math
from collections import Counter
from dataclasses import dataclass
from itertools import product

import numpy as np

from src import config
from src.cayley import CYCLIC, GroupSpec, validate_connection_set
from src.characters import character_table, factor_character_indices, factor_degree, factor_value
from src.errors import (
    ExactFormUnavailable,
    InconsistentPowerSums,
    InternalInconsistency,
    InvalidInput,
    UnsupportedDegree,
    UnsupportedPowerIndex,
)
from src.numtheory import divisors, euler_phi, gcd_class_divisors, moebius, ramanujan_hoelder, residue_class


@dataclass(frozen=True)
class SpectrumPair:
    value: float
    multiplicity: int
    exact: bool = False


@dataclass(frozen=True)
class Spectrum:
    pairs: tuple
    degree: float = None

    def __post_init__(self):
        pairs = tuple(p if isinstance(p, SpectrumPair) else SpectrumPair(*p) for p in self.pairs)
        for p in pairs:
            if isinstance(p.multiplicity, bool) or not isinstance(p.multiplicity, int) or p.multiplicity < 1:
                raise InvalidInput(f"multiplicity must be a positive integer, got {p.multiplicity!r}")
        for a, b in zip(pairs, pairs[1:]):
            if not a.value > b.value:
                raise InvalidInput(f"spectrum values must be strictly descending ({a.value} before {b.value})")
        object.__setattr__(self, "pairs", pairs)

    @property
    def order(self):
        return sum(p.multiplicity for p in self.pairs)

    @property
    def max_multiplicity(self):
        return max((p.multiplicity for p in self.pairs), default=0)

    @property
    def all_exact(self):
        return all(p.exact for p in self.pairs)

    def values(self):
        """Every eigenvalue repeated by multiplicity, descending."""
        return np.repeat([float(p.value) for p in self.pairs], [p.multiplicity for p in self.pairs])

    def trace(self):
        return sum(p.value * p.multiplicity for p in self.pairs)

    def trace_of_square(self):
        return sum(p.value**2 * p.multiplicity for p in self.pairs)

    def multiplicity_of(self, value, tol=config.GROUP_TOL):
        return sum(p.multiplicity for p in self.pairs if abs(p.value - value) <= tol)

    def to_dict(self):
        return {
            "pairs": [
                {"value": int(p.value) if p.exact else float(p.value), "multiplicity": p.multiplicity, "exact": p.exact}
                for p in self.pairs
            ],
            "order": self.order,
            "degree": self.degree,
        }

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict) or not isinstance(data.get("pairs"), list):
            raise InvalidInput("malformed spectrum document: expected an object with a 'pairs' list")
        pairs = [_pair_from_dict(i, p) for i, p in enumerate(data["pairs"])]
        return cls.from_pairs(pairs, degree=data.get("degree"))

    @classmethod
    def from_values(cls, values, tol=config.GROUP_TOL, degree=None):
        """Groups raw eigenvalues; neighbours closer than tol merge into their mean."""
        values = sorted((float(v) for v in values), reverse=True)
        return cls.from_pairs([SpectrumPair(v, 1) for v in values], tol=tol, degree=degree)

    @classmethod
    def from_pairs(cls, pairs, tol=config.GROUP_TOL, degree=None):
        """
        Merges pairs whose values lie within tol of the previous one.
        Exact pairs merge only with an equal integer.
        """
        pairs = sorted(
            (p if isinstance(p, SpectrumPair) else SpectrumPair(*p) for p in pairs),
            key=lambda p: p.value,
            reverse=True,
        )
        groups = []
        for p in pairs:
            if groups:
                last = groups[-1][-1]
                if last.exact and p.exact:
                    same = last.value == p.value
                else:
                    same = abs(last.value - p.value) <= tol
                if same:
                    groups[-1].append(p)
                    continue
            groups.append([p])
        merged = []
        for g in groups:
            mult = sum(p.multiplicity for p in g)
            if all(p.exact for p in g):
                merged.append(SpectrumPair(int(g[0].value), mult, True))
            else:
                mean = sum(p.value * p.multiplicity for p in g) / mult
                merged.append(SpectrumPair(float(mean), mult, False))
        return cls(tuple(merged), degree)


def _is_real(x):
    return isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x)


def _pair_from_dict(i, p):
    if not isinstance(p, dict) or "value" not in p or "multiplicity" not in p:
        raise InvalidInput(f"malformed spectrum document: pair {i} needs 'value' and 'multiplicity'")
    value, mult, exact = p["value"], p["multiplicity"], p.get("exact", False)
    if not _is_real(value):
        raise InvalidInput(f"pair {i}: value must be a finite real number, got {value!r}")
    if not _is_real(mult) or mult != int(mult) or mult < 1:
        raise InvalidInput(f"pair {i}: multiplicity must be a positive integer, got {mult!r}")
    if not isinstance(exact, bool):
        raise InvalidInput(f"pair {i}: exact must be true or false, got {exact!r}")
    if exact and value != int(value):
        raise InvalidInput(f"pair {i}: exact value must be an integer, got {value!r}")
    return SpectrumPair(int(value) if exact else value, int(mult), exact)


def _exact_spectrum(values, degree):
    counts = Counter(values)
    return Spectrum(
        tuple(SpectrumPair(v, counts[v], True) for v in sorted(counts, reverse=True)),
        degree,
    )


def unitary_cyclic_spectrum(n):
    """
    Spectrum of X_S(C_n), S = {a^i : gcd(i, n) = 1}: divisor d contributes
    mu(d) phi(n) / phi(d) with multiplicity phi(d).
    """
    if isinstance(n, int) and not isinstance(n, bool) and n <= 1:
        raise InvalidInput(f"the unitary Cayley graph needs n >= 2, got {n}")
    phi_n = euler_phi(n)
    counts = Counter()
    for d in divisors(n):
        counts[phi_n // euler_phi(d) * moebius(d)] += euler_phi(d)
    return Spectrum(
        tuple(SpectrumPair(v, counts[v], True) for v in sorted(counts, reverse=True)),
        phi_n,
    )


def circulant_spectrum(n, exponents, tol=config.GROUP_TOL):
    """
    Spectrum of the circulant Cayley graph on C_n with exponent set S.
    When S is a union of classes B(d, n), lambda_j = sum_d C(j, n/d) exactly.
    """
    S = validate_connection_set(GroupSpec.cyclic(n), [exponents])
    exps = S.factor_sets[0]
    classes = gcd_class_divisors(n, exps)
    if classes is not None:
        values = [sum(ramanujan_hoelder(j, n // d) for d in classes) for j in range(n)]
        return _exact_spectrum(values, len(exps))
    j = np.arange(n)[:, None]
    i = np.array(exps)[None, :]
    values = np.cos(2.0 * np.pi * ((i * j) % n) / n).sum(axis=1)
    return Spectrum.from_values(values, tol=tol, degree=len(exps))


def _real(z, terms, what):
    if abs(z.imag) > 1e-9 * max(1.0, float(terms), abs(z.real)):
        raise InternalInconsistency(f"{what} has imaginary part {z.imag:.3e}; connection set not inverse-closed?")
    return float(z.real)


def _factor_sums(factor, j, members, full_square=True):
    """(p1, p2) for one factor character over one factor set."""
    p1 = sum(factor_value(factor, j, x) for x in members)
    if not full_square and factor_degree(factor, j) == 1:
        # linear characters are homomorphisms: sum chi(xy) = (sum chi(x))^2
        return p1, p1 * p1
    p2 = sum(factor_value(factor, j, factor.mul(x, y)) for x in members for y in members)
    return p1, p2


def babai_power_sum(group, S, character, t, table=None):
    """
    t = 1: sum_{s in S} chi(s);  t = 2: sum_{s1, s2 in S} chi(s1 s2).
    Evaluated factor by factor, which is exact for product sets.
    """
    if t not in (1, 2):
        raise UnsupportedPowerIndex(f"power sums are implemented for t = 1, 2 only, got t = {t}")
    S = validate_connection_set(group, S)
    table = table or character_table(group)
    if not 0 <= character < len(table):
        raise InvalidInput(f"character index {character} out of range for a table of {len(table)}")
    total = 1 + 0j
    for factor, j, members in zip(group.factors, table.characters[character].parts, S.factor_sets):
        p1, p2 = _factor_sums(factor, j, members)
        total *= p1 if t == 1 else p2
    return _real(total, S.size**t, f"power sum t={t} of {table.characters[character].label}")


def eigenpair_from_power_sums(p1, p2, tol=1e-9):
    """
    The two roots with l1 + l2 = p1 and l1^2 + l2^2 = p2, larger first.
    """
    disc = 2.0 * p2 - p1 * p1
    if disc < -tol * max(1.0, abs(p2)):
        raise InconsistentPowerSums(f"power sums p1={p1}, p2={p2} give discriminant {disc:.3e}")
    root = math.sqrt(max(0.0, disc))
    return (p1 + root) / 2.0, (p1 - root) / 2.0


def group_spectrum(group, S, tol=config.GROUP_TOL):
    """
    Spectrum from the product character table: a degree-1 character gives
    one eigenvalue, a degree-2 character gives an eigenvalue pair each of
    multiplicity 2.
    """
    S = validate_connection_set(group, S)
    table = character_table(group)
    sums = [
        {j: _factor_sums(f, j, members, full_square=False) for j in factor_character_indices(f)}
        for f, members in zip(group.factors, S.factor_sets)
    ]
    pairs = []
    for c in table.characters:
        wide = sum(1 for f, j in zip(group.factors, c.parts) if factor_degree(f, j) == 2)
        p1 = math.prod((sums[k][j][0] for k, j in enumerate(c.parts)), start=1 + 0j)
        if wide == 0:
            pairs.append(SpectrumPair(_real(p1, S.size, c.label), 1))
        elif wide == 1:
            p2 = math.prod((sums[k][j][1] for k, j in enumerate(c.parts)), start=1 + 0j)
            hi, lo = eigenpair_from_power_sums(_real(p1, S.size, c.label), _real(p2, S.size**2, c.label))
            pairs.extend([SpectrumPair(hi, 2), SpectrumPair(lo, 2)])
        else:
            raise UnsupportedDegree(f"character {c.label} has {wide} degree-2 factors; only one is supported")
    return Spectrum.from_pairs(pairs, tol=tol, degree=S.size)


def tensor_spectrum(factor_spectra, tol=config.GROUP_TOL):
    """All products of one eigenvalue per factor; multiplicities multiply."""
    factor_spectra = list(factor_spectra)
    if not factor_spectra:
        raise InvalidInput("tensor_spectrum needs at least one factor spectrum")
    if len(factor_spectra) == 1:
        return factor_spectra[0]
    pairs = []
    for combo in product(*(s.pairs for s in factor_spectra)):
        exact = all(p.exact for p in combo)
        value = math.prod(p.value for p in combo)
        pairs.append(SpectrumPair(int(value) if exact else float(value), math.prod(p.multiplicity for p in combo), exact))
    degrees = [s.degree for s in factor_spectra]
    degree = math.prod(degrees) if all(d is not None for d in degrees) else None
    return Spectrum.from_pairs(pairs, tol=tol, degree=degree)


def closed_form_spectrum(group, S, exact=False, tol=config.GROUP_TOL):
    """
    Picks the sharpest closed form for (group, S): the unitary divisor
    formula, the circulant formula, or the product character table. With
    exact set, only integer-valued forms are accepted.
    """
    S = validate_connection_set(group, S)
    if all(f.kind == CYCLIC for f in group.factors):
        spectra = []
        for f, members in zip(group.factors, S.factor_sets):
            if f.n > 1 and set(members) == residue_class(1, f.n):
                spectra.append(unitary_cyclic_spectrum(f.n))
            else:
                spectra.append(circulant_spectrum(f.n, members, tol=tol))
        if len(spectra) == 1:
            result = spectra[0]
        elif all(s.all_exact for s in spectra):
            result = tensor_spectrum(spectra, tol=tol)
        else:
            result = None if exact else group_spectrum(group, S, tol=tol)
        if result is not None and (result.all_exact or not exact):
            return result
    elif not exact:
        return group_spectrum(group, S, tol=tol)
    raise ExactFormUnavailable(f"no integer closed form for {group} with {S}")
