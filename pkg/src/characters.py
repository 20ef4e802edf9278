"""
characters.py
-------------

Description:
    Irreducible complex characters of cyclic groups, odd dihedral groups and
    their direct products, and the census of l-index characters (degree-1
    characters taking one common value l on a whole connection set).

This program:
    Builds the cyclic table rho_j(a^k) = w^(jk) with w = exp(2 pi i / n).
    Builds the odd dihedral table for n = 2m + 1:
        chi_j      (j = 1..m)  degree 2   w^(jk) + w^(-jk) on a^k, 0 on a^k b
        chi_(m+1)              degree 1   1 on rotations, -1 on reflections
        chi_(m+2)              degree 1   1 everywhere
    Multiplies tables factor by factor: (chi x psi)(g, h) = chi(g) psi(h).
    Keeps an exact tag for every value that is a single root of unity, as the
    fraction f in exp(2 pi i f), so that equality of degree-1 values is
    decided exactly.

    A product character is stored as one character index per factor and
    evaluated on demand, so tables of large products stay small.
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from src.cayley import CYCLIC, ConnectionSet, GroupElement, GroupSpec
from src.errors import InvalidInput

VALUE_TOL = 1e-9


def unit_root(fraction):
    """exp(2 pi i f), exact for the quarter turns."""
    fraction = fraction % 1
    exact = {Fraction(0): 1 + 0j, Fraction(1, 4): 1j, Fraction(1, 2): -1 + 0j, Fraction(3, 4): -1j}
    if fraction in exact:
        return exact[fraction]
    return cmath.exp(2j * math.pi * fraction)


def factor_character_count(factor):
    return factor.n if factor.kind == CYCLIC else (factor.n - 1) // 2 + 2


def factor_character_indices(factor):
    """Cyclic characters are numbered 0..n-1, dihedral ones 1..m+2."""
    if factor.kind == CYCLIC:
        return list(range(factor.n))
    return list(range(1, factor_character_count(factor) + 1))


def factor_degree(factor, j):
    if factor.kind == CYCLIC:
        return 1
    return 2 if j <= (factor.n - 1) // 2 else 1


def factor_label(factor, j):
    return f"rho_{j}" if factor.kind == CYCLIC else f"chi_{j}"


def factor_root(factor, j, x):
    if factor.kind == CYCLIC:
        return Fraction(j * x % factor.n, factor.n)
    m = (factor.n - 1) // 2
    if j <= m:
        return None
    k, eps = x
    if j == m + 1 and eps:
        return Fraction(1, 2)
    return Fraction(0)


def factor_value(factor, j, x):
    root = factor_root(factor, j, x)
    if root is not None:
        return unit_root(root)
    k, eps = x
    if eps:
        return 0j
    return complex(2.0 * math.cos(2.0 * math.pi * (j * k % factor.n) / factor.n), 0.0)


@dataclass(frozen=True)
class Character:
    label: str
    parts: tuple
    degree: int


@dataclass(frozen=True)
class CharacterTable:
    group: GroupSpec
    characters: tuple

    def __len__(self):
        return len(self.characters)

    @property
    def degrees(self):
        return [c.degree for c in self.characters]

    def _coords(self, element):
        if isinstance(element, GroupElement):
            if element.group != self.group:
                raise InvalidInput(f"element {element} belongs to {element.group}, not {self.group}")
            return element.coords
        coords = tuple(element)
        if not self.group.contains(coords):
            raise InvalidInput(f"{element!r} is not an element of {self.group}")
        return coords

    def value(self, index, element):
        coords = self._coords(element)
        result = 1 + 0j
        for factor, j, x in zip(self.group.factors, self.characters[index].parts, coords):
            result *= factor_value(factor, j, x)
        return result

    def root(self, index, element):
        """Exact exponent f with value exp(2 pi i f), or None."""
        coords = self._coords(element)
        total = Fraction(0)
        for factor, j, x in zip(self.group.factors, self.characters[index].parts, coords):
            r = factor_root(factor, j, x)
            if r is None:
                return None
            total += r
        return total % 1

    def degree_one(self):
        return [i for i, c in enumerate(self.characters) if c.degree == 1]

    def value_matrix(self):
        """Characters by elements, in GroupSpec vertex order."""
        elements = self.group.elements()
        return np.array([[self.value(i, g) for g in elements] for i in range(len(self))], dtype=complex)

    def to_dict(self):
        elements = self.group.elements()
        rows = []
        for i, c in enumerate(self.characters):
            values = [self.value(i, g) for g in elements]
            roots = [self.root(i, g) for g in elements]
            rows.append({
                "label": c.label,
                "degree": c.degree,
                "values": [{"re": v.real, "im": v.imag} for v in values],
                "roots": [None if r is None else str(r) for r in roots],
            })
        return {
            "group": str(self.group),
            "order": self.group.order,
            "elements": [self.group.label(g) for g in elements],
            "characters": rows,
        }


def _single_factor_table(group):
    factor = group.factors[0]
    chars = tuple(
        Character(factor_label(factor, j), (j,), factor_degree(factor, j))
        for j in factor_character_indices(factor)
    )
    return CharacterTable(group, chars)


def cyclic_character_table(n):
    return _single_factor_table(GroupSpec.cyclic(n))


def dihedral_character_table(n):
    return _single_factor_table(GroupSpec.dihedral(n))


def product_character_table(tables):
    """All tuple-wise products of the factor tables' characters."""
    tables = list(tables)
    if not tables:
        raise InvalidInput("product_character_table needs at least one factor table")
    if len(tables) == 1:
        return tables[0]
    group = GroupSpec(tuple(f for t in tables for f in t.group.factors))
    chars = []
    for combo in product(*(t.characters for t in tables)):
        chars.append(Character(
            " x ".join(c.label for c in combo),
            tuple(j for c in combo for j in c.parts),
            math.prod(c.degree for c in combo),
        ))
    return CharacterTable(group, tuple(chars))


def character_table(group):
    """Table of any supported GroupSpec, built factor by factor."""
    return product_character_table([_single_factor_table(GroupSpec((f,))) for f in group.factors])


@dataclass(frozen=True)
class IndexEntry:
    value: complex
    root: Fraction
    count: int
    characters: tuple


@dataclass(frozen=True)
class IndexCensus:
    entries: tuple

    @property
    def total(self):
        return sum(e.count for e in self.entries)

    def count(self, ell, tol=VALUE_TOL):
        """N_G(ell). ell may be a Fraction (exact exponent) or a number."""
        for e in self.entries:
            if isinstance(ell, Fraction):
                if e.root is not None and e.root == ell % 1:
                    return e.count
            elif abs(e.value - complex(ell)) < tol:
                return e.count
        return 0

    def best(self):
        """The entry with the largest count; ties go to l = 1 first."""
        if not self.entries:
            return None
        return max(self.entries, key=lambda e: (e.count, e.root == 0))

    def to_dict(self):
        return {
            "entries": [
                {
                    "re": e.value.real,
                    "im": e.value.imag,
                    "root": None if e.root is None else str(e.root),
                    "count": e.count,
                    "characters": list(e.characters),
                }
                for e in self.entries
            ],
            "total": self.total,
        }


def l_index_census(table, S):
    """
    Counts, for every value l, the degree-1 characters equal to l on every
    element of S. Characters that are not constant on S are skipped.
    """
    if isinstance(S, ConnectionSet):
        if S.group != table.group:
            raise InvalidInput(f"connection set belongs to {S.group}, not {table.group}")
        elements = S.elements()
    else:
        elements = [table._coords(s) for s in S]
    elements = list(dict.fromkeys(elements))
    if not elements:
        raise InvalidInput("l-index census needs a nonempty set")
    for s in elements:
        table._coords(s)

    groups = []
    for i in table.degree_one():
        roots = [table.root(i, s) for s in elements]
        if all(r is not None for r in roots):
            if len(set(roots)) != 1:
                continue
            key_root = roots[0]
            value = unit_root(key_root)
        else:
            values = [table.value(i, s) for s in elements]
            if max(abs(v - values[0]) for v in values) >= VALUE_TOL:
                continue
            key_root, value = None, values[0]
        for entry in groups:
            same = (entry["root"] == key_root) if key_root is not None and entry["root"] is not None \
                else abs(entry["value"] - value) < VALUE_TOL
            if same:
                entry["characters"].append(table.characters[i].label)
                break
        else:
            groups.append({"root": key_root, "value": value, "characters": [table.characters[i].label]})

    groups.sort(key=lambda e: float(e["root"]) if e["root"] is not None else cmath.phase(e["value"]) % (2 * math.pi) / (2 * math.pi))
    return IndexCensus(tuple(
        IndexEntry(g["value"], g["root"], len(g["characters"]), tuple(g["characters"])) for g in groups
    ))
