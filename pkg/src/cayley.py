"""
cayley.py
---------

Description:
    Groups, connection sets and Cayley graph adjacency matrices. The groups
    covered are cyclic groups C_n = <a>, dihedral groups D_n = <a, b> with n
    odd, and direct products of those. A Cayley graph X_S(G) has the group
    elements as vertices and g1 ~ g2 exactly when g1 * g2^-1 lies in S.

This program:
    Represents group elements as tuples of per-factor coordinates: an integer
    k for a^k in a cyclic factor, a pair (k, eps) for a^k b^eps in a dihedral
    factor.
    Multiplies and inverts elements (dihedral relation b a = a^-1 b).
    Validates connection sets, which are Cartesian products of per-factor
    sets S_1 x ... x S_t, each inverse-closed and free of the identity.
    Builds the dense 0/1 adjacency matrix with vertices in lexicographic
    coordinate order (rotations before reflections in a dihedral factor).
    Parses the text grammar shared with the command line:
        groups       cyclic:6    dihedral:5    cyclic:3 x dihedral:5
        connections  unitary     gcdclass:2    explicit:1,5
                     explicit:r1,r4   explicit:s0,s2    (one per factor, ';')
"""

import math
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product

import numpy as np

from src import config
from src.errors import (
    EmptyFactorSet,
    GrammarError,
    IdentityInConnectionSet,
    InvalidInput,
    NotInverseClosed,
    TooLargeForDenseOracle,
    UnsupportedShape,
)
from src.numtheory import residue_class

CYCLIC = "cyclic"
DIHEDRAL = "dihedral"


@dataclass(frozen=True)
class Factor:
    """One direct factor: cyclic(n) of order n or dihedral(n) of order 2n."""

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in (CYCLIC, DIHEDRAL):
            raise InvalidInput(f"unknown group family '{self.kind}'")
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise InvalidInput(f"{self.kind} group needs a positive integer n, got {self.n!r}")
        if self.kind == DIHEDRAL and (self.n < 3 or self.n % 2 == 0):
            raise UnsupportedShape(f"dihedral groups are supported for odd n >= 3 only, got n = {self.n}")

    def __str__(self):
        return f"{self.kind}:{self.n}"

    @property
    def order(self):
        return self.n if self.kind == CYCLIC else 2 * self.n

    @property
    def identity(self):
        return 0 if self.kind == CYCLIC else (0, 0)

    def elements(self):
        if self.kind == CYCLIC:
            return list(range(self.n))
        return [(k, 0) for k in range(self.n)] + [(k, 1) for k in range(self.n)]

    def position(self, x):
        """Index of a reduced coordinate in elements()."""
        if self.kind == CYCLIC:
            return x
        return x[1] * self.n + x[0]

    def reduce(self, x):
        if self.kind == CYCLIC:
            if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
                raise InvalidInput(f"a cyclic coordinate must be an integer, got {x!r}")
            return int(x) % self.n
        try:
            k, eps = x
        except (TypeError, ValueError):
            raise InvalidInput(f"a dihedral coordinate must be a pair (k, eps), got {x!r}") from None
        if eps not in (0, 1):
            raise InvalidInput(f"reflection bit must be 0 or 1, got {eps!r}")
        return (int(k) % self.n, int(eps))

    def mul(self, x, y):
        if self.kind == CYCLIC:
            return (x + y) % self.n
        # a^k b^e * a^l b^f = a^(k + (-1)^e l) b^(e xor f)
        k, e = x
        l, f = y
        return ((k - l if e else k + l) % self.n, e ^ f)

    def inv(self, x):
        if self.kind == CYCLIC:
            return -x % self.n
        k, e = x
        return (k, 1) if e else (-k % self.n, 0)

    def label(self, x):
        if self.kind == CYCLIC:
            return _power("a", x)
        k, e = x
        if not e:
            return _power("a", k)
        return "b" if k == 0 else f"{_power('a', k)} b"

    def token(self, x):
        """Grammar token for a coordinate, as accepted by parse_connection."""
        if self.kind == CYCLIC:
            return str(x)
        k, e = x
        return f"{'s' if e else 'r'}{k}"


def _power(symbol, k):
    if k == 0:
        return "e"
    return symbol if k == 1 else f"{symbol}^{k}"


@dataclass(frozen=True)
class GroupSpec:
    """A direct product of cyclic and odd dihedral factors."""

    factors: tuple

    def __post_init__(self):
        factors = tuple(self.factors)
        if not factors:
            raise InvalidInput("a group needs at least one factor")
        for f in factors:
            if not isinstance(f, Factor):
                raise InvalidInput(f"group factors must be Factor instances, got {f!r}")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def cyclic(cls, n):
        return cls((Factor(CYCLIC, n),))

    @classmethod
    def dihedral(cls, n):
        return cls((Factor(DIHEDRAL, n),))

    def __str__(self):
        return " x ".join(str(f) for f in self.factors)

    @property
    def order(self):
        return math.prod(f.order for f in self.factors)

    @property
    def identity(self):
        return tuple(f.identity for f in self.factors)

    @cached_property
    def _elements(self):
        return list(product(*(f.elements() for f in self.factors)))

    @cached_property
    def _index(self):
        return {g: i for i, g in enumerate(self._elements)}

    def elements(self):
        """All coordinate tuples, factor-major lexicographic."""
        return list(self._elements)

    def index(self, coords):
        return self._index[coords]

    def reduce(self, coords):
        coords = tuple(coords)
        if len(coords) != len(self.factors):
            raise InvalidInput(f"element {coords!r} has {len(coords)} coordinates, group {self} has {len(self.factors)} factors")
        return tuple(f.reduce(x) for f, x in zip(self.factors, coords))

    def contains(self, coords):
        try:
            return self.reduce(coords) == tuple(coords)
        except InvalidInput:
            return False

    def mul(self, g, h):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, g, h))

    def inv(self, g):
        return tuple(f.inv(x) for f, x in zip(self.factors, g))

    def label(self, coords):
        labels = [f.label(x) for f, x in zip(self.factors, coords)]
        return labels[0] if len(labels) == 1 else "(" + ", ".join(labels) + ")"

    def element(self, *coords):
        return GroupElement(self, coords)


@dataclass(frozen=True)
class GroupElement:
    group: GroupSpec
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", self.group.reduce(self.coords))

    def __mul__(self, other):
        return multiply(self, other)

    def __str__(self):
        return self.group.label(self.coords)

    @property
    def inverse(self):
        return inverse(self)


def multiply(g, h):
    """Coordinate-wise product of two elements of the same group."""
    if g.group != h.group:
        raise InvalidInput(f"cannot multiply elements of {g.group} and {h.group}")
    return GroupElement(g.group, g.group.mul(g.coords, h.coords))


def inverse(g):
    return GroupElement(g.group, g.group.inv(g.coords))


@dataclass(frozen=True)
class ConnectionSet:
    """
    Per-factor generator sets; the realized set S is their Cartesian
    product. Instances returned by validate_connection_set are canonical:
    each factor set is deduplicated and sorted in vertex order.
    """

    group: GroupSpec
    factor_sets: tuple

    @property
    def size(self):
        return math.prod(len(s) for s in self.factor_sets)

    def elements(self):
        """The realized product set as coordinate tuples."""
        return list(product(*self.factor_sets))

    def __str__(self):
        parts = []
        for f, s in zip(self.group.factors, self.factor_sets):
            parts.append("explicit:" + ",".join(f.token(x) for x in s))
        return " ; ".join(parts)


def validate_connection_set(group, S):
    """
    Checks every factor set is nonempty, identity-free and inverse-closed,
    and returns the canonical ConnectionSet. S is either a ConnectionSet or
    a sequence with one iterable of coordinates per factor.
    """
    factor_sets = S.factor_sets if isinstance(S, ConnectionSet) else tuple(S)
    if isinstance(S, ConnectionSet) and S.group != group:
        raise InvalidInput(f"connection set belongs to {S.group}, not {group}")
    if len(factor_sets) != len(group.factors):
        raise InvalidInput(
            f"group {group} has {len(group.factors)} factors but {len(factor_sets)} connection sets were given"
        )
    canonical = []
    for k, (factor, raw) in enumerate(zip(group.factors, factor_sets), start=1):
        members = {factor.reduce(x) for x in raw}
        if not members:
            raise EmptyFactorSet(f"factor {k} ({factor}) has an empty connection set")
        if factor.identity in members:
            raise IdentityInConnectionSet(f"factor {k} ({factor}) connection set contains the identity")
        for x in sorted(members, key=factor.position):
            if factor.inv(x) not in members:
                raise NotInverseClosed(factor.label(x))
        canonical.append(tuple(sorted(members, key=factor.position)))
    return ConnectionSet(group, tuple(canonical))


def unitary_connection_set(n):
    """S = {a^i : gcd(i, n) = 1} on cyclic(n)."""
    if isinstance(n, int) and not isinstance(n, bool) and n <= 1:
        raise EmptyFactorSet(f"cyclic:{n} has no unitary connection set (B(1,{n}) maps to the identity)")
    group = GroupSpec.cyclic(n)
    return validate_connection_set(group, [residue_class(1, n)])


def gcd_class_connection_set(n, d):
    """S = {a^t : gcd(t, n) = d} on cyclic(n)."""
    group = GroupSpec.cyclic(n)
    return validate_connection_set(group, [residue_class(d, n)])


def unitary_rotation_set(n):
    """Rotations {a^j : gcd(j, n) = 1} inside dihedral(n)."""
    group = GroupSpec.dihedral(n)
    return validate_connection_set(group, [[(j, 0) for j in residue_class(1, n)]])


def build_adjacency(group, S, max_order=None):
    """
    Dense symmetric 0/1 adjacency matrix of X_S(G), entry (u, v) = 1 iff
    u * v^-1 lies in the realized product set.
    """
    max_order = config.MAX_ORDER if max_order is None else max_order
    if group.order > max_order:
        raise TooLargeForDenseOracle(
            f"group {group} has {group.order} elements, above the dense oracle cap of {max_order}"
        )
    S = validate_connection_set(group, S)
    gens = [group.inv(s) for s in S.elements()]
    A = np.zeros((group.order, group.order), dtype=np.int8)
    for i, u in enumerate(group.elements()):
        # u * v^-1 = s  <=>  v = s^-1 * u
        for s_inv in gens:
            A[i, group.index(group.mul(s_inv, u))] = 1
    return A


_FACTOR_RE = re.compile(r"^(cyclic|dihedral):(\d+)$")


def parse_group(text):
    """Parses 'cyclic:3 x dihedral:5' into a GroupSpec."""
    if not text or not text.strip():
        raise GrammarError(text or "", "empty group description")
    factors = []
    for token in (t.strip() for t in text.lower().split("x")):
        match = _FACTOR_RE.match(token)
        if not match:
            raise GrammarError(token, "expected cyclic:<n> or dihedral:<n>")
        factors.append(Factor(match.group(1), int(match.group(2))))
    return GroupSpec(tuple(factors))


def _parse_factor_set(factor, token):
    if token == "unitary" or token.startswith("gcdclass:"):
        if factor.kind != CYCLIC:
            raise GrammarError(token, f"'{token.split(':')[0]}' applies to cyclic factors only, not {factor}")
        if token == "unitary":
            if factor.n <= 1:
                raise EmptyFactorSet(f"{factor} has no unitary connection set")
            return residue_class(1, factor.n)
        d = token.split(":", 1)[1]
        if not d.isdigit() or int(d) < 1 or factor.n % int(d):
            raise GrammarError(token, f"gcdclass needs a divisor of {factor.n}")
        return residue_class(int(d), factor.n)
    if not token.startswith("explicit:"):
        raise GrammarError(token, "expected unitary, gcdclass:<d> or explicit:<list>")
    items = [t.strip() for t in token.split(":", 1)[1].split(",") if t.strip()]
    members = []
    for item in items:
        if factor.kind == CYCLIC:
            if not re.fullmatch(r"-?\d+", item):
                raise GrammarError(item, f"expected an exponent for {factor}")
            members.append(int(item))
        else:
            match = re.fullmatch(r"([rs])(-?\d+)", item)
            if not match:
                raise GrammarError(item, f"expected r<k> or s<k> for {factor}")
            members.append((int(match.group(2)), 1 if match.group(1) == "s" else 0))
    return members


def parse_connection(group, text):
    """
    Parses a connection-set string against a group, one ';'-separated part
    per factor, and validates the result.
    """
    if not text or not text.strip():
        raise GrammarError(text or "", "empty connection set description")
    parts = [p.strip().lower().replace(" ", "") for p in text.split(";")]
    if len(parts) != len(group.factors):
        raise GrammarError(text, f"group {group} needs {len(group.factors)} ';'-separated connection sets")
    sets = [_parse_factor_set(f, p) for f, p in zip(group.factors, parts)]
    return validate_connection_set(group, sets)
