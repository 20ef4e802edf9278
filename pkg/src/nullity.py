"""
nullity.py
----------

Description:
    Lower bounds on the maximum nullity M(G) of a Cayley graph, and the
    matching upper bounds on its minimum rank mr(G) = |G| - M(G), taken from
    eigenvalue multiplicities: any eigenvalue of multiplicity k gives
    M(G) >= k, because A - lambda I lies in the matrix family of the graph.

This program:
    Reads the bound off any spectrum (largest multiplicity).
    States the unitary cyclic bound from the divisor structure of n: phi(n)
    when n is square-free, otherwise the pooled zero multiplicity
    sum of phi(d) over the non-square-free divisors d.
    States the product-group claim (unitary cyclic factor times factors with
    l-index characters), scaled by prod N_(G_k)(l_k) |S_k|.
    Audits any claim against the oracle's measured maximum multiplicity and
    records a consistency verdict instead of asserting the claim.
"""

import math
from dataclasses import dataclass, replace

from src import config
from src.cayley import CYCLIC, GroupSpec, unitary_connection_set, unitary_rotation_set, validate_connection_set
from src.characters import character_table, dihedral_character_table, l_index_census
from src.errors import InvalidInput
from src.numtheory import divisors, euler_phi, is_squarefree, moebius, residue_class
from src.oracle import compare_spectra, oracle_spectrum
from src.spectrum import closed_form_spectrum, group_spectrum, tensor_spectrum, unitary_cyclic_spectrum

SPECTRUM = "spectrum"
UNITARY_CYCLIC = "unitary-cyclic"
PRODUCT_CLAIM = "product-claim"


@dataclass(frozen=True)
class FactorClaim:
    """
    One non-cyclic factor G_k: N_(G_k)(l_k), |S_k| and |G_k|. Without the
    order the product report has no order and no mr_upper.
    """

    count: int
    set_size: int
    order: int = None


@dataclass(frozen=True)
class DivisorRow:
    divisor: int
    eigenvalue: int
    multiplicity: int
    pooled: bool
    bound: int


@dataclass(frozen=True)
class BoundReport:
    order: int
    claimed: int
    kind: str = SPECTRUM
    oracle_max_multiplicity: int = None
    consistent: bool = None
    per_divisor: tuple = ()

    @property
    def effective_bound(self):
        if self.oracle_max_multiplicity is None:
            return self.claimed if self.order is None else min(self.claimed, self.order)
        return self.claimed if self.consistent else self.oracle_max_multiplicity

    @property
    def mr_upper(self):
        if self.order is None:
            return None
        return self.order - self.effective_bound

    def to_dict(self, per_divisor=False):
        data = {
            "order": self.order,
            "claimed": self.claimed,
            "oracle_max_multiplicity": self.oracle_max_multiplicity,
            "consistent": self.consistent,
            "effective_bound": self.effective_bound,
            "mr_upper": self.mr_upper,
            "kind": self.kind,
        }
        if per_divisor:
            data["per_divisor"] = [
                {
                    "divisor": r.divisor,
                    "eigenvalue": r.eigenvalue,
                    "multiplicity": r.multiplicity,
                    "pooled": r.pooled,
                    "bound": r.bound,
                }
                for r in self.per_divisor
            ]
        return data


def max_multiplicity_bound(spec):
    """M(G) >= the largest eigenvalue multiplicity."""
    if not spec.pairs:
        raise InvalidInput("cannot bound the nullity of an empty spectrum")
    return spec.max_multiplicity


def _divisor_rows(n, multiplier=1):
    phi_n = euler_phi(n)
    pool = sum(euler_phi(d) for d in divisors(n) if moebius(d) == 0)
    rows = []
    for d in divisors(n):
        pooled = moebius(d) == 0
        rows.append(DivisorRow(
            divisor=d,
            eigenvalue=phi_n // euler_phi(d) * moebius(d),
            multiplicity=euler_phi(d),
            pooled=pooled,
            bound=multiplier * (pool if pooled else euler_phi(d)),
        ))
    return tuple(rows)


def unitary_cyclic_bound(n):
    """
    Bound for the unitary Cayley graph on C_n: max phi(d) over d | n, or,
    when n has a square factor, the larger of that and the pooled zero
    multiplicity.
    """
    if isinstance(n, int) and not isinstance(n, bool) and n <= 1:
        raise InvalidInput(f"the unitary Cayley graph needs n >= 2, got {n}")
    single = max(euler_phi(d) for d in divisors(n))
    if is_squarefree(n):
        claimed = single
    else:
        claimed = max(sum(euler_phi(d) for d in divisors(n) if moebius(d) == 0), single)
    return BoundReport(order=n, claimed=claimed, kind=UNITARY_CYCLIC, per_divisor=_divisor_rows(n))


def paper_main_bound(n, factor_data):
    """
    Claimed bound for C_n x G_2 x ... x G_t with the unitary set on C_n:
    the unitary cyclic bound times prod N_(G_k)(l_k) |S_k|. Reported as a
    claim; use check_bound_against_oracle to audit it.
    """
    claims = [c if isinstance(c, FactorClaim) else FactorClaim(*c) for c in factor_data]
    base = unitary_cyclic_bound(n)
    if not claims:
        return base
    for c in claims:
        if min(c.count, c.set_size) < 1 or (c.order is not None and c.order < 1):
            raise InvalidInput(f"factor claim needs positive count, set size and order, got {c}")
    multiplier = math.prod(c.count * c.set_size for c in claims)
    orders = [c.order for c in claims]
    return BoundReport(
        order=n * math.prod(orders) if None not in orders else None,
        claimed=multiplier * base.claimed,
        kind=PRODUCT_CLAIM,
        per_divisor=_divisor_rows(n, multiplier),
    )


def check_bound_against_oracle(group, S, claimed, base=None, oracle=None, gap_tol=None, max_order=None):
    """
    Fills in the oracle's maximum multiplicity and whether claimed <= it.
    base keeps the kind and per-divisor rows of an existing report.
    """
    S = validate_connection_set(group, S)
    if oracle is None:
        oracle = oracle_spectrum(group, S, gap_tol=gap_tol, max_order=max_order)
    measured = max_multiplicity_bound(oracle)
    if base is None:
        base = BoundReport(order=group.order, claimed=claimed)
    return replace(
        base, order=group.order, claimed=claimed, oracle_max_multiplicity=measured, consistent=claimed <= measured
    )


def spectrum_bound(group, S):
    """Largest multiplicity of the closed-form spectrum."""
    S = validate_connection_set(group, S)
    return BoundReport(order=group.order, claimed=max_multiplicity_bound(closed_form_spectrum(group, S)))


def _is_unitary(factor, members):
    return factor.kind == CYCLIC and factor.n > 1 and set(members) == residue_class(1, factor.n)


def product_claim(group, S):
    """
    The product-group claim for a unitary cyclic first factor, using the
    most frequent l on each remaining factor. None if the shape does not fit.
    """
    S = validate_connection_set(group, S)
    first, rest = group.factors[0], group.factors[1:]
    if not rest or not _is_unitary(first, S.factor_sets[0]):
        return None
    claims = []
    for factor, members in zip(rest, S.factor_sets[1:]):
        sub = GroupSpec((factor,))
        best = l_index_census(character_table(sub), validate_connection_set(sub, [members])).best()
        if best is None:
            return None
        claims.append(FactorClaim(best.count, len(members), factor.order))
    return paper_main_bound(first.n, claims)


def bound_for(group, S):
    """Sharpest stated bound: unitary cyclic, product claim, or spectrum."""
    S = validate_connection_set(group, S)
    if len(group.factors) == 1 and _is_unitary(group.factors[0], S.factor_sets[0]):
        return unitary_cyclic_bound(group.factors[0].n)
    return product_claim(group, S) or spectrum_bound(group, S)


@dataclass(frozen=True)
class ProductAudit:
    group: GroupSpec
    connection: object
    census: object
    report: BoundReport
    tensor_check: object = None


def dihedral_example_audit(n, verify=True, gap_tol=None, max_order=None):
    """
    C_n x D_n (n odd) with the unitary set on C_n and the unitary rotations
    of D_n: census of D_n, claimed bound, and optionally the oracle verdict
    plus a tensor-product check of the measured spectrum.
    """
    rotations = unitary_rotation_set(n)
    census = l_index_census(dihedral_character_table(n), rotations)
    cyclic_part = unitary_connection_set(n)
    group = GroupSpec(cyclic_part.group.factors + rotations.group.factors)
    S = validate_connection_set(group, list(cyclic_part.factor_sets) + list(rotations.factor_sets))

    claim = paper_main_bound(n, [FactorClaim(census.count(1), rotations.size, rotations.group.order)])
    if not verify:
        return ProductAudit(group, S, census, claim)

    oracle = oracle_spectrum(group, S, gap_tol=gap_tol, max_order=max_order)
    report = check_bound_against_oracle(group, S, claim.claimed, base=claim, oracle=oracle)
    expected = tensor_spectrum([unitary_cyclic_spectrum(n), group_spectrum(rotations.group, rotations)])
    tensor_check = compare_spectra(expected, oracle, tol=config.GROUP_TOL, gap_tol=gap_tol)
    return ProductAudit(group, S, census, report, tensor_check)
