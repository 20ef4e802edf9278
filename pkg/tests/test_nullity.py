"""
tests/test_nullity.py
Maximum-nullity lower bounds, minimum-rank upper bounds and their audits.
"""

import pytest

from src.cayley import GroupSpec, parse_connection, parse_group, unitary_connection_set
from src.errors import InvalidInput
from src.nullity import (
    PRODUCT_CLAIM,
    SPECTRUM,
    UNITARY_CYCLIC,
    BoundReport,
    FactorClaim,
    bound_for,
    check_bound_against_oracle,
    dihedral_example_audit,
    max_multiplicity_bound,
    paper_main_bound,
    spectrum_bound,
    unitary_cyclic_bound,
)
from src.spectrum import Spectrum, unitary_cyclic_spectrum


class TestMaxMultiplicityBound:
    def test_complete_graph(self):
        assert max_multiplicity_bound(unitary_cyclic_spectrum(5)) == 4

    def test_single_vertex(self):
        assert max_multiplicity_bound(Spectrum(((0, 1),))) == 1

    def test_empty_spectrum(self):
        with pytest.raises(InvalidInput):
            max_multiplicity_bound(Spectrum(()))


class TestUnitaryCyclicBound:
    @pytest.mark.parametrize("n, expected", [(2, 1), (5, 4), (6, 2), (12, 6), (30, 8), (8, 6)])
    def test_examples(self, n, expected):
        report = unitary_cyclic_bound(n)
        assert report.claimed == expected
        assert report.kind == UNITARY_CYCLIC
        assert report.mr_upper == n - expected

    def test_matches_spectrum(self):
        for n in range(2, 61):
            assert unitary_cyclic_bound(n).claimed == unitary_cyclic_spectrum(n).max_multiplicity, n

    def test_per_divisor_rows(self):
        rows = unitary_cyclic_bound(12).per_divisor
        assert [r.divisor for r in rows] == [1, 2, 3, 4, 6, 12]
        pooled = [r for r in rows if r.pooled]
        assert [r.divisor for r in pooled] == [4, 12]
        assert all(r.bound == 6 and r.eigenvalue == 0 for r in pooled)
        assert sum(r.multiplicity for r in rows) == 12

    def test_one_rejected(self):
        with pytest.raises(InvalidInput):
            unitary_cyclic_bound(1)


class TestBoundReport:
    def test_unverified_bound_is_capped(self):
        report = BoundReport(order=5, claimed=9)
        assert report.effective_bound == 5
        assert report.mr_upper == 0

    def test_consistent_claim_kept(self):
        report = BoundReport(order=10, claimed=3, oracle_max_multiplicity=4, consistent=True)
        assert report.effective_bound == 3
        assert report.mr_upper == 7

    def test_inconsistent_claim_replaced(self):
        report = BoundReport(order=10, claimed=6, oracle_max_multiplicity=4, consistent=False)
        assert report.effective_bound == 4
        assert report.mr_upper == 6

    def test_to_dict(self):
        data = unitary_cyclic_bound(12).to_dict(per_divisor=True)
        assert data["effective_bound"] == 6
        assert data["mr_upper"] == 6
        assert data["oracle_max_multiplicity"] is None
        assert len(data["per_divisor"]) == 6
        assert "per_divisor" not in unitary_cyclic_bound(12).to_dict()


class TestPaperMainBound:
    def test_no_factors_is_unitary_bound(self):
        assert paper_main_bound(12, []) == unitary_cyclic_bound(12)

    def test_scaled_claim(self):
        report = paper_main_bound(5, [FactorClaim(2, 4, 10)])
        assert report.claimed == 4 * 2 * 4
        assert report.order == 50
        assert report.kind == PRODUCT_CLAIM
        assert report.per_divisor[-1].bound == 32

    def test_tuple_claims(self):
        assert paper_main_bound(6, [(1, 2, 4), (1, 1, 2)]).claimed == 2 * 2 * 1

    def test_claims_without_order(self):
        report = paper_main_bound(5, [(2, 4)])
        assert report.claimed == 32
        assert report.order is None
        assert report.effective_bound == 32
        assert report.mr_upper is None

    def test_nonpositive_claim_rejected(self):
        with pytest.raises(InvalidInput):
            paper_main_bound(5, [FactorClaim(0, 4, 10)])


class TestOracleAudit:
    def test_complete_graph_consistent(self):
        report = check_bound_against_oracle(GroupSpec.cyclic(5), unitary_connection_set(5), 4)
        assert report.oracle_max_multiplicity == 4
        assert report.consistent
        assert report.effective_bound == 4

    def test_overclaim_flagged(self):
        report = check_bound_against_oracle(GroupSpec.cyclic(5), unitary_connection_set(5), 5)
        assert report.consistent is False
        assert report.effective_bound == 4
        assert report.mr_upper == 1

    def test_base_kind_kept(self):
        base = unitary_cyclic_bound(12)
        report = check_bound_against_oracle(GroupSpec.cyclic(12), unitary_connection_set(12), base.claimed, base=base)
        assert report.kind == UNITARY_CYCLIC
        assert report.per_divisor == base.per_divisor
        assert report.consistent


class TestBoundFor:
    def test_unitary_cyclic(self):
        report = bound_for(GroupSpec.cyclic(12), unitary_connection_set(12))
        assert report.kind == UNITARY_CYCLIC
        assert report.claimed == 6

    def test_product_claim(self):
        group = parse_group("cyclic:5 x dihedral:5")
        S = parse_connection(group, "unitary ; explicit:r1,r2,r3,r4")
        report = bound_for(group, S)
        assert report.kind == PRODUCT_CLAIM
        assert report.claimed == 32

    def test_falls_back_to_spectrum(self):
        group = GroupSpec.dihedral(5)
        S = parse_connection(group, "explicit:r1,r4")
        report = bound_for(group, S)
        assert report.kind == SPECTRUM
        assert report == spectrum_bound(group, S)
        assert report.claimed == 4


class TestDihedralExampleAudit:
    def test_claim_only(self):
        audit = dihedral_example_audit(5, verify=False)
        assert audit.census.count(1) == 2
        assert audit.report.claimed == 32
        assert audit.report.order == 50
        assert audit.tensor_check is None

    def test_verified(self):
        audit = dihedral_example_audit(5)
        assert audit.report.oracle_max_multiplicity == 32
        assert audit.report.consistent
        assert audit.report.effective_bound == 32
        assert audit.report.mr_upper == 18
        assert audit.tensor_check.matched

    def test_three(self):
        audit = dihedral_example_audit(3)
        # phi(3) * N(1) * |S_2| = 2 * 2 * 2
        assert audit.report.claimed == 8
        assert audit.tensor_check.matched
        assert audit.report.oracle_max_multiplicity == 8
