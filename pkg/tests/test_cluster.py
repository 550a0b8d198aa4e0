"""Tests for g-vectors, cluster characters and the exchange relations."""

import logging

import pytest

from quiver_grassmannian.ar_quiver import knit, vertex_by_dim
from quiver_grassmannian.cluster import (
    cc,
    cluster_variables,
    coindex,
    g_vector,
    g_vector_checks,
    initial_variables,
    injective_checks,
    mesh_checks,
    rank_one_components,
    tau_g_vector,
    verify_exchange,
)
from quiver_grassmannian.grassmann import f_table
from quiver_grassmannian.models import ModuleExpr
from quiver_grassmannian.polyring import LaurentPolynomial
from quiver_grassmannian.quiver_core import build_quiver, matrices
from tests.conftest import A2, A3_LINEAR, A4_ALTERNATING, D4_SUBSPACE, D5, E6


def _laurent(*terms):
    return LaurentPolynomial.from_terms(2, {exp: coef for exp, coef in terms})


# (1 + x2)/x1, (x1 + x2 + 1)/(x1 x2), (x1 + 1)/x2
A2_CC_S1 = _laurent(((-1, 0), 1), ((-1, 1), 1))
A2_CC_P1 = _laurent(((0, -1), 1), ((-1, 0), 1), ((-1, -1), 1))
A2_CC_S2 = _laurent(((1, -1), 1), ((0, -1), 1))


class TestGVectors:
    """Tests for indices and coindices."""

    def test_a2(self, a2):
        """Test g of S1, S2 and P1."""
        mats = matrices(a2)
        assert g_vector(mats, (1, 0)) == (-1, 0)
        assert g_vector(mats, (0, 1)) == (1, -1)
        assert g_vector(mats, (1, 1)) == (0, -1)

    def test_injective_index(self, d4):
        """Test g_{I_i} = -e_i."""
        mats = matrices(d4)
        for i in d4.vertices:
            expected = tuple(-1 if k == i else 0 for k in d4.vertices)
            assert g_vector(mats, mats.injective_dim(i)) == expected

    def test_coindex_is_minus_tau_index(self, ar_e6):
        """Test coindex(M) = -g_{tau M}."""
        mats = matrices(ar_e6.quiver)
        for mesh in ar_e6.meshes:
            assert coindex(mats, mesh.head) == tuple(-x for x in g_vector(mats, mesh.tail))

    def test_tau_g_vector(self, ar_a4):
        """Test g_{tau M} = -C^-1 C^t g_M on every mesh."""
        mats = matrices(ar_a4.quiver)
        for mesh in ar_a4.meshes:
            assert tau_g_vector(mats, g_vector(mats, mesh.head)) == g_vector(mats, mesh.tail)


class TestCC:
    """Tests for the Caldero-Chapoton map."""

    def test_a2_values(self, ar_a2):
        """Test the three non-initial cluster variables of A2."""
        ft, mats = f_table(ar_a2), matrices(ar_a2.quiver)
        assert cc(ar_a2, ft, mats, vertex_by_dim(ar_a2, (1, 0))) == A2_CC_S1
        assert cc(ar_a2, ft, mats, vertex_by_dim(ar_a2, (1, 1))) == A2_CC_P1
        assert cc(ar_a2, ft, mats, vertex_by_dim(ar_a2, (0, 1))) == A2_CC_S2

    def test_a2_cluster_set(self, ar_a2):
        """Test that the five cluster variables of A2 are distinct."""
        variables = cluster_variables(ar_a2, f_table(ar_a2), matrices(ar_a2.quiver))
        assert list(variables) == ["x1", "x2", "M(2;0)", "M(1;0)", "M(2;1)"]
        assert set(variables.values()) == {*initial_variables(2), A2_CC_S1, A2_CC_P1, A2_CC_S2}

    def test_a1_literal(self, ar_a1):
        """Test CC(S) = 2/x1 on A1."""
        s = ar_a1.vertices[0]
        assert cc(ar_a1, f_table(ar_a1), matrices(ar_a1.quiver), s) == LaurentPolynomial.from_terms(1, {(-1,): 2})

    def test_zero_module(self, ar_a2):
        """Test CC(0) = 1."""
        zero = ModuleExpr.of(2, [])
        assert cc(ar_a2, f_table(ar_a2), matrices(ar_a2.quiver), zero) == LaurentPolynomial.one(2)

    def test_multiplicative(self, ar_a2):
        """Test CC(S1 + P1) = CC(S1) CC(P1)."""
        ft, mats = f_table(ar_a2), matrices(ar_a2.quiver)
        m = ModuleExpr.of(2, [vertex_by_dim(ar_a2, (1, 0)), vertex_by_dim(ar_a2, (1, 1))])
        assert cc(ar_a2, ft, mats, m) == A2_CC_S1 * A2_CC_P1

    def test_positive_coefficients(self, ar_e6):
        """Test that every cluster variable of E6 has positive coefficients."""
        variables = cluster_variables(ar_e6, f_table(ar_e6), matrices(ar_e6.quiver))
        assert len(variables) == 6 + 36
        assert all(c > 0 for poly in variables.values() for c in poly.coefficients())


class TestExchangeRelations:
    """Tests for the mesh and injective exchange relations."""

    @pytest.mark.parametrize("quiver", [A2, A3_LINEAR, A4_ALTERNATING, D4_SUBSPACE, D5, E6])
    def test_verify_passes(self, quiver):
        """Test that every relation holds exactly."""
        ar = knit(build_quiver(*quiver))
        report = verify_exchange(ar, f_table(ar), matrices(ar.quiver))
        assert report.passed, report.failures()
        counts = report.counts()
        assert counts["mesh"] == len(ar.meshes)
        assert counts["injective"] == ar.n
        assert counts["g_vector"] == counts["g_tau"] == len(ar.meshes)

    def test_a2_mesh(self, ar_a2):
        """Test CC(S2) CC(S1) = CC(P1) + 1."""
        checks = mesh_checks(ar_a2, f_table(ar_a2), matrices(ar_a2.quiver))
        assert [c.subject for c in checks] == ["M(2;1)"]
        assert checks[0].passed
        assert A2_CC_S2 * A2_CC_S1 == A2_CC_P1 + 1

    def test_injective_relations_d4(self, ar_d4):
        """Test CC(I_k) x_k against the injective presentation."""
        checks = injective_checks(ar_d4, f_table(ar_d4), matrices(ar_d4.quiver))
        assert [c.subject for c in checks] == ["I_1", "I_2", "I_3", "I_4"]
        assert all(c.passed for c in checks)

    def test_g_vector_checks(self, ar_d4):
        """Test the index identities on D4."""
        checks = g_vector_checks(ar_d4, matrices(ar_d4.quiver))
        assert len(checks) == 2 * len(ar_d4.meshes)
        assert all(c.passed for c in checks)

    def test_a1_flagged(self, ar_a1, caplog):
        """Test that an A1 component is reported and still passes."""
        with caplog.at_level(logging.WARNING, logger="quiver_grassmannian.cluster"):
            report = verify_exchange(ar_a1, f_table(ar_a1), matrices(ar_a1.quiver))
        assert report.passed
        assert report.rank_one_components == [1]
        assert "rank-one" in caplog.text

    def test_rank_one_in_union(self):
        """Test locating the A1 block of A2 + A1."""
        ar = knit(build_quiver("A2 + A1", [(1, 2)]))
        assert rank_one_components(ar) == [3]
        assert verify_exchange(ar, f_table(ar), matrices(ar.quiver)).passed
