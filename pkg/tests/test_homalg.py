"""Tests for Hom/Ext tables, degenerations and generic decompositions."""

import random

import pytest

from quiver_grassmannian.ar_quiver import knit, tau, vertex_by_dim
from quiver_grassmannian.errors import DimensionMismatchError
from quiver_grassmannian.homalg import (
    as_module,
    degeneration_leq,
    degeneration_leq_dual,
    ext_dim,
    ext_table,
    generic_decomposition,
    generic_min_dimension,
    grassmannian_nonempty,
    hom_dim,
    hom_ext_table,
    hom_table,
    is_rigid,
    root_decompositions,
    stratum_dimension,
    tangent_space_dimension,
)
from quiver_grassmannian.models import ModuleExpr
from quiver_grassmannian.quiver_core import build_quiver, euler_form
from tests.conftest import D4_E_SUMMANDS


def _module(ar, *dims):
    return ModuleExpr.of(ar.n, [vertex_by_dim(ar, d) for d in dims])


class TestHomExt:
    """Tests for the Hom and Ext^1 tables."""

    def test_a2_hom(self, ar_a2):
        """Test the Hom table of A2 in AR order S2, P1, S1."""
        assert hom_table(ar_a2) == ((1, 1, 0), (0, 1, 1), (0, 0, 1))

    def test_a2_ext(self, ar_a2):
        """Test that Ext^1(S1, S2) is the only nonzero extension."""
        assert ext_table(ar_a2) == ((0, 0, 0), (0, 0, 0), (1, 0, 0))
        assert ext_dim(ar_a2, vertex_by_dim(ar_a2, (1, 0)), vertex_by_dim(ar_a2, (0, 1))) == 1

    def test_euler_identity(self, ar_e6):
        """Test [X,Y] - [X,Y]^1 = <dim X, dim Y> for all pairs."""
        table = hom_ext_table(ar_e6)
        for a, x in enumerate(table.dims):
            for b, y in enumerate(table.dims):
                assert table.hom[a][b] - table.ext[a][b] == euler_form(ar_e6.quiver, x, y)

    def test_indecomposables_are_bricks(self, ar_d4):
        """Test End(X) = k and Ext^1(X, X) = 0."""
        for v in ar_d4.vertices:
            assert hom_dim(ar_d4, v, v) == 1
            assert is_rigid(ar_d4, v)

    def test_auslander_reiten_formula(self, ar_a4):
        """Test Ext^1(X, Y) = [Y, tau X] for non-projective X."""
        for x in ar_a4.vertices:
            if x.is_projective:
                continue
            for y in ar_a4.vertices:
                assert ext_dim(ar_a4, x, y) == hom_dim(ar_a4, y, tau(ar_a4, x))

    def test_bilinear(self, ar_d4):
        """Test additivity over direct sums."""
        m = _module(ar_d4, *D4_E_SUMMANDS)
        top = vertex_by_dim(ar_d4, (1, 1, 1, 2))
        assert hom_dim(ar_d4, top, m) == sum(hom_dim(ar_d4, top, vertex_by_dim(ar_d4, d)) for d in D4_E_SUMMANDS)

    def test_dimension_mismatch(self, ar_a2, ar_d4):
        """Test mixing modules of two quivers."""
        with pytest.raises(DimensionMismatchError):
            as_module(ar_a2, _module(ar_d4, (0, 0, 0, 1)))


class TestDegeneration:
    """Tests for the Hom-order on modules of one dimension vector."""

    def test_a2(self, ar_a2):
        """Test P1 <= S1 + S2 and not the reverse."""
        p1 = _module(ar_a2, (1, 1))
        split = _module(ar_a2, (1, 0), (0, 1))
        assert degeneration_leq(ar_a2, p1, split)
        assert not degeneration_leq(ar_a2, split, p1)

    def test_dual_agrees(self, ar_a3):
        """Test that the two Hom tests agree on every pair of decompositions of (1,1,1)."""
        modules = list(root_decompositions(ar_a3, (1, 1, 1)))
        assert len(modules) == 4
        for m in modules:
            for n in modules:
                assert degeneration_leq(ar_a3, m, n) == degeneration_leq_dual(ar_a3, m, n)

    def test_rigid_module_is_minimal(self, ar_d4):
        """Test that the generic module degenerates to every module of its dimension."""
        d = (1, 1, 1, 2)
        generic = generic_decomposition(ar_d4, d)
        for m in root_decompositions(ar_d4, d):
            assert degeneration_leq(ar_d4, generic, m)

    def test_unequal_dimensions(self, ar_a2):
        """Test comparing modules of different dimension vectors."""
        with pytest.raises(DimensionMismatchError):
            degeneration_leq(ar_a2, _module(ar_a2, (1, 0)), _module(ar_a2, (0, 1)))


class TestGenericDecomposition:
    """Tests for the rigid module of a dimension vector."""

    def test_root_is_indecomposable(self, ar_d4):
        """Test that a positive root gives its indecomposable."""
        m = generic_decomposition(ar_d4, (1, 1, 1, 2))
        assert m.is_indecomposable()
        assert m.dim == (1, 1, 1, 2)

    def test_a2(self, ar_a2):
        """Test (1,1) is P1 and (1,2) is P1 + S2."""
        assert generic_decomposition(ar_a2, (1, 1)) == _module(ar_a2, (1, 1))
        assert generic_decomposition(ar_a2, (1, 2)) == _module(ar_a2, (1, 1), (0, 1))

    def test_d4_sum(self, ar_d4):
        """Test that (2,2,2,3) is the middle term of the mesh at (1,1,1,1)."""
        m = generic_decomposition(ar_d4, (2, 2, 2, 3))
        assert sorted(v.dim for v in m.expanded()) == sorted(D4_E_SUMMANDS)
        assert is_rigid(ar_d4, m)

    def test_rigid_everywhere(self, ar_a3):
        """Test rigidity of the generic module on a small box."""
        for d in [(2, 1, 0), (1, 2, 1), (0, 3, 2), (2, 2, 2)]:
            assert is_rigid(ar_a3, generic_decomposition(ar_a3, d))

    def test_negative_vector(self, ar_a2):
        """Test a vector with a negative entry."""
        with pytest.raises(DimensionMismatchError):
            generic_decomposition(ar_a2, (1, -1))


class TestGrassmannianGeometry:
    """Tests for non-emptiness, strata and tangent spaces."""

    def test_a2_nonempty(self, ar_a2):
        """Test which subspaces of P1 exist."""
        assert grassmannian_nonempty(ar_a2, (0, 1), (1, 1))
        assert not grassmannian_nonempty(ar_a2, (1, 0), (1, 1))
        assert generic_min_dimension(ar_a2, (1, 0), (1, 1)) is None
        assert generic_min_dimension(ar_a2, (0, 1), (1, 1)) == 0

    def test_d4_dimension(self, ar_d4):
        """Test <e, d - e> for the (1,1,1,2) example."""
        assert generic_min_dimension(ar_d4, (1, 1, 1, 2), (2, 2, 2, 3)) == 2

    def test_trivial_ranks(self, ar_a3):
        """Test e = 0 and e = d."""
        d = (1, 2, 1)
        assert generic_min_dimension(ar_a3, (0, 0, 0), d) == 0
        assert generic_min_dimension(ar_a3, d, d) == 0

    def test_out_of_range(self, ar_a2):
        """Test e not below d."""
        with pytest.raises(DimensionMismatchError):
            grassmannian_nonempty(ar_a2, (2, 0), (1, 1))

    def test_stratum_of_projective(self, ar_a2):
        """Test [N, M] - [N, N] for N = P1 inside P1 + S2."""
        p1 = _module(ar_a2, (1, 1))
        m = _module(ar_a2, (1, 1), (0, 1))
        assert stratum_dimension(ar_a2, p1, m) == 0

    def test_stratum_of_simple(self, ar_a2):
        """Test the stratum of S2 inside P1 + S2."""
        s2 = _module(ar_a2, (0, 1))
        m = _module(ar_a2, (1, 1), (0, 1))
        assert stratum_dimension(ar_a2, s2, m) == 1

    def test_stratum_too_big(self, ar_a2):
        """Test a candidate that does not fit."""
        with pytest.raises(DimensionMismatchError):
            stratum_dimension(ar_a2, _module(ar_a2, (1, 1)), _module(ar_a2, (1, 0)))

    def test_tangent_space(self, ar_d4):
        """Test that the generic point of the (1,1,1,2) example is smooth of dimension 2."""
        sub_module = _module(ar_d4, (1, 1, 1, 2))
        quotient = _module(ar_d4, (1, 1, 1, 1))
        assert tangent_space_dimension(ar_d4, sub_module, quotient) == 2


class TestGenericSample:
    """Random checks of the generic decomposition against alternative decompositions."""

    @pytest.mark.parametrize("quiver", [("A4", [(1, 2), (3, 2), (3, 4)]), ("D4", [(1, 4), (2, 4), (3, 4)])])
    def test_orthogonal_and_minimal(self, quiver):
        """Test Ext-orthogonality and minimality against a seeded sample of all decompositions."""
        ar = knit(build_quiver(*quiver))
        rng = random.Random(11)
        for _ in range(20):
            d = tuple(rng.randint(0, 3) for _ in range(ar.n))
            generic = generic_decomposition(ar, d)
            summands = generic.expanded()
            assert all(ext_dim(ar, x, y) == 0 for x in summands for y in summands)
            decompositions = list(root_decompositions(ar, d))
            for other in rng.sample(decompositions, min(100, len(decompositions))):
                assert degeneration_leq(ar, generic, other)
