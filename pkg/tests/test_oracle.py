"""Tests for the finite-field oracle."""

import random

import pytest
from pydantic import ValidationError

from quiver_grassmannian.ar_quiver import knit, vertex_by_dim
from quiver_grassmannian.dimvector import box
from quiver_grassmannian.errors import DiagramMismatchError, DimensionMismatchError, FixtureError, OracleBudgetError
from quiver_grassmannian.grassmann import euler_char, f_table, poincare
from quiver_grassmannian.homalg import ext_dim, generic_decomposition, grassmannian_nonempty, hom_dim
from quiver_grassmannian.models import ExplicitRep
from quiver_grassmannian.oracle import (
    conjugate,
    count_polynomial,
    count_subreps,
    d4_fixture,
    direct_sum,
    dump_rep,
    explicit_module,
    ext_space_dim,
    gaussian_binomial,
    hom_space_dim,
    interpolate_count,
    interval_module,
    load_rep,
    random_invertible,
    reduce_mod,
    subspaces,
    thin_module,
)
from quiver_grassmannian.polyring import OneVarPolynomial
from quiver_grassmannian.quiver_core import build_quiver
from tests.conftest import D4_E


D4_COUNT = OneVarPolynomial.from_coefficients([1, 4, 1])


class TestConstructors:
    """Tests for building explicit representations."""

    def test_interval(self, a3):
        """Test the interval [1, 2] on linear A3."""
        rep = interval_module(a3, 1, 2)
        assert rep.dims == (1, 1, 0)
        assert rep.map(1, 2) == ((1,),)
        assert rep.map(2, 3) == ()

    def test_interval_needs_type_a(self, d4):
        """Test that intervals are refused outside type A."""
        with pytest.raises(DiagramMismatchError):
            interval_module(d4, 1, 2)

    def test_direct_sum_blocks(self, a2):
        """Test that the block-diagonal sum keeps each summand's map."""
        rep = direct_sum([thin_module(a2, (1, 1), 2), thin_module(a2, (0, 1), 2)])
        assert rep.dims == (1, 2)
        assert rep.map(1, 2) == ((1,), (0,))

    def test_missing_maps_are_zero(self, a2):
        """Test that an arrow without a matrix acts as zero."""
        rep = ExplicitRep(quiver=a2, prime=3, dims=(2, 1))
        assert rep.map(1, 2) == ((0, 0),)

    def test_entries_reduced(self, a2):
        """Test that matrix entries are stored modulo p."""
        rep = ExplicitRep(quiver=a2, prime=3, dims=(1, 1), maps={"1->2": [[5]]})
        assert rep.map(1, 2) == ((2,),)

    def test_validation(self, a2):
        """Test bad primes, shapes and arrows."""
        with pytest.raises(ValidationError):
            ExplicitRep(quiver=a2, prime=4, dims=(1, 1))
        with pytest.raises(ValidationError):
            ExplicitRep(quiver=a2, prime=2, dims=(1, 1), maps={"1->2": [[1, 0]]})
        with pytest.raises(ValidationError):
            ExplicitRep(quiver=a2, prime=2, dims=(1, 1), maps={"2->1": [[1]]})

    def test_explicit_module_needs_thin_summands(self, ar_d4):
        """Test that the (1,1,1,2) indecomposable has no thin model."""
        m = generic_decomposition(ar_d4, (1, 1, 1, 2))
        with pytest.raises(FixtureError):
            explicit_module(ar_d4, m, 2)


class TestHomExt:
    """Tests for Hom and Ext from the rank of Phi."""

    def test_thin_indecomposables_match_table(self, ar_d4):
        """Test the oracle against the AR table on every thin pair."""
        thin = [v for v in ar_d4.vertices if max(v.dim) == 1]
        reps = {v.key: thin_module(ar_d4.quiver, v.dim, 2) for v in thin}
        for x in thin:
            for y in thin:
                assert hom_space_dim(reps[x.key], reps[y.key]) == hom_dim(ar_d4, x, y)
                assert ext_space_dim(reps[x.key], reps[y.key]) == ext_dim(ar_d4, x, y)

    def test_d4_fixtures(self):
        """Test End and Ext^1 of the rigid E and of F = M + tau M."""
        e, f = d4_fixture("E"), d4_fixture("F")
        assert hom_space_dim(e, e) == 3
        assert ext_space_dim(e, e) == 0
        assert hom_space_dim(f, f) == 4
        assert ext_space_dim(f, f) == 1

    def test_different_fields(self, a2):
        """Test mixing characteristics."""
        with pytest.raises(DimensionMismatchError):
            hom_space_dim(thin_module(a2, (1, 0), 2), thin_module(a2, (1, 0), 3))


class TestSubspaces:
    """Tests for RREF enumeration."""

    def test_counts(self):
        """Test the number of subspaces against the Gaussian binomial."""
        for n, k, p in [(3, 2, 2), (4, 2, 3), (2, 0, 5), (2, 2, 2)]:
            assert len(set(subspaces(n, k, p))) == gaussian_binomial(n, k, p)

    def test_gaussian_binomial(self):
        """Test a few values."""
        assert gaussian_binomial(3, 2, 2) == 7
        assert gaussian_binomial(4, 2, 3) == 130
        assert gaussian_binomial(2, 3, 2) == 0


class TestCounting:
    """Tests for counting subrepresentations over GF(p)."""

    def test_a2(self, a2):
        """Test subrepresentations of P1 over GF(3)."""
        p1 = thin_module(a2, (1, 1), 3)
        assert count_subreps(p1, (0, 1)) == 1
        assert count_subreps(p1, (1, 0)) == 0
        assert count_subreps(p1, (1, 1)) == 1

    def test_d4_fixtures(self):
        """Test 13 points over GF(2) for both E and F."""
        assert count_subreps(d4_fixture("E"), D4_E) == 13
        assert count_subreps(d4_fixture("F"), D4_E) == 13

    def test_matches_poincare(self, ar_a3):
        """Test count = P(sqrt p) on the rigid modules of A3."""
        ft = f_table(ar_a3)
        for d in [(1, 2, 1), (2, 1, 1), (1, 1, 2)]:
            m = generic_decomposition(ar_a3, d)
            for p in (2, 3):
                rep = explicit_module(ar_a3, m, p)
                for e in box(d):
                    expected = poincare(ar_a3, ft, m, e).halve_exponents().evaluate(p)
                    assert count_subreps(rep, e) == expected

    def test_nonempty_matches(self, ar_a4):
        """Test count > 0 exactly when the generic Grassmannian is non-empty."""
        d = (1, 2, 2, 1)
        rep = explicit_module(ar_a4, generic_decomposition(ar_a4, d), 2)
        for e in box(d):
            assert (count_subreps(rep, e) > 0) == grassmannian_nonempty(ar_a4, e, d)

    def test_conjugation_invariance(self):
        """Test that a change of basis at every vertex keeps the count."""
        rng = random.Random(7)
        rep = d4_fixture("E")
        g = {i: random_invertible(rep.dims[i - 1], 2, rng) for i in rep.quiver.vertices}
        moved = conjugate(rep, g)
        assert count_subreps(moved, D4_E) == 13
        assert hom_space_dim(moved, moved) == 3

    def test_budget(self):
        """Test that an oversized enumeration is refused."""
        with pytest.raises(OracleBudgetError, match="budget"):
            count_subreps(d4_fixture("E"), D4_E, budget=10)

    def test_out_of_range(self, a2):
        """Test e larger than the representation."""
        with pytest.raises(DimensionMismatchError):
            count_subreps(thin_module(a2, (1, 0), 2), (0, 1))


class TestInterpolation:
    """Tests for recovering the counting polynomial."""

    def test_d4(self):
        """Test t^2 + 4t + 1 from the counts at 2, 3, 5."""
        result = interpolate_count([(2, 13), (3, 22), (5, 46)], 2)
        assert result.ok
        assert result.polynomial == D4_COUNT

    def test_d4_fixtures(self):
        """Test both fixtures over 2, 3, 5."""
        for name in ("E", "F"):
            result = count_polynomial(d4_fixture(name), D4_E, [2, 3, 5])
            assert result.polynomial == D4_COUNT
            assert result.polynomial.render("t") == "1 + 4*t + t^2"

    def test_not_polynomial(self):
        """Test counts that do not fit the degree bound."""
        result = interpolate_count([(2, 1), (3, 2), (5, 7)], 1)
        assert not result.ok
        assert "not polynomial within bound" in result.diagnostic

    def test_bad_inputs(self):
        """Test repeated primes and too few points."""
        with pytest.raises(DimensionMismatchError):
            interpolate_count([(2, 1), (2, 1)], 1)
        with pytest.raises(DimensionMismatchError):
            interpolate_count([(2, 1)], 2)


class TestFiles:
    """Tests for representation files."""

    def test_dump_and_load(self, tmp_path):
        """Test writing a fixture and reading it back."""
        rep = d4_fixture("F")
        path = tmp_path / "f.json"
        dump_rep(rep, path)
        assert load_rep(path) == rep

    def test_reduce_mod(self):
        """Test reading the E matrices over GF(3)."""
        rep = reduce_mod(d4_fixture("E"), 3)
        assert rep.prime == 3
        assert rep.map(1, 4) == ((1, 0), (1, 1), (0, 1))

    def test_reduce_mod_reads_original_integers(self, a2):
        """Test that reduce_mod starts from the integer entries, not the GF(p) ones."""
        rep = ExplicitRep(quiver=a2, prime=5, dims=(1, 1), maps={"1->2": [[-1]]})
        assert rep.map(1, 2) == ((4,),)
        over_two = reduce_mod(rep, 2)
        assert over_two.map(1, 2) == ((1,),)
        assert count_subreps(over_two, (1, 0)) == 0

    def test_malformed(self, tmp_path):
        """Test a file without a quiver."""
        path = tmp_path / "bad.json"
        path.write_text('{"prime": 2, "dims": [1]}')
        with pytest.raises(FixtureError, match="malformed"):
            load_rep(path)

    def test_unknown_fixture(self):
        """Test asking for a fixture that is not bundled."""
        with pytest.raises(FixtureError):
            d4_fixture("G")


class TestTypeASweeps:
    """Oracle sweeps over every interval module of small type A quivers."""

    @pytest.mark.parametrize("name", ["ar_a2", "ar_a3", "ar_a4"])
    def test_interval_hom(self, name, request):
        """Test Hom between intervals against the AR table."""
        ar = request.getfixturevalue(name)
        q = ar.quiver
        intervals = [(a, b) for a in range(1, q.n + 1) for b in range(a, q.n + 1)]
        reps = {ab: interval_module(q, *ab) for ab in intervals}
        for x in intervals:
            for y in intervals:
                expected = hom_dim(ar, vertex_by_dim(ar, reps[x].dims), vertex_by_dim(ar, reps[y].dims))
                assert hom_space_dim(reps[x], reps[y]) == expected

    @pytest.mark.parametrize(
        "label, arrows, bound",
        [
            ("A2", [(1, 2)], (2, 2)),
            ("A2", [(2, 1)], (2, 2)),
            ("A3", [(1, 2), (2, 3)], (2, 2, 2)),
            ("A3", [(1, 2), (3, 2)], (2, 2, 2)),
            ("A3", [(2, 1), (2, 3)], (2, 2, 2)),
            ("A4", [(1, 2), (3, 2), (3, 4)], (1, 2, 2, 1)),
            ("A4", [(2, 1), (2, 3), (3, 4)], (1, 2, 2, 1)),
        ],
    )
    def test_count_at_one_is_euler_characteristic(self, label, arrows, bound):
        """Test that the interpolated count evaluated at t = 1 gives chi for every d in the box."""
        ar = knit(build_quiver(label, arrows))
        ft = f_table(ar)
        for d in box(bound):
            m = generic_decomposition(ar, d)
            rep = explicit_module(ar, m, 2)
            for e in box(d):
                result = count_polynomial(rep, e, [2, 3, 5, 7])
                assert result.ok
                assert result.polynomial.evaluate(1) == euler_char(ft, m, e), (arrows, d, e)
