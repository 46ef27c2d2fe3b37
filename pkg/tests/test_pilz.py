"""Tests for the Pilz-conjecture explorer."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from parity_sumsets.errors import BudgetExceededError, InvalidInputError
from parity_sumsets.models import GridSet, IntSet
from parity_sumsets.pilz import (
    build_sn,
    count_subsets,
    cube,
    cube_check,
    cube_trials,
    exponent_vector,
    grid_pilz_size,
    iter_subsets,
    lower_bound_display,
    pilz_size,
    primes_upto,
    scan,
)
from parity_sumsets.setops import nabla

from .strategies import positive_sets


class TestPrimes:
    """Test primes_upto and exponent_vector."""

    @pytest.mark.parametrize(
        ("n", "expected"),
        [
            (1, []),
            (2, [2]),
            (4, [2, 3]),
            (10, [2, 3, 5, 7]),
            (30, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]),
        ],
    )
    def test_primes(self, n, expected):
        """Test the sieve."""
        assert primes_upto(n) == expected

    def test_prime_count(self):
        """Test pi(1000) = 168."""
        assert len(primes_upto(1000)) == 168

    @pytest.mark.parametrize(
        ("k", "primes", "expected"),
        [
            (1, [2, 3], (0, 0)),
            (4, [2, 3], (2, 0)),
            (12, [2, 3, 5, 7, 11], (2, 1, 0, 0, 0)),
        ],
    )
    def test_exponent_vector(self, k, primes, expected):
        """Test prime valuations."""
        vector = exponent_vector(k, primes)
        assert vector.coordinates == expected
        assert vector.reconstruct(primes) == k

    def test_uncovered_prime(self):
        """Test a prime factor missing from the list."""
        with pytest.raises(InvalidInputError):
            exponent_vector(10, [2, 3])


class TestBuildSn:
    """Test build_sn."""

    def test_l_shape(self):
        """Test S_4 is the L-shape."""
        assert build_sn(4) == GridSet.parse("(0,0),(1,0),(0,1),(2,0)")

    def test_six(self):
        """Test S_6 in Z^3."""
        assert build_sn(6) == GridSet.parse(
            "(0,0,0),(1,0,0),(0,1,0),(2,0,0),(0,0,1),(1,1,0)"
        )

    def test_one(self):
        """Test S_1 is the point of Z^0."""
        s1 = build_sn(1)
        assert s1.dimension == 0
        assert len(s1) == 1

    @pytest.mark.parametrize("n", [2, 7, 20])
    def test_size(self, n):
        """Test the embedding is injective."""
        assert len(build_sn(n)) == n


class TestPilzSize:
    """Test pilz_size and grid_pilz_size."""

    @pytest.mark.parametrize(
        ("a", "n", "expected"),
        [
            ([1, 2, 3], 3, 3),
            ([1, 2], 2, 2),
        ],
    )
    def test_values(self, a, n, expected):
        """Test small sizes by hand."""
        assert pilz_size(IntSet.of(a), n) == expected

    @pytest.mark.parametrize("n", range(1, 51))
    def test_singletons(self, n):
        """Test |{c} Δ 2{c} Δ ... | = n."""
        for c in (1, 2, 7, 30):
            assert pilz_size(IntSet.of([c]), n) == n

    @pytest.mark.parametrize("n", range(1, 31))
    def test_interval(self, n):
        """Test A = [n] gives exactly n."""
        assert pilz_size(IntSet.interval(n), n) == n

    @given(positive_sets(max_value=25), st.integers(1, 12))
    def test_three_paths(self, a, n):
        """Test dilations, nabla and counting agree."""
        size = pilz_size(a, n)
        assert size == len(nabla(a, IntSet.interval(n)))
        assert size == len(nabla(a, IntSet.interval(n), oracle=True))

    @given(st.integers(1, 10), st.data())
    def test_grid_embedding(self, n, data):
        """Test the exponent-vector computation on sets of integers up to n."""
        a = data.draw(
            st.frozensets(st.integers(1, n), min_size=1, max_size=5).map(IntSet.of)
        )
        assert grid_pilz_size(a, n) == pilz_size(a, n)

    def test_grid_undefined(self):
        """Test elements with a prime factor above n."""
        assert grid_pilz_size(IntSet.of([1, 7]), 4) is None

    def test_invalid_operand(self):
        """Test empty and nonpositive sets."""
        with pytest.raises(InvalidInputError):
            pilz_size(IntSet(), 3)
        with pytest.raises(InvalidInputError):
            pilz_size(IntSet.of([0, 1]), 3)


class TestScan:
    """Test subset enumeration and scan."""

    def test_enumeration_order(self):
        """Test lexicographic order by sorted elements."""
        assert list(iter_subsets(3, 3)) == [
            (1,),
            (1, 2),
            (1, 2, 3),
            (1, 3),
            (2,),
            (2, 3),
            (3,),
        ]

    @pytest.mark.parametrize(("u", "s"), [(5, 2), (10, 10), (12, 3)])
    def test_count(self, u, s):
        """Test the count matches the enumeration."""
        assert count_subsets(u, s) == len(list(iter_subsets(u, s)))
        assert count_subsets(u, s) == sum(math.comb(u, j) for j in range(1, s + 1))

    def test_small(self):
        """Test n=2 over [1,3]."""
        result = scan(2, 3, 3)
        assert result.summary.checked == 7
        assert result.summary.min_size == 2
        assert not result.summary.violations

    def test_n_one(self):
        """Test n=1 gives |A| for every A."""
        summary = scan(1, 6, 3).summary
        assert summary.min_size == 1
        assert len(summary.argmin) == 6

    def test_argmin(self):
        """Test n=8 over [1,8] is minimized by singletons and [8]."""
        summary = scan(8, 8, 8).summary
        assert summary.min_size == 8
        assert IntSet.interval(8) in summary.argmin
        assert all(IntSet.of([c]) in summary.argmin for c in range(1, 9))
        assert [_.elements for _ in summary.argmin] == sorted(
            _.elements for _ in summary.argmin
        )

    @pytest.mark.parametrize("n", range(1, 9))
    def test_desk_scale(self, n):
        """Test every nonempty A in [1,10] for n <= 8."""
        summary = scan(n, 10, 10).summary
        assert summary.checked == 1023
        assert summary.min_size == n
        assert IntSet.interval(n) in summary.argmin
        assert all(IntSet.of([c]) in summary.argmin for c in range(1, 11))
        assert not summary.violations

    def test_deterministic(self):
        """Test identical parameters give identical results."""
        assert scan(4, 7, 3) == scan(4, 7, 3)

    def test_workers(self):
        """Test a process pool gives the serial result."""
        assert scan(5, 8, 3, workers=2) == scan(5, 8, 3)

    def test_cursor(self):
        """Test start and limit resume the enumeration."""
        full = scan(3, 6, 6)
        first = scan(3, 6, 6, limit=20)
        rest = scan(3, 6, 6, start=first.summary.next_cursor)
        assert first.summary.next_cursor == 20
        assert first.records + rest.records == full.records
        assert rest.summary.next_cursor == count_subsets(6, 6)

    def test_budget(self):
        """Test the subset budget."""
        with pytest.raises(BudgetExceededError):
            scan(3, 10, 10, budget=100)
        assert scan(3, 10, 10, budget=100, limit=100).summary.checked == 100

    def test_invalid_bounds(self):
        """Test nonpositive bounds."""
        with pytest.raises(InvalidInputError):
            scan(0, 3, 3)


class TestLowerBound:
    """Test lower_bound_display."""

    def test_two(self):
        """Test n=2."""
        assert lower_bound_display(2) == pytest.approx(2.17, abs=0.01)

    def test_below_n(self):
        """Test the bound at n=100 is below 100."""
        assert lower_bound_display(100) < 100

    def test_domain(self):
        """Test n >= 2 is required."""
        with pytest.raises(InvalidInputError):
            lower_bound_display(1)


class TestCube:
    """Test the 2-cube exercise."""

    def test_cube(self):
        """Test {0,1}^2."""
        assert cube(2).elements == ((0, 0), (0, 1), (1, 0), (1, 1))

    def test_translate(self):
        """Test r=1, A={(0)}."""
        report = cube_check(1, GridSet.parse("(0)"))
        assert report.size == 2
        assert report.passed

    def test_segment(self):
        """Test r=1, A={(0),(1)} gives {(0),(2)}."""
        report = cube_check(1, GridSet.parse("(0),(1)"))
        assert report.size == 2
        assert report.passed

    def test_dimension_mismatch(self):
        """Test A of another dimension."""
        with pytest.raises(InvalidInputError):
            cube_check(2, GridSet.parse("(0)"))

    def test_dimension_cap(self):
        """Test the configured maximum dimension."""
        with pytest.raises(InvalidInputError):
            cube_check(4, GridSet.parse("(0,0,0,0)"))

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_random_trials(self, r):
        """Test seeded random sets all pass."""
        reports = cube_trials(r, 1000, seed=r)
        assert len(reports) == 1000
        assert all(_.passed for _ in reports)

    def test_trials_reproducible(self):
        """Test the seed fixes the draws."""
        assert cube_trials(2, 50, seed=7) == cube_trials(2, 50, seed=7)
