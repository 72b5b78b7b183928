#include "doctest.h"
#include "support.hpp"

#include <nimshape/closed_forms.hpp>
#include <nimshape/engine.hpp>
#include <nimshape/oracle.hpp>

#include <random>
#include <set>

using namespace nimshape;

TEST_CASE("shifted_mex examples") {
	CHECK(shifted_mex(std::vector<unsigned>{}, 1) == 1);
	CHECK(shifted_mex(std::vector<unsigned>{0, 1, 3}, 2) == 4);
	CHECK(shifted_mex(std::vector<unsigned>{1}, 3) == 3);
	CHECK_THROWS_AS(shifted_mex(std::vector<unsigned>{1}, 0), DomainError);
}

TEST_CASE("property: shifted_mex equals mex + k on random sets") {
	std::mt19937 rng(7);
	std::uniform_int_distribution<int> size(0, 16), value(0, 20), shift(1, 8);
	for (int trial = 0; trial < 500; ++trial) {
		std::set<unsigned> set;
		const int n = size(rng);
		for (int i = 0; i < n; ++i) set.insert(static_cast<unsigned>(value(rng)));
		const unsigned k = static_cast<unsigned>(shift(rng));
		// direct construction of {0..k-1} ∪ {s+k}
		std::set<unsigned> shifted;
		for (unsigned i = 0; i < k; ++i) shifted.insert(i);
		for (unsigned s : set) shifted.insert(s + k);
		const std::vector<unsigned> list(set.begin(), set.end());
		CHECK(shifted_mex(list, k) == testsupport::brute_mex(shifted));
		CHECK(shifted_mex(list, k) == testsupport::brute_mex(set) + k);
	}
}

TEST_CASE("rect_grundy and hyperrect_grundy examples") {
	CHECK(rect_grundy({1, 1}) == 1);
	CHECK(rect_grundy({2, 2}) == 1);
	CHECK(rect_grundy({2, 3}) == 4);
	CHECK(rectangle({2, 3}) == Partition{3, 3});
	CHECK(hyperrect_grundy(Hyperrect{1, 2, 3}) == 4);
	CHECK(hyperrect_grundy(Hyperrect{4, 4}) == 1);
	CHECK(hyperrect_grundy(Hyperrect{0, 3}) == 0);
	CHECK_THROWS_AS(rect_grundy({0, 2}), DomainError);
}

TEST_CASE("rnim_sum_grundy examples") {
	const std::vector<Hyperrect> a{{2, 2}, {4, 3, 2}, {1, 1}};
	const std::vector<Hyperrect> b{{1, 0, 2}, {2, 3, 4}, {4, 4}};
	const std::vector<Hyperrect> c{{1, 2, 3}, {3, 2}};
	CHECK(rnim_sum_grundy(a) == 1);
	CHECK(rnim_sum_grundy(b) == 0);
	CHECK(rnim_sum_grundy(c) == 0);
	CHECK_THROWS_AS(rnim_sum_grundy(std::span<const Hyperrect>{}), DomainError);
}

TEST_CASE("two_row_grundy examples") {
	CHECK(two_row_grundy(4, 4) == 3);
	CHECK(two_row_grundy(3, 3) == 4);
	CHECK(two_row_grundy(5, 3) == 6);
	CHECK_THROWS_AS(two_row_grundy(2, 3), DomainError);
	CHECK_THROWS_AS(two_row_grundy(2, 0), DomainError);
}

TEST_CASE("rect_is_heavy examples") {
	CHECK_FALSE(rect_is_heavy({2, 2}));
	CHECK(rect_is_heavy({2, 3}));
	for (int n = 1; n <= 40; ++n) CHECK(rect_is_heavy({1, n}));
}

TEST_CASE("sg1_member examples") {
	CHECK(sg1_member(Partition{1}));
	CHECK(sg1_member(Partition{2, 2}));
	CHECK(sg1_member(Partition{3, 3, 2}));
	CHECK(sg1_member(Partition{3, 3, 3}));
	CHECK_FALSE(sg1_member(Partition{2, 1}));
	CHECK_FALSE(sg1_member(Partition{}));
	CHECK_FALSE(sg1_member(Partition{3, 2, 2}));
}

TEST_CASE("family constructors") {
	CHECK(hook(3, 2) == Partition{3, 1});
	CHECK(hook(1, 1) == Partition{1});
	CHECK(staircase(4, 2) == Partition{4, 3});
	CHECK(shallow_staircase(2, 2, 2) == Partition{4, 2});
	CHECK(shallow_staircase(1, 2, 3) == Partition{5, 3, 1});
	CHECK(chopped_rect_lower(2, 1) == Partition{3, 2});
	CHECK(chopped_rect_lower(3, 0) == Partition{4});
	CHECK(heavy_family_witness(HeavyFamily::hook, std::vector<int>{3, 2}) == Partition{3, 1});
	CHECK(heavy_family_witness(HeavyFamily::staircase, std::vector<int>{4, 2}) == Partition{4, 3});
	CHECK(heavy_family_witness(HeavyFamily::shallow_staircase, std::vector<int>{2, 2, 2}) == Partition{4, 2});
	CHECK_THROWS_AS(staircase(2, 3), DomainError);
	CHECK_THROWS_AS(chopped_rect_lower(1, 2), DomainError);
	CHECK_THROWS_AS(heavy_family_witness(HeavyFamily::hook, std::vector<int>{3}), DomainError);

	Engine engine;
	CHECK(engine.evaluate(Partition{3, 1}).g == 4);
	CHECK(engine.evaluate(Partition{4, 2}).g == 5);
}

TEST_CASE("property: formulas agree with the engine") {
	Engine engine;
	for (int r = 1; r <= 8; ++r)
		for (int c = 1; c <= 8; ++c) {
			CAPTURE(r);
			CAPTURE(c);
			const unsigned g = engine.evaluate(rectangle({r, c})).g;
			CHECK(rect_grundy({r, c}) == g);
			CHECK(rect_is_heavy({r, c}) == (g == static_cast<unsigned>(r + c - 1)));
		}
	for (int c1 = 1; c1 <= 10; ++c1)
		for (int c2 = 1; c2 <= c1; ++c2) CHECK(two_row_grundy(c1, c2) == engine.evaluate(Partition{c1, c2}).g);
}

TEST_CASE("property: hyperrect_grundy agrees with the oracle for d <= 3, sides <= 5") {
	Oracle oracle(Convention::normal);
	std::size_t mismatches = 0;
	for (const auto& h : enumerate_hyperrects(3, 5))
		if (hyperrect_grundy(h) != oracle.value(SumPosition(h))) ++mismatches;
	CHECK(mismatches == 0);
}

TEST_CASE("property: sg1_member characterizes value 1 for n <= 15") {
	Engine engine;
	std::size_t mismatches = 0;
	for (const auto& p : enumerate_partitions_upto(15))
		if (sg1_member(p) != (engine.evaluate(p).g == 1)) ++mismatches;
	CHECK(mismatches == 0);
}

TEST_CASE("property: heaviness matches the binomial parity for r, c <= 64") {
	auto binom_odd = [](int n, int k) {
		// Pascal's triangle mod 2
		std::vector<int> row{1};
		for (int i = 1; i <= n; ++i) {
			std::vector<int> next(static_cast<std::size_t>(i) + 1, 1);
			for (int j = 1; j < i; ++j) next[j] = (row[j - 1] + row[j]) & 1;
			row = std::move(next);
		}
		return row[static_cast<std::size_t>(k)] == 1;
	};
	for (int r = 1; r <= 64; ++r)
		for (int c = 1; c <= 64; ++c) {
			const bool heavy = rect_grundy({r, c}) == static_cast<unsigned>(r + c - 1);
			CHECK(rect_is_heavy({r, c}) == heavy);
			CHECK(heavy == binom_odd(c + r - 2, r - 1));
		}
}

TEST_CASE("property: nimber matrix cyclic property for i, j, k <= 64") {
	auto m = [](int i, int j) { return static_cast<int>(rect_grundy({i, j})); };
	std::size_t violations = 0;
	for (int i = 1; i <= 64; ++i)
		for (int j = 1; j <= 64; ++j)
			for (int k = 1; k <= 64; ++k)
				if ((m(i, j) == k) != (m(k, i) == j)) ++violations;
	CHECK(violations == 0);
}

TEST_CASE("property: general-k mex identity for k <= r, c <= 10") {
	for (int k = 1; k <= 10; ++k)
		for (int r = k; r <= 10; ++r)
			for (int c = k; c <= 10; ++c) {
				std::set<unsigned> set;
				for (int i = 0; i < k; ++i) set.insert(static_cast<unsigned>(i));
				for (int j = 0; j < c - k; ++j) set.insert(static_cast<unsigned>(((r - k) ^ j) + k));
				for (int i = 0; i < r - k; ++i) set.insert(static_cast<unsigned>((i ^ (c - k)) + k));
				CHECK(testsupport::brute_mex(set) == static_cast<unsigned>(((c - k) ^ (r - k)) + k));
			}
}

TEST_CASE("hooks and staircases are heavy for r + c <= 12") {
	Engine engine;
	for (int c = 1; c <= 11; ++c)
		for (int r = 1; r + c <= 12; ++r) {
			CHECK(is_heavy(engine, hook(c, r)));
			if (c >= r) CHECK(is_heavy(engine, staircase(c, r)));
		}
}
