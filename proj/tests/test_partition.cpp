#include "doctest.h"
#include "support.hpp"

#include <nimshape/partition.hpp>

#include <set>

using namespace nimshape;

TEST_CASE("parse_partition accepts plain and exponent notation") {
	CHECK(parse_partition("[4,2,1]") == Partition{4, 2, 1});
	CHECK(parse_partition("[3^2,2^3]") == Partition{3, 3, 2, 2, 2});
	CHECK(parse_partition("[]") == Partition{});
	CHECK(parse_partition(" [ 3 , 1 ] ") == Partition{3, 1});
	CHECK(parse_partition("[2^0,1]") == Partition{1});
}

TEST_CASE("parse_partition rejects malformed text with the offending token") {
	auto message_of = [](const char* text) {
		try {
			parse_partition(text);
		} catch (const ParseError& e) {
			return std::string(e.what());
		}
		return std::string();
	};
	CHECK(message_of("[1,3]").find("3") != std::string::npos);
	CHECK(message_of("[0]").find("not positive") != std::string::npos);
	CHECK(message_of("[2,x]").find("x") != std::string::npos);
	CHECK_THROWS_AS(parse_partition("4,2"), ParseError);
	CHECK_THROWS_AS(parse_partition("[4,,2]"), ParseError);
	CHECK_THROWS_AS(parse_partition("[-1]"), ParseError);
	CHECK_THROWS_AS(parse_partition("[2^]"), ParseError);
}

TEST_CASE("Partition constructor enforces the invariant") {
	CHECK_THROWS_AS(Partition({1, 2}), DomainError);
	CHECK_THROWS_AS(Partition({2, 0}), DomainError);
	Partition p{3, 3, 1};
	CHECK(p.size() == 7);
	CHECK(p.length() == 3);
	CHECK(p.largest() == 3);
}

TEST_CASE("to_string") {
	CHECK(to_string(Partition{3, 3, 2, 2, 2}) == "[3,3,2,2,2]");
	CHECK(to_string(Partition{3, 3, 2, 2, 2}, Notation::exponent) == "[3^2,2^3]");
	CHECK(to_string(Partition{4, 2, 1}, Notation::exponent) == "[4,2,1]");
	CHECK(to_string(Partition{}) == "[]");
}

TEST_CASE("conjugate, rank, young_leq examples") {
	CHECK(conjugate(Partition{4, 2, 1}) == Partition{3, 2, 1, 1});
	CHECK(conjugate(Partition{}) == Partition{});
	CHECK(conjugate(Partition{3, 3, 3}) == Partition{3, 3, 3});
	CHECK(canonical(Partition{3, 2, 1, 1}) == Partition{3, 2, 1, 1});
	CHECK(canonical(Partition{4, 2, 1}) == Partition{3, 2, 1, 1});

	CHECK(rank(Partition{4, 2, 1}) == 1);
	CHECK(rank(Partition{3, 3, 2}) == 0);
	CHECK(rank(Partition{1}) == 0);
	CHECK_THROWS_AS(rank(Partition{}), DomainError);

	CHECK(young_leq(Partition{2, 2}, Partition{3, 3, 1}));
	CHECK_FALSE(young_leq(Partition{3}, Partition{2, 2}));
	CHECK(young_leq(Partition{}, Partition{5, 1}));
}

TEST_CASE("pnim_moves examples") {
	{
		auto moves = pnim_moves(Partition{4, 2, 1});
		CHECK(std::find(moves.begin(), moves.end(), Partition{4}) != moves.end());
	}
	CHECK(pnim_moves(Partition{1}) == std::vector<Partition>{Partition{}});
	CHECK(pnim_moves(Partition{2, 1}) ==
	      std::vector<Partition>{Partition{}, Partition{1}, Partition{1, 1}, Partition{2}});
	CHECK(pnim_moves(Partition{}).empty());
}

TEST_CASE("pnim_move_list reports the first descriptor for each successor") {
	auto moves = pnim_move_list(Partition{2, 2});
	// [2,2] -> [] (rows), [2] (rows, keep row 1), [1,1] (cols, keep col 1)
	REQUIRE(moves.size() == 3);
	CHECK(moves[0].result == Partition{});
	CHECK(moves[1].descriptor == MoveDescriptorP{Axis::rows, {1}});
	CHECK(moves[1].result == Partition{2});
	CHECK(moves[2].descriptor == MoveDescriptorP{Axis::columns, {1}});
	CHECK(moves[2].result == Partition{1, 1});
	for (const auto& m : moves) CHECK(apply_move(Partition{2, 2}, m.descriptor) == m.result);
}

TEST_CASE("apply_move rejects illegal descriptors") {
	const Partition p{3, 1};
	CHECK(apply_move(p, {Axis::rows, {2}}) == Partition{1});
	CHECK(apply_move(p, {Axis::columns, {2, 3}}) == Partition{2});
	CHECK_THROWS_AS(apply_move(p, {Axis::rows, {1, 2}}), DomainError);
	CHECK_THROWS_AS(apply_move(p, {Axis::rows, {3}}), DomainError);
	CHECK_THROWS_AS(apply_move(p, {Axis::columns, {2, 1}}), DomainError);
	CHECK_THROWS_AS(apply_move(Partition{}, {Axis::rows, {}}), DomainError);
}

TEST_CASE("enumerate_partitions counts match the partition-number recurrence") {
	CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
	CHECK(enumerate_partitions(5).size() == 7);
	CHECK(enumerate_partitions(15).size() == 176);
	for (int n = 0; n <= 30; ++n)
		CHECK(static_cast<long long>(enumerate_partitions(n).size()) == testsupport::partition_count(n));
	CHECK_THROWS_AS(enumerate_partitions(-1), DomainError);
	CHECK_THROWS_AS(enumerate_partitions(kMaxEnumerationOrder + 1), DomainError);
}

TEST_CASE("enumeration order is reverse-lexicographic") {
	const auto four = enumerate_partitions(4);
	CHECK(four == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
	const auto modc = enumerate_partitions(4, true);
	CHECK(modc == std::vector<Partition>{{2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
	for (int n = 1; n <= 16; ++n) {
		auto level = enumerate_partitions(n);
		CHECK(std::is_sorted(level.rbegin(), level.rend()));
		for (const auto& p : enumerate_partitions(n, true)) CHECK_FALSE(conjugate(p) < p);
	}
}

TEST_CASE("young_interval enumerates exactly the Young interval") {
	const Partition lower{2, 1};
	const Partition upper{3, 3};
	std::set<Partition> expected;
	for (int n = 0; n <= 6; ++n)
		for (const auto& p : enumerate_partitions(n))
			if (young_leq(lower, p) && young_leq(p, upper)) expected.insert(p);
	const auto got = young_interval(lower, upper);
	CHECK(std::set<Partition>(got.begin(), got.end()) == expected);
	CHECK(got.size() == expected.size());
	CHECK(young_interval(Partition{3}, Partition{2, 2}).empty());
}

TEST_CASE("property: conjugation is an involution for n <= 20") {
	for (int n = 0; n <= 20; ++n)
		for (const auto& p : enumerate_partitions(n)) {
			CHECK(conjugate(conjugate(p)) == p);
			CHECK(conjugate(p).size() == n);
		}
}

TEST_CASE("property: young_leq is a partial order for n <= 12") {
	const auto all = enumerate_partitions_upto(12);
	std::size_t violations = 0;
	for (const auto& a : all) {
		if (!young_leq(a, a)) ++violations;
		for (const auto& b : all) {
			if (!young_leq(a, b)) continue;
			if (young_leq(b, a) && !(a == b)) ++violations;
			for (const auto& c : all)
				if (young_leq(b, c) && !young_leq(a, c)) ++violations;
		}
	}
	CHECK(all.size() == 272);
	CHECK(violations == 0);
}

TEST_CASE("property: parse(format(p)) == p for n <= 15 in both notations") {
	for (const auto& p : enumerate_partitions_upto(15)) {
		CHECK(parse_partition(to_string(p, Notation::plain)) == p);
		CHECK(parse_partition(to_string(p, Notation::exponent)) == p);
	}
}

TEST_CASE("property: moves agree with a bitmask enumeration and shrink rows+columns") {
	for (const auto& p : enumerate_partitions_upto(12)) {
		const auto moves = pnim_moves(p);
		std::set<testsupport::Parts> got;
		for (const auto& m : moves) {
			got.insert(m.vec());
			CHECK(rows_plus_columns(m) < rows_plus_columns(p));
			CHECK_NOTHROW(Partition(m.vec()));
		}
		CHECK(got.size() == moves.size());
		CHECK(got == testsupport::successors_by_mask(p.vec()));

		const auto listed = pnim_move_list(p);
		CHECK(listed.size() == moves.size());
		for (const auto& m : listed) CHECK(apply_move(p, m.descriptor) == m.result);
	}
}
