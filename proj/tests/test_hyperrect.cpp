#include "doctest.h"

#include <nimshape/hyperrect.hpp>
#include <nimshape/position.hpp>

#include <numeric>
#include <set>

using namespace nimshape;

TEST_CASE("parse_hyperrect") {
	CHECK(parse_hyperrect("(5,4,2)") == Hyperrect{5, 4, 2});
	const auto h = parse_hyperrect("(0,3)");
	CHECK(h == Hyperrect{0, 3});
	CHECK(is_terminal_rect(h));
	CHECK_THROWS_AS(parse_hyperrect("()"), ParseError);
	CHECK_THROWS_AS(parse_hyperrect("(1,-2)"), ParseError);
	CHECK_THROWS_AS(parse_hyperrect("(1,2"), ParseError);
	CHECK_THROWS_AS(Hyperrect(std::vector<int>{}), DomainError);
	CHECK(to_string(Hyperrect{5, 4, 2}) == "(5,4,2)");
}

TEST_CASE("is_terminal_rect") {
	CHECK(is_terminal_rect(Hyperrect{0, 3}));
	CHECK_FALSE(is_terminal_rect(Hyperrect{1, 1, 1}));
	CHECK_FALSE(is_terminal_rect(Hyperrect{2, 3}));
}

TEST_CASE("rnim_moves examples") {
	auto moves = rnim_moves(Hyperrect{5, 4, 2});
	CHECK(std::find(moves.begin(), moves.end(), Hyperrect{5, 1, 2}) != moves.end());
	CHECK(rnim_moves(Hyperrect{0, 3}).empty());
	CHECK(rnim_moves(Hyperrect{2, 2}) ==
	      std::vector<Hyperrect>{Hyperrect{0, 2}, Hyperrect{1, 2}, Hyperrect{2, 0}, Hyperrect{2, 1}});
}

TEST_CASE("rnim_move_list order and apply_move") {
	const Hyperrect h{2, 3};
	const auto list = rnim_move_list(h);
	REQUIRE(list.size() == 5);
	CHECK(list[0].descriptor == MoveDescriptorR{1, 0});
	CHECK(list[1].descriptor == MoveDescriptorR{1, 1});
	CHECK(list[2].descriptor == MoveDescriptorR{2, 0});
	CHECK(list[4].result == Hyperrect{2, 2});
	for (const auto& m : list) CHECK(apply_move(h, m.descriptor) == m.result);
	CHECK_THROWS_AS(apply_move(h, {1, 2}), DomainError);
	CHECK_THROWS_AS(apply_move(h, {3, 0}), DomainError);
	CHECK_THROWS_AS(apply_move(Hyperrect{0, 3}, {2, 1}), DomainError);
}

TEST_CASE("dimension is part of the position") {
	CHECK_FALSE(Hyperrect{2, 1} == Hyperrect{2, 1, 1});
	const auto all = enumerate_hyperrects(2, 3);
	CHECK(all.size() == 4 + 16);
	CHECK(enumerate_hyperrects(3, 2, 1).size() == 2 + 4 + 8);
}

TEST_CASE("property: move counts, sum decrease, terminal emptiness") {
	for (const auto& h : enumerate_hyperrects(3, 4)) {
		const auto moves = rnim_moves(h);
		const int total = std::accumulate(h.vec().begin(), h.vec().end(), 0);
		if (is_terminal_rect(h)) {
			CHECK(moves.empty());
			continue;
		}
		// distinct (side, length) pairs give distinct tuples, so the count is exactly the side sum
		CHECK(static_cast<int>(moves.size()) == total);
		CHECK(rnim_move_list(h).size() == moves.size());
		for (const auto& m : moves) {
			CHECK(m.dimension() == h.dimension());
			CHECK(std::accumulate(m.vec().begin(), m.vec().end(), 0) < total);
		}
	}
}

TEST_CASE("parse_sum and to_string") {
	const auto s = parse_sum("[4,2,1]+[3,3]");
	CHECK(s.ruleset == Ruleset::pnim);
	REQUIRE(s.size() == 2);
	CHECK(std::get<Partition>(s.components[1]) == Partition{3, 3});
	CHECK(to_string(s) == "[4,2,1]+[3,3]");
	CHECK(to_string(parse_sum("[3,3]"), Notation::exponent) == "[3^2]");

	const auto r = parse_sum("(5,4,2) + (2,3)");
	CHECK(r.ruleset == Ruleset::rnim);
	CHECK(to_string(r) == "(5,4,2)+(2,3)");

	CHECK_THROWS_AS(parse_sum("[2]+(1,1)"), ParseError);
	CHECK_THROWS_AS(parse_sum(""), ParseError);
	CHECK_THROWS_AS(parse_sum("[2]+"), ParseError);
	CHECK_THROWS_AS(SumPosition(Ruleset::pnim, {Hyperrect{1}}), DomainError);
}

TEST_CASE("sum terminality requires every component terminal") {
	CHECK(is_terminal(parse_sum("[]+[]")));
	CHECK_FALSE(is_terminal(parse_sum("[]+[1]")));
	CHECK(is_terminal(parse_sum("(0,2)+(3,0)")));
	CHECK_FALSE(is_terminal(parse_sum("(0,2)+(1)")));
}

TEST_CASE("move notation round-trips") {
	const auto p = parse_sum("[4,2,1]+[3,3]");
	const auto moves = sum_move_list(p);
	CHECK(moves.size() == pnim_moves(Partition{4, 2, 1}).size() + pnim_moves(Partition{3, 3}).size());
	for (const auto& m : moves) {
		const auto text = format_move(p, m.descriptor);
		const auto parsed = parse_move(text, p);
		CHECK(apply_move(p, parsed) == replace_component(p, m.descriptor.component, m.result));
	}

	const auto r = parse_sum("(5,4,2)+(2,3)");
	for (const auto& m : sum_move_list(r)) {
		const auto parsed = parse_move(format_move(r, m.descriptor), r);
		CHECK(parsed == m.descriptor);
	}
}

TEST_CASE("move notation examples and errors") {
	const auto p = parse_sum("[4,2,1]");
	auto d = parse_move("rm rows 2,3", p);
	CHECK(apply_move(p, d) == parse_sum("[4]"));
	d = parse_move("rm cols 1 of 1", p);
	CHECK(apply_move(p, d) == parse_sum("[3,1]"));
	CHECK(format_move(p, {0, MoveDescriptorP{Axis::rows, {1}}}) == "rm rows 2,3 of 1");

	const auto r = parse_sum("(5,4,2)+(2,3)");
	d = parse_move("set side 2 of 1 to 1", r);
	CHECK(apply_move(r, d) == parse_sum("(5,1,2)+(2,3)"));

	CHECK(apply_move(p, parse_move("rm rows 1,2,3", p)) == parse_sum("[]"));
	CHECK_THROWS_AS(parse_move("rm rows 2,2", p), ParseError);
	CHECK_THROWS_AS(parse_move("rm rows 4", p), ParseError);
	CHECK_THROWS_AS(parse_move("set side 1 of 1 to 5", r), ParseError);
	CHECK_THROWS_AS(parse_move("set side 1 to 2", r), ParseError);  // ambiguous component
	CHECK_THROWS_AS(parse_move("jump", p), ParseError);
	CHECK_THROWS_AS(parse_move("rm rows 1 of 1", parse_sum("[]")), ParseError);
}
