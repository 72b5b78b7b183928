#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nimshape/partition.hpp"

namespace nimshape {

// A d-dimensional hyperrectangle given by its side lengths, d >= 1. Dimension is part of
// the position: (2,1) and (2,1,1) are different positions.
class Hyperrect {
public:
	Hyperrect() : _sides{0} {}
	explicit Hyperrect(std::vector<int> sides);
	Hyperrect(std::initializer_list<int> sides) : Hyperrect(std::vector<int>(sides)) {}

	std::span<const int> sides() const noexcept { return _sides; }
	const std::vector<int>& vec() const noexcept { return _sides; }
	std::size_t dimension() const noexcept { return _sides.size(); }
	int operator[](std::size_t i) const noexcept { return _sides[i]; }

	friend auto operator<=>(const Hyperrect&, const Hyperrect&) = default;
	friend bool operator==(const Hyperrect&, const Hyperrect&) = default;

private:
	std::vector<int> _sides;
};

struct HyperrectHash {
	std::size_t operator()(const Hyperrect& h) const noexcept;
};

// Lower side `side_index` (1-based) to `new_length`.
struct MoveDescriptorR {
	int side_index = 1;
	int new_length = 0;

	friend bool operator==(const MoveDescriptorR&, const MoveDescriptorR&) = default;
};

struct RnimMove {
	MoveDescriptorR descriptor;
	Hyperrect result;
};

Hyperrect parse_hyperrect(std::string_view text);
std::string to_string(const Hyperrect& h);

bool is_terminal_rect(const Hyperrect& h) noexcept;

// Moves in enumeration order: side 1 first, new length ascending. Empty when terminal.
std::vector<RnimMove> rnim_move_list(const Hyperrect& h);

// Distinct successors, sorted lexicographically.
std::vector<Hyperrect> rnim_moves(const Hyperrect& h);

Hyperrect apply_move(const Hyperrect& h, const MoveDescriptorR& move);

// Every hyperrectangle with dimension in [1, max_dim] and all sides in [0, max_side],
// ordered by dimension then lexicographically.
std::vector<Hyperrect> enumerate_hyperrects(int max_dim, int max_side, int min_side = 0);

}  // namespace nimshape
