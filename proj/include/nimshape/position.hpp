#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nimshape/hyperrect.hpp"
#include "nimshape/partition.hpp"

namespace nimshape {

enum class Ruleset { pnim, rnim };

std::string_view to_string(Ruleset ruleset) noexcept;
Ruleset parse_ruleset(std::string_view text);

using Component = std::variant<Partition, Hyperrect>;

bool is_terminal(const Component& c) noexcept;
std::string to_string(const Component& c, Notation notation = Notation::plain);

// A disjunctive sum of components of a single ruleset. Component order is kept for move
// reporting; it does not affect values.
struct SumPosition {
	Ruleset ruleset = Ruleset::pnim;
	std::vector<Component> components;

	SumPosition() = default;
	SumPosition(Ruleset r, std::vector<Component> cs);
	explicit SumPosition(Partition p) : ruleset(Ruleset::pnim), components{std::move(p)} {}
	explicit SumPosition(Hyperrect h) : ruleset(Ruleset::rnim), components{std::move(h)} {}

	std::size_t size() const noexcept { return components.size(); }
	friend bool operator==(const SumPosition&, const SumPosition&) = default;
};

// No component has a move.
bool is_terminal(const SumPosition& p) noexcept;

// "[4,2,1]+[3,3]" or "(5,4,2)+(2,3)". Mixing the two notations is a ParseError.
SumPosition parse_sum(std::string_view text);
std::string to_string(const SumPosition& p, Notation notation = Notation::plain);

struct MoveDescriptor {
	std::size_t component = 0;  // 0-based
	std::variant<MoveDescriptorP, MoveDescriptorR> move;

	friend bool operator==(const MoveDescriptor&, const MoveDescriptor&) = default;
};

struct SumMove {
	MoveDescriptor descriptor;
	Component result;  // the new value of the moved component
};

// Component by component, each in its own enumeration order.
std::vector<SumMove> sum_move_list(const SumPosition& p);
std::vector<SumMove> component_move_list(const Component& c, std::size_t index);

SumPosition apply_move(const SumPosition& p, const MoveDescriptor& move);
SumPosition replace_component(const SumPosition& p, std::size_t index, Component c);

// Human move notation: "rm rows 2,3 of 1", "rm cols 1 of 2", "set side 2 of 1 to 4".
// Indices are 1-based and "of K" may be omitted for single-component positions.
std::string format_move(const SumPosition& before, const MoveDescriptor& move);
MoveDescriptor parse_move(std::string_view text, const SumPosition& position);

}  // namespace nimshape
