#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nimshape/engine.hpp"
#include "nimshape/oracle.hpp"
#include "nimshape/position.hpp"

namespace nimshape {

struct PlayOptions {
	Convention convention = Convention::normal;
	bool human_first = true;
	Notation notation = Notation::plain;
};

struct PlayResult {
	bool completed = false;         // false when input ended before the game did
	std::optional<bool> human_won;  // set when completed
	std::vector<std::string> transcript;
};

// Interactive game on a text stream. Each turn prints the position; the human enters moves
// in the "rm rows ..." / "set side ..." notation and is re-prompted on illegal input.
PlayResult play_session(Engine& engine, const SumPosition& start, PlayOptions options, std::istream& in,
                        std::ostream& out);

}  // namespace nimshape
