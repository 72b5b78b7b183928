#pragma once

#include <optional>
#include <span>
#include <string>

#include "nimshape/engine.hpp"
#include "nimshape/oracle.hpp"
#include "nimshape/position.hpp"

namespace nimshape {

// Pair of a sum of pet components given their normal values: all values in {0,1} gives
// (1,0) on an odd number of ones and (0,1) on an even number; otherwise (k,k) with k the
// XOR of the values. Throws DomainError on an empty list.
GrundyPair misere_sum_pair(std::span<const unsigned> normal_values);

// The engine's reply. When `winning` is false no move to a losing position for the
// opponent exists and `move` is the fallback (first non-terminal component,
// lexicographically smallest successor).
struct MoveChoice {
	MoveDescriptor move;
	SumPosition successor;
	bool winning = false;
};

// Moves whose successor has normal (resp. misère) value 0; ties broken by smallest
// component index, then lexicographically smallest successor component. Both throw
// DomainError on a terminal position.
MoveChoice best_move_normal(Engine& engine, const SumPosition& p);
MoveChoice best_move_misere(Engine& engine, const SumPosition& p);
MoveChoice best_move(Engine& engine, const SumPosition& p, Convention convention);

// ---- Conway-Gurvich-Ho audit --------------------------------------------------------

enum class Verdict { verified, refuted, skipped };
std::string_view to_string(Verdict v) noexcept;

struct Witness {
	Component position;
	GrundyPair pair;
	std::optional<Component> successor;
	std::optional<GrundyPair> successor_pair;
};

struct ClassCheck {
	Verdict verdict = Verdict::skipped;
	std::optional<Witness> witness;
};

struct AuditBound {
	int max_order = 12;  // PNim: partitions of n <= max_order
	int max_dim = 2;     // RNim: dimensions 1..max_dim
	int max_side = 4;    // RNim: sides 0..max_side
};

struct CghReport {
	Ruleset ruleset = Ruleset::pnim;
	std::string sample;  // description of the bounded position space
	std::size_t positions = 0;
	ClassCheck pet, tame, miserable, returnable, forced;
};

// Checks the single-component game on every position of the bounded space. Moves are
// examined in enumeration order, so the first refutation found is deterministic.
CghReport cgh_audit(Engine& engine, Ruleset ruleset, AuditBound bound);

std::string describe(const Witness& w);

}  // namespace nimshape

namespace nimshape {

// Plays best_move from `p` (the strategy player to move) against every legal reply and
// returns true if the strategy player wins all resulting games under `convention`.
bool strategy_wins_against_all(Engine& engine, const SumPosition& p, Convention convention);

}  // namespace nimshape
