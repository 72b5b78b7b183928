#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "nimshape/engine.hpp"
#include "nimshape/position.hpp"

namespace nimshape {

enum class Convention { normal, misere };

// Reference evaluator used to check the engine. It shares no evaluation code with it:
// moves come from a bitmask enumeration of row/column subsets and a cell-grid transpose,
// sums are searched as one product game, and memoization is keyed on the raw position.
class Oracle {
public:
	explicit Oracle(Convention convention, std::size_t budget = kDefaultBudget)
	    : _convention(convention), _budget(budget) {}

	unsigned value(const SumPosition& p);
	std::size_t states() const noexcept { return _memo.size(); }

private:
	using RawPosition = std::vector<std::vector<int>>;
	unsigned solve(Ruleset ruleset, const RawPosition& p);

	Convention _convention;
	std::size_t _budget;
	std::map<std::pair<Ruleset, RawPosition>, unsigned> _memo;
};

unsigned oracle_grundy(const SumPosition& p, Convention convention, std::size_t budget = kDefaultBudget);

}  // namespace nimshape
