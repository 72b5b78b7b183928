#include "nimshape/strategy.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace nimshape {

GrundyPair misere_sum_pair(std::span<const unsigned> normal_values) {
	if (normal_values.empty()) throw DomainError("a sum needs at least one component");
	unsigned x = 0;
	unsigned ones = 0;
	bool binary = true;
	for (unsigned v : normal_values) {
		x ^= v;
		if (v == 1) ++ones;
		if (v > 1) binary = false;
	}
	if (binary) return ones % 2 == 1 ? GrundyPair{1, 0} : GrundyPair{0, 1};
	return {x, x};
}

namespace {

bool component_less(const Component& a, const Component& b) {
	return a < b;  // same alternative within one sum
}

template<typename IsTarget>
MoveChoice select_move(Engine& engine, const SumPosition& p, IsTarget&& is_target) {
	if (is_terminal(p)) throw DomainError("no moves from a terminal position");
	std::vector<unsigned> values;
	for (const auto& c : p.components) values.push_back(engine.evaluate(c).g);

	std::optional<SumMove> fallback;
	for (std::size_t i = 0; i < p.components.size(); ++i) {
		std::optional<SumMove> best;
		for (auto& m : component_move_list(p.components[i], i)) {
			if (!fallback || (fallback->descriptor.component == i && component_less(m.result, fallback->result)))
				fallback = m;
			std::vector<unsigned> next = values;
			next[i] = engine.evaluate(m.result).g;
			if (!is_target(next, m.result)) continue;
			if (!best || component_less(m.result, best->result)) best = std::move(m);
		}
		if (best) return {best->descriptor, replace_component(p, i, best->result), true};
	}
	return {fallback->descriptor, replace_component(p, fallback->descriptor.component, fallback->result), false};
}

}  // namespace

MoveChoice best_move_normal(Engine& engine, const SumPosition& p) {
	return select_move(engine, p, [](const std::vector<unsigned>& values, const Component&) {
		unsigned x = 0;
		for (unsigned v : values) x ^= v;
		return x == 0;
	});
}

MoveChoice best_move_misere(Engine& engine, const SumPosition& p) {
	return select_move(engine, p, [&engine](const std::vector<unsigned>& values, const Component& moved) {
		if (values.size() == 1) return engine.evaluate(moved).g_minus == 0;
		return misere_sum_pair(values).g_minus == 0;
	});
}

MoveChoice best_move(Engine& engine, const SumPosition& p, Convention convention) {
	return convention == Convention::normal ? best_move_normal(engine, p) : best_move_misere(engine, p);
}

}  // namespace nimshape

namespace nimshape {

namespace {

// `p` has the strategy player to move.
bool wins_from(Engine& engine, const SumPosition& p, Convention convention, std::map<std::string, bool>& memo) {
	if (is_terminal(p)) return convention == Convention::misere;
	const std::string key = to_string(p);
	if (auto it = memo.find(key); it != memo.end()) return it->second;
	const MoveChoice choice = best_move(engine, p, convention);
	bool result = true;
	if (is_terminal(choice.successor)) {
		result = convention == Convention::normal;
	} else {
		for (const auto& reply : sum_move_list(choice.successor)) {
			const SumPosition next = replace_component(choice.successor, reply.descriptor.component, reply.result);
			if (is_terminal(next)) {
				// the opponent made the last move
				if (convention == Convention::normal) result = false;
			} else if (!wins_from(engine, next, convention, memo)) {
				result = false;
			}
			if (!result) break;
		}
	}
	memo.emplace(key, result);
	return result;
}

}  // namespace

bool strategy_wins_against_all(Engine& engine, const SumPosition& p, Convention convention) {
	std::map<std::string, bool> memo;
	return wins_from(engine, p, convention, memo);
}

}  // namespace nimshape
