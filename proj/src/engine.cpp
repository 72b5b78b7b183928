#include "nimshape/engine.hpp"

#include <algorithm>

#include "nimshape/cache.hpp"
#include "nimshape/strategy.hpp"

namespace nimshape {

bool is_pet_pair(GrundyPair pair) noexcept {
	if (pair.g == 0) return pair.g_minus == 1;
	if (pair.g == 1) return pair.g_minus == 0;
	return pair.g == pair.g_minus;
}

unsigned mex(std::span<const unsigned> values) {
	if (values.empty()) return 0;
	const unsigned top = *std::max_element(values.begin(), values.end());
	std::vector<bool> present(static_cast<std::size_t>(top) + 1, false);
	for (unsigned v : values) present[v] = true;
	const auto gap = std::find(present.begin(), present.end(), false);
	return static_cast<unsigned>(gap - present.begin());
}

namespace {

template<typename Successors, typename Eval>
GrundyPair mex_pair(const Successors& successors, Eval&& eval) {
	std::vector<unsigned> normal;
	std::vector<unsigned> misere;
	normal.reserve(successors.size());
	misere.reserve(successors.size());
	for (const auto& s : successors) {
		const GrundyPair pair = eval(s);
		normal.push_back(pair.g);
		misere.push_back(pair.g_minus);
	}
	return {mex(normal), mex(misere)};
}

}  // namespace

void Engine::charge() {
	if (_insertions.fetch_add(1) + 1 > _config.budget)
		throw BudgetExceeded("evaluation budget of " + std::to_string(_config.budget) + " memo entries exceeded");
}

GrundyPair Engine::evaluate(const Partition& p) {
	if (p.empty()) return {0, 1};
	const Partition key = canonical(p);
	if (auto hit = _pnim.find(key)) return *hit;
	const GrundyPair value = mex_pair(pnim_moves(key), [this](const Partition& s) { return evaluate(s); });
	charge();
	_pnim.insert(key, value);
	return value;
}

GrundyPair Engine::evaluate(const Hyperrect& h) {
	if (is_terminal_rect(h)) return {0, 1};
	if (auto hit = _rnim.find(h)) return *hit;
	const GrundyPair value = mex_pair(rnim_moves(h), [this](const Hyperrect& s) { return evaluate(s); });
	charge();
	_rnim.insert(h, value);
	return value;
}

GrundyPair Engine::evaluate(const Component& c) {
	return std::visit([this](const auto& x) { return evaluate(x); }, c);
}

unsigned Engine::grundy(const SumPosition& p) {
	unsigned total = 0;
	for (const auto& c : p.components) total ^= evaluate(c).g;
	return total;
}

unsigned Engine::misere_grundy(const SumPosition& p) {
	return grundy_pair(p).g_minus;
}

GrundyPair Engine::grundy_pair(const SumPosition& p) {
	if (p.components.size() == 1) {
		const GrundyPair pair = evaluate(p.components.front());
		if (!is_pet_pair(pair))
			throw std::logic_error("engine produced non-pet pair (" + std::to_string(pair.g) + "," +
			                       std::to_string(pair.g_minus) + ") for " + to_string(p));
		return pair;
	}
	std::vector<unsigned> values;
	values.reserve(p.components.size());
	for (const auto& c : p.components) values.push_back(evaluate(c).g);
	return misere_sum_pair(values);
}

std::size_t Engine::memo_size(Ruleset ruleset) const {
	return ruleset == Ruleset::pnim ? _pnim.size() : _rnim.size();
}

MemoTable Engine::export_table(Ruleset ruleset) const {
	MemoTable table;
	table.ruleset = ruleset;
	auto put = [&table](const auto& key, GrundyPair value) {
		table.entries.emplace(key.vec(), MemoEntry{value.g, value.g_minus});
	};
	if (ruleset == Ruleset::pnim)
		_pnim.for_each(put);
	else
		_rnim.for_each(put);
	return table;
}

void Engine::import_table(const MemoTable& table) {
	for (const auto& [key, entry] : table.entries) {
		if (!entry.g_minus) continue;
		const GrundyPair value{entry.g, *entry.g_minus};
		if (table.ruleset == Ruleset::pnim) {
			auto p = canonical(Partition(key));
			if (!p.empty()) _pnim.insert(p, value);
		} else {
			Hyperrect h(key);
			if (!is_terminal_rect(h)) _rnim.insert(h, value);
		}
	}
}

unsigned longest_play(const Partition& p) noexcept {
	if (p.empty()) return 0;
	return static_cast<unsigned>(p.largest() + static_cast<int>(p.length()) - 1);
}

bool is_heavy(Engine& engine, const Partition& p) {
	if (p.empty()) throw DomainError("heaviness is defined for nonempty partitions only");
	return engine.evaluate(p).g == longest_play(p);
}

}  // namespace nimshape
