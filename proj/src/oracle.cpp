#include "nimshape/oracle.hpp"

#include <algorithm>
#include <set>

namespace nimshape {

namespace {

using Rows = std::vector<int>;

// Transpose by laying out the diagram cell by cell.
Rows transpose(const Rows& rows) {
	if (rows.empty()) return {};
	int width = 0;
	for (int r : rows) width = std::max(width, r);
	std::vector<std::vector<bool>> grid(rows.size(), std::vector<bool>(static_cast<std::size_t>(width), false));
	for (std::size_t i = 0; i < rows.size(); ++i)
		for (int j = 0; j < rows[i]; ++j) grid[i][static_cast<std::size_t>(j)] = true;
	Rows out;
	for (int j = 0; j < width; ++j) {
		int height = 0;
		for (std::size_t i = 0; i < rows.size(); ++i)
			if (grid[i][static_cast<std::size_t>(j)]) ++height;
		out.push_back(height);
	}
	return out;
}

// Every proper subsequence of `rows`, one per bitmask.
std::vector<Rows> proper_subsequences(const Rows& rows) {
	std::vector<Rows> out;
	const std::size_t r = rows.size();
	if (r > 24) throw BudgetExceeded("oracle: too many rows for subset enumeration");
	const unsigned long full = (1UL << r) - 1;
	for (unsigned long mask = 0; mask < full; ++mask) {
		Rows kept;
		for (std::size_t i = 0; i < r; ++i)
			if (mask & (1UL << i)) kept.push_back(rows[i]);
		out.push_back(std::move(kept));
	}
	return out;
}

std::vector<Rows> partition_successors(const Rows& rows) {
	std::vector<Rows> out;
	if (rows.empty()) return out;
	out = proper_subsequences(rows);
	for (const Rows& cols : proper_subsequences(transpose(rows))) out.push_back(transpose(cols));
	return out;
}

std::vector<Rows> rect_successors(const Rows& sides) {
	std::vector<Rows> out;
	for (int s : sides)
		if (s == 0) return out;
	for (std::size_t i = 0; i < sides.size(); ++i) {
		for (int len = 0; len < sides[i]; ++len) {
			Rows next = sides;
			next[i] = len;
			out.push_back(std::move(next));
		}
	}
	return out;
}

}  // namespace

unsigned Oracle::solve(Ruleset ruleset, const RawPosition& p) {
	auto key = std::make_pair(ruleset, p);
	if (auto it = _memo.find(key); it != _memo.end()) return it->second;

	std::set<unsigned> seen;
	bool any_move = false;
	for (std::size_t i = 0; i < p.size(); ++i) {
		auto successors = ruleset == Ruleset::pnim ? partition_successors(p[i]) : rect_successors(p[i]);
		for (auto& s : successors) {
			any_move = true;
			RawPosition next = p;
			next[i] = std::move(s);
			seen.insert(solve(ruleset, next));
		}
	}
	unsigned value = 0;
	if (!any_move) {
		value = _convention == Convention::normal ? 0 : 1;
	} else {
		while (seen.count(value)) ++value;
	}
	if (_memo.size() >= _budget) throw BudgetExceeded("oracle budget exceeded");
	_memo.emplace(std::move(key), value);
	return value;
}

unsigned Oracle::value(const SumPosition& p) {
	RawPosition raw;
	for (const auto& c : p.components) {
		if (const auto* part = std::get_if<Partition>(&c))
			raw.push_back(part->vec());
		else
			raw.push_back(std::get<Hyperrect>(c).vec());
	}
	return solve(p.ruleset, raw);
}

unsigned oracle_grundy(const SumPosition& p, Convention convention, std::size_t budget) {
	Oracle oracle(convention, budget);
	return oracle.value(p);
}

}  // namespace nimshape
