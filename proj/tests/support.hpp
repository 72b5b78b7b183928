#pragma once

// Small brute-force helpers shared by the unit tests. They work on raw vectors and do not
// call into the library, so they can serve as independent references.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace testsupport {

using Parts = std::vector<int>;

inline Parts transpose(const Parts& parts) {
	Parts out;
	if (parts.empty()) return out;
	for (int col = 0; col < parts.front(); ++col) {
		int height = 0;
		for (int p : parts)
			if (p > col) ++height;
		out.push_back(height);
	}
	return out;
}

// Every successor reachable by keeping a proper subset of rows or of columns, via 2^r masks.
inline std::set<Parts> successors_by_mask(const Parts& parts) {
	std::set<Parts> out;
	auto from_rows = [&](const Parts& rows, bool transpose_back) {
		const std::uint32_t full = (1u << rows.size()) - 1;
		for (std::uint32_t mask = 0; mask < full; ++mask) {
			Parts kept;
			for (std::size_t i = 0; i < rows.size(); ++i)
				if (mask & (1u << i)) kept.push_back(rows[i]);
			out.insert(transpose_back ? transpose(kept) : kept);
		}
	};
	if (parts.empty()) return out;
	from_rows(parts, false);
	from_rows(transpose(parts), true);
	return out;
}

// p(n) by the standard "largest part at most k" recurrence.
inline long long partition_count(int n) {
	std::vector<long long> ways(static_cast<std::size_t>(n) + 1, 0);
	ways[0] = 1;
	for (int part = 1; part <= n; ++part)
		for (int total = part; total <= n; ++total) ways[static_cast<std::size_t>(total)] += ways[static_cast<std::size_t>(total - part)];
	return ways[static_cast<std::size_t>(n)];
}

inline unsigned brute_mex(const std::set<unsigned>& values) {
	unsigned m = 0;
	while (values.count(m)) ++m;
	return m;
}

}  // namespace testsupport
