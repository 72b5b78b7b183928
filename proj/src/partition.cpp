#include "nimshape/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <set>

namespace nimshape {

namespace {

std::string strip_whitespace(std::string_view text) {
	std::string out;
	out.reserve(text.size());
	for (char ch : text)
		if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
	return out;
}

int parse_int(std::string_view token, std::string_view context) {
	if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
		throw ParseError("malformed integer '" + std::string(token) + "' in '" + std::string(context) + "'");
	int value = 0;
	auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
	if (ec != std::errc() || ptr != token.data() + token.size())
		throw ParseError("integer out of range '" + std::string(token) + "'");
	return value;
}

struct Block {
	int value;
	int count;
	int start;  // 0-based index of the first copy
};

std::vector<Block> blocks_of(const std::vector<int>& parts) {
	std::vector<Block> blocks;
	for (std::size_t i = 0; i < parts.size(); ++i) {
		if (!blocks.empty() && blocks.back().value == parts[i])
			++blocks.back().count;
		else
			blocks.push_back({parts[i], 1, static_cast<int>(i)});
	}
	return blocks;
}

// Calls emit(kept_indices_1based, kept_parts) for each proper sub-multiset of `parts`.
template<typename Emit>
void for_each_proper_submultiset(const std::vector<int>& parts, Emit&& emit) {
	const auto blocks = blocks_of(parts);
	std::vector<int> counts(blocks.size(), 0);
	std::vector<int> kept;
	std::vector<int> kept_parts;
	for (;;) {
		bool full = true;
		for (std::size_t g = 0; g < blocks.size(); ++g) full = full && counts[g] == blocks[g].count;
		if (!full) {
			kept.clear();
			kept_parts.clear();
			for (std::size_t g = 0; g < blocks.size(); ++g) {
				for (int c = 0; c < counts[g]; ++c) {
					kept.push_back(blocks[g].start + c + 1);
					kept_parts.push_back(blocks[g].value);
				}
			}
			emit(kept, kept_parts);
		}
		// odometer, last block fastest
		std::size_t g = blocks.size();
		while (g > 0) {
			--g;
			if (counts[g] < blocks[g].count) {
				++counts[g];
				break;
			}
			counts[g] = 0;
			if (g == 0) return;
		}
		if (blocks.empty()) return;
	}
}

void generate(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
	if (remaining == 0) {
		out.push_back(Partition::from_sorted(current));
		return;
	}
	for (int part = std::min(remaining, max_part); part >= 1; --part) {
		current.push_back(part);
		generate(remaining - part, part, current, out);
		current.pop_back();
	}
}

}  // namespace

Partition::Partition(std::vector<int> parts) : _parts(std::move(parts)) {
	for (std::size_t i = 0; i < _parts.size(); ++i) {
		if (_parts[i] < 1) throw DomainError("partition parts must be positive");
		if (i > 0 && _parts[i] > _parts[i - 1]) throw DomainError("partition parts must be weakly decreasing");
	}
}

int Partition::size() const noexcept {
	return std::accumulate(_parts.begin(), _parts.end(), 0);
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
	std::size_t h = 0xcbf29ce484222325ULL;
	for (int part : p.parts()) {
		h ^= static_cast<std::size_t>(part);
		h *= 0x100000001b3ULL;
	}
	return h ^ p.length();
}

Partition parse_partition(std::string_view text) {
	const std::string s = strip_whitespace(text);
	if (s.size() < 2 || s.front() != '[' || s.back() != ']')
		throw ParseError("partition must be enclosed in brackets: '" + std::string(text) + "'");
	std::string_view body(s.data() + 1, s.size() - 2);
	std::vector<int> parts;
	if (body.empty()) return Partition();

	std::size_t pos = 0;
	while (pos <= body.size()) {
		std::size_t comma = body.find(',', pos);
		if (comma == std::string_view::npos) comma = body.size();
		std::string_view term = body.substr(pos, comma - pos);
		if (term.empty()) throw ParseError("empty term in '" + s + "'");

		int value = 0;
		int exponent = 1;
		if (auto caret = term.find('^'); caret != std::string_view::npos) {
			value = parse_int(term.substr(0, caret), term);
			exponent = parse_int(term.substr(caret + 1), term);
		} else {
			value = parse_int(term, term);
		}
		if (value < 1) throw ParseError("part not positive at token '" + std::string(term) + "'");
		if (exponent > 0) {
			if (!parts.empty() && value > parts.back())
				throw ParseError("parts increase at token '" + std::string(term) + "'");
			parts.insert(parts.end(), static_cast<std::size_t>(exponent), value);
		}
		pos = comma + 1;
	}
	return Partition::from_sorted(std::move(parts));
}

std::string to_string(const Partition& p, Notation notation) {
	std::string out = "[";
	if (notation == Notation::plain) {
		for (std::size_t i = 0; i < p.length(); ++i) {
			if (i) out += ',';
			out += std::to_string(p[i]);
		}
	} else {
		bool first = true;
		for (const auto& block : blocks_of(p.vec())) {
			if (!first) out += ',';
			first = false;
			out += std::to_string(block.value);
			if (block.count > 1) out += '^' + std::to_string(block.count);
		}
	}
	out += ']';
	return out;
}

Partition conjugate(const Partition& p) {
	std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
	for (int part : p.parts())
		for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
	return Partition::from_sorted(std::move(out));
}

Partition canonical(const Partition& p) {
	Partition c = conjugate(p);
	return c < p ? c : p;
}

int rank(const Partition& p) {
	if (p.empty()) throw DomainError("rank is undefined for the empty partition");
	return std::abs(p.largest() - static_cast<int>(p.length()));
}

bool young_leq(const Partition& lambda, const Partition& mu) {
	if (lambda.length() > mu.length()) return false;
	for (std::size_t j = 0; j < lambda.length(); ++j)
		if (lambda[j] > mu[j]) return false;
	return true;
}

int rows_plus_columns(const Partition& p) noexcept {
	return static_cast<int>(p.length()) + p.largest();
}

std::vector<PnimMove> pnim_move_list(const Partition& p) {
	std::vector<PnimMove> moves;
	if (p.empty()) return moves;
	std::set<Partition> seen;
	for_each_proper_submultiset(p.vec(), [&](const std::vector<int>& kept, const std::vector<int>& parts) {
		auto result = Partition::from_sorted(parts);
		if (seen.insert(result).second) moves.push_back({{Axis::rows, kept}, std::move(result)});
	});
	const Partition columns = conjugate(p);
	for_each_proper_submultiset(columns.vec(), [&](const std::vector<int>& kept, const std::vector<int>& parts) {
		auto result = conjugate(Partition::from_sorted(parts));
		if (seen.insert(result).second) moves.push_back({{Axis::columns, kept}, std::move(result)});
	});
	return moves;
}

std::vector<Partition> pnim_moves(const Partition& p) {
	std::vector<Partition> out;
	if (p.empty()) return out;
	for_each_proper_submultiset(p.vec(), [&](const std::vector<int>&, const std::vector<int>& parts) {
		out.push_back(Partition::from_sorted(parts));
	});
	const Partition columns = conjugate(p);
	for_each_proper_submultiset(columns.vec(), [&](const std::vector<int>&, const std::vector<int>& parts) {
		out.push_back(conjugate(Partition::from_sorted(parts)));
	});
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

Partition apply_move(const Partition& p, const MoveDescriptorP& move) {
	if (p.empty()) throw DomainError("no moves from the empty partition");
	const Partition source = move.axis == Axis::rows ? p : conjugate(p);
	const int limit = static_cast<int>(source.length());
	if (static_cast<int>(move.kept.size()) >= limit)
		throw DomainError("a move must remove at least one row or column");
	std::vector<int> parts;
	int previous = 0;
	for (int index : move.kept) {
		if (index < 1 || index > limit) throw DomainError("index " + std::to_string(index) + " out of range");
		if (index <= previous) throw DomainError("retained indices must be strictly increasing");
		parts.push_back(source[static_cast<std::size_t>(index - 1)]);
		previous = index;
	}
	auto kept = Partition::from_sorted(std::move(parts));
	return move.axis == Axis::rows ? kept : conjugate(kept);
}

std::vector<Partition> enumerate_partitions(int n, bool up_to_conjugation) {
	if (n < 0) throw DomainError("partition order must be nonnegative");
	if (n > kMaxEnumerationOrder)
		throw DomainError("enumeration bound exceeded: n=" + std::to_string(n) + " > " +
		                  std::to_string(kMaxEnumerationOrder));
	std::vector<Partition> all;
	std::vector<int> current;
	generate(n, n, current, all);
	if (!up_to_conjugation) return all;
	std::vector<Partition> kept;
	for (auto& p : all)
		if (!(conjugate(p) < p)) kept.push_back(std::move(p));
	return kept;
}

std::vector<Partition> enumerate_partitions_upto(int n_max, bool up_to_conjugation) {
	std::vector<Partition> out;
	for (int n = 0; n <= n_max; ++n) {
		auto level = enumerate_partitions(n, up_to_conjugation);
		out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
	}
	return out;
}

namespace {

void interval_rec(const Partition& lower, const Partition& upper, std::size_t row, int bound,
                  std::vector<int>& current, std::vector<Partition>& out) {
	const int floor = row < lower.length() ? lower[row] : 0;
	if (row == upper.length()) {
		if (floor == 0) out.push_back(Partition::from_sorted(current));
		return;
	}
	for (int v = std::min(bound, upper[row]); v >= std::max(floor, 1); --v) {
		current.push_back(v);
		interval_rec(lower, upper, row + 1, v, current, out);
		current.pop_back();
	}
	if (floor == 0) out.push_back(Partition::from_sorted(current));
}

}  // namespace

std::vector<Partition> young_interval(const Partition& lower, const Partition& upper) {
	std::vector<Partition> out;
	if (!young_leq(lower, upper)) return out;
	std::vector<int> current;
	interval_rec(lower, upper, 0, std::numeric_limits<int>::max(), current, out);
	return out;
}

}  // namespace nimshape
