#include "nimshape/closed_forms.hpp"

#include <algorithm>

namespace nimshape {

Partition rectangle(RectSpec shape) {
	if (shape.r < 1 || shape.c < 1) throw DomainError("rectangle sides must be positive");
	return Partition::from_sorted(std::vector<int>(static_cast<std::size_t>(shape.r), shape.c));
}

unsigned shifted_mex(std::span<const unsigned> set, unsigned k) {
	if (k < 1) throw DomainError("shift must be at least 1");
	std::vector<unsigned> shifted;
	for (unsigned i = 0; i < k; ++i) shifted.push_back(i);
	for (unsigned s : set) shifted.push_back(s + k);
	std::sort(shifted.begin(), shifted.end());
	unsigned m = 0;
	for (unsigned v : shifted) {
		if (v == m)
			++m;
		else if (v > m)
			break;
	}
	return m;
}

unsigned rect_grundy(RectSpec shape) {
	if (shape.r < 1 || shape.c < 1) throw DomainError("rectangle sides must be positive");
	return (static_cast<unsigned>(shape.r - 1) ^ static_cast<unsigned>(shape.c - 1)) + 1;
}

unsigned hyperrect_grundy(const Hyperrect& h) noexcept {
	if (is_terminal_rect(h)) return 0;
	unsigned x = 0;
	for (int k : h.sides()) x ^= static_cast<unsigned>(k - 1);
	return x + 1;
}

unsigned rnim_sum_grundy(std::span<const Hyperrect> components) {
	if (components.empty()) throw DomainError("a sum needs at least one component");
	unsigned x = 0;
	for (const auto& h : components) x ^= hyperrect_grundy(h);
	return x;
}

unsigned two_row_grundy(int c1, int c2) {
	if (c2 < 1 || c1 < c2) throw DomainError("two-row formula needs c1 >= c2 >= 1");
	if (c1 == c2 && c1 % 2 == 0) return static_cast<unsigned>(c1 - 1);
	return static_cast<unsigned>(c1 + 1);
}

bool rect_is_heavy(RectSpec shape) {
	if (shape.r < 1 || shape.c < 1) throw DomainError("rectangle sides must be positive");
	const auto n = static_cast<unsigned long long>(shape.r - 1);
	const auto m = static_cast<unsigned long long>(shape.c + shape.r - 2);
	return (n & ~m) == 0;
}

bool sg1_member(const Partition& p) noexcept {
	if (p.length() == 1 && p[0] == 1) return true;
	const int r = static_cast<int>(p.length());
	if (r < 2 || p.largest() != r) return false;
	for (int i = 2; i <= r; ++i)
		if (p[static_cast<std::size_t>(i - 1)] < r - i + 2) return false;
	return true;
}

Partition hook(int c, int r) {
	if (c < 1 || r < 1) throw DomainError("hook parameters must be positive");
	std::vector<int> parts{c};
	parts.insert(parts.end(), static_cast<std::size_t>(r - 1), 1);
	return Partition(std::move(parts));
}

Partition staircase(int c, int r) {
	if (r < 1 || c < r) throw DomainError("staircase needs c >= r >= 1");
	std::vector<int> parts;
	for (int j = 0; j < r; ++j) parts.push_back(c - j);
	return Partition(std::move(parts));
}

Partition shallow_staircase(int i, int s, int k) {
	if (i < 1 || s < 1 || k < 1) throw DomainError("shallow staircase parameters must be positive");
	std::vector<int> parts;
	for (int j = k - 1; j >= 0; --j) parts.push_back(i + j * s);
	return Partition(std::move(parts));
}

Partition chopped_rect_lower(int a, int b) {
	if (b < 0 || a < b) throw DomainError("chopped rectangle needs 0 <= b <= a");
	if (!rect_is_heavy({b + 1, a + 1}))
		throw DomainError("chopped rectangle premise fails: ⟨(a+1)^(b+1)⟩ is not heavy");
	std::vector<int> parts;
	for (int j = 0; j <= b; ++j) parts.push_back(a + 1 - j);
	return Partition(std::move(parts));
}

Partition heavy_family_witness(HeavyFamily kind, std::span<const int> params) {
	auto need = [&](std::size_t n) {
		if (params.size() != n) throw DomainError("expected " + std::to_string(n) + " family parameters");
	};
	switch (kind) {
	case HeavyFamily::hook: need(2); return hook(params[0], params[1]);
	case HeavyFamily::staircase: need(2); return staircase(params[0], params[1]);
	case HeavyFamily::shallow_staircase: need(3); return shallow_staircase(params[0], params[1], params[2]);
	case HeavyFamily::chopped_rect: need(2); return chopped_rect_lower(params[0], params[1]);
	}
	throw DomainError("unknown family");
}

}  // namespace nimshape
