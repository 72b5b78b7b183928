#include "nimshape/hyperrect.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace nimshape {

Hyperrect::Hyperrect(std::vector<int> sides) : _sides(std::move(sides)) {
	if (_sides.empty()) throw DomainError("a hyperrectangle needs at least one side");
	for (int side : _sides)
		if (side < 0) throw DomainError("side lengths must be nonnegative");
}

std::size_t HyperrectHash::operator()(const Hyperrect& h) const noexcept {
	std::size_t seed = h.dimension();
	for (int side : h.sides()) seed ^= static_cast<std::size_t>(side) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
	return seed;
}

Hyperrect parse_hyperrect(std::string_view text) {
	std::string s;
	for (char ch : text)
		if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
	if (s.size() < 2 || s.front() != '(' || s.back() != ')')
		throw ParseError("hyperrectangle must be enclosed in parentheses: '" + std::string(text) + "'");
	std::string_view body(s.data() + 1, s.size() - 2);
	if (body.empty()) throw ParseError("empty tuple '()': a hyperrectangle needs at least one side");

	std::vector<int> sides;
	std::size_t pos = 0;
	while (pos <= body.size()) {
		std::size_t comma = body.find(',', pos);
		if (comma == std::string_view::npos) comma = body.size();
		std::string_view token = body.substr(pos, comma - pos);
		if (!token.empty() && token.front() == '-')
			throw ParseError("negative side length at token '" + std::string(token) + "'");
		int value = 0;
		auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
		if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
			throw ParseError("malformed side length '" + std::string(token) + "'");
		sides.push_back(value);
		pos = comma + 1;
	}
	return Hyperrect(std::move(sides));
}

std::string to_string(const Hyperrect& h) {
	std::string out = "(";
	for (std::size_t i = 0; i < h.dimension(); ++i) {
		if (i) out += ',';
		out += std::to_string(h[i]);
	}
	return out + ")";
}

bool is_terminal_rect(const Hyperrect& h) noexcept {
	return std::any_of(h.sides().begin(), h.sides().end(), [](int side) { return side == 0; });
}

std::vector<RnimMove> rnim_move_list(const Hyperrect& h) {
	std::vector<RnimMove> moves;
	if (is_terminal_rect(h)) return moves;
	for (std::size_t i = 0; i < h.dimension(); ++i) {
		for (int len = 0; len < h[i]; ++len) {
			auto sides = h.vec();
			sides[i] = len;
			moves.push_back({{static_cast<int>(i) + 1, len}, Hyperrect(std::move(sides))});
		}
	}
	return moves;
}

std::vector<Hyperrect> rnim_moves(const Hyperrect& h) {
	std::vector<Hyperrect> out;
	for (auto& move : rnim_move_list(h)) out.push_back(std::move(move.result));
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

Hyperrect apply_move(const Hyperrect& h, const MoveDescriptorR& move) {
	if (is_terminal_rect(h)) throw DomainError("no moves from a hyperrectangle with a zero side");
	if (move.side_index < 1 || move.side_index > static_cast<int>(h.dimension()))
		throw DomainError("side " + std::to_string(move.side_index) + " out of range");
	const auto i = static_cast<std::size_t>(move.side_index - 1);
	if (move.new_length < 0 || move.new_length >= h[i])
		throw DomainError("new length must satisfy 0 <= length < " + std::to_string(h[i]));
	auto sides = h.vec();
	sides[i] = move.new_length;
	return Hyperrect(std::move(sides));
}

std::vector<Hyperrect> enumerate_hyperrects(int max_dim, int max_side, int min_side) {
	std::vector<Hyperrect> out;
	for (int d = 1; d <= max_dim; ++d) {
		std::vector<int> sides(static_cast<std::size_t>(d), min_side);
		for (;;) {
			out.emplace_back(sides);
			int i = d - 1;
			while (i >= 0 && sides[static_cast<std::size_t>(i)] == max_side) sides[static_cast<std::size_t>(i--)] = min_side;
			if (i < 0) break;
			++sides[static_cast<std::size_t>(i)];
		}
	}
	return out;
}

}  // namespace nimshape
