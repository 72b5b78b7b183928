#include "nimshape/position.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace nimshape {

std::string_view to_string(Ruleset ruleset) noexcept {
	return ruleset == Ruleset::pnim ? "pnim" : "rnim";
}

Ruleset parse_ruleset(std::string_view text) {
	if (text == "pnim") return Ruleset::pnim;
	if (text == "rnim") return Ruleset::rnim;
	throw ParseError("unknown ruleset '" + std::string(text) + "'");
}

bool is_terminal(const Component& c) noexcept {
	if (const auto* p = std::get_if<Partition>(&c)) return p->empty();
	return is_terminal_rect(std::get<Hyperrect>(c));
}

std::string to_string(const Component& c, Notation notation) {
	if (const auto* p = std::get_if<Partition>(&c)) return to_string(*p, notation);
	return to_string(std::get<Hyperrect>(c));
}

SumPosition::SumPosition(Ruleset r, std::vector<Component> cs) : ruleset(r), components(std::move(cs)) {
	if (components.empty()) throw DomainError("a sum needs at least one component");
	for (const auto& c : components) {
		const bool is_partition = std::holds_alternative<Partition>(c);
		if (is_partition != (ruleset == Ruleset::pnim))
			throw DomainError("all components of a sum must share one ruleset");
	}
}

bool is_terminal(const SumPosition& p) noexcept {
	return std::all_of(p.components.begin(), p.components.end(), [](const Component& c) { return is_terminal(c); });
}

SumPosition parse_sum(std::string_view text) {
	std::string s;
	for (char ch : text)
		if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
	if (s.empty()) throw ParseError("empty position");

	std::vector<Component> components;
	std::optional<Ruleset> ruleset;
	std::size_t pos = 0;
	while (pos <= s.size()) {
		std::size_t plus = s.find('+', pos);
		if (plus == std::string::npos) plus = s.size();
		std::string_view term(s.data() + pos, plus - pos);
		if (term.empty()) throw ParseError("empty component in '" + s + "'");
		const Ruleset here = term.front() == '(' ? Ruleset::rnim : Ruleset::pnim;
		if (ruleset && *ruleset != here)
			throw ParseError("cannot mix partitions and hyperrectangles in one sum: '" + std::string(term) + "'");
		ruleset = here;
		if (here == Ruleset::rnim)
			components.emplace_back(parse_hyperrect(term));
		else
			components.emplace_back(parse_partition(term));
		pos = plus + 1;
	}
	return SumPosition(*ruleset, std::move(components));
}

std::string to_string(const SumPosition& p, Notation notation) {
	std::string out;
	for (std::size_t i = 0; i < p.components.size(); ++i) {
		if (i) out += '+';
		out += to_string(p.components[i], notation);
	}
	return out;
}

std::vector<SumMove> component_move_list(const Component& c, std::size_t index) {
	std::vector<SumMove> out;
	if (const auto* p = std::get_if<Partition>(&c)) {
		for (auto& m : pnim_move_list(*p)) out.push_back({{index, std::move(m.descriptor)}, std::move(m.result)});
	} else {
		for (auto& m : rnim_move_list(std::get<Hyperrect>(c)))
			out.push_back({{index, m.descriptor}, std::move(m.result)});
	}
	return out;
}

std::vector<SumMove> sum_move_list(const SumPosition& p) {
	std::vector<SumMove> out;
	for (std::size_t i = 0; i < p.components.size(); ++i) {
		auto moves = component_move_list(p.components[i], i);
		out.insert(out.end(), std::make_move_iterator(moves.begin()), std::make_move_iterator(moves.end()));
	}
	return out;
}

SumPosition replace_component(const SumPosition& p, std::size_t index, Component c) {
	SumPosition next = p;
	next.components.at(index) = std::move(c);
	return next;
}

SumPosition apply_move(const SumPosition& p, const MoveDescriptor& move) {
	if (move.component >= p.components.size())
		throw DomainError("component " + std::to_string(move.component + 1) + " does not exist");
	const Component& target = p.components[move.component];
	if (const auto* mp = std::get_if<MoveDescriptorP>(&move.move)) {
		const auto* part = std::get_if<Partition>(&target);
		if (!part) throw DomainError("row/column moves apply to partitions only");
		return replace_component(p, move.component, apply_move(*part, *mp));
	}
	const auto* rect = std::get_if<Hyperrect>(&target);
	if (!rect) throw DomainError("side moves apply to hyperrectangles only");
	return replace_component(p, move.component, apply_move(*rect, std::get<MoveDescriptorR>(move.move)));
}

namespace {

std::string join(const std::vector<int>& xs) {
	std::string out;
	for (std::size_t i = 0; i < xs.size(); ++i) {
		if (i) out += ',';
		out += std::to_string(xs[i]);
	}
	return out;
}

int to_int(const std::string& token) {
	int value = 0;
	auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
	if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
		throw ParseError("expected a number, got '" + token + "'");
	return value;
}

std::vector<int> to_int_list(const std::string& token) {
	std::vector<int> out;
	std::stringstream ss(token);
	std::string item;
	while (std::getline(ss, item, ',')) out.push_back(to_int(item));
	if (out.empty()) throw ParseError("expected a list of indices, got '" + token + "'");
	return out;
}

}  // namespace

std::string format_move(const SumPosition& before, const MoveDescriptor& move) {
	const std::string of = " of " + std::to_string(move.component + 1);
	if (const auto* mp = std::get_if<MoveDescriptorP>(&move.move)) {
		const auto& part = std::get<Partition>(before.components.at(move.component));
		const int count = mp->axis == Axis::rows ? static_cast<int>(part.length()) : part.largest();
		std::vector<int> removed;
		for (int i = 1; i <= count; ++i)
			if (!std::binary_search(mp->kept.begin(), mp->kept.end(), i)) removed.push_back(i);
		return std::string(mp->axis == Axis::rows ? "rm rows " : "rm cols ") + join(removed) + of;
	}
	const auto& mr = std::get<MoveDescriptorR>(move.move);
	return "set side " + std::to_string(mr.side_index) + of + " to " + std::to_string(mr.new_length);
}

MoveDescriptor parse_move(std::string_view text, const SumPosition& position) {
	std::vector<std::string> words;
	{
		std::stringstream ss{std::string(text)};
		std::string w;
		while (ss >> w) words.push_back(w);
	}
	// "rm rows 2, 3" is tolerated: glue comma-separated pieces back together
	std::vector<std::string> tokens;
	for (auto& w : words) {
		if (!tokens.empty() && (tokens.back().back() == ',' || w.front() == ','))
			tokens.back() += w;
		else
			tokens.push_back(w);
	}

	auto component_of = [&](std::size_t at) -> std::size_t {
		if (at >= tokens.size()) {
			if (position.size() == 1) return 0;
			throw ParseError("which component? add 'of K' (1.." + std::to_string(position.size()) + ")");
		}
		if (tokens[at] != "of") throw ParseError("expected 'of', got '" + tokens[at] + "'");
		if (at + 1 >= tokens.size()) throw ParseError("missing component index after 'of'");
		const int k = to_int(tokens[at + 1]);
		if (k < 1 || k > static_cast<int>(position.size()))
			throw ParseError("component " + std::to_string(k) + " does not exist");
		return static_cast<std::size_t>(k - 1);
	};

	if (tokens.size() >= 3 && tokens[0] == "rm" && (tokens[1] == "rows" || tokens[1] == "cols")) {
		const Axis axis = tokens[1] == "rows" ? Axis::rows : Axis::columns;
		std::vector<int> removed = to_int_list(tokens[2]);
		const std::size_t comp = component_of(3);
		if (tokens.size() > 5 || (tokens.size() > 3 && tokens.size() != 5))
			throw ParseError("unexpected trailing input in '" + std::string(text) + "'");
		const auto* part = std::get_if<Partition>(&position.components[comp]);
		if (!part) throw ParseError("component " + std::to_string(comp + 1) + " is not a partition");
		if (part->empty()) throw ParseError("component " + std::to_string(comp + 1) + " is empty");
		const int count = axis == Axis::rows ? static_cast<int>(part->length()) : part->largest();
		std::sort(removed.begin(), removed.end());
		if (std::adjacent_find(removed.begin(), removed.end()) != removed.end())
			throw ParseError("an index is listed twice");
		for (int i : removed)
			if (i < 1 || i > count)
				throw ParseError(std::string(axis == Axis::rows ? "row " : "column ") + std::to_string(i) +
				                 " out of range 1.." + std::to_string(count));
		MoveDescriptorP mp{axis, {}};
		for (int i = 1; i <= count; ++i)
			if (!std::binary_search(removed.begin(), removed.end(), i)) mp.kept.push_back(i);
		return {comp, mp};
	}

	if (tokens.size() >= 5 && tokens[0] == "set" && tokens[1] == "side") {
		const int side = to_int(tokens[2]);
		std::size_t at = 3;
		std::size_t comp = 0;
		if (tokens[at] == "of") {
			comp = component_of(at);
			at += 2;
		} else if (position.size() != 1) {
			throw ParseError("which component? add 'of K' (1.." + std::to_string(position.size()) + ")");
		}
		if (at + 2 != tokens.size() || tokens[at] != "to")
			throw ParseError("expected 'to LENGTH' in '" + std::string(text) + "'");
		const int length = to_int(tokens[at + 1]);
		const auto* rect = std::get_if<Hyperrect>(&position.components[comp]);
		if (!rect) throw ParseError("component " + std::to_string(comp + 1) + " is not a hyperrectangle");
		if (is_terminal_rect(*rect))
			throw ParseError("component " + std::to_string(comp + 1) + " has zero hypervolume");
		if (side < 1 || side > static_cast<int>(rect->dimension()))
			throw ParseError("side " + std::to_string(side) + " out of range 1.." + std::to_string(rect->dimension()));
		if (length < 0 || length >= (*rect)[static_cast<std::size_t>(side - 1)])
			throw ParseError("new length must be below the current length " +
			                 std::to_string((*rect)[static_cast<std::size_t>(side - 1)]));
		return {comp, MoveDescriptorR{side, length}};
	}

	throw ParseError("unrecognized move '" + std::string(text) +
	                 "'; use 'rm rows I,J of K', 'rm cols I of K' or 'set side I of K to L'");
}

}  // namespace nimshape
