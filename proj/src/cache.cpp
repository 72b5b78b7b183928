#include "nimshape/cache.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace nimshape {

namespace {

constexpr std::string_view kMagic = "nimshape-cache";
constexpr std::string_view kVersion = "v1";

std::string key_text(Ruleset ruleset, const std::vector<int>& key) {
	if (ruleset == Ruleset::pnim) return to_string(Partition::from_sorted(key));
	return to_string(Hyperrect(key));
}

unsigned parse_value(std::string_view field, std::size_t line_no) {
	unsigned value = 0;
	auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
	if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
		throw CacheError("corrupt cache line " + std::to_string(line_no) + ": bad value '" + std::string(field) + "'");
	return value;
}

}  // namespace

void write_cache(std::ostream& out, const MemoTable& table) {
	out << kMagic << ' ' << kVersion << ' ' << to_string(table.ruleset) << '\n';
	for (const auto& [key, entry] : table.entries) {
		out << key_text(table.ruleset, key) << '\t' << entry.g << '\t';
		if (entry.g_minus) out << *entry.g_minus;
		out << '\n';
	}
}

MemoTable read_cache(std::istream& in, std::optional<Ruleset> expected) {
	std::string line;
	if (!std::getline(in, line)) throw CacheError("cache is empty: missing header");
	const std::string prefix = std::string(kMagic) + ' ';
	if (line.rfind(prefix, 0) != 0) throw CacheError("not a nimshape cache (line 1)");
	const auto rest = line.substr(prefix.size());
	const auto space = rest.find(' ');
	if (space == std::string::npos) throw CacheError("malformed cache header (line 1)");
	if (rest.substr(0, space) != kVersion)
		throw CacheError("unsupported cache version '" + rest.substr(0, space) + "'");

	MemoTable table;
	try {
		table.ruleset = parse_ruleset(rest.substr(space + 1));
	} catch (const ParseError&) {
		throw CacheError("unknown ruleset tag '" + rest.substr(space + 1) + "' in cache header");
	}
	if (expected && *expected != table.ruleset)
		throw CacheError("cache holds " + std::string(to_string(table.ruleset)) + " entries, expected " +
		                 std::string(to_string(*expected)));

	std::size_t line_no = 1;
	while (std::getline(in, line)) {
		++line_no;
		const auto tab1 = line.find('\t');
		const auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
		if (tab2 == std::string::npos || line.find('\t', tab2 + 1) != std::string::npos)
			throw CacheError("corrupt cache line " + std::to_string(line_no) + ": expected three tab-separated fields");
		std::vector<int> key;
		try {
			const std::string text = line.substr(0, tab1);
			key = table.ruleset == Ruleset::pnim ? parse_partition(text).vec() : parse_hyperrect(text).vec();
		} catch (const std::exception& e) {
			throw CacheError("corrupt cache line " + std::to_string(line_no) + ": " + e.what());
		}
		MemoEntry entry;
		entry.g = parse_value(std::string_view(line).substr(tab1 + 1, tab2 - tab1 - 1), line_no);
		const auto minus = std::string_view(line).substr(tab2 + 1);
		if (!minus.empty()) entry.g_minus = parse_value(minus, line_no);
		if (!table.entries.emplace(std::move(key), entry).second)
			throw CacheError("corrupt cache line " + std::to_string(line_no) + ": duplicate position");
	}
	return table;
}

void cache_save(const MemoTable& table, const std::filesystem::path& path) {
	std::ofstream out(path, std::ios::binary);
	if (!out) throw CacheError("cannot write cache file " + path.string());
	write_cache(out, table);
	if (!out) throw CacheError("error while writing cache file " + path.string());
}

MemoTable cache_load(const std::filesystem::path& path, std::optional<Ruleset> expected) {
	std::ifstream in(path, std::ios::binary);
	if (!in) throw CacheError("cannot read cache file " + path.string());
	return read_cache(in, expected);
}

}  // namespace nimshape
