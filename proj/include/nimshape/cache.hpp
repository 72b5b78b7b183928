#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nimshape/position.hpp"

namespace nimshape {

class CacheError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

struct MemoEntry {
	unsigned g = 0;
	std::optional<unsigned> g_minus;

	friend bool operator==(const MemoEntry&, const MemoEntry&) = default;
};

// Serializable snapshot of an engine memo. Keys are parts (PNim) or sides (RNim); the
// ordered map makes the file layout deterministic.
struct MemoTable {
	Ruleset ruleset = Ruleset::pnim;
	std::map<std::vector<int>, MemoEntry> entries;

	friend bool operator==(const MemoTable&, const MemoTable&) = default;
};

// Text format: header "nimshape-cache v1 <ruleset>", then one
// "<position>\t<g>\t<g_minus>" line per entry (g_minus may be empty), '\n' endings.
void write_cache(std::ostream& out, const MemoTable& table);
MemoTable read_cache(std::istream& in, std::optional<Ruleset> expected = std::nullopt);

void cache_save(const MemoTable& table, const std::filesystem::path& path);
MemoTable cache_load(const std::filesystem::path& path, std::optional<Ruleset> expected = std::nullopt);

}  // namespace nimshape
