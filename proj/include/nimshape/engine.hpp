#pragma once

#include <array>
#include <atomic>
#include <compare>
#include <cstddef>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "nimshape/position.hpp"

namespace nimshape {

// Normal value g and misère value g⁻ of a position.
struct GrundyPair {
	unsigned g = 0;
	unsigned g_minus = 0;

	friend auto operator<=>(const GrundyPair&, const GrundyPair&) = default;
};

// (0,1), (1,0) or (k,k) with k >= 2
bool is_pet_pair(GrundyPair pair) noexcept;

class BudgetExceeded : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultBudget = 10'000'000;

// Concurrent memo: any number of readers and insert-if-absent writers. An entry never
// changes once written.
template<typename Key, typename Hash>
class ShardedMemo {
public:
	std::optional<GrundyPair> find(const Key& key) const {
		const Shard& shard = shard_for(key);
		std::shared_lock lock(shard.mutex);
		auto it = shard.map.find(key);
		if (it == shard.map.end()) return std::nullopt;
		return it->second;
	}

	// Returns false when the key was already present.
	bool insert(const Key& key, GrundyPair value) {
		Shard& shard = shard_for(key);
		std::unique_lock lock(shard.mutex);
		return shard.map.try_emplace(key, value).second;
	}

	std::size_t size() const {
		std::size_t total = 0;
		for (const auto& shard : _shards) {
			std::shared_lock lock(shard.mutex);
			total += shard.map.size();
		}
		return total;
	}

	template<typename F>
	void for_each(F&& f) const {
		for (const auto& shard : _shards) {
			std::shared_lock lock(shard.mutex);
			for (const auto& [key, value] : shard.map) f(key, value);
		}
	}

private:
	static constexpr std::size_t kShards = 64;
	struct Shard {
		mutable std::shared_mutex mutex;
		std::unordered_map<Key, GrundyPair, Hash> map;
	};

	Shard& shard_for(const Key& key) { return _shards[Hash{}(key) % kShards]; }
	const Shard& shard_for(const Key& key) const { return _shards[Hash{}(key) % kShards]; }

	std::array<Shard, kShards> _shards;
};

struct MemoTable;

struct EngineConfig {
	// Maximum number of memo insertions before evaluation fails with BudgetExceeded.
	std::size_t budget = kDefaultBudget;
};

// Memoized evaluation of normal and misère Grundy values. Partitions are looked up by
// min(λ, λ'). Thread-safe: evaluations may run concurrently on one engine.
class Engine {
public:
	explicit Engine(EngineConfig config = {}) : _config(config) {}
	Engine(const Engine&) = delete;
	Engine& operator=(const Engine&) = delete;

	GrundyPair evaluate(const Partition& p);
	GrundyPair evaluate(const Hyperrect& h);
	GrundyPair evaluate(const Component& c);

	// XOR of component values.
	unsigned grundy(const SumPosition& p);
	// Direct recursion for one component, tame-sum rule for several.
	unsigned misere_grundy(const SumPosition& p);
	// For a single component, throws std::logic_error if the pair is not pet-shaped.
	GrundyPair grundy_pair(const SumPosition& p);

	std::size_t insertions() const noexcept { return _insertions.load(); }
	std::size_t budget() const noexcept { return _config.budget; }
	std::size_t memo_size(Ruleset ruleset) const;

	MemoTable export_table(Ruleset ruleset) const;
	// Complete entries are imported; entries without a misère value are ignored. PNim
	// keys are canonicalized. Imported entries do not count against the budget.
	void import_table(const MemoTable& table);

private:
	void charge();

	EngineConfig _config;
	std::atomic<std::size_t> _insertions{0};
	ShardedMemo<Partition, PartitionHash> _pnim;
	ShardedMemo<Hyperrect, HyperrectHash> _rnim;
};

// λ1 + r - 1, or 0 for the empty partition.
unsigned longest_play(const Partition& p) noexcept;

// g(λ) equals the longest play. Throws DomainError on the empty partition.
bool is_heavy(Engine& engine, const Partition& p);

// mex of a list of values, using a presence bitmap of 1 + max(values) slots.
unsigned mex(std::span<const unsigned> values);

}  // namespace nimshape
