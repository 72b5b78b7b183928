#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "nimshape/engine.hpp"
#include "nimshape/partition.hpp"

namespace nimshape {

// Evaluates `positions` on `threads` workers (0 = hardware concurrency) sharing the
// engine memo. Results are returned in input order.
std::vector<GrundyPair> parallel_evaluate(Engine& engine, const std::vector<Partition>& positions, unsigned threads = 0);

struct EnumerationRow {
	Partition partition;
	unsigned g = 0;
	unsigned longest_play = 0;

	friend bool operator==(const EnumerationRow&, const EnumerationRow&) = default;
};

// Rows are ordered by n, then reverse-lexicographically; with up_to_conjugation each row
// is the lexicographically smaller of λ and λ'.
struct EnumerationReport {
	int n_max = 0;
	std::string filter;  // "heavy" or "grundy=K"
	bool up_to_conjugation = false;
	std::vector<EnumerationRow> rows;
	std::map<int, std::size_t> counts_per_n;
};

EnumerationReport enumerate_by_value(Engine& engine, unsigned k, int n_max, bool up_to_conjugation,
                                     unsigned threads = 0);
EnumerationReport enumerate_heavy(Engine& engine, int n_max, bool up_to_conjugation, unsigned threads = 0);

enum class ConjectureId { chopped_rect, shallow_staircase };
std::string_view to_string(ConjectureId id) noexcept;
ConjectureId parse_conjecture_id(std::string_view text);

// chopped-rect sweeps 0 <= b <= min(a, b_max), 0 <= a <= a_max;
// shallow-staircase sweeps 1 <= i <= i_max, 1 <= s <= s_max, 1 <= k <= k_max.
struct ConjectureBounds {
	int a_max = 5;
	int b_max = 5;
	int i_max = 4;
	int s_max = 4;
	int k_max = 4;
};

struct Counterexample {
	std::string params;
	Partition partition;
	unsigned g = 0;
	unsigned longest_play = 0;
};

struct ConjectureReport {
	ConjectureId id = ConjectureId::chopped_rect;
	std::string ranges;
	std::size_t parameters_checked = 0;
	std::size_t premise_failures = 0;  // chopped-rect: rectangle not heavy, nothing to check
	std::size_t positions_checked = 0;
	std::vector<Counterexample> counterexamples;
};

ConjectureReport check_conjectures(Engine& engine, ConjectureId id, ConjectureBounds bounds);

// The Young interval ⟨a+1, a, ..., a-b+1⟩ <= λ <= ⟨(a+1)^{b+1}⟩.
std::vector<Partition> chopped_rect_interval(int a, int b);

// Golden data: the partitions with value 2 listed up to order 26, and the heavy
// partitions up to order 8, both up to conjugation.
const std::vector<Partition>& golden_value2_partitions();
const std::vector<Partition>& golden_heavy_partitions();

enum class Scope { all, formulas, engine, misere, appendices, cgh };
Scope parse_scope(std::string_view text);
std::string_view to_string(Scope scope) noexcept;

enum class Status { pass, fail, skipped };
std::string_view to_string(Status status) noexcept;

struct CheckResult {
	std::string scope;
	std::string name;
	Status status = Status::skipped;
	std::string detail;
};

struct VerifyOptions {
	bool deep = false;  // extend the value-2 golden check to order 26
	std::size_t budget = kDefaultBudget;
	unsigned threads = 0;
};

// Runs the invariant checks of one scope. A check that exhausts its budget is reported
// as skipped, never as passed.
std::vector<CheckResult> verify_suite(Scope scope, VerifyOptions options = {});

}  // namespace nimshape
