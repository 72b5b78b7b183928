#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nimshape {

// Raised on malformed position or move text. The message names the offending token.
class ParseError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

// Raised when an operation is called outside its defined domain.
class DomainError : public std::domain_error {
public:
	using std::domain_error::domain_error;
};

enum class Notation { plain, exponent };

// An integer partition, stored densely as a weakly decreasing list of positive parts.
// The empty list is the empty partition. Ordering is lexicographic on the parts list.
class Partition {
public:
	Partition() = default;
	explicit Partition(std::vector<int> parts);
	Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

	std::span<const int> parts() const noexcept { return _parts; }
	const std::vector<int>& vec() const noexcept { return _parts; }

	// r, the number of parts
	std::size_t length() const noexcept { return _parts.size(); }
	// λ1, or 0 for the empty partition
	int largest() const noexcept { return _parts.empty() ? 0 : _parts.front(); }
	// n, the number of cells
	int size() const noexcept;
	bool empty() const noexcept { return _parts.empty(); }
	int operator[](std::size_t i) const noexcept { return _parts[i]; }

	friend auto operator<=>(const Partition&, const Partition&) = default;
	friend bool operator==(const Partition&, const Partition&) = default;

	// Skips validation; the caller guarantees the invariant.
	static Partition from_sorted(std::vector<int> parts) noexcept {
		Partition p;
		p._parts = std::move(parts);
		return p;
	}

private:
	std::vector<int> _parts;
};

struct PartitionHash {
	std::size_t operator()(const Partition& p) const noexcept;
};

enum class Axis { rows, columns };

// A PNim move, described by the retained rows or columns (1-based, strictly increasing,
// a proper subset of all rows or columns; possibly empty).
struct MoveDescriptorP {
	Axis axis = Axis::rows;
	std::vector<int> kept;

	friend bool operator==(const MoveDescriptorP&, const MoveDescriptorP&) = default;
};

struct PnimMove {
	MoveDescriptorP descriptor;
	Partition result;
};

Partition parse_partition(std::string_view text);
std::string to_string(const Partition& p, Notation notation = Notation::plain);

Partition conjugate(const Partition& p);
// min(λ, λ') under lexicographic order
Partition canonical(const Partition& p);

// Dyson rank |λ1 - r|. Throws DomainError on the empty partition.
int rank(const Partition& p);

// Young's lattice order: λ fits inside μ.
bool young_leq(const Partition& lambda, const Partition& mu);

// f(λ): number of rows plus number of columns.
int rows_plus_columns(const Partition& p) noexcept;

// One move per distinct successor, in enumeration order: row moves before column moves,
// and within an axis an odometer over how many copies of each distinct part value are
// kept (largest value varies slowest). When a successor is reachable several ways the
// first descriptor in that order is reported. Retained copies of a value are always the
// first ones of its block.
std::vector<PnimMove> pnim_move_list(const Partition& p);

// Distinct successors, sorted lexicographically.
std::vector<Partition> pnim_moves(const Partition& p);

// Applies a descriptor; throws DomainError when it is not a legal move from `p`.
Partition apply_move(const Partition& p, const MoveDescriptorP& move);

inline constexpr int kMaxEnumerationOrder = 80;

// All partitions of exactly n in reverse-lexicographic order ([4], [3,1], [2,2], ...).
// With up_to_conjugation, only λ with λ <= λ' (lexicographically) is kept.
std::vector<Partition> enumerate_partitions(int n, bool up_to_conjugation = false);

// The partitions of every order 0..n_max, concatenated in order of n.
std::vector<Partition> enumerate_partitions_upto(int n_max, bool up_to_conjugation = false);

// Every λ with lower <= λ <= upper in Young's lattice, reverse-lexicographic.
std::vector<Partition> young_interval(const Partition& lower, const Partition& upper);

}  // namespace nimshape
