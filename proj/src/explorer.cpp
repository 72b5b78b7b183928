#include "nimshape/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "nimshape/closed_forms.hpp"
#include "nimshape/oracle.hpp"
#include "nimshape/strategy.hpp"

namespace nimshape {

std::vector<GrundyPair> parallel_evaluate(Engine& engine, const std::vector<Partition>& positions, unsigned threads) {
	std::vector<GrundyPair> out(positions.size());
	if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
	threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, positions.size())));

	std::atomic<std::size_t> next{0};
	std::exception_ptr failure;
	std::mutex failure_mutex;
	auto work = [&] {
		for (;;) {
			const std::size_t i = next.fetch_add(1);
			if (i >= positions.size()) return;
			try {
				out[i] = engine.evaluate(positions[i]);
			} catch (...) {
				std::lock_guard lock(failure_mutex);
				if (!failure) failure = std::current_exception();
				next.store(positions.size());
				return;
			}
		}
	};
	if (threads == 1) {
		work();
	} else {
		std::vector<std::jthread> pool;
		for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
	}
	if (failure) std::rethrow_exception(failure);
	return out;
}

namespace {

EnumerationReport enumerate_filtered(Engine& engine, int n_max, bool up_to_conjugation, unsigned threads,
                                     std::string filter, const std::function<bool(const Partition&, GrundyPair)>& keep) {
	if (n_max < 0) throw DomainError("n must be nonnegative");
	const auto candidates = enumerate_partitions_upto(n_max, up_to_conjugation);
	const auto values = parallel_evaluate(engine, candidates, threads);
	EnumerationReport report;
	report.n_max = n_max;
	report.filter = std::move(filter);
	report.up_to_conjugation = up_to_conjugation;
	for (int n = 0; n <= n_max; ++n) report.counts_per_n[n] = 0;
	for (std::size_t i = 0; i < candidates.size(); ++i) {
		if (!keep(candidates[i], values[i])) continue;
		report.rows.push_back({candidates[i], values[i].g, longest_play(candidates[i])});
		++report.counts_per_n[candidates[i].size()];
	}
	return report;
}

}  // namespace

EnumerationReport enumerate_by_value(Engine& engine, unsigned k, int n_max, bool up_to_conjugation, unsigned threads) {
	return enumerate_filtered(engine, n_max, up_to_conjugation, threads, "grundy=" + std::to_string(k),
	                          [k](const Partition&, GrundyPair v) { return v.g == k; });
}

EnumerationReport enumerate_heavy(Engine& engine, int n_max, bool up_to_conjugation, unsigned threads) {
	return enumerate_filtered(engine, n_max, up_to_conjugation, threads, "heavy",
	                          [](const Partition& p, GrundyPair v) { return !p.empty() && v.g == longest_play(p); });
}

std::string_view to_string(ConjectureId id) noexcept {
	return id == ConjectureId::chopped_rect ? "chopped-rect" : "shallow-staircase";
}

ConjectureId parse_conjecture_id(std::string_view text) {
	if (text == "chopped-rect") return ConjectureId::chopped_rect;
	if (text == "shallow-staircase") return ConjectureId::shallow_staircase;
	throw ParseError("unknown conjecture '" + std::string(text) + "' (chopped-rect, shallow-staircase)");
}

std::vector<Partition> chopped_rect_interval(int a, int b) {
	return young_interval(chopped_rect_lower(a, b), rectangle({b + 1, a + 1}));
}

ConjectureReport check_conjectures(Engine& engine, ConjectureId id, ConjectureBounds bounds) {
	ConjectureReport report;
	report.id = id;
	auto check = [&](const std::string& params, const Partition& p) {
		++report.positions_checked;
		const GrundyPair v = engine.evaluate(p);
		if (v.g != longest_play(p)) report.counterexamples.push_back({params, p, v.g, longest_play(p)});
	};
	if (id == ConjectureId::chopped_rect) {
		report.ranges = "0<=a<=" + std::to_string(bounds.a_max) + ",0<=b<=min(a," + std::to_string(bounds.b_max) + ")";
		for (int a = 0; a <= bounds.a_max; ++a) {
			for (int b = 0; b <= std::min(a, bounds.b_max); ++b) {
				++report.parameters_checked;
				if (!rect_is_heavy({b + 1, a + 1})) {
					++report.premise_failures;
					continue;
				}
				const std::string params = "a=" + std::to_string(a) + ",b=" + std::to_string(b);
				for (const auto& p : chopped_rect_interval(a, b)) check(params, p);
			}
		}
	} else {
		report.ranges = "1<=i<=" + std::to_string(bounds.i_max) + ",1<=s<=" + std::to_string(bounds.s_max) +
		                ",1<=k<=" + std::to_string(bounds.k_max);
		for (int i = 1; i <= bounds.i_max; ++i)
			for (int s = 1; s <= bounds.s_max; ++s)
				for (int k = 1; k <= bounds.k_max; ++k) {
					++report.parameters_checked;
					check("i=" + std::to_string(i) + ",s=" + std::to_string(s) + ",k=" + std::to_string(k),
					      shallow_staircase(i, s, k));
				}
	}
	return report;
}

const std::vector<Partition>& golden_value2_partitions() {
	static const std::vector<Partition> list = {
	    {1, 1},          {3, 3, 3, 1},    {3, 3, 3, 3},    {5, 4, 4, 3, 1}, {5, 5, 5, 3, 3, 1},
	    {5, 5, 5, 4, 3, 1}, {5, 5, 5, 5, 3, 1}, {5, 5, 5, 4, 4, 1}, {5, 5, 5, 3, 3, 3}, {5, 5, 5, 5, 4, 1},
	    {5, 5, 5, 5, 5, 1}, {5, 5, 5, 5, 3, 3}, {5, 5, 5, 4, 4, 3},
	};
	return list;
}

const std::vector<Partition>& golden_heavy_partitions() {
	static const std::vector<Partition> list = {
	    {1}, {1, 1}, {2, 1}, {1, 1, 1}, {2, 1, 1}, {1, 1, 1, 1},
	    {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}, {3, 2, 1}, {3, 1, 1, 1},
	    {2, 2, 2}, {2, 2, 1, 1}, {2, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}, {4, 1, 1, 1}, {3, 2, 2},
	    {3, 2, 1, 1}, {3, 1, 1, 1, 1}, {2, 2, 2, 1}, {2, 2, 1, 1, 1}, {2, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1},
	    {4, 2, 1, 1}, {4, 1, 1, 1, 1}, {3, 3, 1, 1}, {3, 2, 2, 1}, {3, 2, 1, 1, 1}, {3, 1, 1, 1, 1, 1},
	    {2, 2, 2, 1, 1}, {2, 2, 1, 1, 1, 1}, {2, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1, 1},
	};
	return list;
}

Scope parse_scope(std::string_view text) {
	for (Scope s : {Scope::all, Scope::formulas, Scope::engine, Scope::misere, Scope::appendices, Scope::cgh})
		if (to_string(s) == text) return s;
	throw ParseError("unknown scope '" + std::string(text) + "' (all, formulas, engine, misere, appendices, cgh)");
}

std::string_view to_string(Scope scope) noexcept {
	switch (scope) {
	case Scope::all: return "all";
	case Scope::formulas: return "formulas";
	case Scope::engine: return "engine";
	case Scope::misere: return "misere";
	case Scope::appendices: return "appendices";
	case Scope::cgh: return "cgh";
	}
	return "?";
}

std::string_view to_string(Status status) noexcept {
	switch (status) {
	case Status::pass: return "PASS";
	case Status::fail: return "FAIL";
	case Status::skipped: return "SKIP";
	}
	return "?";
}

namespace {

// Accumulates the outcome of one named check: counts cases and keeps the first failure.
struct Tally {
	std::size_t cases = 0;
	std::string first_failure;

	void expect(bool ok, const std::function<std::string()>& what) {
		++cases;
		if (!ok && first_failure.empty()) first_failure = what();
	}
};

using CheckFn = std::function<void(Tally&)>;

struct Suite {
	Scope scope;
	std::vector<CheckResult> results;

	void run(const std::string& name, const CheckFn& fn) {
		Tally tally;
		CheckResult result{std::string(to_string(scope)), name, Status::pass, ""};
		try {
			fn(tally);
			if (!tally.first_failure.empty()) {
				result.status = Status::fail;
				result.detail = tally.first_failure;
			} else {
				result.detail = std::to_string(tally.cases) + " cases";
			}
		} catch (const BudgetExceeded& e) {
			result.status = Status::skipped;
			result.detail = e.what();
		} catch (const std::exception& e) {
			result.status = Status::fail;
			result.detail = std::string("error: ") + e.what();
		}
		results.push_back(std::move(result));
	}
};

std::string pos_text(const Partition& p) { return to_string(p); }

std::set<Partition> canonical_set(const std::vector<Partition>& ps) {
	std::set<Partition> out;
	for (const auto& p : ps) out.insert(canonical(p));
	return out;
}

void formulas_checks(Suite& suite, const VerifyOptions& opt) {
	suite.run("rect_grundy matches engine, r,c <= 8", [&](Tally& t) {
		Engine engine({opt.budget});
		for (int r = 1; r <= 8; ++r)
			for (int c = 1; c <= 8; ++c) {
				const auto g = engine.evaluate(rectangle({r, c})).g;
				t.expect(g == rect_grundy({r, c}), [&] { return "rectangle r=" + std::to_string(r) + " c=" + std::to_string(c); });
			}
	});
	suite.run("hyperrect_grundy matches oracle, d <= 3, sides <= 5", [&](Tally& t) {
		Oracle oracle(Convention::normal, opt.budget);
		for (const auto& h : enumerate_hyperrects(3, 5))
			t.expect(oracle.value(SumPosition(h)) == hyperrect_grundy(h), [&] { return to_string(h); });
	});
	suite.run("two_row_grundy matches engine, c1 <= 10", [&](Tally& t) {
		Engine engine({opt.budget});
		for (int c1 = 1; c1 <= 10; ++c1)
			for (int c2 = 1; c2 <= c1; ++c2)
				t.expect(engine.evaluate(Partition{c1, c2}).g == two_row_grundy(c1, c2),
				         [&] { return pos_text(Partition{c1, c2}); });
	});
	suite.run("sg1_member iff value 1, n <= 15", [&](Tally& t) {
		Engine engine({opt.budget});
		for (const auto& p : enumerate_partitions_upto(15))
			t.expect((engine.evaluate(p).g == 1) == sg1_member(p), [&] { return pos_text(p); });
	});
	suite.run("rect_is_heavy iff xor equals sum, r,c <= 64", [&](Tally& t) {
		for (int r = 1; r <= 64; ++r)
			for (int c = 1; c <= 64; ++c)
				t.expect(rect_is_heavy({r, c}) == (rect_grundy({r, c}) == static_cast<unsigned>(r + c - 1)),
				         [&] { return "r=" + std::to_string(r) + " c=" + std::to_string(c); });
	});
	suite.run("rect_is_heavy matches engine, r,c <= 8", [&](Tally& t) {
		Engine engine({opt.budget});
		for (int r = 1; r <= 8; ++r)
			for (int c = 1; c <= 8; ++c)
				t.expect(rect_is_heavy({r, c}) == is_heavy(engine, rectangle({r, c})),
				         [&] { return "r=" + std::to_string(r) + " c=" + std::to_string(c); });
	});
	suite.run("nimber matrix cyclic property, i,j,k <= 64", [&](Tally& t) {
		auto M = [](int i, int j) { return static_cast<int>(rect_grundy({i, j})); };
		for (int i = 1; i <= 64; ++i)
			for (int j = 1; j <= 64; ++j)
				for (int k = 1; k <= 64; ++k)
					t.expect((M(i, j) == k) == (M(k, i) == j), [&] {
						return "i=" + std::to_string(i) + " j=" + std::to_string(j) + " k=" + std::to_string(k);
					});
	});
	suite.run("shifted_mex equals mex + k, 500 random sets", [&](Tally& t) {
		std::mt19937 rng(20240601);
		for (int trial = 0; trial < 500; ++trial) {
			std::vector<unsigned> set;
			const int size = std::uniform_int_distribution<int>(0, 16)(rng);
			for (int i = 0; i < size; ++i) set.push_back(std::uniform_int_distribution<unsigned>(0, 20)(rng));
			const unsigned k = std::uniform_int_distribution<unsigned>(1, 8)(rng);
			t.expect(shifted_mex(set, k) == mex(set) + k, [&] { return "trial " + std::to_string(trial); });
		}
	});
	suite.run("hooks and staircases heavy, r+c <= 12", [&](Tally& t) {
		Engine engine({opt.budget});
		for (int r = 1; r <= 11; ++r)
			for (int c = 1; r + c <= 12; ++c) {
				t.expect(is_heavy(engine, hook(c, r)), [&] { return pos_text(hook(c, r)); });
				if (c >= r) t.expect(is_heavy(engine, staircase(c, r)), [&] { return pos_text(staircase(c, r)); });
			}
	});
}

void engine_checks(Suite& suite, const VerifyOptions& opt) {
	suite.run("engine matches oracle on partitions, n <= 12", [&](Tally& t) {
		Engine engine({opt.budget});
		Oracle normal(Convention::normal, opt.budget);
		Oracle misere(Convention::misere, opt.budget);
		for (const auto& p : enumerate_partitions_upto(12)) {
			const auto v = engine.evaluate(p);
			t.expect(v.g == normal.value(SumPosition(p)) && v.g_minus == misere.value(SumPosition(p)),
			         [&] { return pos_text(p); });
		}
	});
	suite.run("engine matches oracle on hyperrectangles, d <= 3, sides <= 4", [&](Tally& t) {
		Engine engine({opt.budget});
		Oracle normal(Convention::normal, opt.budget);
		Oracle misere(Convention::misere, opt.budget);
		for (const auto& h : enumerate_hyperrects(3, 4)) {
			const auto v = engine.evaluate(h);
			t.expect(v.g == normal.value(SumPosition(h)) && v.g_minus == misere.value(SumPosition(h)),
			         [&] { return to_string(h); });
		}
	});
	suite.run("engine matches oracle on 200 random 2-component sums", [&](Tally& t) {
		Engine engine({opt.budget});
		Oracle normal(Convention::normal, opt.budget);
		Oracle misere(Convention::misere, opt.budget);
		const auto parts = enumerate_partitions_upto(8);
		const auto rects = enumerate_hyperrects(3, 4);
		std::mt19937 rng(7);
		for (int trial = 0; trial < 200; ++trial) {
			SumPosition s;
			if (trial % 2 == 0) {
				std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
				s = SumPosition(Ruleset::pnim, {parts[pick(rng)], parts[pick(rng)]});
			} else {
				std::uniform_int_distribution<std::size_t> pick(0, rects.size() - 1);
				s = SumPosition(Ruleset::rnim, {rects[pick(rng)], rects[pick(rng)]});
			}
			t.expect(engine.grundy(s) == normal.value(s) && engine.misere_grundy(s) == misere.value(s),
			         [&] { return to_string(s); });
		}
	});
	suite.run("upper bound and conjugate invariance, n <= 15", [&](Tally& t) {
		Engine engine({opt.budget});
		for (const auto& p : enumerate_partitions_upto(15)) {
			const auto v = engine.evaluate(p);
			const auto w = engine.evaluate(conjugate(p));
			t.expect(v.g <= longest_play(p) && v == w, [&] { return pos_text(p); });
		}
	});
	suite.run("pet pairs and only the terminal is a 0-position, n <= 15", [&](Tally& t) {
		Engine engine({opt.budget});
		for (const auto& p : enumerate_partitions_upto(15)) {
			const auto v = engine.evaluate(p);
			t.expect(is_pet_pair(v) && (p.empty() || v.g >= 1), [&] { return pos_text(p); });
		}
	});
}

void misere_checks(Suite& suite, const VerifyOptions& opt) {
	suite.run("table of RNim sums: normal and misere values", [&](Tally& t) {
		struct Row {
			const char* position;
			unsigned g;
			unsigned g_minus;
		};
		const Row rows[] = {{"(2,2)+(4,3,2)+(1,1)", 1, 0},
		                    {"(1,0,2)+(2,3,4)+(4,4)", 0, 1},
		                    {"(1,2,3)+(2,2)", 5, 5},
		                    {"(1,2,3)+(3,2)", 0, 0}};
		Engine engine({opt.budget});
		for (const auto& row : rows) {
			const SumPosition s = parse_sum(row.position);
			std::vector<Hyperrect> hs;
			std::vector<unsigned> values;
			for (const auto& c : s.components) {
				hs.push_back(std::get<Hyperrect>(c));
				values.push_back(hyperrect_grundy(hs.back()));
			}
			const GrundyPair formula = misere_sum_pair(values);
			t.expect(rnim_sum_grundy(hs) == row.g && formula == GrundyPair{row.g, row.g_minus} &&
			             engine.grundy_pair(s) == GrundyPair{row.g, row.g_minus},
			         [&] { return std::string(row.position); });
		}
	});
	suite.run("tame-sum rule matches misere oracle, RNim sums of <= 3, d <= 2, sides <= 4", [&](Tally& t) {
		Oracle oracle(Convention::misere, opt.budget);
		const auto rects = enumerate_hyperrects(2, 4);
		const std::size_t m = rects.size();
		auto check = [&](std::vector<Component> cs) {
			SumPosition s(Ruleset::rnim, std::move(cs));
			std::vector<unsigned> values;
			for (const auto& c : s.components) values.push_back(hyperrect_grundy(std::get<Hyperrect>(c)));
			t.expect(misere_sum_pair(values).g_minus == oracle.value(s), [&] { return to_string(s); });
		};
		for (std::size_t i = 0; i < m; ++i) {
			check({rects[i]});
			for (std::size_t j = i; j < m; ++j) {
				check({rects[i], rects[j]});
				for (std::size_t k = j; k < m; ++k) check({rects[i], rects[j], rects[k]});
			}
		}
	});
	suite.run("tame-sum rule matches misere oracle, PNim pairs with n <= 8", [&](Tally& t) {
		Engine engine({opt.budget});
		Oracle oracle(Convention::misere, opt.budget);
		const auto parts = enumerate_partitions_upto(8);
		for (std::size_t i = 0; i < parts.size(); ++i)
			for (std::size_t j = i; j < parts.size(); ++j) {
				SumPosition s(Ruleset::pnim, {parts[i], parts[j]});
				const unsigned values[] = {engine.evaluate(parts[i]).g, engine.evaluate(parts[j]).g};
				t.expect(misere_sum_pair(values).g_minus == oracle.value(s), [&] { return to_string(s); });
			}
	});
	auto soundness = [&](Convention convention) {
		return [&, convention](Tally& t) {
			Engine engine({opt.budget});
			Oracle oracle(convention, opt.budget);
			std::vector<SumPosition> space;
			for (const auto& p : enumerate_partitions_upto(8)) space.emplace_back(p);
			const auto rects = enumerate_hyperrects(2, 4);
			for (std::size_t i = 0; i < rects.size(); ++i) {
				space.emplace_back(rects[i]);
				for (std::size_t j = i; j < rects.size(); ++j)
					space.push_back(SumPosition(Ruleset::rnim, {rects[i], rects[j]}));
			}
			for (const auto& s : space) {
				if (oracle.value(s) == 0) continue;
				t.expect(strategy_wins_against_all(engine, s, convention), [&] { return to_string(s); });
			}
		};
	};
	suite.run("normal-play strategy wins every won position", soundness(Convention::normal));
	suite.run("misere-play strategy wins every won position", soundness(Convention::misere));
	suite.run("misere reply lands in the value-1 family, n <= 15", [&](Tally& t) {
		Engine engine({opt.budget});
		for (const auto& p : enumerate_partitions_upto(15)) {
			if (p.empty()) continue;
			bool exists = false;
			for (const auto& s : pnim_moves(p)) exists = exists || sg1_member(s);
			const MoveChoice choice = best_move_misere(engine, SumPosition(p));
			const auto& next = std::get<Partition>(choice.successor.components.front());
			t.expect(exists == choice.winning && (!exists || sg1_member(next)), [&] { return pos_text(p); });
		}
	});
}

void golden_checks(Suite& suite, const VerifyOptions& opt) {
	suite.run("heavy partitions up to conjugation, n <= 8", [&](Tally& t) {
		Engine engine({opt.budget});
		const auto report = enumerate_heavy(engine, 8, true, opt.threads);
		std::vector<Partition> found;
		for (const auto& row : report.rows) found.push_back(row.partition);
		t.expect(canonical_set(found) == canonical_set(golden_heavy_partitions()),
		         [&] { return "found " + std::to_string(found.size()) + " partitions"; });
	});
	const int n_max = opt.deep ? 26 : 15;
	suite.run("value-2 partitions up to conjugation, n <= " + std::to_string(n_max), [&](Tally& t) {
		Engine engine({opt.budget});
		const auto report = enumerate_by_value(engine, 2, n_max, true, opt.threads);
		std::vector<Partition> found;
		for (const auto& row : report.rows) found.push_back(row.partition);
		std::vector<Partition> expected;
		for (const auto& p : golden_value2_partitions())
			if (p.size() <= n_max) expected.push_back(p);
		t.expect(canonical_set(found) == canonical_set(expected),
		         [&] { return "found " + std::to_string(found.size()) + ", expected " + std::to_string(expected.size()); });
	});
	suite.run("value-1 enumeration equals the sg1 family, n <= 15", [&](Tally& t) {
		Engine engine({opt.budget});
		const auto report = enumerate_by_value(engine, 1, 15, false, opt.threads);
		std::set<Partition> found;
		for (const auto& row : report.rows) found.insert(row.partition);
		std::set<Partition> expected;
		for (const auto& p : enumerate_partitions_upto(15))
			if (sg1_member(p)) expected.insert(p);
		t.expect(found == expected, [&] { return "sets differ"; });
	});
}

void cgh_checks(Suite& suite, const VerifyOptions& opt) {
	suite.run("PNim n <= 12: pet, returnable, not forced via [2,2] -> [2]", [&](Tally& t) {
		Engine engine({opt.budget});
		const auto report = cgh_audit(engine, Ruleset::pnim, {12, 0, 0});
		t.expect(report.pet.verdict == Verdict::verified, [] { return "pet refuted"; });
		t.expect(report.returnable.verdict == Verdict::verified, [] { return "returnable refuted"; });
		const auto& w = report.forced.witness;
		t.expect(report.forced.verdict == Verdict::refuted && w && w->position == Component(Partition{2, 2}) &&
		             w->successor == Component(Partition{2}) && w->pair == GrundyPair{1, 0} &&
		             w->successor_pair == GrundyPair{2, 2},
		         [&] { return w ? "forced witness " + describe(*w) : std::string("forced not refuted"); });
	});
	suite.run("RNim d <= 2, sides <= 5: pet, returnable, not forced", [&](Tally& t) {
		Engine engine({opt.budget});
		const auto report = cgh_audit(engine, Ruleset::rnim, {0, 2, 5});
		t.expect(report.pet.verdict == Verdict::verified, [] { return "pet refuted"; });
		t.expect(report.returnable.verdict == Verdict::verified, [] { return "returnable refuted"; });
		t.expect(report.forced.verdict == Verdict::refuted, [] { return "forced not refuted"; });
	});
}

}  // namespace

std::vector<CheckResult> verify_suite(Scope scope, VerifyOptions options) {
	std::vector<CheckResult> out;
	auto group = [&](Scope s, void (*fn)(Suite&, const VerifyOptions&)) {
		if (scope != Scope::all && scope != s) return;
		Suite suite{s, {}};
		fn(suite, options);
		out.insert(out.end(), suite.results.begin(), suite.results.end());
	};
	group(Scope::formulas, formulas_checks);
	group(Scope::engine, engine_checks);
	group(Scope::misere, misere_checks);
	group(Scope::appendices, golden_checks);
	group(Scope::cgh, cgh_checks);
	return out;
}

}  // namespace nimshape
