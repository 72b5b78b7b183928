#include "nimshape/strategy.hpp"

namespace nimshape {

std::string_view to_string(Verdict v) noexcept {
	switch (v) {
	case Verdict::verified: return "verified";
	case Verdict::refuted: return "refuted";
	case Verdict::skipped: return "skipped";
	}
	return "?";
}

std::string describe(const Witness& w) {
	auto pair_text = [](GrundyPair p) { return "(" + std::to_string(p.g) + "," + std::to_string(p.g_minus) + ")"; };
	std::string out = to_string(w.position) + " " + pair_text(w.pair);
	if (w.successor) out += " -> " + to_string(*w.successor) + " " + pair_text(*w.successor_pair);
	return out;
}

namespace {

bool is_zero_one(GrundyPair p) { return p == GrundyPair{0, 1}; }
bool is_one_zero(GrundyPair p) { return p == GrundyPair{1, 0}; }
bool is_tame_pair(GrundyPair p) { return is_zero_one(p) || is_one_zero(p) || p.g == p.g_minus; }

}  // namespace

CghReport cgh_audit(Engine& engine, Ruleset ruleset, AuditBound bound) {
	CghReport report;
	report.ruleset = ruleset;
	std::vector<Component> positions;
	if (ruleset == Ruleset::pnim) {
		report.sample = "partitions of n <= " + std::to_string(bound.max_order);
		for (auto& p : enumerate_partitions_upto(bound.max_order)) positions.emplace_back(std::move(p));
	} else {
		report.sample = "hyperrectangles of dimension <= " + std::to_string(bound.max_dim) + ", sides <= " +
		                std::to_string(bound.max_side);
		for (auto& h : enumerate_hyperrects(bound.max_dim, bound.max_side)) positions.emplace_back(std::move(h));
	}
	report.positions = positions.size();

	auto refute = [](ClassCheck& check, Witness w) {
		if (check.verdict != Verdict::refuted) {
			check.verdict = Verdict::refuted;
			check.witness = std::move(w);
		}
	};
	for (ClassCheck* check : {&report.pet, &report.tame, &report.miserable, &report.returnable, &report.forced})
		check->verdict = Verdict::verified;

	for (const auto& x : positions) {
		const GrundyPair px = engine.evaluate(x);
		if (!is_pet_pair(px)) refute(report.pet, {x, px, std::nullopt, std::nullopt});
		if (!is_tame_pair(px)) refute(report.tame, {x, px, std::nullopt, std::nullopt});

		const auto moves = component_move_list(x, 0);
		bool to_zero_one = false;
		bool to_one_zero = false;
		for (const auto& m : moves) {
			const GrundyPair py = engine.evaluate(m.result);
			to_zero_one = to_zero_one || is_zero_one(py);
			to_one_zero = to_one_zero || is_one_zero(py);

			if (is_zero_one(px) || is_one_zero(px)) {
				const GrundyPair expected = is_zero_one(px) ? GrundyPair{1, 0} : GrundyPair{0, 1};
				if (py != expected) refute(report.forced, {x, px, m.result, py});

				if (!is_terminal(m.result)) {
					bool returns = false;
					for (const auto& back : component_move_list(m.result, 0)) {
						if (engine.evaluate(back.result) == px) {
							returns = true;
							break;
						}
					}
					if (!returns) refute(report.returnable, {x, px, m.result, py});
				}
			}
		}
		const bool miserable = is_zero_one(px) || is_one_zero(px) || (!to_zero_one && !to_one_zero) ||
		                       (to_zero_one && to_one_zero);
		if (!miserable) refute(report.miserable, {x, px, std::nullopt, std::nullopt});
	}
	return report;
}

}  // namespace nimshape
