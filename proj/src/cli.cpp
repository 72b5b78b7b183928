#include "nimshape/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nimshape/cache.hpp"
#include "nimshape/explorer.hpp"
#include "nimshape/export.hpp"
#include "nimshape/play.hpp"
#include "nimshape/strategy.hpp"

namespace nimshape {

namespace {

struct Globals {
	std::string format = "text";
	bool exponent = false;
	std::size_t budget = kDefaultBudget;
	unsigned threads = 0;
	std::string output;
	std::string cache;
};

std::size_t budget_from_env() {
	if (const char* env = std::getenv("NIMSHAPE_BUDGET")) {
		try {
			return static_cast<std::size_t>(std::stoull(env));
		} catch (const std::exception&) {
			throw ParseError(std::string("NIMSHAPE_BUDGET is not a number: '") + env + "'");
		}
	}
	return kDefaultBudget;
}

Notation notation(const Globals& g) { return g.exponent ? Notation::exponent : Notation::plain; }

void emit(const Globals& g, std::ostream& out, const std::string& content) {
	if (g.output.empty())
		out << content;
	else
		write_file(g.output, content);
}

// Loads the warm cache named by --cache when the file exists.
void warm(Engine& engine, const Globals& g, Ruleset ruleset) {
	if (!g.cache.empty() && std::filesystem::exists(g.cache)) engine.import_table(cache_load(g.cache, ruleset));
}

void persist(const Engine& engine, const Globals& g, Ruleset ruleset) {
	if (!g.cache.empty()) cache_save(engine.export_table(ruleset), g.cache);
}

SumPosition parse_position(const std::string& text, const std::string& ruleset) {
	SumPosition p = parse_sum(text);
	if (!ruleset.empty() && parse_ruleset(ruleset) != p.ruleset)
		throw ParseError("position '" + text + "' is not a " + ruleset + " position");
	return p;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
	CLI::App app{"nimshape: Grundy values and strategies for Nim on partitions and hyperrectangles", "nimshape"};
	app.fallthrough();
	app.require_subcommand(1);

	Globals g;
	try {
		g.budget = budget_from_env();
	} catch (const std::exception& e) {
		err << e.what() << '\n';
		return kExitUsage;
	}
	app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
	app.add_flag("--exponent", g.exponent, "Print partitions in exponent notation");
	app.add_option("--budget", g.budget, "Maximum memo entries (default 10^7 or $NIMSHAPE_BUDGET)");
	app.add_option("--threads", g.threads, "Worker threads for enumeration (0 = all cores)");

	// sg
	std::string pos_text;
	bool misere = false;
	std::string ruleset_text;
	auto* sg = app.add_subcommand("sg", "Grundy value of a position");
	sg->add_option("position", pos_text, "Position, e.g. [4,2,1]+[3,3] or (5,4,2)+(2,3)")->required();
	sg->add_flag("--misere", misere, "Misere value");
	sg->add_option("--ruleset", ruleset_text, "Expected ruleset")->check(CLI::IsMember({"pnim", "rnim"}));
	sg->add_option("--cache", g.cache, "Warm cache file (read if present, then rewritten)");

	// best-move
	auto* bm = app.add_subcommand("best-move", "Optimal move from a position");
	bm->add_option("position", pos_text)->required();
	bm->add_flag("--misere", misere);

	// play
	bool second = false;
	auto* play = app.add_subcommand("play", "Play against the engine on standard input");
	play->add_option("position", pos_text)->required();
	play->add_flag("--misere", misere);
	play->add_flag("--second", second, "Let the engine move first");

	// enumerate
	bool heavy = false;
	unsigned grundy_k = 0;
	int n_max = 0;
	bool up_to_conjugation = false;
	auto* en = app.add_subcommand("enumerate", "List partitions by value or heaviness");
	auto* heavy_opt = en->add_flag("--heavy", heavy, "Heavy partitions");
	auto* grundy_opt = en->add_option("--grundy", grundy_k, "Partitions with this Grundy value");
	heavy_opt->excludes(grundy_opt);
	en->add_option("--n", n_max, "Maximum order")->required()->check(CLI::Range(0, kMaxEnumerationOrder));
	en->add_flag("--up-to-conjugation", up_to_conjugation, "One representative per conjugate pair");
	en->add_option("--output", g.output, "Write to file instead of standard output");
	en->add_option("--cache", g.cache, "Warm cache file (read if present, then rewritten)");

	// conjecture
	std::string conjecture_id;
	ConjectureBounds bounds;
	auto* cj = app.add_subcommand("conjecture", "Sweep a heaviness conjecture for counterexamples");
	cj->add_option("id", conjecture_id, "chopped-rect or shallow-staircase")
	    ->required()
	    ->check(CLI::IsMember({"chopped-rect", "shallow-staircase"}));
	cj->add_option("--a-max", bounds.a_max);
	cj->add_option("--b-max", bounds.b_max);
	cj->add_option("--i-max", bounds.i_max);
	cj->add_option("--s-max", bounds.s_max);
	cj->add_option("--k-max", bounds.k_max);
	cj->add_option("--output", g.output);
	cj->add_option("--cache", g.cache);

	// verify
	std::string scope_text = "all";
	bool deep = false;
	auto* vf = app.add_subcommand("verify", "Run the built-in verification suites");
	vf->add_option("--scope", scope_text)->check(CLI::IsMember({"all", "formulas", "engine", "misere", "appendices", "cgh"}));
	vf->add_flag("--deep", deep, "Check the value-2 list up to order 26");

	// audit
	int audit_n = 12;
	int audit_dim = 2;
	int audit_side = 5;
	auto* au = app.add_subcommand("audit", "Conway-Gurvich-Ho class audit on a bounded space");
	au->add_option("--ruleset", ruleset_text)->check(CLI::IsMember({"pnim", "rnim"}));
	au->add_option("--n", audit_n, "PNim: maximum order");
	au->add_option("--dim", audit_dim, "RNim: maximum dimension");
	au->add_option("--sides", audit_side, "RNim: maximum side length");

	// cache
	std::string cache_action;
	std::string cache_path;
	int cache_n = 12;
	auto* ca = app.add_subcommand("cache", "Save or load a memo cache");
	ca->add_option("action", cache_action)->required()->check(CLI::IsMember({"save", "load"}));
	ca->add_option("path", cache_path)->required();
	ca->add_option("--ruleset", ruleset_text)->check(CLI::IsMember({"pnim", "rnim"}));
	ca->add_option("--n", cache_n, "save: PNim order or RNim maximum side to precompute");
	ca->add_option("--dim", audit_dim, "save: RNim maximum dimension");

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch (const CLI::CallForHelp&) {
		out << app.help();
		return kExitOk;
	} catch (const CLI::ParseError& e) {
		err << e.what() << '\n';
		return kExitUsage;
	}

	try {
		const Format format = parse_format(g.format);
		Engine engine({g.budget});
		const Convention convention = misere ? Convention::misere : Convention::normal;

		if (*sg) {
			const SumPosition p = parse_position(pos_text, ruleset_text);
			warm(engine, g, p.ruleset);
			const GrundyPair pair = engine.grundy_pair(p);
			const unsigned value = misere ? pair.g_minus : engine.grundy(p);
			persist(engine, g, p.ruleset);
			const std::string text = to_string(p, notation(g));
			if (format == Format::json) {
				nlohmann::ordered_json j;
				j["position"] = text;
				j["convention"] = misere ? "misere" : "normal";
				j["value"] = value;
				out << j.dump() << '\n';
			} else if (format == Format::csv) {
				out << "position,convention,value\n\"" << text << "\"," << (misere ? "misere" : "normal") << ',' << value << '\n';
			} else {
				out << (misere ? "misere value of " : "value of ") << text << " = " << value << '\n';
			}
			return kExitOk;
		}

		if (*bm) {
			const SumPosition p = parse_position(pos_text, "");
			const MoveChoice choice = best_move(engine, p, convention);
			const std::string move = format_move(p, choice.move);
			const std::string next = to_string(choice.successor, notation(g));
			if (format == Format::json) {
				nlohmann::ordered_json j;
				j["position"] = to_string(p, notation(g));
				j["move"] = move;
				j["successor"] = next;
				j["winning"] = choice.winning;
				out << j.dump() << '\n';
			} else if (format == Format::csv) {
				out << "position,move,successor,winning\n\"" << to_string(p, notation(g)) << "\",\"" << move << "\",\""
				    << next << "\"," << (choice.winning ? "true" : "false") << '\n';
			} else {
				out << move << " -> " << next << (choice.winning ? "" : " (losing: no winning move exists)") << '\n';
			}
			return kExitOk;
		}

		if (*play) {
			const SumPosition p = parse_position(pos_text, "");
			PlayOptions options{convention, !second, notation(g)};
			play_session(engine, p, options, in, out);
			return kExitOk;
		}

		if (*en) {
			if (!heavy && grundy_opt->count() == 0) throw ParseError("enumerate needs --heavy or --grundy K");
			warm(engine, g, Ruleset::pnim);
			const EnumerationReport report = heavy ? enumerate_heavy(engine, n_max, up_to_conjugation, g.threads)
			                                       : enumerate_by_value(engine, grundy_k, n_max, up_to_conjugation, g.threads);
			persist(engine, g, Ruleset::pnim);
			emit(g, out, export_report(report, format, notation(g)));
			return kExitOk;
		}

		if (*cj) {
			warm(engine, g, Ruleset::pnim);
			const ConjectureReport report = check_conjectures(engine, parse_conjecture_id(conjecture_id), bounds);
			persist(engine, g, Ruleset::pnim);
			emit(g, out, export_report(report, format, notation(g)));
			return kExitOk;
		}

		if (*vf) {
			const auto results = verify_suite(parse_scope(scope_text), {deep, g.budget, g.threads});
			out << export_report(results, format);
			bool failed = false;
			for (const auto& r : results) failed = failed || r.status == Status::fail;
			return failed ? kExitVerificationFailed : kExitOk;
		}

		if (*au) {
			const Ruleset ruleset = ruleset_text.empty() ? Ruleset::pnim : parse_ruleset(ruleset_text);
			const CghReport report = cgh_audit(engine, ruleset, {audit_n, audit_dim, audit_side});
			out << export_report(report, format);
			return kExitOk;
		}

		if (*ca) {
			const Ruleset ruleset = ruleset_text.empty() ? Ruleset::pnim : parse_ruleset(ruleset_text);
			if (cache_action == "save") {
				if (ruleset == Ruleset::pnim)
					parallel_evaluate(engine, enumerate_partitions_upto(cache_n), g.threads);
				else
					for (const auto& h : enumerate_hyperrects(audit_dim, cache_n)) engine.evaluate(h);
				const MemoTable table = engine.export_table(ruleset);
				cache_save(table, cache_path);
				out << "saved " << table.entries.size() << ' ' << to_string(ruleset) << " entries to " << cache_path << '\n';
				return kExitOk;
			}
			const MemoTable table = cache_load(cache_path, ruleset_text.empty() ? std::nullopt : std::optional(ruleset));
			// recompute every entry on a cold engine
			std::size_t mismatches = 0;
			for (const auto& [key, entry] : table.entries) {
				const GrundyPair v = table.ruleset == Ruleset::pnim ? engine.evaluate(Partition(key)) : engine.evaluate(Hyperrect(key));
				if (v.g != entry.g || (entry.g_minus && *entry.g_minus != v.g_minus)) {
					if (mismatches++ < 10)
						err << "mismatch at " << (table.ruleset == Ruleset::pnim ? to_string(Partition(key)) : to_string(Hyperrect(key)))
						    << '\n';
				}
			}
			out << "loaded " << table.entries.size() << ' ' << to_string(table.ruleset) << " entries from " << cache_path
			    << ", " << mismatches << " mismatches\n";
			return mismatches ? kExitVerificationFailed : kExitOk;
		}
	} catch (const BudgetExceeded& e) {
		err << "budget exceeded: " << e.what() << '\n';
		return kExitBudget;
	} catch (const ParseError& e) {
		err << "error: " << e.what() << '\n';
		return kExitUsage;
	} catch (const DomainError& e) {
		err << "error: " << e.what() << '\n';
		return kExitUsage;
	} catch (const CacheError& e) {
		err << "cache error: " << e.what() << '\n';
		return kExitUsage;
	} catch (const std::exception& e) {
		err << "error: " << e.what() << '\n';
		return kExitVerificationFailed;
	}
	return kExitUsage;
}

}  // namespace nimshape
