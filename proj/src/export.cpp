#include "nimshape/export.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nimshape {

using ojson = nlohmann::ordered_json;

Format parse_format(std::string_view text) {
	if (text == "text") return Format::text;
	if (text == "json") return Format::json;
	if (text == "csv") return Format::csv;
	throw ParseError("unknown format '" + std::string(text) + "' (text, json, csv)");
}

namespace {

std::string csv_field(const std::string& s) {
	if (s.find_first_of(",\"\n") == std::string::npos) return s;
	std::string out = "\"";
	for (char ch : s) {
		if (ch == '"') out += '"';
		out += ch;
	}
	return out + "\"";
}

}  // namespace

std::string export_report(const EnumerationReport& report, Format format, Notation notation) {
	std::ostringstream out;
	switch (format) {
	case Format::csv:
		out << "n,partition,g,longest_play\n";
		for (const auto& row : report.rows)
			out << row.partition.size() << ',' << csv_field(to_string(row.partition, notation)) << ',' << row.g << ','
			    << row.longest_play << '\n';
		break;
	case Format::json:
		for (const auto& row : report.rows) {
			ojson j;
			j["n"] = row.partition.size();
			j["partition"] = to_string(row.partition, notation);
			j["g"] = row.g;
			j["longest_play"] = row.longest_play;
			out << j.dump() << '\n';
		}
		break;
	case Format::text:
		out << "# " << report.filter << ", n <= " << report.n_max
		    << (report.up_to_conjugation ? ", up to conjugation" : "") << "\n";
		for (const auto& row : report.rows)
			out << "n=" << row.partition.size() << "  " << to_string(row.partition, notation) << "  g=" << row.g
			    << "  longest_play=" << row.longest_play << '\n';
		out << "# counts:";
		for (const auto& [n, count] : report.counts_per_n) out << ' ' << n << ':' << count;
		out << "\n# total: " << report.rows.size() << '\n';
		break;
	}
	return out.str();
}

std::string export_report(const ConjectureReport& report, Format format, Notation notation) {
	std::ostringstream out;
	const std::string id(to_string(report.id));
	switch (format) {
	case Format::csv:
		out << "kind,conjecture,params,partition,g,longest_play,positions_checked\n";
		out << "summary," << id << ',' << csv_field(report.ranges) << ",,,," << report.positions_checked << '\n';
		for (const auto& c : report.counterexamples)
			out << "counterexample," << id << ',' << csv_field(c.params) << ','
			    << csv_field(to_string(c.partition, notation)) << ',' << c.g << ',' << c.longest_play << ",\n";
		break;
	case Format::json: {
		ojson summary;
		summary["kind"] = "summary";
		summary["conjecture"] = id;
		summary["params"] = report.ranges;
		summary["positions_checked"] = report.positions_checked;
		summary["parameters_checked"] = report.parameters_checked;
		summary["premise_failures"] = report.premise_failures;
		summary["counterexamples"] = report.counterexamples.size();
		out << summary.dump() << '\n';
		for (const auto& c : report.counterexamples) {
			ojson j;
			j["kind"] = "counterexample";
			j["conjecture"] = id;
			j["params"] = c.params;
			j["partition"] = to_string(c.partition, notation);
			j["g"] = c.g;
			j["longest_play"] = c.longest_play;
			out << j.dump() << '\n';
		}
		break;
	}
	case Format::text:
		out << "conjecture " << id << " over " << report.ranges << '\n';
		out << "  parameter sets: " << report.parameters_checked;
		if (report.id == ConjectureId::chopped_rect) out << " (" << report.premise_failures << " with non-heavy rectangle)";
		out << "\n  positions checked: " << report.positions_checked << '\n';
		if (report.counterexamples.empty()) {
			out << "  no counterexamples\n";
		} else {
			out << "  counterexamples: " << report.counterexamples.size() << '\n';
			for (const auto& c : report.counterexamples)
				out << "    " << c.params << "  " << to_string(c.partition, notation) << "  g=" << c.g
				    << "  longest_play=" << c.longest_play << '\n';
		}
		break;
	}
	return out.str();
}

std::string export_report(const std::vector<CheckResult>& results, Format format) {
	std::ostringstream out;
	std::size_t failed = 0;
	std::size_t skipped = 0;
	for (const auto& r : results) {
		failed += r.status == Status::fail;
		skipped += r.status == Status::skipped;
	}
	switch (format) {
	case Format::csv:
		out << "scope,check,status,detail\n";
		for (const auto& r : results)
			out << r.scope << ',' << csv_field(r.name) << ',' << to_string(r.status) << ',' << csv_field(r.detail) << '\n';
		break;
	case Format::json:
		for (const auto& r : results) {
			ojson j;
			j["scope"] = r.scope;
			j["check"] = r.name;
			j["status"] = to_string(r.status);
			j["detail"] = r.detail;
			out << j.dump() << '\n';
		}
		break;
	case Format::text:
		for (const auto& r : results)
			out << '[' << to_string(r.status) << "] " << r.scope << ": " << r.name << " (" << r.detail << ")\n";
		out << results.size() - failed - skipped << " passed, " << failed << " failed, " << skipped << " skipped\n";
		break;
	}
	return out.str();
}

std::string export_report(const CghReport& report, Format format) {
	std::ostringstream out;
	const std::pair<const char*, const ClassCheck*> classes[] = {{"pet", &report.pet},
	                                                            {"tame", &report.tame},
	                                                            {"miserable", &report.miserable},
	                                                            {"returnable", &report.returnable},
	                                                            {"forced", &report.forced}};
	switch (format) {
	case Format::csv:
		out << "ruleset,class,verdict,witness,sample\n";
		for (const auto& [name, check] : classes)
			out << to_string(report.ruleset) << ',' << name << ',' << to_string(check->verdict) << ','
			    << csv_field(check->witness ? describe(*check->witness) : "") << ',' << csv_field(report.sample) << '\n';
		break;
	case Format::json:
		for (const auto& [name, check] : classes) {
			ojson j;
			j["ruleset"] = to_string(report.ruleset);
			j["class"] = name;
			j["verdict"] = to_string(check->verdict);
			j["witness"] = check->witness ? describe(*check->witness) : "";
			j["sample"] = report.sample;
			out << j.dump() << '\n';
		}
		break;
	case Format::text:
		out << to_string(report.ruleset) << " over " << report.sample << " (" << report.positions << " positions)\n";
		for (const auto& [name, check] : classes) {
			out << "  " << name << ": " << to_string(check->verdict);
			if (check->witness) out << "  witness " << describe(*check->witness);
			out << '\n';
		}
		break;
	}
	return out.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
	std::ofstream out(path, std::ios::binary);
	if (!out) throw std::runtime_error("cannot write " + path.string());
	out << content;
	if (!out) throw std::runtime_error("error while writing " + path.string());
}

}  // namespace nimshape
