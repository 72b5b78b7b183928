#include "doctest.h"

#include <nimshape/cache.hpp>
#include <nimshape/cli.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace nimshape;

namespace {

struct Run {
	int code = 0;
	std::string out;
	std::string err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
	std::istringstream in(input);
	std::ostringstream out, err;
	Run r;
	r.code = run_cli(args, in, out, err);
	r.out = out.str();
	r.err = err.str();
	return r;
}

std::filesystem::path temp_file(const std::string& name) {
	return std::filesystem::temp_directory_path() / ("nimshape_cli_" + name);
}

}  // namespace

TEST_CASE("sg") {
	auto r = cli({"sg", "[3,3]"});
	CHECK(r.code == kExitOk);
	CHECK(r.out == "value of [3,3] = 4\n");
	r = cli({"sg", "(1,2,3)+(2,2)", "--misere"});
	CHECK(r.code == kExitOk);
	CHECK(r.out.find("= 5") != std::string::npos);
	r = cli({"sg", "[1,2]"});
	CHECK(r.code == kExitUsage);
	CHECK(r.err.find("'2'") != std::string::npos);
	CHECK(cli({"sg", "[2]+(1)"}).code == kExitUsage);
	CHECK(cli({"--budget", "5", "sg", "[5,4,3,2,1]"}).code == kExitBudget);
}

TEST_CASE("best-move") {
	auto r = cli({"best-move", "[3]+[2]"});
	CHECK(r.code == kExitOk);
	CHECK(r.out.find("rm cols 3 of 1 -> [2]+[2]") != std::string::npos);
	r = cli({"best-move", "[2]+[2]"});
	CHECK(r.out.find("losing") != std::string::npos);
	CHECK(cli({"best-move", "[]"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
	CHECK(cli({}).code == kExitUsage);
	CHECK(cli({"frobnicate"}).code == kExitUsage);
	CHECK(cli({"enumerate", "--n", "5"}).code == kExitUsage);
	CHECK(cli({"enumerate", "--heavy", "--n", "500"}).code == kExitUsage);
	CHECK(cli({"--format", "xml", "enumerate", "--heavy", "--n", "3"}).code == kExitUsage);
}

TEST_CASE("enumerate output and file export") {
	auto r = cli({"--format", "csv", "enumerate", "--heavy", "--n", "3", "--up-to-conjugation"});
	CHECK(r.code == kExitOk);
	CHECK(r.out == "n,partition,g,longest_play\n1,[1],1,1\n2,\"[1,1]\",2,2\n3,\"[2,1]\",3,3\n3,\"[1,1,1]\",3,3\n");

	const auto path = temp_file("enum.csv");
	const auto cache = temp_file("enum.cache");
	std::filesystem::remove(cache);
	r = cli({"--format", "csv", "enumerate", "--grundy", "2", "--n", "15", "--up-to-conjugation", "--output",
	         path.string(), "--cache", cache.string()});
	CHECK(r.code == kExitOk);
	std::ifstream first_file(path);
	std::string first((std::istreambuf_iterator<char>(first_file)), {});
	CHECK(first.find("\"[3,3,3,3]\"") != std::string::npos);

	// warm rerun from the cache file writes the same bytes
	r = cli({"--format", "csv", "enumerate", "--grundy", "2", "--n", "15", "--up-to-conjugation", "--output",
	         path.string(), "--cache", cache.string()});
	CHECK(r.code == kExitOk);
	std::ifstream second_file(path);
	std::string second((std::istreambuf_iterator<char>(second_file)), {});
	CHECK(first == second);
	CHECK(std::filesystem::exists(cache));
	std::filesystem::remove(path);
	std::filesystem::remove(cache);
}

TEST_CASE("conjecture and verify") {
	auto r = cli({"conjecture", "chopped-rect", "--a-max", "3", "--b-max", "3"});
	CHECK(r.code == kExitOk);
	CHECK(r.out.find("no counterexamples") != std::string::npos);
	CHECK(cli({"conjecture", "other"}).code == kExitUsage);

	r = cli({"--format", "json", "verify", "--scope", "appendices"});
	CHECK(r.code == kExitOk);
	CHECK(r.out.find("\"status\":\"PASS\"") != std::string::npos);
	CHECK(r.out.find("FAIL") == std::string::npos);
	CHECK(cli({"verify", "--scope", "nothing"}).code == kExitUsage);
}

TEST_CASE("audit") {
	auto r = cli({"audit", "--ruleset", "pnim", "--n", "6"});
	CHECK(r.code == kExitOk);
	CHECK(r.out.find("[2,2] (1,0) -> [2] (2,2)") != std::string::npos);
}

TEST_CASE("play via streams") {
	auto r = cli({"play", "[1]", "--misere"}, "rm rows 1\n");
	CHECK(r.code == kExitOk);
	CHECK(r.out.find("engine wins") != std::string::npos);
	r = cli({"play", "[3]", "--second"});
	CHECK(r.out.find("engine wins") != std::string::npos);
}

TEST_CASE("cache save and load") {
	const auto path = temp_file("saved.cache");
	auto r = cli({"cache", "save", path.string(), "--ruleset", "pnim", "--n", "8"});
	CHECK(r.code == kExitOk);
	const auto table = cache_load(path, Ruleset::pnim);
	CHECK_FALSE(table.entries.empty());
	CHECK(cli({"cache", "load", path.string(), "--ruleset", "pnim"}).code == kExitOk);
	CHECK(cli({"cache", "load", path.string(), "--ruleset", "rnim"}).code == kExitUsage);

	// a tampered value is detected on load
	auto bad = table;
	bad.entries.begin()->second.g += 7;
	cache_save(bad, path);
	CHECK(cli({"cache", "load", path.string(), "--ruleset", "pnim"}).code == kExitVerificationFailed);

	r = cli({"cache", "save", path.string(), "--ruleset", "rnim", "--dim", "2", "--n", "3"});
	CHECK(r.code == kExitOk);
	CHECK(cache_load(path).ruleset == Ruleset::rnim);
	std::filesystem::remove(path);
}
