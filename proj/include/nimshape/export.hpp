#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "nimshape/explorer.hpp"
#include "nimshape/strategy.hpp"

namespace nimshape {

enum class Format { text, json, csv };
Format parse_format(std::string_view text);

// Enumeration CSV columns: n,partition,g,longest_play. JSON lines carry the same fields,
// one object per row.
std::string export_report(const EnumerationReport& report, Format format, Notation notation = Notation::plain);

// Conjecture CSV columns: kind,conjecture,params,partition,g,longest_play,positions_checked.
// The first row is the summary (kind=summary); one kind=counterexample row follows per
// counterexample.
std::string export_report(const ConjectureReport& report, Format format, Notation notation = Notation::plain);

// Verification results: columns scope,check,status,detail.
std::string export_report(const std::vector<CheckResult>& results, Format format);

std::string export_report(const CghReport& report, Format format);

// Throws std::runtime_error when the file cannot be written.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace nimshape
