#pragma once

// Report builders for the command-line tool. Every report is an array of
// flat records; the three output formats are renderings of the same array.

#include "extremal/genus.hpp"
#include "extremal/rational.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace extremal::cli {

using Record = nlohmann::ordered_json;

enum class Format { json, csv, md };

Format parse_format(const std::string& s);

std::string render(const Record& records, Format format);

Record catalog_report();

enum class BoundsTable { extremes, positive, negative };

BoundsTable parse_bounds_table(const std::string& s);

Record bounds_report(std::optional<CategoryId> id, BoundsTable table);

/// Rows of the classification; `all_match` reports the golden comparison.
Record classify_report(std::optional<CategoryId> id, int order, bool& all_match);

Record character_report(CategoryId id, const Rational& c, int order);

Record chi_report(CategoryId id, const Rational& c);

/// Reed-Muller certification; `ok` is false if any check fails.
Record rm_report(bool& ok);

}  // namespace extremal::cli
