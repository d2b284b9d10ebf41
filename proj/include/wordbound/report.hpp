// Experiment reports: parameters, result rows and per-claim verdicts, with
// deterministic JSON, CSV and aligned-table renderings.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace wordbound {

using Scalar = std::variant<bool, std::int64_t, std::string>;
/// Ordered (column, value) pairs.
using Row = std::vector<std::pair<std::string, Scalar>>;

std::string scalar_text(Scalar const& v);

struct Verdict {
  std::string claim;
  bool        pass = false;
  std::string details;

  bool operator==(Verdict const&) const = default;
};

struct ExperimentReport {
  std::string                  name;
  Row                          params;
  std::vector<Row>             rows;
  std::vector<Verdict>         verdicts;
  std::optional<std::uint64_t> seed;
  std::string                  version = "wordbound 1.0.0";

  bool passed() const;
  bool operator==(ExperimentReport const&) const = default;
};

/// A claim checked by some experiment; verdicts refer to it by id.
struct Claim {
  std::string_view id;
  std::string_view experiment;
  std::string_view statement;
};

std::vector<Claim> const& claim_catalog();
Claim const*              find_claim(std::string_view id);

enum class Format { Json, Csv, Table };

std::optional<Format> parse_format(std::string_view name);

nlohmann::ordered_json to_json(ExperimentReport const& r);
/// Throws std::invalid_argument on schema violations. Takes an ordered
/// document so that column order survives the round trip.
ExperimentReport       report_from_json(nlohmann::ordered_json const& j);
ExperimentReport       parse_report(std::string_view text);

/// Deterministic bytes with LF line endings and a trailing newline.
std::string render(ExperimentReport const& r, Format f);
/// Several reports: a JSON array, CSV sections or consecutive tables.
std::string render(std::vector<ExperimentReport> const& rs, Format f);

}  // namespace wordbound
