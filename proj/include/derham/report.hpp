#pragma once

// Serializable result documents and their JSON, CSV and LaTeX renderings.

#include "derham/abelian_group.hpp"
#include "derham/cohomology.hpp"
#include "derham/theorems.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace derham {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

enum class Format { json, csv, latex };

/// One CLI result. `kind` is cohomology, pages, verify or basis and selects
/// the shape of `results`.
struct ReportDocument {
  std::string command;
  std::string kind;
  Json parameters = Json::object();
  Json results;
  std::optional<double> timing_seconds;

  bool operator==(const ReportDocument&) const = default;
};

Json to_json(const ReportDocument& doc);
/// Throws std::invalid_argument on a schema mismatch or missing fields.
ReportDocument document_from_json(const Json& j);

Json to_json(const VerificationReport& report);
VerificationReport report_from_json(const Json& j);

/// {i, free_rank, invariant_factors} for each nonzero degree.
Json cohomology_results(const CohomologyResult& h);
Json group_json(const FgAbGroup& g);

Json basis_results(int r, int n, int i);

/// Page dims and differential ranks for k = 1..kmax, each with the outcome
/// of its identification and closed-form checks.
Json pages_results(int r, int n, Prime p, int kmax = 0);

Json verify_results(const std::vector<VerificationReport>& reports);
/// True when every report in a verify payload passed.
bool verify_passed(const Json& results);

/// Deterministic text in the requested format, newline terminated.
std::string render(const ReportDocument& doc, Format format);

/// LaTeX for a group, e.g. "\mathbb{Z}/2 \oplus (\mathbb{Z}/4)^{2}".
std::string latex_group(const Json& group);

}  // namespace derham
