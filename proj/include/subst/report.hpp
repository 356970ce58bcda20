#pragma once

// One analysis of one substitution, shared by the CLI and the HTTP service.

#include <json.hpp>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "subst/pisot.hpp"
#include "subst/word.hpp"

namespace subst {

inline constexpr int kReportSchema = 1;
inline constexpr std::size_t kReportWordBudget = kDefaultWordBudget;

// Stage names in display order.
const std::vector<std::string>& stage_names();

enum class StageStatus { Ok, Refused, Budget, NotRequested };
std::string to_string(StageStatus s);

struct Stage {
  StageStatus status = StageStatus::NotRequested;
  std::string reason;  // set unless ok / not requested
  nlohmann::json data = nlohmann::json::object();
  friend bool operator==(const Stage&, const Stage&) = default;
};

struct AnalysisOptions {
  // No explicit request: run every stage, none of them explicitly.
  std::set<std::string> requested;
  std::size_t complexity_max = 10;
  std::vector<std::size_t> word_lengths{2, 3};
  int precision = 12;
  int coincidence_cap = kDefaultCoincidenceCap;
  std::size_t budget = kReportWordBudget;

  bool everything() const { return requested.empty(); }
  bool runs(const std::string& stage) const;
};

// Shared option grammar: {complexity, words, cohomology, pisot, coincidence,
// precision, cap}. Throws ParseError on bad values.
AnalysisOptions options_from_json(const nlohmann::json& j);

struct AnalysisReport {
  int schema = kReportSchema;
  std::string input;
  std::map<std::string, Stage> stages;
  std::map<std::string, double> timings_ms;  // not part of equality

  const Stage& stage(const std::string& name) const;
  friend bool operator==(const AnalysisReport& a, const AnalysisReport& b) {
    return a.schema == b.schema && a.input == b.input && a.stages == b.stages;
  }
};

// Throws ParseError for a malformed share-string.
AnalysisReport analyze(const std::string& share, const AnalysisOptions& options);

nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);

// 0 ok, 3 an explicitly requested stage was refused, 4 one ran out of budget.
int report_exit_code(const AnalysisReport& r, const AnalysisOptions& options);

std::string render_text(const AnalysisReport& r);
// Standalone LaTeX document; byte-identical for equal reports.
std::string export_latex(const AnalysisReport& r);
// Both complexes as DOT digraphs or as one standalone TikZ document.
std::string export_complexes(const AnalysisReport& r, bool tikz);

}  // namespace subst
