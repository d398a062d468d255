#pragma once

// End-to-end sweep over (d, s, lambdas): priors, budgets, exact optimization
// and elimination thresholds, plus witness verification and report output.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ginbound/budget.hpp"
#include "ginbound/lift.hpp"
#include "ginbound/optimizer.hpp"
#include "ginbound/staircase.hpp"

namespace ginbound {

enum class Verdict { Eliminated, Survives, ExcludedByPrior };

std::string_view to_string(Verdict v);
/// Throws ParseError.
Verdict parse_verdict(std::string_view text);

struct SurveyRecord {
    int d = 0;
    int s = 0;
    std::vector<int> lambdas;
    std::int64_t z = 0;
    std::string acm;
    std::int64_t best_objective = 0;
    std::int64_t best_A = 0;
    std::int64_t best_gamma = 0;
    std::int64_t P = 0;
    std::int64_t a_min = 0;
    Verdict verdict = Verdict::ExcludedByPrior;
    std::string reason;                   // prior that excluded the record, if any
    std::vector<Monomial> witness;        // generators of the optimal lift when Survives
    std::string witness_ref;              // content-addressed file name when Survives
    std::string rule_set_id;
    std::uint64_t nodes_explored = 0;

    friend bool operator==(const SurveyRecord&, const SurveyRecord&) = default;
};

struct SurveyConfig {
    int d_min = 43;
    int d_max = 66;
    std::vector<int> s_values{4, 5};
    Priors priors;
    RuleSet rules;
    int threads = 0;  // 0: hardware concurrency

    friend bool operator==(const SurveyConfig&, const SurveyConfig&) = default;
};

struct SurveyReport {
    std::vector<SurveyRecord> records;
    int max_surviving_degree = 0;
    SurveyConfig config;

    friend bool operator==(const SurveyReport&, const SurveyReport&) = default;
};

SurveyRecord classify(const InvariantSequence& seq, const RuleSet& rules = {}, const Priors& priors = {});

/// Records ordered by d descending, s ascending, lambdas lexicographically descending.
SurveyReport run_survey(const SurveyConfig& config);

/// Writes every Survives witness to dir/<witness_ref>; returns the paths written.
std::vector<std::filesystem::path> write_witnesses(const SurveyReport& report, const std::filesystem::path& dir);

/// "witness-<16 hex digits>.json", a hash of the serialized ideal.
std::string witness_file_name(const MonomialIdeal& ideal);

struct CheckItem {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct WitnessVerification {
    std::vector<CheckItem> checks;
    std::vector<std::string> warnings;
    std::string sequence;  // saturated invariants, empty if saturation failed
    std::int64_t gamma = 0;
    std::int64_t A = 0;
    std::int64_t value = 0;  // P - (12A - 22 gamma)

    bool ok() const;
    std::string to_text() const;
};

/// Borel-fixedness, saturation, heights, zero statistics, admissibility and
/// the inequality, in that order.  Stops at the first check the later ones
/// depend on.
WitnessVerification verify_witness(const MonomialIdeal& ideal, const RuleSet& rules = {});
/// Reads a JSON ideal file.  Throws ParseError on unreadable or malformed input.
WitnessVerification verify_witness(const std::filesystem::path& path, const RuleSet& rules = {});

enum class ReportFormat { Csv, Json, Markdown };

/// Accepts "csv", "json", "md" / "markdown".  Throws ParseError.
ReportFormat parse_report_format(std::string_view text);

std::string emit_report(const SurveyReport& report, ReportFormat format);

nlohmann::json to_json(const SurveyRecord& record);
nlohmann::json to_json(const SurveyReport& report);
nlohmann::json to_json(const SurveyConfig& config);
nlohmann::json to_json(const Priors& priors);
nlohmann::json to_json(const RuleSet& rules);

/// Throw ParseError on missing or mistyped fields.
SurveyRecord record_from_json(const nlohmann::json& doc);
SurveyReport report_from_json(const nlohmann::json& doc);
/// Missing keys keep their defaults, so a config file may be partial.
SurveyConfig config_from_json(const nlohmann::json& doc);
Priors priors_from_json(const nlohmann::json& doc, Priors base = {});
RuleSet rules_from_json(const nlohmann::json& doc, RuleSet base = {});

}  // namespace ginbound
