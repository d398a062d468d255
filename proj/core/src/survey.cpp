#include "ginbound/survey.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "ginbound/error.hpp"
#include "ginbound/inequality.hpp"

namespace ginbound {

using nlohmann::json;

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Eliminated: return "Eliminated";
        case Verdict::Survives: return "Survives";
        case Verdict::ExcludedByPrior: return "ExcludedByPrior";
    }
    return "?";
}

Verdict parse_verdict(std::string_view text) {
    if (text == "Eliminated") return Verdict::Eliminated;
    if (text == "Survives") return Verdict::Survives;
    if (text == "ExcludedByPrior") return Verdict::ExcludedByPrior;
    throw ParseError("unknown verdict '" + std::string(text) + "'");
}

namespace {

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

std::string join(const std::vector<int>& values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace

std::string witness_file_name(const MonomialIdeal& ideal) {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a(ideal_to_json(ideal).dump())));
    return std::string("witness-") + hex + ".json";
}

SurveyRecord classify(const InvariantSequence& seq, const RuleSet& rules, const Priors& priors) {
    SurveyRecord rec;
    rec.d = seq.degree();
    rec.s = seq.s();
    rec.lambdas.assign(seq.lambdas().begin(), seq.lambdas().end());
    rec.acm = acm_class(seq).to_string();
    rec.rule_set_id = rules.id();
    rec.P = a_independent_part(seq);

    const auto gate = admissible(seq, priors);
    if (!gate.ok) {
        if (rec.s == 4 || rec.s == 5) rec.z = resolve_budget(seq, rules);
        rec.reason = gate.reason;
        return rec;
    }
    rec.z = resolve_budget(seq, rules);
    rec.a_min = elimination_threshold(seq, rec.z).a_min;
    if (rec.z < 0) {
        rec.reason = "budget: z=" + std::to_string(rec.z) + " < 0";
        return rec;
    }

    const auto result = maximize_penalty(seq, rules);
    rec.best_objective = result.best_objective;
    rec.best_A = result.best_A;
    rec.best_gamma = result.best_gamma;
    rec.nodes_explored = result.nodes_explored;
    if (result.eliminated) {
        rec.verdict = Verdict::Eliminated;
    } else {
        rec.verdict = Verdict::Survives;
        const MonomialIdeal ideal(minimal_generators(result.witness));
        rec.witness.assign(ideal.generators().begin(), ideal.generators().end());
        rec.witness_ref = witness_file_name(ideal);
    }
    return rec;
}

SurveyReport run_survey(const SurveyConfig& config) {
    std::vector<int> s_values = config.s_values;
    std::sort(s_values.begin(), s_values.end());
    s_values.erase(std::unique(s_values.begin(), s_values.end()), s_values.end());

    std::vector<InvariantSequence> work;
    for (int d = config.d_max; d >= config.d_min; --d) {
        for (int s : s_values) {
            for (auto& seq : enumerate_sequences(d, s)) work.push_back(std::move(seq));
        }
    }

    SurveyReport report;
    report.config = config;
    report.records.resize(work.size());

    unsigned threads = config.threads > 0 ? static_cast<unsigned>(config.threads) : std::thread::hardware_concurrency();
    threads = std::clamp<unsigned>(threads, 1, std::max<std::size_t>(work.size(), 1));
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (auto i = next++; i < work.size(); i = next++) {
                        report.records[i] = classify(work[i], config.rules, config.priors);
                    }
                } catch (...) {
                    errors[t] = std::current_exception();
                    next = work.size();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    for (const auto& rec : report.records) {
        if (rec.verdict == Verdict::Survives) report.max_surviving_degree = std::max(report.max_surviving_degree, rec.d);
    }
    return report;
}

std::vector<std::filesystem::path> write_witnesses(const SurveyReport& report, const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> written;
    std::filesystem::create_directories(dir);
    for (const auto& rec : report.records) {
        if (rec.verdict != Verdict::Survives || rec.witness_ref.empty()) continue;
        const auto path = dir / rec.witness_ref;
        std::ofstream out(path, std::ios::binary);
        out << ideal_to_json(MonomialIdeal(rec.witness)).dump() << '\n';
        if (!out) throw Error("cannot write " + path.string());
        written.push_back(path);
    }
    return written;
}

bool WitnessVerification::ok() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckItem& c) { return c.ok; });
}

std::string WitnessVerification::to_text() const {
    std::ostringstream out;
    for (const auto& w : warnings) out << "warning: " << w << '\n';
    for (const auto& c : checks) {
        out << (c.ok ? "[pass] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << '\n';
    }
    return out.str();
}

WitnessVerification verify_witness(const MonomialIdeal& ideal, const RuleSet& rules) {
    WitnessVerification out;
    if (!ideal.was_minimal()) out.warnings.emplace_back("generators were not minimal; normalized before checking");

    const bool borel = is_borel_fixed(ideal);
    out.checks.push_back({"borel-fixed", borel, ""});
    if (!borel) return out;

    InvariantSequence seq;
    try {
        seq = saturate(ideal);
    } catch (const NotACurveIdeal& e) {
        out.checks.push_back({"saturation", false, e.what()});
        return out;
    }
    out.sequence = seq.to_string();
    out.checks.push_back({"saturation", true, "{" + out.sequence + "}, d=" + std::to_string(seq.degree())});

    HeightFunction h;
    try {
        h = heights_of(ideal);
    } catch (const NotACurveIdeal& e) {
        out.checks.push_back({"heights", false, e.what()});
        return out;
    }
    const auto stats = zero_stats(h);
    out.gamma = stats.gamma;
    out.A = stats.A;
    out.checks.push_back({"zero-stats", true, "gamma=" + std::to_string(stats.gamma) + ", A=" + std::to_string(stats.A)});

    if (seq.s() == 4 || seq.s() == 5) {
        const auto check = is_admissible(h, rules);
        out.checks.push_back({"admissible", check.ok,
                              check.ok ? "all rules hold" : std::string(to_string(check.violated)) + ": " + check.detail});
    } else {
        out.checks.push_back({"admissible", false, "no sporadic-zero budget for s=" + std::to_string(seq.s())});
    }

    const auto eval = eval_eq1(seq, stats.A, stats.gamma);
    out.value = eval.value;
    out.checks.push_back({"inequality", eval.consistent(),
                          "P=" + std::to_string(eval.P) + ", value=" + std::to_string(eval.value)});
    return out;
}

WitnessVerification verify_witness(const std::filesystem::path& path, const RuleSet& rules) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return verify_witness(ideal_from_json(doc), rules);
}

ReportFormat parse_report_format(std::string_view text) {
    if (text == "csv") return ReportFormat::Csv;
    if (text == "json") return ReportFormat::Json;
    if (text == "md" || text == "markdown") return ReportFormat::Markdown;
    throw ParseError("unknown format '" + std::string(text) + "'");
}

json to_json(const Priors& p) {
    return {{"s_min", p.s_min},         {"s_max", p.s_max},         {"d_max", p.d_max},
            {"d_cap_s3", p.d_cap_s3},   {"d_cap_s67", p.d_cap_s67}, {"acm_cap_s4", p.acm_cap_s4},
            {"acm_cap_s5", p.acm_cap_s5}};
}

json to_json(const RuleSet& r) {
    json exclusions = json::array();
    for (const auto& ex : r.special_exclusions) {
        exclusions.push_back({{"d", ex.d}, {"lambdas", ex.lambdas}, {"column", {ex.column.a, ex.column.b}}, {"note", ex.note}});
    }
    return {{"borel", r.borel},
            {"budget_z", r.budget_z ? json(*r.budget_z) : json("auto")},
            {"budget_variant", std::string(to_string(r.budget_variant))},
            {"degree_criteria", r.degree_criteria},
            {"ci_forcing", r.ci_forcing},
            {"special_exclusions", exclusions},
            {"half_degree_strict", r.half_degree_strict},
            {"high_generator_count", r.high_generator_count}};
}

json to_json(const SurveyConfig& c) {
    return {{"d_min", c.d_min}, {"d_max", c.d_max}, {"s_values", c.s_values},
            {"priors", to_json(c.priors)}, {"rules", to_json(c.rules)}};
}

json to_json(const SurveyRecord& r) {
    json witness = json::array();
    for (const auto& m : r.witness) witness.push_back({m.e0, m.e1, m.e2});
    return {{"d", r.d},
            {"s", r.s},
            {"lambdas", r.lambdas},
            {"z", r.z},
            {"acm", r.acm},
            {"best_objective", r.best_objective},
            {"best_A", r.best_A},
            {"best_gamma", r.best_gamma},
            {"P", r.P},
            {"a_min", r.a_min},
            {"verdict", std::string(to_string(r.verdict))},
            {"reason", r.reason},
            {"witness", witness},
            {"witness_ref", r.witness_ref},
            {"rule_set_id", r.rule_set_id},
            {"nodes_explored", r.nodes_explored}};
}

json to_json(const SurveyReport& report) {
    json records = json::array();
    for (const auto& r : report.records) records.push_back(to_json(r));
    return {{"max_surviving_degree", report.max_surviving_degree},
            {"config", to_json(report.config)},
            {"records", records}};
}

namespace {

template <typename T>
void read_field(const json& doc, const char* key, T& target) {
    if (!doc.contains(key)) return;
    try {
        target = doc.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("field '") + key + "': " + e.what());
    }
}

template <typename T>
T require_field(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    T value{};
    read_field(doc, key, value);
    return value;
}

}  // namespace

Priors priors_from_json(const json& doc, Priors p) {
    if (!doc.is_object()) throw ParseError("priors must be an object");
    read_field(doc, "s_min", p.s_min);
    read_field(doc, "s_max", p.s_max);
    read_field(doc, "d_max", p.d_max);
    read_field(doc, "d_cap_s3", p.d_cap_s3);
    read_field(doc, "d_cap_s67", p.d_cap_s67);
    read_field(doc, "acm_cap_s4", p.acm_cap_s4);
    read_field(doc, "acm_cap_s5", p.acm_cap_s5);
    return p;
}

RuleSet rules_from_json(const json& doc, RuleSet r) {
    if (!doc.is_object()) throw ParseError("rules must be an object");
    read_field(doc, "borel", r.borel);
    if (doc.contains("budget_z")) {
        const auto& z = doc.at("budget_z");
        if (z.is_number_integer()) r.budget_z = z.get<std::int64_t>();
        else if (z.is_null() || z == "auto") r.budget_z.reset();
        else throw ParseError("budget_z must be an integer or \"auto\"");
    }
    if (doc.contains("budget_variant")) r.budget_variant = parse_budget_variant(require_field<std::string>(doc, "budget_variant"));
    read_field(doc, "degree_criteria", r.degree_criteria);
    read_field(doc, "ci_forcing", r.ci_forcing);
    read_field(doc, "half_degree_strict", r.half_degree_strict);
    read_field(doc, "high_generator_count", r.high_generator_count);
    if (doc.contains("special_exclusions")) {
        const auto& list = doc.at("special_exclusions");
        if (!list.is_array()) throw ParseError("special_exclusions must be an array");
        r.special_exclusions.clear();
        for (const auto& item : list) {
            SpecialExclusion ex;
            ex.d = require_field<int>(item, "d");
            ex.lambdas = require_field<std::vector<int>>(item, "lambdas");
            const auto col = require_field<std::vector<int>>(item, "column");
            if (col.size() != 2) throw ParseError("exclusion column must be [a, b]");
            ex.column = {col[0], col[1]};
            read_field(item, "note", ex.note);
            r.special_exclusions.push_back(std::move(ex));
        }
    }
    return r;
}

SurveyConfig config_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("config must be an object");
    SurveyConfig c;
    read_field(doc, "d_min", c.d_min);
    read_field(doc, "d_max", c.d_max);
    read_field(doc, "s_values", c.s_values);
    read_field(doc, "threads", c.threads);
    if (doc.contains("priors")) c.priors = priors_from_json(doc.at("priors"));
    if (doc.contains("rules")) c.rules = rules_from_json(doc.at("rules"));
    return c;
}

SurveyRecord record_from_json(const json& doc) {
    SurveyRecord r;
    r.d = require_field<int>(doc, "d");
    r.s = require_field<int>(doc, "s");
    r.lambdas = require_field<std::vector<int>>(doc, "lambdas");
    r.z = require_field<std::int64_t>(doc, "z");
    r.acm = require_field<std::string>(doc, "acm");
    r.best_objective = require_field<std::int64_t>(doc, "best_objective");
    r.best_A = require_field<std::int64_t>(doc, "best_A");
    r.best_gamma = require_field<std::int64_t>(doc, "best_gamma");
    r.P = require_field<std::int64_t>(doc, "P");
    r.a_min = require_field<std::int64_t>(doc, "a_min");
    r.verdict = parse_verdict(require_field<std::string>(doc, "verdict"));
    read_field(doc, "reason", r.reason);
    for (const auto& m : require_field<std::vector<std::vector<int>>>(doc, "witness")) {
        if (m.size() != 3) throw ParseError("witness monomials need three exponents");
        r.witness.push_back({m[0], m[1], m[2]});
    }
    read_field(doc, "witness_ref", r.witness_ref);
    read_field(doc, "rule_set_id", r.rule_set_id);
    read_field(doc, "nodes_explored", r.nodes_explored);
    return r;
}

SurveyReport report_from_json(const json& doc) {
    SurveyReport report;
    report.max_surviving_degree = require_field<int>(doc, "max_surviving_degree");
    report.config = config_from_json(doc.at("config"));
    for (const auto& item : require_field<json>(doc, "records")) report.records.push_back(record_from_json(item));
    return report;
}

std::string emit_report(const SurveyReport& report, ReportFormat format) {
    std::ostringstream out;
    switch (format) {
        case ReportFormat::Csv:
            out << "d,s,lambdas,z,acm,best_A,best_gamma,objective,P,a_min,verdict\n";
            for (const auto& r : report.records) {
                out << r.d << ',' << r.s << ",\"" << join(r.lambdas, ',') << "\"," << r.z << ',' << r.acm << ','
                    << r.best_A << ',' << r.best_gamma << ',' << r.best_objective << ',' << r.P << ',' << r.a_min << ','
                    << to_string(r.verdict) << '\n';
            }
            break;
        case ReportFormat::Json:
            out << to_json(report).dump(2) << '\n';
            break;
        case ReportFormat::Markdown:
            out << "| degree | s | z | {lambda_i} | acm | best A | best gamma | 12A-22gamma | P | a_min | verdict |\n"
                << "|---:|---:|---:|---|---|---:|---:|---:|---:|---:|---|\n";
            for (const auto& r : report.records) {
                out << "| " << r.d << " | " << r.s << " | " << r.z << " | " << join(r.lambdas, ',') << " | " << r.acm
                    << " | " << r.best_A << " | " << r.best_gamma << " | " << r.best_objective << " | " << r.P << " | "
                    << r.a_min << " | " << to_string(r.verdict);
                if (!r.reason.empty()) out << " (" << r.reason << ")";
                out << " |\n";
            }
            out << "\nmax surviving degree: " << report.max_surviving_degree << '\n';
            break;
    }
    return out.str();
}

}  // namespace ginbound
