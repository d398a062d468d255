#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ginbound/budget.hpp"
#include "ginbound/error.hpp"
#include "ginbound/inequality.hpp"
#include "ginbound/lift.hpp"
#include "ginbound/optimizer.hpp"
#include "ginbound/staircase.hpp"
#include "ginbound/survey.hpp"

namespace fs = std::filesystem;
using namespace ginbound;
using ordered = nlohmann::ordered_json;

namespace {

constexpr int kVerificationFailure = 2;

struct Globals {
    std::string format;
    std::string rules = "default";
    std::string budget_variant = "s4_table";
    std::string out_dir;
    std::string config_path;
};

struct Loaded {
    SurveyConfig config;
    RuleSet rules;
};

Loaded load(const Globals& g) {
    Loaded out;
    if (!g.config_path.empty()) {
        std::ifstream in(g.config_path);
        if (!in) throw ParseError("cannot open config " + g.config_path);
        try {
            out.config = config_from_json(nlohmann::json::parse(in));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(g.config_path + ": " + e.what());
        }
    }
    out.rules = parse_rule_set(g.rules, out.config.rules);
    if (g.budget_variant != "s4_table" || g.config_path.empty()) {
        out.rules.budget_variant = parse_budget_variant(g.budget_variant);
    }
    out.config.rules = out.rules;
    return out;
}

std::string cell_text(const ordered& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (const auto& item : v) s += (s.empty() ? "" : ",") + cell_text(item);
        return s;
    }
    return v.dump();
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
}

// Renders an array of flat objects sharing one key order.
std::string render_rows(const ordered& rows, const std::string& format) {
    if (format == "json") return rows.dump(2) + "\n";
    std::ostringstream out;
    std::vector<std::string> keys;
    if (!rows.empty()) {
        for (const auto& item : rows.front().items()) keys.push_back(item.key());
    }
    if (format == "md") {
        out << "|";
        for (const auto& k : keys) out << " " << k << " |";
        out << "\n|";
        for (std::size_t i = 0; i < keys.size(); ++i) out << "---|";
        out << "\n";
        for (const auto& row : rows) {
            out << "|";
            for (const auto& k : keys) out << " " << cell_text(row.at(k)) << " |";
            out << "\n";
        }
        return out.str();
    }
    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << csv_field(cell_text(row.at(keys[i])));
        out << "\n";
    }
    return out.str();
}

std::string render_record(const ordered& record, const std::string& format) {
    if (format == "json") return record.dump(2) + "\n";
    return render_rows(ordered::array({record}), format);
}

void emit(const Globals& g, const std::string& name, const std::string& text, const std::string& format) {
    if (g.out_dir.empty()) {
        std::cout << text;
        return;
    }
    fs::create_directories(g.out_dir);
    const auto path = fs::path(g.out_dir) / (name + "." + format);
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw Error("cannot write " + path.string());
    std::cerr << "wrote " << path.string() << "\n";
}

std::string pick_format(const Globals& g, const std::string& fallback) {
    const auto f = g.format.empty() ? fallback : g.format;
    parse_report_format(f);
    return f == "markdown" ? "md" : f;
}

InvariantSequence sequence_from(const std::string& lambda, std::optional<int> d, std::optional<int> s) {
    auto seq = parse_sequence(lambda);
    if (d && *d != seq.degree()) {
        throw InvalidSequence("--d " + std::to_string(*d) + " does not match sum of lambdas " +
                              std::to_string(seq.degree()));
    }
    if (s && *s != seq.s()) {
        throw InvalidSequence("--s " + std::to_string(*s) + " does not match " + std::to_string(seq.s()) + " invariants");
    }
    return seq;
}

std::optional<std::int64_t> parse_z(const std::string& text) {
    if (text.empty() || text == "auto") return std::nullopt;
    try {
        std::size_t used = 0;
        const auto z = std::stoll(text, &used);
        if (used != text.size()) throw ParseError("");
        return z;
    } catch (const std::exception&) {
        throw ParseError("--z must be an integer or 'auto', got '" + text + "'");
    }
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw ParseError("expected LO:HI, got '" + text + "'");
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ParseError("expected a comma separated list of integers, got '" + text + "'");
        }
    }
    return out;
}

ordered heights_json(const HeightFunction& h) {
    ordered out = ordered::array();
    for (const auto& [col, height] : h.support()) out.push_back({col.a, col.b, height});
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact search over Borel-fixed lifts of space-curve invariants"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Output format: csv, json or md")->check(CLI::IsMember({"csv", "json", "md", "markdown"}));
    app.add_option("--rules", g.rules, "Rule set: default or a list such as no-ci,no-criteria");
    app.add_option("--budget-variant", g.budget_variant, "s = 4 budget formula: s4_table or s4_paper")
        ->check(CLI::IsMember({"s4_table", "s4_paper"}));
    app.add_option("--out", g.out_dir, "Write outputs into this directory instead of stdout");
    app.add_option("--config", g.config_path, "JSON file with priors, rules and survey ranges");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "List connected invariant sequences");
    std::string enum_d;
    std::string enum_s = "4,5";
    enumerate->add_option("--d", enum_d, "Degree or degree range LO:HI")->required();
    enumerate->add_option("--s", enum_s, "Comma separated counts of invariants");

    // budget
    auto* budget = app.add_subcommand("budget", "Maximal number of sporadic zeros");
    std::string budget_lambda;
    std::optional<int> budget_d;
    std::optional<int> budget_s;
    std::string budget_variant_local;
    budget->add_option("--lambda", budget_lambda, "Invariants, e.g. 13,11,9,7,6")->required();
    budget->add_option("--d", budget_d, "Degree (checked against the invariants)");
    budget->add_option("--s", budget_s, "Number of invariants (checked)");
    budget->add_option("--variant", budget_variant_local, "s4_table or s4_paper")
        ->check(CLI::IsMember({"s4_table", "s4_paper", "s5"}));

    // neg
    auto* neg = app.add_subcommand("neg", "Evaluate the inequality and its neg statistic");
    std::string neg_lambda;
    std::optional<int> neg_d;
    std::int64_t neg_abound = 0;
    std::string neg_z = "auto";
    neg->add_option("--lambda", neg_lambda)->required();
    neg->add_option("--d", neg_d);
    neg->add_option("--abound", neg_abound, "Upper bound on A")->required();
    neg->add_option("--z", neg_z, "Number of sporadic zeros, or auto");

    // max-a
    auto* max_a = app.add_subcommand("max-a", "Exact maximum of 12A - 22 gamma over admissible lifts");
    std::string max_lambda;
    std::optional<int> max_d;
    std::string max_z = "auto";
    std::string witness_path;
    max_a->add_option("--lambda", max_lambda)->required();
    max_a->add_option("--d", max_d);
    max_a->add_option("--z", max_z, "Budget of sporadic zeros, or auto");
    max_a->add_option("--emit-witness", witness_path, "Write the optimal ideal as JSON");

    // check-ideal
    auto* check = app.add_subcommand("check-ideal", "Verify a witness ideal file");
    std::string ideal_path;
    check->add_option("file", ideal_path, "JSON ideal")->required();

    // survey
    auto* survey = app.add_subcommand("survey", "Classify every configuration in a degree range");
    std::string survey_d;
    std::string survey_s;
    int threads = 0;
    int expect_max = 46;
    survey->add_option("--d", survey_d, "Degree range LO:HI (default 43:66)");
    survey->add_option("--s", survey_s, "Comma separated counts of invariants (default 4,5)");
    survey->add_option("--threads", threads, "Worker threads, 0 for all cores");
    survey->add_option("--expect-max", expect_max, "Fail when a degree above this survives");

    // appendix
    auto* appendix = app.add_subcommand("appendix", "Tabulate the cubic gates and plane-curve comparisons");
    int appendix_s = 5;
    std::string scan = "20:80";
    appendix->add_option("--s", appendix_s, "Number of invariants (4 to 7)")->required();
    appendix->add_option("--scan", scan, "Degree range LO:HI");

    CLI11_PARSE(app, argc, argv);

    try {
        const auto loaded = load(g);
        const auto& rules = loaded.rules;

        if (*enumerate) {
            const auto [lo, hi] = parse_range(enum_d);
            ordered rows = ordered::array();
            for (int d = hi; d >= lo; --d) {
                for (int s : parse_int_list(enum_s)) {
                    for (const auto& seq : enumerate_sequences(d, s)) {
                        const auto adm = admissible(seq, loaded.config.priors);
                        rows.push_back({{"d", d},
                                        {"s", s},
                                        {"lambdas", seq.to_string()},
                                        {"acm", acm_class(seq).to_string()},
                                        {"sum2", sum2(seq)},
                                        {"sum3", sum3(seq)},
                                        {"admissible", adm.ok},
                                        {"reason", adm.reason}});
                    }
                }
            }
            const auto format = pick_format(g, "csv");
            emit(g, "enumerate", render_rows(rows, format), format);
            return 0;
        }

        if (*budget) {
            const auto seq = sequence_from(budget_lambda, budget_d, budget_s);
            const auto variant = parse_budget_variant(budget_variant_local.empty() ? g.budget_variant : budget_variant_local);
            const auto report = max_sporadic(seq, variant);
            const ordered record = {{"d", seq.degree()},
                                    {"s", seq.s()},
                                    {"lambdas", seq.to_string()},
                                    {"variant", std::string(to_string(report.variant))},
                                    {"exact", to_string(report.exact)},
                                    {"z", report.z}};
            const auto format = pick_format(g, "json");
            emit(g, "budget", render_record(record, format), format);
            return 0;
        }

        if (*neg) {
            const auto seq = sequence_from(neg_lambda, neg_d, std::nullopt);
            auto z = parse_z(neg_z);
            if (!z) z = max_sporadic(seq, rules.budget_variant).z;
            const auto eval = eval_eq1(seq, neg_abound, *z);
            const ordered record = {{"d", seq.degree()},
                                    {"lambdas", seq.to_string()},
                                    {"A", neg_abound},
                                    {"z", *z},
                                    {"P", eval.P},
                                    {"value", eval.value},
                                    {"consistent", eval.consistent()},
                                    {"neg", neg_statistic(seq, neg_abound, *z)},
                                    {"a_min", elimination_threshold(seq, *z).a_min}};
            const auto format = pick_format(g, "json");
            emit(g, "neg", render_record(record, format), format);
            return 0;
        }

        if (*max_a) {
            const auto seq = sequence_from(max_lambda, max_d, std::nullopt);
            auto run_rules = rules;
            if (auto z = parse_z(max_z)) run_rules.budget_z = *z;
            const auto result = maximize_penalty(seq, run_rules);
            const MonomialIdeal ideal(minimal_generators(result.witness));
            ordered record = {{"d", seq.degree()},
                              {"s", seq.s()},
                              {"lambdas", seq.to_string()},
                              {"rules", run_rules.id()},
                              {"z", result.budget},
                              {"best_objective", result.best_objective},
                              {"best_A", result.best_A},
                              {"best_gamma", result.best_gamma},
                              {"P", result.P},
                              {"a_min", elimination_threshold(seq, result.budget).a_min},
                              {"eliminated", result.eliminated},
                              {"nodes_explored", result.nodes_explored}};
            if (seq.s() == 4 || seq.s() == 5) {
                for (auto [name, branch] : {std::pair{"six_high_A", HeuristicBranch::SixHigh},
                                            std::pair{"staircase_A", HeuristicBranch::Staircase}}) {
                    try {
                        record[name] = heuristic_schedule(seq, result.budget, branch).A;
                    } catch (const InsufficientBudget&) {
                        record[name] = nullptr;
                    }
                }
            }
            const auto format = pick_format(g, "json");
            if (format == "json") record["witness_heights"] = heights_json(result.witness);
            emit(g, "max-a", render_record(record, format), format);
            if (!witness_path.empty()) {
                std::ofstream out(witness_path, std::ios::binary);
                out << ideal_to_json(ideal).dump() << "\n";
                if (!out) throw Error("cannot write " + witness_path);
            }
            return 0;
        }

        if (*check) {
            const auto report = verify_witness(fs::path(ideal_path), rules);
            const auto format = pick_format(g, "md");
            if (format == "json") {
                ordered checks = ordered::array();
                for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
                const ordered record = {{"file", ideal_path},   {"ok", report.ok()},      {"sequence", report.sequence},
                                        {"gamma", report.gamma}, {"A", report.A},          {"value", report.value},
                                        {"warnings", report.warnings}, {"checks", checks}};
                emit(g, "check-ideal", record.dump(2) + "\n", format);
            } else {
                emit(g, "check-ideal", report.to_text(), format);
            }
            return report.ok() ? 0 : kVerificationFailure;
        }

        if (*survey) {
            auto config = loaded.config;
            if (!survey_d.empty()) std::tie(config.d_min, config.d_max) = parse_range(survey_d);
            if (!survey_s.empty()) config.s_values = parse_int_list(survey_s);
            if (threads > 0) config.threads = threads;
            const auto report = run_survey(config);
            const auto format = pick_format(g, "csv");
            emit(g, "survey", emit_report(report, parse_report_format(format)), format);
            if (!g.out_dir.empty()) write_witnesses(report, fs::path(g.out_dir) / "witnesses");

            // Re-check every certificate independently of the search.
            bool ok = true;
            for (const auto& rec : report.records) {
                if (rec.verdict == Verdict::Survives) {
                    const auto v = verify_witness(MonomialIdeal(rec.witness), config.rules);
                    if (!v.ok()) {
                        ok = false;
                        std::cerr << "witness for d=" << rec.d << " {" << InvariantSequence(rec.lambdas).to_string()
                                  << "} fails verification:\n" << v.to_text();
                    }
                } else if (rec.verdict == Verdict::Eliminated) {
                    if (eval_eq1(InvariantSequence(rec.lambdas), rec.best_A, rec.best_gamma).consistent()) {
                        ok = false;
                        std::cerr << "elimination of d=" << rec.d << " does not re-check\n";
                    }
                }
            }
            std::cerr << "max surviving degree: " << report.max_surviving_degree << "\n";
            if (report.max_surviving_degree > expect_max) {
                ok = false;
                for (const auto& rec : report.records) {
                    if (rec.verdict != Verdict::Survives || rec.d <= expect_max) continue;
                    std::cerr << "survivor d=" << rec.d << " {" << InvariantSequence(rec.lambdas).to_string()
                              << "} objective " << rec.best_objective << " >= P " << rec.P << " witness "
                              << ideal_to_json(MonomialIdeal(rec.witness)).dump() << "\n";
                }
            }
            return ok ? 0 : kVerificationFailure;
        }

        if (*appendix) {
            const auto [lo, hi] = parse_range(scan);
            ordered rows = ordered::array();
            for (int d = lo; d <= hi; ++d) {
                ordered row = {{"d", d}};
                if (appendix_s == 4 || appendix_s == 5) {
                    const auto gate = gamma_lower_gate(appendix_s, d);
                    row["gate_gamma"] = to_string(gate.gate_gamma);
                    row["naive_A"] = to_string(naive_a_bound(appendix_s, d));
                    row["cubic"] = to_string(gate.cubic_value);
                    row["cubic_cap"] = gate.d_cap;
                }
                const auto plane = plane_curve_lemma(appendix_s, d);
                row["genus_bound"] = to_string(plane.lhs);
                row["plane_genus"] = to_string(plane.rhs);
                row["contradiction"] = plane.contradiction;
                rows.push_back(row);
            }
            const auto format = pick_format(g, "csv");
            emit(g, "appendix", render_rows(rows, format), format);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
