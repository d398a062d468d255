#include "ginbound/lift.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ginbound/error.hpp"

namespace ginbound {

std::string Monomial::to_string() const {
    std::string out;
    auto term = [&out](const char* var, int e) {
        if (e == 0) return;
        if (!out.empty()) out += '*';
        out += var;
        if (e > 1) out += '^' + std::to_string(e);
    };
    term("x0", e0);
    term("x1", e1);
    term("x2", e2);
    return out.empty() ? "1" : out;
}

bool revlex_less(const Monomial& lhs, const Monomial& rhs) {
    if (lhs.degree() != rhs.degree()) return lhs.degree() < rhs.degree();
    // Same degree: the monomial with the smaller power of the last variable is larger.
    if (lhs.e2 != rhs.e2) return lhs.e2 > rhs.e2;
    if (lhs.e1 != rhs.e1) return lhs.e1 > rhs.e1;
    return lhs.e0 > rhs.e0;
}

MonomialIdeal::MonomialIdeal(std::vector<Monomial> generators) {
    std::sort(generators.begin(), generators.end(), revlex_less);
    for (const auto& g : generators) {
        if (g.e0 < 0 || g.e1 < 0 || g.e2 < 0) throw ParseError("negative exponent in " + g.to_string());
        const bool redundant = std::any_of(generators_.begin(), generators_.end(),
                                           [&g](const Monomial& kept) { return kept.divides(g); });
        if (redundant) {
            was_minimal_ = false;
        } else {
            generators_.push_back(g);
        }
    }
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(generators_.begin(), generators_.end(),
                       [&m](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal ideal_from_json(const nlohmann::json& doc) {
    try {
        if (doc.contains("vars") && doc.at("vars").get<int>() != 3) {
            throw ParseError("only ideals in 3 variables are supported");
        }
        std::vector<Monomial> gens;
        for (const auto& triple : doc.at("generators")) {
            if (!triple.is_array() || triple.size() != 3) throw ParseError("generator must be [e0,e1,e2]");
            gens.push_back({triple[0].get<int>(), triple[1].get<int>(), triple[2].get<int>()});
        }
        return MonomialIdeal(std::move(gens));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed ideal JSON: ") + e.what());
    }
}

nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
    // Listed the way generators are usually written: descending x0 power, then x1.
    std::vector<Monomial> gens(ideal.generators().begin(), ideal.generators().end());
    std::sort(gens.begin(), gens.end(), [](const Monomial& l, const Monomial& r) {
        if (l.e0 != r.e0) return l.e0 > r.e0;
        if (l.e1 != r.e1) return l.e1 < r.e1;
        return l.e2 < r.e2;
    });
    nlohmann::json list = nlohmann::json::array();
    for (const auto& g : gens) list.push_back({g.e0, g.e1, g.e2});
    return {{"vars", 3}, {"generators", std::move(list)}};
}

bool is_borel_fixed(const MonomialIdeal& ideal) {
    for (const auto& g : ideal.generators()) {
        if (g.e1 > 0 && !ideal.contains({g.e0 + 1, g.e1 - 1, g.e2})) return false;
        if (g.e2 > 0 && !ideal.contains({g.e0 + 1, g.e1, g.e2 - 1})) return false;
        if (g.e2 > 0 && !ideal.contains({g.e0, g.e1 + 1, g.e2 - 1})) return false;
    }
    return true;
}

InvariantSequence saturate(const MonomialIdeal& ideal) {
    std::vector<Monomial> stripped;
    for (const auto& g : ideal.generators()) stripped.push_back({g.e0, g.e1, 0});
    const MonomialIdeal plane(std::move(stripped));

    int s = std::numeric_limits<int>::max();
    bool has_x1_power = false;
    for (const auto& g : plane.generators()) {
        if (g.e1 == 0) s = std::min(s, g.e0);
        if (g.e0 == 0) has_x1_power = true;
    }
    if (s == std::numeric_limits<int>::max()) throw NotACurveIdeal("no pure power of x0 after saturation");
    if (!has_x1_power) throw NotACurveIdeal("no pure power of x1 after saturation");
    if (s == 0) throw NotACurveIdeal("unit ideal after saturation");

    std::vector<int> lambdas;
    for (int i = 0; i < s; ++i) {
        int row = std::numeric_limits<int>::max();
        for (const auto& g : plane.generators()) {
            if (g.e0 <= i) row = std::min(row, g.e1);
        }
        lambdas.push_back(row);
    }
    try {
        return InvariantSequence(std::move(lambdas));
    } catch (const InvalidSequence& e) {
        throw NotACurveIdeal(std::string("malformed staircase rows: ") + e.what());
    }
}

int HeightFunction::height(Column col) const {
    auto it = heights_.find(col);
    return it == heights_.end() ? 0 : it->second;
}

void HeightFunction::set(Column col, int height) {
    if (height < 0) throw std::out_of_range("negative height");
    if (height == 0) {
        heights_.erase(col);
        return;
    }
    if (!staircase_contains(seq_, col)) {
        throw std::out_of_range("height on column (" + std::to_string(col.a) + "," + std::to_string(col.b) +
                                ") outside the staircase");
    }
    heights_[col] = height;
}

HeightFunction heights_of(const MonomialIdeal& ideal) {
    HeightFunction h(saturate(ideal));
    int max_e0 = 0;
    int max_e1 = 0;
    for (const auto& g : ideal.generators()) {
        max_e0 = std::max(max_e0, g.e0);
        max_e1 = std::max(max_e1, g.e1);
    }
    // Beyond the largest exponents the set of dividing generators no longer
    // changes, so a positive height on the last row or column repeats forever.
    for (int a = 0; a <= max_e0; ++a) {
        for (int b = 0; b <= max_e1; ++b) {
            const Column col{a, b};
            if (!staircase_contains(h.seq(), col)) continue;
            int best = std::numeric_limits<int>::max();
            for (const auto& g : ideal.generators()) {
                if (g.e0 <= a && g.e1 <= b) best = std::min(best, g.e2);
            }
            if (best == 0) continue;
            if (a == max_e0 || b == max_e1) {
                throw NotACurveIdeal("infinitely many sporadic zeros above column (" + std::to_string(a) + "," +
                                     std::to_string(b) + ")");
            }
            h.set(col, best);
        }
    }
    return h;
}

std::int64_t chain_degree_sum(int base, int height) {
    const std::int64_t n = height;
    return n * base + n * (n - 1) / 2;
}

ZeroStats zero_stats(const HeightFunction& h) {
    ZeroStats stats;
    for (const auto& [col, height] : h.support()) {
        stats.gamma += height;
        stats.A += chain_degree_sum(col.degree(), height);
    }
    return stats;
}

std::vector<Monomial> minimal_generators(const HeightFunction& h) {
    const auto& seq = h.seq();
    int max_a = seq.s();
    int max_b = seq.lambda(0);
    for (const auto& [col, height] : h.support()) {
        max_a = std::max(max_a, col.a + 1);
        max_b = std::max(max_b, col.b + 1);
    }
    std::vector<Monomial> gens;
    for (int a = 0; a <= max_a; ++a) {
        const int first_b = a < seq.s() ? seq.lambda(a) : 0;
        for (int b = first_b; b <= max_b; ++b) {
            const Column col{a, b};
            const int height = h.height(col);
            const Column left{a - 1, b};
            const Column down{a, b - 1};
            const bool left_ok = !staircase_contains(seq, left) || h.height(left) > height;
            const bool down_ok = !staircase_contains(seq, down) || h.height(down) > height;
            if (left_ok && down_ok) gens.push_back({a, b, height});
        }
    }
    std::sort(gens.begin(), gens.end(), revlex_less);
    return gens;
}

std::int64_t hilbert_count(const MonomialIdeal& ideal, int t) {
    if (t < 0) return 0;
    std::int64_t count = 0;
    for (int e0 = 0; e0 <= t; ++e0) {
        for (int e1 = 0; e0 + e1 <= t; ++e1) {
            if (!ideal.contains({e0, e1, t - e0 - e1})) ++count;
        }
    }
    return count;
}

}  // namespace ginbound
