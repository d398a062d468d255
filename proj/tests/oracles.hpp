#pragma once

// Independent brute-force reference implementations used by the test suites.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "ginbound/lift.hpp"
#include "ginbound/optimizer.hpp"
#include "ginbound/staircase.hpp"

namespace oracle {

/// All strictly decreasing s-part compositions of d with positive parts.
inline std::vector<std::vector<int>> decreasing_compositions(int d, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> go = [&](int left, int prev) {
        if (static_cast<int>(cur.size()) == s) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int v = std::min(prev - 1, left); v >= 1; --v) {
            cur.push_back(v);
            go(left - v, v);
            cur.pop_back();
        }
    };
    go(d, d + 1);
    return out;
}

inline bool gaps_at_most_two(const std::vector<int>& l) {
    for (std::size_t i = 0; i + 1 < l.size(); ++i) {
        if (l[i] - l[i + 1] > 2) return false;
    }
    return true;
}

inline bool in_ideal(const std::vector<ginbound::Monomial>& gens, const ginbound::Monomial& m) {
    return std::any_of(gens.begin(), gens.end(), [&](const ginbound::Monomial& g) { return g.divides(m); });
}

/// H(a, b) as the least e2 over generators dividing x0^a x1^b x2^N, or nullopt if none does.
inline std::optional<int> column_height(const std::vector<ginbound::Monomial>& gens, int a, int b) {
    std::optional<int> best;
    for (const auto& g : gens) {
        if (g.e0 <= a && g.e1 <= b) best = best ? std::min(*best, g.e2) : g.e2;
    }
    return best;
}

/// Monomials outside the ideal whose x2-free part is inside it, up to the given degree.
inline std::int64_t count_sporadic(const std::vector<ginbound::Monomial>& gens, int max_degree,
                                   std::int64_t* degree_sum = nullptr) {
    std::int64_t count = 0;
    std::int64_t sum = 0;
    for (int t = 0; t <= max_degree; ++t) {
        for (int a = 0; a <= t; ++a) {
            for (int b = 0; a + b <= t; ++b) {
                const int c = t - a - b;
                if (in_ideal(gens, {a, b, c})) continue;
                bool base_inside = false;
                for (const auto& g : gens) {
                    if (g.e0 <= a && g.e1 <= b) base_inside = true;
                }
                if (base_inside) {
                    ++count;
                    sum += t;
                }
            }
        }
    }
    if (degree_sum) *degree_sum = sum;
    return count;
}

/// Every height function supported on rows below s with at most z zeros whose
/// rows are strictly decreasing from their heads.
inline void for_each_height_function(const ginbound::InvariantSequence& seq, int z,
                                     const std::function<void(const ginbound::HeightFunction&)>& visit) {
    const int s = seq.s();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(s));
    std::function<void(int, int)> fill_row;
    std::function<void(int, int)> next_row = [&](int a, int left) {
        if (a == s) {
            ginbound::HeightFunction h(seq);
            for (int r = 0; r < s; ++r) {
                for (std::size_t j = 0; j < rows[static_cast<std::size_t>(r)].size(); ++j) {
                    h.set({r, seq.lambda(r) + static_cast<int>(j)}, rows[static_cast<std::size_t>(r)][j]);
                }
            }
            visit(h);
            return;
        }
        rows[static_cast<std::size_t>(a)].clear();
        fill_row(a, left);
    };
    fill_row = [&](int a, int left) {
        next_row(a + 1, left);  // end the row here
        auto& row = rows[static_cast<std::size_t>(a)];
        const int prev = row.empty() ? left : std::min(row.back() - 1, left);
        for (int h = prev; h >= 1; --h) {
            row.push_back(h);
            fill_row(a, left - h);
            row.pop_back();
        }
    };
    next_row(0, z);
}

struct BruteResult {
    bool any = false;
    std::int64_t best = 0;
};

/// Maximum of 12A - 22 gamma over all admissible height functions by exhaustion.
inline BruteResult brute_maximize(const ginbound::InvariantSequence& seq, const ginbound::RuleSet& rules, int z) {
    BruteResult out;
    for_each_height_function(seq, z, [&](const ginbound::HeightFunction& h) {
        if (!ginbound::is_admissible(h, rules).ok) return;
        const auto st = ginbound::zero_stats(h);
        const auto value = 12 * st.A - 22 * st.gamma;
        if (!out.any || value > out.best) out.best = value;
        out.any = true;
    });
    return out;
}

// Random height function obeying the Borel moves, built from the last row up.
inline ginbound::HeightFunction random_borel(std::mt19937& rng, const ginbound::InvariantSequence& seq,
                                             int max_height) {
    ginbound::HeightFunction h(seq);
    for (int a = seq.s() - 1; a >= 0; --a) {
        for (int b = seq.lambda(a);; ++b) {
            int lo = 0;
            if (a + 1 < seq.s()) {
                lo = h.height({a + 1, b - 1});
                if (h.height({a + 1, b}) > 0) lo = std::max(lo, h.height({a + 1, b}) + 1);
            }
            const int hi = b == seq.lambda(a) ? std::max(max_height, lo + 2) : h.height({a, b - 1}) - 1;
            if (lo > hi) return random_borel(rng, seq, max_height);
            if (hi <= 0) break;
            const int value = std::uniform_int_distribution<int>(lo, hi)(rng);
            if (value == 0) break;
            h.set({a, b}, value);
        }
    }
    return h;
}

}  // namespace oracle
