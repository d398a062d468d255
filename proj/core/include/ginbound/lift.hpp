#pragma once

// Three-variable model of gin(I_C): explicit monomial ideals in x0, x1, x2 and
// the equivalent height-function description over the staircase of the
// hyperplane section.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ginbound/staircase.hpp"

namespace ginbound {

struct Monomial {
    int e0 = 0;
    int e1 = 0;
    int e2 = 0;

    int degree() const { return e0 + e1 + e2; }
    bool divides(const Monomial& other) const {
        return e0 <= other.e0 && e1 <= other.e1 && e2 <= other.e2;
    }
    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Reverse lexicographic order with x0 > x1 > x2 inside each degree; lower degrees first.
bool revlex_less(const Monomial& lhs, const Monomial& rhs);

/// A monomial ideal stored by its minimal generators, sorted with revlex_less.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    /// Minimalizes the input.  Duplicates and divisible generators are dropped
    /// and reported through was_minimal().
    explicit MonomialIdeal(std::vector<Monomial> generators);

    std::span<const Monomial> generators() const { return generators_; }
    bool was_minimal() const { return was_minimal_; }
    bool contains(const Monomial& m) const;

    friend bool operator==(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
        return lhs.generators_ == rhs.generators_;
    }

private:
    std::vector<Monomial> generators_;
    bool was_minimal_ = true;
};

/// `{"vars": 3, "generators": [[e0,e1,e2], ...]}`
MonomialIdeal ideal_from_json(const nlohmann::json& doc);
nlohmann::json ideal_to_json(const MonomialIdeal& ideal);

/// Checks every single-step move x1 -> x0, x2 -> x0, x2 -> x1 on every generator.
bool is_borel_fixed(const MonomialIdeal& ideal);

/// Strips x2, minimalizes, and reads off the invariants of (I|x2=1)^sat.
/// Throws NotACurveIdeal when the stripped ideal has no pure power of x0 or x1.
InvariantSequence saturate(const MonomialIdeal& ideal);

/// H(a, b) = least c with x0^a x1^b x2^c in the ideal, for columns inside the
/// staircase of `seq()`.  Only positive heights are stored.
class HeightFunction {
public:
    HeightFunction() = default;
    explicit HeightFunction(InvariantSequence seq) : seq_(std::move(seq)) {}

    const InvariantSequence& seq() const { return seq_; }

    int height(Column col) const;
    /// Throws std::out_of_range for a positive height outside the staircase.
    void set(Column col, int height);

    /// Positive entries in (a, b) order.
    const std::map<Column, int>& support() const { return heights_; }

    friend bool operator==(const HeightFunction&, const HeightFunction&) = default;

private:
    InvariantSequence seq_;
    std::map<Column, int> heights_;
};

HeightFunction heights_of(const MonomialIdeal& ideal);

struct ZeroStats {
    std::int64_t gamma = 0;  // number of sporadic zeros
    std::int64_t A = 0;      // sum of their degrees

    friend bool operator==(const ZeroStats&, const ZeroStats&) = default;
};

ZeroStats zero_stats(const HeightFunction& h);

/// Sum of the degrees base, base+1, ..., base+height-1 of one chain of sporadic zeros.
std::int64_t chain_degree_sum(int base, int height);

/// Minimal generators of {x0^a x1^b x2^c : (a,b) in the staircase, c >= H(a,b)}, revlex sorted.
std::vector<Monomial> minimal_generators(const HeightFunction& h);

/// Number of degree-t monomials in x0, x1, x2 outside the ideal.
std::int64_t hilbert_count(const MonomialIdeal& ideal, int t);

}  // namespace ginbound
