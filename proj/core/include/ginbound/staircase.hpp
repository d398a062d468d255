#pragma once

// Two-variable model of a generic hyperplane section: the staircase ideal
// (x0^s, x0^(s-1) x1^lambda_(s-1), ..., x1^lambda_0) and its invariants.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ginbound {

/// A column of the staircase: the monomial x0^a x1^b.
struct Column {
    int a = 0;
    int b = 0;

    int degree() const { return a + b; }

    friend auto operator<=>(const Column&, const Column&) = default;
};

/// Invariants lambda_0 > lambda_1 > ... > lambda_(s-1) >= 1 of a point-set staircase.
///
/// lambda(i) is the x1-exponent of the generator x0^i x1^lambda(i).  Strict
/// decrease and positivity are enforced on construction; connectedness
/// (consecutive gaps of at most 2) is a separate predicate because saturating an
/// arbitrary Borel ideal can produce a staircase that is not connected.
class InvariantSequence {
public:
    InvariantSequence() = default;

    /// Throws InvalidSequence unless the values are positive and strictly decreasing.
    explicit InvariantSequence(std::vector<int> lambdas);

    int s() const { return static_cast<int>(lambdas_.size()); }
    int degree() const { return degree_; }
    int lambda(int i) const { return lambdas_.at(static_cast<std::size_t>(i)); }
    std::span<const int> lambdas() const { return lambdas_; }

    /// Every consecutive gap is 1 or 2.
    bool is_connected() const;

    /// "13,11,9,7,6"
    std::string to_string() const;

    friend bool operator==(const InvariantSequence&, const InvariantSequence&) = default;
    friend auto operator<=>(const InvariantSequence& lhs, const InvariantSequence& rhs) {
        return lhs.lambdas_ <=> rhs.lambdas_;
    }

private:
    std::vector<int> lambdas_;
    int degree_ = 0;
};

/// Parses a comma separated list such as "13,11,9,7,6".  Throws ParseError or InvalidSequence.
InvariantSequence parse_sequence(std::string_view text);

/// x0^a x1^b lies in the staircase ideal.
bool staircase_contains(const InvariantSequence& seq, Column col);

/// All connected sequences of degree d with s invariants, lambdas in
/// lexicographically decreasing order.
std::vector<InvariantSequence> enumerate_sequences(int d, int s);

/// C(n, k) with C(n, k) = 0 whenever n < k or n < 0.
std::int64_t binomial(std::int64_t n, int k);

/// sum_i C(lambda_i, 2) + (i - 1) lambda_i, with i counted from 0.
std::int64_t sum2(const InvariantSequence& seq);

/// sum_i C(lambda_i + i - 1, 3) - C(i - 1, 3), with i counted from 0.
std::int64_t sum3(const InvariantSequence& seq);

enum class AcmKind { NotAcm, CompleteIntersection, LinkedToLine };

/// Gap-pattern classification of sequences that only arise from curves without
/// sporadic zeros.  For the ACM kinds, `type` is the complete intersection
/// (s, lambda_(s-1) + s - 1).
struct AcmClass {
    AcmKind kind = AcmKind::NotAcm;
    int ci_first = 0;
    int ci_second = 0;

    bool is_acm() const { return kind != AcmKind::NotAcm; }
    std::string to_string() const;

    friend bool operator==(const AcmClass&, const AcmClass&) = default;
};

/// Requires s >= 2; shorter sequences are reported as NotAcm.
AcmClass acm_class(const InvariantSequence& seq);

}  // namespace ginbound
