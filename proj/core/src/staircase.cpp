#include "ginbound/staircase.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "ginbound/error.hpp"

namespace ginbound {

InvariantSequence::InvariantSequence(std::vector<int> lambdas) : lambdas_(std::move(lambdas)) {
    if (lambdas_.empty()) throw InvalidSequence("invariant sequence is empty");
    for (std::size_t i = 0; i < lambdas_.size(); ++i) {
        if (lambdas_[i] < 1) throw InvalidSequence("invariants must be positive");
        if (i + 1 < lambdas_.size() && lambdas_[i] <= lambdas_[i + 1]) {
            throw InvalidSequence("invariants must be strictly decreasing: " + to_string());
        }
    }
    degree_ = std::accumulate(lambdas_.begin(), lambdas_.end(), 0);
}

bool InvariantSequence::is_connected() const {
    for (std::size_t i = 0; i + 1 < lambdas_.size(); ++i) {
        if (lambdas_[i] > lambdas_[i + 1] + 2) return false;
    }
    return true;
}

std::string InvariantSequence::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < lambdas_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(lambdas_[i]);
    }
    return out;
}

InvariantSequence parse_sequence(std::string_view text) {
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        auto field = text.substr(pos, end - pos);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
            throw ParseError("bad invariant list: '" + std::string(text) + "'");
        }
        values.push_back(value);
        pos = end + 1;
    }
    return InvariantSequence(std::move(values));
}

bool staircase_contains(const InvariantSequence& seq, Column col) {
    if (col.a < 0 || col.b < 0) return false;
    if (col.a >= seq.s()) return true;
    return col.b >= seq.lambda(col.a);
}

namespace {

// Builds sequences from the last (smallest) invariant upwards so the gap
// constraint is local; `tail` holds lambda_(i+1..s-1) in reverse order.
void extend(int remaining, int slots, std::vector<int>& tail, std::vector<InvariantSequence>& out) {
    if (slots == 0) {
        if (remaining == 0) out.emplace_back(std::vector<int>(tail.rbegin(), tail.rend()));
        return;
    }
    const int prev = tail.back();
    for (int gap = 1; gap <= 2; ++gap) {
        const int value = prev + gap;
        // The `slots` remaining invariants are all at least value, value+1, ...
        const int min_total = slots * value + slots * (slots - 1) / 2;
        if (min_total > remaining) break;
        tail.push_back(value);
        extend(remaining - value, slots - 1, tail, out);
        tail.pop_back();
    }
}

}  // namespace

std::vector<InvariantSequence> enumerate_sequences(int d, int s) {
    std::vector<InvariantSequence> out;
    if (d < 1 || s < 1) return out;
    std::vector<int> tail;
    for (int last = 1; last * s + s * (s - 1) / 2 <= d; ++last) {
        tail.assign(1, last);
        extend(d - last, s - 1, tail, out);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::int64_t binomial(std::int64_t n, int k) {
    if (k < 0 || n < k) return 0;
    std::int64_t result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

std::int64_t sum2(const InvariantSequence& seq) {
    std::int64_t total = 0;
    for (int i = 0; i < seq.s(); ++i) {
        const std::int64_t l = seq.lambda(i);
        total += binomial(l, 2) + (i - 1) * l;
    }
    return total;
}

std::int64_t sum3(const InvariantSequence& seq) {
    std::int64_t total = 0;
    for (int i = 0; i < seq.s(); ++i) {
        total += binomial(seq.lambda(i) + i - 1, 3) - binomial(i - 1, 3);
    }
    return total;
}

AcmClass acm_class(const InvariantSequence& seq) {
    const int s = seq.s();
    if (s < 2) return {};
    bool tail_gaps_two = true;
    for (int i = 1; i + 1 < s; ++i) {
        if (seq.lambda(i) - seq.lambda(i + 1) != 2) tail_gaps_two = false;
    }
    if (!tail_gaps_two) return {};
    const int first_gap = seq.lambda(0) - seq.lambda(1);
    const int ci_second = seq.lambda(s - 1) + s - 1;
    if (first_gap == 2) return {AcmKind::CompleteIntersection, s, ci_second};
    if (first_gap == 1) return {AcmKind::LinkedToLine, s, ci_second};
    return {};
}

std::string AcmClass::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case AcmKind::NotAcm: return "none";
        case AcmKind::CompleteIntersection: os << "ci(" << ci_first << "," << ci_second << ")"; break;
        case AcmKind::LinkedToLine: os << "line(" << ci_first << "," << ci_second << ")"; break;
    }
    return os.str();
}

}  // namespace ginbound
