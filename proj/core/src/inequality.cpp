#include "ginbound/inequality.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "ginbound/error.hpp"

namespace ginbound {

std::int64_t a_independent_part(const InvariantSequence& seq) {
    const std::int64_t d = seq.degree();
    return d * d - 5 * d - 18 - 10 * sum2(seq) + 12 * sum3(seq);
}

Eq1Evaluation eval_eq1(const InvariantSequence& seq, std::int64_t A, std::int64_t gamma) {
    const auto P = a_independent_part(seq);
    return {seq, A, gamma, P, P - (12 * A - 22 * gamma)};
}

std::int64_t neg_statistic(const InvariantSequence& seq, std::int64_t a_bound, std::int64_t z) {
    return floor_div(eval_eq1(seq, a_bound, z).value, 12);
}

Threshold elimination_threshold(const InvariantSequence& seq, std::int64_t z) {
    const auto P = a_independent_part(seq);
    return {seq, z, P, ceil_of(Rational(P + 22 * z, 12))};
}

Rational rational_binomial3(const Rational& x) { return x * (x - 1) * (x - 2) / 6; }

ApproxBounds approx_bounds(int d, int s) {
    const Rational dd(d);
    const Rational ss(s);
    ApproxBounds out;
    out.upper_sum2 = dd * dd / (2 * ss) + Rational(s - 4) * dd / 2 + 1;
    out.lower_sum3 = ss * rational_binomial3(dd / ss + Rational(s - 3, 2)) + 1 - Rational(binomial(s - 1, 4));
    return out;
}

Rational approx_eq1(int d, int s, const Rational& A, const Rational& gamma) {
    const Rational dd(d);
    const Rational ss(s);
    return dd * dd - 5 * dd - 18 - 10 * (dd * dd / (2 * ss) + Rational(s - 4) * dd / 2) +
           12 * ss * rational_binomial3(dd / ss + Rational(s - 3, 2)) + 12 * (1 - Rational(binomial(s - 1, 4))) -
           (12 * A - 22 * gamma);
}

namespace {

struct GateShape {
    Rational gamma_fraction;  // gate on gamma as a multiple of d
    Rational lambda0_slope;
    Rational lambda0_offset;
    std::array<Rational, 4> cubic;  // coefficients of d^3, d^2, d, 1
};

GateShape gate_shape(int s) {
    switch (s) {
        case 4:
            return {Rational(3, 4), Rational(1, 4), Rational(3),
                    {Rational(1, 8), Rational(-23, 8), Rational(-17, 2), Rational(33)}};
        case 5:
            return {Rational(2, 5), Rational(1, 5), Rational(4),
                    {Rational(1, 25), Rational(-24, 25), Rational(-10), Rational(-9)}};
        default:
            throw UnsupportedS("no sporadic-zero gate for s = " + std::to_string(s));
    }
}

}  // namespace

Rational naive_a_bound(int s, int d) {
    const auto shape = gate_shape(s);
    const Rational gamma = shape.gamma_fraction * d;
    const Rational lambda0 = shape.lambda0_slope * d + shape.lambda0_offset;
    return gamma * lambda0 + gamma * (gamma - 1) / 2;
}

Rational gate_cubic(int s, const Rational& d) {
    const auto& c = gate_shape(s).cubic;
    return ((c[0] * d + c[1]) * d + c[2]) * d + c[3];
}

GammaGate gamma_lower_gate(int s, int d) {
    const auto shape = gate_shape(s);
    GammaGate gate;
    gate.gate_gamma = shape.gamma_fraction * d;
    gate.cubic_value = gate_cubic(s, Rational(d));

    // Every real root lies below the Cauchy bound 1 + max |c_i / c_0|.
    Rational bound(0);
    for (std::size_t i = 1; i < shape.cubic.size(); ++i) bound = std::max(bound, abs(shape.cubic[i] / shape.cubic[0]));
    for (auto candidate = ceil_of(bound) + 1; candidate >= 0; --candidate) {
        if (gate_cubic(s, Rational(candidate)) <= 0) {
            gate.d_cap = candidate;
            break;
        }
    }
    return gate;
}

PlaneCurveCheck plane_curve_lemma(int s, int d) {
    const Rational dd(d);
    PlaneCurveCheck out;
    switch (s) {
        case 4: out.lhs = dd * dd / 8 + 1 - 3 * dd / 4; break;
        case 5: out.lhs = dd * dd / 10 + dd / 2 + 1 - 2 * dd / 5; break;
        case 6:
        case 7: out.lhs = dd * dd / (2 * s) + Rational(s - 4) * dd / 2 + 1; break;
        default: throw UnsupportedS("plane-curve comparison needs 4 <= s <= 7, got " + std::to_string(s));
    }
    out.rhs = (dd / 2 - 1) * (dd / 2 - 2) / 2;
    out.contradiction = s == 4 ? out.lhs <= out.rhs : out.lhs < out.rhs;
    return out;
}

}  // namespace ginbound
