#pragma once

// The degree inequality a smooth surface not of general type must satisfy,
// its elimination thresholds, and the closed-form approximations used to
// rule out secant lines of high order.

#include <cstdint>

#include "ginbound/rational.hpp"
#include "ginbound/staircase.hpp"

namespace ginbound {

/// d^2 - 5d - 18 - 10 sum2 + 12 sum3: the part of the inequality that does not
/// depend on the sporadic zeros.
std::int64_t a_independent_part(const InvariantSequence& seq);

/// value = P - (12A - 22 gamma); the configuration is consistent iff value <= 0.
struct Eq1Evaluation {
    InvariantSequence seq;
    std::int64_t A = 0;
    std::int64_t gamma = 0;
    std::int64_t P = 0;
    std::int64_t value = 0;

    bool consistent() const { return value <= 0; }
};

Eq1Evaluation eval_eq1(const InvariantSequence& seq, std::int64_t A, std::int64_t gamma);

/// floor(value / 12), the "neg" statistic.
std::int64_t neg_statistic(const InvariantSequence& seq, std::int64_t a_bound, std::int64_t z);

struct Threshold {
    InvariantSequence seq;
    std::int64_t z = 0;
    std::int64_t objective_threshold = 0;  // P: eliminated iff max(12A - 22 gamma) < P
    std::int64_t a_min = 0;                // least A keeping a gamma = z configuration alive
};

Threshold elimination_threshold(const InvariantSequence& seq, std::int64_t z);

struct ApproxBounds {
    Rational upper_sum2;  // bound on 1 + sum2
    Rational lower_sum3;  // bound on sum3
};

/// Closed-form bounds valid for every connected sequence of degree d with s invariants.
ApproxBounds approx_bounds(int d, int s);

/// x(x-1)(x-2)/6 over the rationals.
Rational rational_binomial3(const Rational& x);

/// Right-hand side of the approximated inequality (positive means violated)
/// for a given total degree A and count gamma of sporadic zeros.
Rational approx_eq1(int d, int s, const Rational& A, const Rational& gamma);

/// Sum of t over lambda0_cap .. lambda0_cap + gamma_gate - 1 with the
/// connectedness cap on lambda_0 (d/4 + 3 for s = 4, d/5 + 4 for s = 5).
Rational naive_a_bound(int s, int d);

/// The gate cubic in d for s = 4 or 5.
Rational gate_cubic(int s, const Rational& d);

struct GammaGate {
    Rational gate_gamma;    // 3d/4 (s = 4) or 2d/5 (s = 5)
    Rational cubic_value;   // gate_cubic(s, d)
    std::int64_t d_cap = 0; // largest integer degree with cubic <= 0
};

/// Throws UnsupportedS unless s is 4 or 5.
GammaGate gamma_lower_gate(int s, int d);

struct PlaneCurveCheck {
    Rational lhs;  // genus upper bound of the hyperplane section
    Rational rhs;  // genus lower bound of a plane curve of degree d/2
    bool contradiction = false;
};

/// The s = 4 bound is strict, so equality already contradicts; for s = 5, 6, 7
/// only lhs < rhs does.  Throws UnsupportedS unless 4 <= s <= 7.
PlaneCurveCheck plane_curve_lemma(int s, int d);

}  // namespace ginbound
