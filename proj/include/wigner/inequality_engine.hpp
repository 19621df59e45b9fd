// inequality_engine.hpp - Bell/Wigner inequality checks and the interference
// coefficient.
//
// Every check reports a margin with the same orientation: a negative margin
// means the inequality is violated.
//
//   BellCovariance     |<a,b> - <c,b>| <= 1 - <a,c>
//                      margin = (1 - <a,c>) - |<a,b> - <c,b>|
//   WignerJoint        P(a+,b+) + P(b-,c+) >= P(a+,c+)
//   WignerConditional  P(a+|b+) + P(c+|b-) >= P(a+|c+)

#pragma once

#include "wigner/probability_core.hpp"

#include <string_view>
#include <vector>

namespace wigner {

inline constexpr double kDefaultViolationTolerance = 1e-9;

enum class InequalityKind { BellCovariance, WignerJoint, WignerConditional };

std::string_view to_string(InequalityKind k) noexcept;

struct InequalityReport {
    InequalityKind kind;
    std::vector<double> lhs_terms;
    double rhs = 0.0;
    double margin = 0.0;
    bool violated = false;
    double tolerance = kDefaultViolationTolerance;
};

// The three conditional probabilities entering the conditional Wigner form.
class CondTriple {
public:
    CondTriple(double a_given_b_plus, double c_given_b_minus, double a_given_c_plus);

    double a_given_b_plus() const noexcept { return a_given_b_plus_; }
    double c_given_b_minus() const noexcept { return c_given_b_minus_; }
    double a_given_c_plus() const noexcept { return a_given_c_plus_; }

    friend bool operator==(const CondTriple&, const CondTriple&) = default;

private:
    double a_given_b_plus_;
    double c_given_b_minus_;
    double a_given_c_plus_;
};

// Conditionals of a classical law. Propagates ZeroConditioningEvent.
CondTriple conditional_triple(const JointDistribution3& joint);

InequalityReport bell_covariance_check(const JointDistribution3& joint,
                                       double tolerance = kDefaultViolationTolerance);

InequalityReport wigner_joint_check(const JointDistribution3& joint,
                                    double tolerance = kDefaultViolationTolerance);

InequalityReport wigner_conditional_check(const CondTriple& triple,
                                          double tolerance = kDefaultViolationTolerance);

enum class InterferenceRegime { Classical, Trigonometric, Hyperbolic };

std::string_view to_string(InterferenceRegime r) noexcept;

struct InterferenceResult {
    double coefficient;  // estimate of cos(theta) in P = P1 + P2 + 2 cos(theta) sqrt(P1 P2)
    InterferenceRegime regime;
};

// Throws DegenerateAlternatives when p1 or p2 is zero.
InterferenceResult interference_coefficient(double p, double p1, double p2,
                                            double tolerance = kDefaultViolationTolerance);

}  // namespace wigner
