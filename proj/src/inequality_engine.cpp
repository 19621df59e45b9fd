#include "wigner/inequality_engine.hpp"

#include "wigner/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace wigner {

std::string_view to_string(InequalityKind k) noexcept {
    switch (k) {
        case InequalityKind::BellCovariance: return "bell-covariance";
        case InequalityKind::WignerJoint: return "wigner-joint";
        case InequalityKind::WignerConditional: return "wigner-conditional";
    }
    return "?";
}

std::string_view to_string(InterferenceRegime r) noexcept {
    switch (r) {
        case InterferenceRegime::Classical: return "classical";
        case InterferenceRegime::Trigonometric: return "trigonometric";
        case InterferenceRegime::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

namespace {

bool is_probability(double p) noexcept { return std::isfinite(p) && p >= 0.0 && p <= 1.0; }

void require_tolerance(double tolerance) {
    if (!(tolerance >= 0.0) || !std::isfinite(tolerance))
        throw std::invalid_argument("violation tolerance must be finite and non-negative");
}

InequalityReport make_report(InequalityKind kind, std::vector<double> lhs, double rhs, double margin,
                             double tolerance) {
    return InequalityReport{kind, std::move(lhs), rhs, margin, margin < -tolerance, tolerance};
}

}  // namespace

CondTriple::CondTriple(double a_given_b_plus, double c_given_b_minus, double a_given_c_plus)
    : a_given_b_plus_(a_given_b_plus), c_given_b_minus_(c_given_b_minus), a_given_c_plus_(a_given_c_plus) {
    if (!is_probability(a_given_b_plus) || !is_probability(c_given_b_minus) || !is_probability(a_given_c_plus))
        throw std::invalid_argument("conditional probabilities must lie in [0, 1]");
}

CondTriple conditional_triple(const JointDistribution3& joint) {
    return CondTriple(conditional(joint, {Var::A, Outcome::Plus}, {Var::B, Outcome::Plus}),
                      conditional(joint, {Var::C, Outcome::Plus}, {Var::B, Outcome::Minus}),
                      conditional(joint, {Var::A, Outcome::Plus}, {Var::C, Outcome::Plus}));
}

InequalityReport bell_covariance_check(const JointDistribution3& joint, double tolerance) {
    require_tolerance(tolerance);
    const double ab = covariance(joint, Var::A, Var::B);
    const double cb = covariance(joint, Var::C, Var::B);
    const double rhs = 1.0 - covariance(joint, Var::A, Var::C);
    return make_report(InequalityKind::BellCovariance, {ab, cb}, rhs, rhs - std::abs(ab - cb), tolerance);
}

InequalityReport wigner_joint_check(const JointDistribution3& joint, double tolerance) {
    require_tolerance(tolerance);
    const double ab = joint_probability(joint, {Var::A, Outcome::Plus}, {Var::B, Outcome::Plus});
    const double bc = joint_probability(joint, {Var::B, Outcome::Minus}, {Var::C, Outcome::Plus});
    const double ac = joint_probability(joint, {Var::A, Outcome::Plus}, {Var::C, Outcome::Plus});
    return make_report(InequalityKind::WignerJoint, {ab, bc}, ac, ab + bc - ac, tolerance);
}

InequalityReport wigner_conditional_check(const CondTriple& t, double tolerance) {
    require_tolerance(tolerance);
    return make_report(InequalityKind::WignerConditional, {t.a_given_b_plus(), t.c_given_b_minus()},
                       t.a_given_c_plus(), t.a_given_b_plus() + t.c_given_b_minus() - t.a_given_c_plus(),
                       tolerance);
}

InterferenceResult interference_coefficient(double p, double p1, double p2, double tolerance) {
    require_tolerance(tolerance);
    if (!is_probability(p) || !is_probability(p1) || !is_probability(p2))
        throw std::invalid_argument("interference inputs must be probabilities");
    if (p1 == 0.0 || p2 == 0.0) throw DegenerateAlternatives("interference needs P1 > 0 and P2 > 0");
    const double coefficient = (p - p1 - p2) / (2.0 * std::sqrt(p1 * p2));
    const double magnitude = std::abs(coefficient);
    InterferenceRegime regime = InterferenceRegime::Hyperbolic;
    if (magnitude <= tolerance)
        regime = InterferenceRegime::Classical;
    else if (magnitude <= 1.0)
        regime = InterferenceRegime::Trigonometric;
    return {coefficient, regime};
}

}  // namespace wigner
