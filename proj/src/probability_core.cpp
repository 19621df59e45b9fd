#include "wigner/probability_core.hpp"

#include "wigner/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace wigner {

Outcome parse_outcome(std::string_view token) {
    if (token == "+1") return Outcome::Plus;
    if (token == "-1") return Outcome::Minus;
    throw std::invalid_argument("answer must be +1 or -1, got '" + std::string(token) + "'");
}

std::string_view to_string(Outcome o) noexcept { return o == Outcome::Plus ? "+1" : "-1"; }

Var parse_var(std::string_view token) {
    if (token == "a") return Var::A;
    if (token == "b") return Var::B;
    if (token == "c") return Var::C;
    throw std::invalid_argument("question must be a, b or c, got '" + std::string(token) + "'");
}

std::string_view to_string(Var v) noexcept {
    switch (v) {
        case Var::A: return "a";
        case Var::B: return "b";
        case Var::C: return "c";
    }
    return "?";
}

namespace {

double checked_sum(std::span<const double, kAtoms> weights) {
    double total = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0)
            throw std::invalid_argument("joint weights must be finite and non-negative");
        total += w;
    }
    return total;
}

std::array<double, kAtoms> divided(std::span<const double, kAtoms> weights, double total) {
    std::array<double, kAtoms> out{};
    for (std::size_t i = 0; i < kAtoms; ++i) out[i] = weights[i] / total;
    return out;
}

}  // namespace

JointDistribution3::JointDistribution3() noexcept { weights_.fill(1.0 / kAtoms); }

JointDistribution3::JointDistribution3(std::span<const double, kAtoms> weights) {
    const double total = checked_sum(weights);
    if (std::abs(total - 1.0) > kNormTolerance)
        throw std::invalid_argument("joint weights must sum to 1");
    weights_ = divided(weights, total);
}

JointDistribution3 JointDistribution3::normalized(std::span<const double, kAtoms> weights) {
    const double total = checked_sum(weights);
    if (!(total > 0.0)) throw std::invalid_argument("joint weights must have a positive sum");
    return JointDistribution3(Unchecked{}, divided(weights, total));
}

JointDistribution3 JointDistribution3::point_mass(const SignTriple& t) {
    std::array<double, kAtoms> w{};
    w[atom_index(t)] = 1.0;
    return JointDistribution3(Unchecked{}, w);
}

double covariance(const JointDistribution3& joint, Var i, Var j) noexcept {
    double acc = 0.0;
    for (std::size_t atom = 0; atom < kAtoms; ++atom)
        acc += sign(atom_sign(atom, i)) * sign(atom_sign(atom, j)) * joint.weights()[atom];
    return acc;
}

double marginal_plus(const JointDistribution3& joint, Var i) noexcept {
    double acc = 0.0;
    for (std::size_t atom = 0; atom < kAtoms; ++atom)
        if (atom_sign(atom, i) == Outcome::Plus) acc += joint.weights()[atom];
    return acc;
}

double joint_probability(const JointDistribution3& joint, Event e1, Event e2) noexcept {
    double acc = 0.0;
    for (std::size_t atom = 0; atom < kAtoms; ++atom)
        if (atom_sign(atom, e1.var) == e1.outcome && atom_sign(atom, e2.var) == e2.outcome)
            acc += joint.weights()[atom];
    return acc;
}

double conditional(const JointDistribution3& joint, Event target, Event given) {
    double given_mass = 0.0;
    for (std::size_t atom = 0; atom < kAtoms; ++atom)
        if (atom_sign(atom, given.var) == given.outcome) given_mass += joint.weights()[atom];
    if (given_mass <= 0.0)
        throw ZeroConditioningEvent("P(xi_" + std::string(to_string(given.var)) + " = " +
                                    std::string(to_string(given.outcome)) + ") is zero");
    const double p = joint_probability(joint, target, given) / given_mass;
    return std::min(p, 1.0);
}

JointDistribution3 random_joint(rng::Stream& stream, double concentration) {
    if (!(concentration > 0.0) || !std::isfinite(concentration))
        throw std::invalid_argument("Dirichlet concentration must be positive");
    std::gamma_distribution<double> gamma(concentration, 1.0);
    std::array<double, kAtoms> w{};
    double total = 0.0;
    // A draw where every gamma underflows to zero is possible for tiny
    // concentrations; redraw rather than divide by zero.
    while (!(total > 0.0)) {
        for (double& x : w) x = gamma(stream);
        total = std::accumulate(w.begin(), w.end(), 0.0);
    }
    return JointDistribution3::normalized(w);
}

JointDistribution3 symmetrize(const JointDistribution3& joint) noexcept {
    std::array<double, kAtoms> q{};
    const auto& p = joint.weights();
    for (std::size_t atom = 0; atom < kAtoms; ++atom)
        q[atom] = 0.5 * (p[atom] + p[opposite_atom(atom)]);
    return JointDistribution3::normalized(q);
}

SignTriple sample_triple(const JointDistribution3& joint, rng::Stream& stream) noexcept {
    const double u = stream.uniform();
    double cumulative = 0.0;
    std::size_t last = 0;
    for (std::size_t atom = 0; atom < kAtoms; ++atom) {
        if (joint.weights()[atom] <= 0.0) continue;
        last = atom;
        cumulative += joint.weights()[atom];
        if (u < cumulative) return atom_triple(atom);
    }
    return atom_triple(last);
}

}  // namespace wigner
