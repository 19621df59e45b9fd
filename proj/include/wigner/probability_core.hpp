// probability_core.hpp - finite Kolmogorov model for three dichotomic variables.
//
// A JointDistribution3 is a probability law on the eight sign-triples
// (s_a, s_b, s_c) in {+1,-1}^3. Atoms are stored in canonical order
//   +++, ++-, +-+, +--, -++, -+-, --+, ---
// so atom index bit 2 is "a is -1", bit 1 is "b is -1", bit 0 is "c is -1".

#pragma once

#include "wigner/rng.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace wigner {

enum class Outcome : std::int8_t { Plus = 1, Minus = -1 };

constexpr int sign(Outcome o) noexcept { return static_cast<int>(o); }
constexpr Outcome flip(Outcome o) noexcept { return o == Outcome::Plus ? Outcome::Minus : Outcome::Plus; }

// Accepts exactly "+1" or "-1".
Outcome parse_outcome(std::string_view token);
std::string_view to_string(Outcome o) noexcept;

enum class Var : std::uint8_t { A = 0, B = 1, C = 2 };

inline constexpr std::array<Var, 3> kAllVars{Var::A, Var::B, Var::C};

constexpr std::size_t index(Var v) noexcept { return static_cast<std::size_t>(v); }

// Accepts exactly "a", "b" or "c".
Var parse_var(std::string_view token);
std::string_view to_string(Var v) noexcept;

using SignTriple = std::array<Outcome, 3>;

inline constexpr std::size_t kAtoms = 8;

constexpr Outcome atom_sign(std::size_t atom, Var v) noexcept {
    return ((atom >> (2 - index(v))) & 1U) ? Outcome::Minus : Outcome::Plus;
}

constexpr SignTriple atom_triple(std::size_t atom) noexcept {
    return {atom_sign(atom, Var::A), atom_sign(atom, Var::B), atom_sign(atom, Var::C)};
}

constexpr std::size_t atom_index(const SignTriple& t) noexcept {
    std::size_t atom = 0;
    for (Var v : kAllVars) atom = (atom << 1) | (t[index(v)] == Outcome::Minus ? 1U : 0U);
    return atom;
}

// Global sign flip s -> -s.
constexpr std::size_t opposite_atom(std::size_t atom) noexcept { return 7 - atom; }

struct Event {
    Var var;
    Outcome outcome;
};

class JointDistribution3 {
public:
    static constexpr double kNormTolerance = 1e-12;

    // Uniform law.
    JointDistribution3() noexcept;

    // Weights must be non-negative, finite, and sum to 1 within kNormTolerance.
    // The stored weights are divided by their sum.
    explicit JointDistribution3(std::span<const double, kAtoms> weights);

    // Ingestion path: any non-negative vector with positive sum, renormalized.
    static JointDistribution3 normalized(std::span<const double, kAtoms> weights);

    static JointDistribution3 point_mass(const SignTriple& t);

    double weight(std::size_t atom) const { return weights_.at(atom); }
    double weight(const SignTriple& t) const noexcept { return weights_[atom_index(t)]; }
    const std::array<double, kAtoms>& weights() const noexcept { return weights_; }

    friend bool operator==(const JointDistribution3&, const JointDistribution3&) = default;

private:
    struct Unchecked {};
    JointDistribution3(Unchecked, const std::array<double, kAtoms>& w) noexcept : weights_(w) {}

    std::array<double, kAtoms> weights_;
};

// <xi_i, xi_j> = sum over atoms of s_i s_j w.
double covariance(const JointDistribution3& joint, Var i, Var j) noexcept;

// P(xi_i = +1).
double marginal_plus(const JointDistribution3& joint, Var i) noexcept;

// P(e1 and e2). Events on the same variable are allowed.
double joint_probability(const JointDistribution3& joint, Event e1, Event e2) noexcept;

// P(target | given); throws ZeroConditioningEvent when P(given) = 0.
double conditional(const JointDistribution3& joint, Event target, Event given);

// Symmetric Dirichlet(concentration) draw over the eight atoms.
JointDistribution3 random_joint(rng::Stream& stream, double concentration = 1.0);

// Q(s) = (P(s) + P(-s)) / 2. Every marginal of Q is 1/2.
JointDistribution3 symmetrize(const JointDistribution3& joint) noexcept;

// Draw one sign-triple from the law.
SignTriple sample_triple(const JointDistribution3& joint, rng::Stream& stream) noexcept;

}  // namespace wigner
