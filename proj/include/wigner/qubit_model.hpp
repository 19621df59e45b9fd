// qubit_model.hpp - quantum-like agent on the real Bloch circle.
//
// A question is a measurement direction; its +1 eigenstate sits at the
// question's angle and its -1 eigenstate at angle + pi. The probability of
// answering +1 from a pure state at angle phi is cos^2((phi - q) / 2), and
// answering collapses the agent onto the eigenstate of the given answer.

#pragma once

#include "wigner/inequality_engine.hpp"
#include "wigner/probability_core.hpp"
#include "wigner/rng.hpp"

#include <numbers>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace wigner {

class BlochAngle {
public:
    // Normalized into [0, 2pi).
    explicit BlochAngle(double radians = 0.0) noexcept;

    double radians() const noexcept { return phi_; }

    // Direction of the eigenstate for the given answer.
    BlochAngle eigenstate(Outcome answer) const noexcept {
        return answer == Outcome::Plus ? *this : BlochAngle(phi_ + std::numbers::pi);
    }

    friend bool operator==(const BlochAngle&, const BlochAngle&) = default;

private:
    double phi_;
};

struct Unpolarized {
    friend bool operator==(const Unpolarized&, const Unpolarized&) = default;
};

using RealQubitState = std::variant<BlochAngle, Unpolarized>;

struct QuestionTriple {
    BlochAngle a;
    BlochAngle b;
    BlochAngle c;

    BlochAngle operator[](Var v) const noexcept {
        switch (v) {
            case Var::A: return a;
            case Var::B: return b;
            case Var::C: return c;
        }
        return a;
    }
};

// Parses "a,b,c" in radians.
QuestionTriple parse_question_triple(std::string_view text);

double transition_probability(BlochAngle from, BlochAngle to) noexcept;

CondTriple predicted_conditional_triple(const QuestionTriple& q) noexcept;

// How an Unpolarized agent answers its first question.
enum class UnpolarizedSampling {
    FairCoin,      // first answer is a fair coin
    UniformAngle,  // draw a pure state uniformly on the circle, then apply the Born rule
};

// Answers `questions` in order with collapse after each answer.
// Precondition: questions non-empty.
std::vector<Outcome> sample_sequential(RealQubitState state, std::span<const BlochAngle> questions,
                                       rng::Stream& stream,
                                       UnpolarizedSampling mode = UnpolarizedSampling::FairCoin);

// P(first = +1, then second = +1) under the collapse rule.
double sequential_joint_probability(const RealQubitState& initial, BlochAngle first,
                                    BlochAngle second) noexcept;

}  // namespace wigner
