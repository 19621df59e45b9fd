#include "wigner/qubit_model.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wigner {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double parse_radians(std::string_view token) {
    double value = 0.0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value))
        throw std::invalid_argument("bad angle '" + std::string(token) + "'");
    return value;
}

}  // namespace

BlochAngle::BlochAngle(double radians) noexcept : phi_(std::fmod(radians, kTwoPi)) {
    if (phi_ < 0.0) phi_ += kTwoPi;
    // fmod of a tiny negative value can round up to exactly 2pi.
    if (phi_ >= kTwoPi) phi_ = 0.0;
}

QuestionTriple parse_question_triple(std::string_view text) {
    std::array<double, 3> angles{};
    std::size_t start = 0;
    for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t comma = text.find(',', start);
        if ((k < 2) == (comma == std::string_view::npos))
            throw std::invalid_argument("angles must be given as a,b,c");
        const std::size_t stop = k < 2 ? comma : text.size();
        angles[k] = parse_radians(text.substr(start, stop - start));
        start = stop + 1;
    }
    return {BlochAngle(angles[0]), BlochAngle(angles[1]), BlochAngle(angles[2])};
}

double transition_probability(BlochAngle from, BlochAngle to) noexcept {
    // cos^2(d/2) written as (1 + cos d) / 2.
    return 0.5 * (1.0 + std::cos(from.radians() - to.radians()));
}

CondTriple predicted_conditional_triple(const QuestionTriple& q) noexcept {
    return CondTriple(transition_probability(q.b, q.a),
                      transition_probability(q.b.eigenstate(Outcome::Minus), q.c),
                      transition_probability(q.c, q.a));
}

std::vector<Outcome> sample_sequential(RealQubitState state, std::span<const BlochAngle> questions,
                                       rng::Stream& stream, UnpolarizedSampling mode) {
    if (questions.empty()) throw std::invalid_argument("sample_sequential needs at least one question");
    if (std::holds_alternative<Unpolarized>(state) && mode == UnpolarizedSampling::UniformAngle)
        state = BlochAngle(kTwoPi * stream.uniform());

    std::vector<Outcome> answers;
    answers.reserve(questions.size());
    for (BlochAngle q : questions) {
        Outcome answer;
        if (const auto* phi = std::get_if<BlochAngle>(&state))
            answer = stream.uniform() < transition_probability(*phi, q) ? Outcome::Plus : Outcome::Minus;
        else
            answer = stream.coin() ? Outcome::Plus : Outcome::Minus;
        answers.push_back(answer);
        state = q.eigenstate(answer);
    }
    return answers;
}

double sequential_joint_probability(const RealQubitState& initial, BlochAngle first,
                                    BlochAngle second) noexcept {
    const double first_plus =
        std::holds_alternative<Unpolarized>(initial) ? 0.5 : transition_probability(std::get<BlochAngle>(initial), first);
    return first_plus * transition_probability(first, second);
}

}  // namespace wigner
