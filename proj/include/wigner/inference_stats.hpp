// inference_stats.hpp - significance of an empirical conditional-Wigner margin.

#pragma once

#include "wigner/errors.hpp"
#include "wigner/survey_protocol.hpp"

#include <array>
#include <cstdint>

namespace wigner {

struct Interval {
    double low;
    double high;
};

// Wilson score interval, clamped to [0, 1].
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double confidence);

double normal_cdf(double x);
double normal_quantile(double p);

struct TestResult {
    double margin_estimate = 0.0;
    double standard_error = 0.0;
    double z_statistic = 0.0;  // 0 when degenerate
    double p_value = 1.0;
    double alpha = 0.05;
    bool significant_violation = false;
    bool degenerate = false;  // all proportions in {0, 1}; verdict is exact
    std::array<Interval, 3> term_intervals{};  // a|b+, c|b-, a|c+ at confidence 1 - alpha
};

// Carries the exact (non-asymptotic) verdict for zero-variance data.
class DegenerateVariance : public Error {
public:
    explicit DegenerateVariance(const TestResult& r);
    const TestResult& result() const noexcept { return result_; }

private:
    TestResult result_;
};

// One-sided z test of margin < 0 with independent binomial branches.
// Throws EmptyConditioningBranch, DegenerateVariance.
TestResult violation_test(const FrequencyTable& table, double alpha);

// Same, but returns the degenerate result instead of throwing.
TestResult violation_test_or_degenerate(const FrequencyTable& table, double alpha);

}  // namespace wigner
