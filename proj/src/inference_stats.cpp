#include "wigner/inference_stats.hpp"

#include <boost/math/distributions/normal.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wigner {

double normal_cdf(double x) { return boost::math::cdf(boost::math::normal_distribution<double>(), x); }

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("normal quantile needs p in (0, 1)");
    return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double confidence) {
    if (trials == 0 || successes > trials) throw std::invalid_argument("wilson interval needs 0 <= k <= n, n >= 1");
    if (!(confidence > 0.0 && confidence < 1.0)) throw std::invalid_argument("confidence must lie in (0, 1)");
    const double z = normal_quantile(0.5 + 0.5 * confidence);
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2n = z * z / n;
    const double center = (p + 0.5 * z2n) / (1.0 + z2n);
    const double half = z / (1.0 + z2n) * std::sqrt(p * (1.0 - p) / n + 0.25 * z2n / n);
    Interval iv{std::max(0.0, center - half), std::min(1.0, center + half)};
    // The closed form gives exactly 0 (resp. 1) at k = 0 (resp. k = n) up to rounding.
    if (successes == 0) iv.low = 0.0;
    if (successes == trials) iv.high = 1.0;
    return iv;
}

DegenerateVariance::DegenerateVariance(const TestResult& r)
    : Error("zero-variance frequencies; margin " + std::to_string(r.margin_estimate) + " is exact"), result_(r) {}

TestResult violation_test_or_degenerate(const FrequencyTable& table, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
    const CondTriple nu = frequency_ratios(table);
    const std::array<const Count*, 3> counts{&table.a_given_b_plus, &table.c_given_b_minus, &table.a_given_c_plus};
    const std::array<double, 3> p{nu.a_given_b_plus(), nu.c_given_b_minus(), nu.a_given_c_plus()};

    TestResult r;
    r.alpha = alpha;
    r.margin_estimate = p[0] + p[1] - p[2];
    double variance = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        variance += p[i] * (1.0 - p[i]) / static_cast<double>(counts[i]->trials);
        r.term_intervals[i] = wilson_interval(counts[i]->successes, counts[i]->trials, 1.0 - alpha);
    }
    r.standard_error = std::sqrt(variance);

    if (r.standard_error == 0.0) {
        r.degenerate = true;
        r.z_statistic = 0.0;
        r.p_value = r.margin_estimate < 0.0 ? 0.0 : 1.0;
    } else {
        r.z_statistic = r.margin_estimate / r.standard_error;
        r.p_value = normal_cdf(r.z_statistic);
    }
    r.significant_violation = r.margin_estimate < 0.0 && r.p_value < alpha;
    return r;
}

TestResult violation_test(const FrequencyTable& table, double alpha) {
    TestResult r = violation_test_or_degenerate(table, alpha);
    if (r.degenerate) throw DegenerateVariance(r);
    return r;
}

}  // namespace wigner
