#include "oracles.hpp"

#include "wigner/inference_stats.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace wigner;
using std::numbers::pi;

namespace {

FrequencyTable table(Count ab, Count cb, Count ac) {
    FrequencyTable t;
    t.a_given_b_plus = ab;
    t.c_given_b_minus = cb;
    t.a_given_c_plus = ac;
    return t;
}

}  // namespace

TEST_CASE("normal helpers") {
    CHECK(normal_quantile(0.975) == doctest::Approx(oracle::kZ975).epsilon(1e-14));
    for (double x : {-6.0, -2.5, -1.0, 0.0, 0.3, 2.0})
        CHECK(normal_cdf(x) == doctest::Approx(oracle::normal_lower_tail(x)).epsilon(1e-13));
    CHECK_THROWS_AS(normal_quantile(1.0), std::invalid_argument);
}

TEST_CASE("Wilson interval") {
    // Frozen from the closed form with z = 1.959963984540054.
    auto iv = wilson_interval(50, 100, 0.95);
    CHECK(iv.low == doctest::Approx(0.4038315303659957).epsilon(1e-12));
    CHECK(iv.high == doctest::Approx(0.5961684696340044).epsilon(1e-12));
    iv = wilson_interval(0, 10, 0.95);
    CHECK(iv.low == 0.0);
    CHECK(iv.high == doctest::Approx(0.2775327998628892).epsilon(1e-12));
    iv = wilson_interval(10, 10, 0.95);
    CHECK(iv.high == 1.0);
    CHECK(iv.low == doctest::Approx(0.7224672001371106).epsilon(1e-12));
    iv = wilson_interval(3, 40, 0.95);
    CHECK(iv.low == doctest::Approx(0.025836025774588198).epsilon(1e-12));
    CHECK(iv.high == doctest::Approx(0.19864233524310546).epsilon(1e-12));

    rng::Stream s(3);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t n = 1 + (s() % 500);
        const std::uint64_t k = s() % (n + 1);
        const auto w = wilson_interval(k, n, 0.95);
        const auto o = oracle::wilson(double(k), double(n), oracle::kZ975);
        CHECK(w.low >= 0.0);
        CHECK(w.high <= 1.0);
        CHECK(w.low <= w.high);
        CHECK(w.low == doctest::Approx(std::max(0.0, o[0])).epsilon(1e-12).scale(1.0));
        CHECK(w.high == doctest::Approx(std::min(1.0, o[1])).epsilon(1e-12).scale(1.0));
    }

    CHECK_THROWS_AS(wilson_interval(3, 2, 0.95), std::invalid_argument);
    CHECK_THROWS_AS(wilson_interval(0, 0, 0.95), std::invalid_argument);
    CHECK_THROWS_AS(wilson_interval(1, 2, 1.0), std::invalid_argument);
}

TEST_CASE("Wilson coverage") {
    std::mt19937_64 gen(17);
    for (double p : {0.1, 0.5, 0.9}) {
        std::binomial_distribution<std::uint64_t> binom(1000, p);
        int covered = 0;
        const int runs = 10000;
        for (int r = 0; r < runs; ++r) {
            const auto iv = wilson_interval(binom(gen), 1000, 0.95);
            covered += iv.low <= p && p <= iv.high;
        }
        const double coverage = covered / double(runs);
        CHECK(coverage >= 0.93);
        CHECK(coverage <= 0.97);
    }
}

TEST_CASE("violation test") {
    SUBCASE("null centre") {
        const auto r = violation_test(table({50, 100}, {25, 100}, {75, 100}), 0.05);
        CHECK(r.margin_estimate == 0.0);
        CHECK(r.z_statistic == 0.0);
        CHECK(r.p_value == doctest::Approx(0.5));
        CHECK_FALSE(r.significant_violation);
        const double se = std::sqrt(0.25 / 100 + 0.1875 / 100 + 0.1875 / 100);
        CHECK(r.standard_error == doctest::Approx(se).epsilon(1e-14));
    }
    SUBCASE("quantum-sized violation") {
        const auto r = violation_test(table({12500, 50000}, {12500, 50000}, {37500, 50000}), 0.05);
        CHECK(r.margin_estimate == doctest::Approx(-0.25));
        CHECK(r.p_value < 1e-6);
        CHECK(r.significant_violation);
        for (const auto& iv : r.term_intervals) CHECK(iv.low < iv.high);
    }
    SUBCASE("p-value matches the normal tail oracle") {
        const auto r = violation_test(table({45, 100}, {20, 100}, {80, 100}), 0.05);
        CHECK(r.margin_estimate == doctest::Approx(-0.15));
        CHECK(r.p_value > 1e-5);
        CHECK(r.p_value == doctest::Approx(oracle::normal_lower_tail(r.z_statistic)).epsilon(1e-12));
    }
    SUBCASE("degenerate variance") {
        const auto t = table({10, 10}, {4, 4}, {7, 7});
        CHECK_THROWS_AS(violation_test(t, 0.05), DegenerateVariance);
        try {
            violation_test(t, 0.05);
        } catch (const DegenerateVariance& e) {
            CHECK(e.result().margin_estimate == 1.0);
            CHECK(e.result().degenerate);
            CHECK_FALSE(e.result().significant_violation);
            CHECK(e.result().standard_error == 0.0);
        }
        const auto v = violation_test_or_degenerate(table({0, 10}, {0, 4}, {7, 7}), 0.05);
        CHECK(v.degenerate);
        CHECK(v.margin_estimate == -1.0);
        CHECK(v.significant_violation);
    }
    SUBCASE("invariant: significance iff negative margin and p < alpha") {
        rng::Stream s(5);
        for (int i = 0; i < 5000; ++i) {
            auto c = [&] {
                const std::uint64_t n = 1 + s() % 300;
                return Count{s() % (n + 1), n};
            };
            const double alpha = 0.001 + 0.3 * s.uniform();
            const auto r = violation_test_or_degenerate(table(c(), c(), c()), alpha);
            CHECK(r.significant_violation == (r.margin_estimate < 0 && r.p_value < alpha));
            for (const auto& iv : r.term_intervals) {
                CHECK(iv.low >= 0.0);
                CHECK(iv.high <= 1.0);
            }
        }
    }
    CHECK_THROWS_AS(violation_test(table({1, 2}, {0, 0}, {1, 2}), 0.05), EmptyConditioningBranch);
    CHECK_THROWS_AS(violation_test(table({1, 2}, {1, 2}, {1, 2}), 1.5), std::invalid_argument);
}

TEST_CASE("standard error shrinks with sample size") {
    double last = 1e9;
    for (std::uint64_t scale = 1; scale <= 4096; scale *= 2) {
        const auto r = violation_test(table({3 * scale, 10 * scale}, {1 * scale, 4 * scale}, {5 * scale, 8 * scale}), 0.05);
        CHECK(r.standard_error <= last);
        last = r.standard_error;
    }
}

TEST_CASE("type-I error is controlled for classical populations") {
    // Symmetric law with w(++-) = w(--+) = 0.01, so the conditional margin is 0.04.
    const std::array<double, 8> w{0.24, 0.01, 0.125, 0.125, 0.125, 0.125, 0.01, 0.24};
    const ClassicalHiddenVariable pop{JointDistribution3(w)};
    int significant = 0;
    const int runs = 1000;
    for (int seed = 0; seed < runs; ++seed) {
        const auto t = estimate_frequencies(run_protocol(pop, {DesignKind::ThreeEnsemble, 1000}, seed));
        significant += violation_test_or_degenerate(t, 0.05).significant_violation;
    }
    const double rate = significant / double(runs);
    CHECK(rate <= 0.05 + 3 * std::sqrt(0.05 * 0.95 / runs));
}
