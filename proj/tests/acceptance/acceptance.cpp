// acceptance.cpp - end-to-end exit criteria, one PASS/FAIL line each.

#include "oracles.hpp"

#include "wigner/dataset_io.hpp"
#include "wigner/errors.hpp"
#include "wigner/inference_stats.hpp"
#include "wigner/violation_search.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace wigner;
using std::numbers::pi;

namespace {

// Angles attaining the -0.25 optimum (found by `search`).
const QuestionTriple kOptimal{BlochAngle(0.0), BlochAngle(2 * pi / 3), BlochAngle(pi / 3)};

struct Outcome_ {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome_ classical_soundness() {
    const auto t0 = std::chrono::steady_clock::now();
    rng::Stream s = rng::named_stream(1, "acceptance-1");
    double bell = 1e9, joint = 1e9, cond = 1e9;
    for (int i = 0; i < 100000; ++i) {
        const auto j = random_joint(s);
        bell = std::min(bell, bell_covariance_check(j).margin);
        joint = std::min(joint, wigner_joint_check(j).margin);
    }
    for (int i = 0; i < 100000; ++i)
        cond = std::min(cond, wigner_conditional_check(conditional_triple(symmetrize(random_joint(s)))).margin);
    const double t = seconds_since(t0);
    return {bell >= -1e-12 && joint >= -1e-12 && cond >= -1e-12 && t < 30.0,
            fmt("min margins: bell %.3g, wigner %.3g, conditional %.3g; %.2fs", bell, joint, cond, t)};
}

Outcome_ wigner_identity() {
    rng::Stream s = rng::named_stream(2, "acceptance-2");
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const auto j = random_joint(s);
        worst = std::max(worst, std::abs(wigner_joint_check(j).margin - (j.weights()[1] + j.weights()[6])));
    }
    return {worst <= 1e-15, fmt("max |margin - (w(++-) + w(--+))| = %.3g", worst)};
}

Outcome_ analytic_violation(const QuestionTriple& q) {
    const auto t = predicted_conditional_triple(q);
    const double m = wigner_conditional_check(t).margin;
    const bool ok = std::abs(t.a_given_b_plus() - 0.25) <= 1e-14 && std::abs(t.c_given_b_minus() - 0.25) <= 1e-14 &&
                    std::abs(t.a_given_c_plus() - 0.75) <= 1e-14 && std::abs(m + 0.25) <= 1e-14;
    return {ok, fmt("angles (%.6f, %.6f, %.6f): triple (%.15f, %.15f, %.15f), margin %.15f", q.a.radians(),
                    q.b.radians(), q.c.radians(), t.a_given_b_plus(), t.c_given_b_minus(), t.a_given_c_plus(), m)};
}

Outcome_ search_optimum() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = maximize_quantum_violation(360, 1e-9);
    rng::Stream s = rng::named_stream(4, "acceptance-4");
    const auto floor = classical_margin_floor(100000, s);
    const double gap = floor.floor - r.best_margin;
    const double t = seconds_since(t0);
    return {std::abs(r.best_margin + 0.25) <= 1e-8 && floor.floor >= -1e-12 && std::abs(gap - 0.25) <= 1e-8 && t < 60.0,
            fmt("quantum %.12f at (b-a, c-a) = (%.6f, %.6f); classical floor %.3g (%zu skipped); gap %.12f; %.2fs",
                r.best_margin, r.best_angles.b.radians(), r.best_angles.c.radians(), floor.floor, floor.skipped, gap, t)};
}

std::string verdict_of(const ResponseDataset& d, TestResult* out = nullptr) {
    const auto table = estimate_frequencies(d);
    const auto r = violation_test_or_degenerate(table, 0.05);
    if (out) *out = r;
    return std::string(verdict(r));
}

Outcome_ end_to_end() {
    const auto t0 = std::chrono::steady_clock::now();
    const ProtocolDesign design{DesignKind::ThreeEnsemble, 100000};
    TestResult q;
    const std::string qv = verdict_of(run_protocol(QuantumUnpolarized{kOptimal}, design, 20251018, 4), &q);

    rng::Stream s = rng::named_stream(5, "acceptance-5");
    TestResult c;
    const std::string cv =
        verdict_of(run_protocol(ClassicalHiddenVariable{symmetrize(random_joint(s))}, design, 20251018, 4), &c);
    const double t = seconds_since(t0);
    const bool ok = std::abs(q.margin_estimate + 0.25) <= 0.01 && q.p_value < 1e-6 && qv == "quantum-like-violation" &&
                    cv == "classical-consistent" && t < 60.0;
    return {ok, fmt("quantum margin %.5f, p %.3g, %s; classical margin %.5f, %s; %.2fs", q.margin_estimate, q.p_value,
                    qv.c_str(), c.margin_estimate, cv.c_str(), t)};
}

Outcome_ design_equivalence() {
    const auto t3 = estimate_frequencies(run_protocol(QuantumUnpolarized{kOptimal}, {DesignKind::ThreeEnsemble, 100000}, 61, 4));
    const auto t2 = estimate_frequencies(run_protocol(QuantumUnpolarized{kOptimal}, {DesignKind::TwoEnsemble, 100000}, 62, 4));
    double worst = 0.0;
    for (auto m : {&FrequencyTable::a_given_b_plus, &FrequencyTable::c_given_b_minus, &FrequencyTable::a_given_c_plus}) {
        const Count& x = t3.*m;
        const Count& y = t2.*m;
        const double pooled = double(x.successes + y.successes) / double(x.trials + y.trials);
        const double se = std::sqrt(pooled * (1 - pooled) * (1.0 / x.trials + 1.0 / y.trials));
        worst = std::max(worst, std::abs(x.ratio() - y.ratio()) / se);
    }
    return {worst < 4.0, fmt("largest difference %.2f pooled standard errors", worst)};
}

Outcome_ symmetry_gate() {
    // a and c fair, b with P(+1) = 0.7, independent.
    std::array<double, 8> w{};
    for (std::size_t atom = 0; atom < kAtoms; ++atom)
        w[atom] = 0.5 * 0.5 * (atom_sign(atom, Var::B) == wigner::Outcome::Plus ? 0.7 : 0.3);
    const ClassicalHiddenVariable skewed{JointDistribution3(w)};
    const int runs = 200;
    int flagged = 0;
    for (int seed = 0; seed < runs; ++seed) {
        const auto rep = check_symmetry(run_protocol(skewed, {DesignKind::ThreeEnsemble, 10000}, seed), 0.05);
        for (const auto& q : rep.questions)
            if (q.question == Var::B && q.flagged) ++flagged;
    }
    const double power = flagged / double(runs);
    const auto quantum = check_symmetry(run_protocol(QuantumUnpolarized{kOptimal}, {DesignKind::ThreeEnsemble, 10000}, 7), 0.05);
    return {power >= 0.99 && quantum.all_fair(),
            fmt("skewed b flagged in %d/%d runs; unpolarized quantum all fair: %s", flagged, runs,
                quantum.all_fair() ? "yes" : "no")};
}

Outcome_ interference_round_trip() {
    const double p1 = 0.25, p2 = 0.25, target = 0.5;
    const double p = p1 + p2 + 2 * target * std::sqrt(p1 * p2);
    rng::Stream s = rng::named_stream(8, "acceptance-8");
    const std::uint64_t n = 100000;
    auto freq = [&](double prob) {
        std::binomial_distribution<std::uint64_t> b(n, prob);
        return static_cast<double>(b(s)) / static_cast<double>(n);
    };
    const double f = freq(p), f1 = freq(p1), f2 = freq(p2);
    const auto r = interference_coefficient(f, f1, f2);
    return {std::abs(r.coefficient - target) <= 0.02,
            fmt("frequencies (%.5f, %.5f, %.5f) -> coefficient %.5f (%s)", f, f1, f2, r.coefficient,
                std::string(to_string(r.regime)).c_str())};
}

Outcome_ determinism() {
    rng::Stream s = rng::named_stream(9, "acceptance-9");
    const std::vector<PopulationModel> pops{QuantumUnpolarized{kOptimal}, ClassicalHiddenVariable{symmetrize(random_joint(s))}};
    int compared = 0, identical = 0;
    for (const auto& pop : pops)
        for (auto kind : {DesignKind::ThreeEnsemble, DesignKind::TwoEnsemble}) {
            std::vector<std::string> csv, json;
            for (unsigned workers : {1u, 4u, 8u}) {
                const auto d = run_protocol(pop, {kind, 20000}, 99, workers);
                const auto table = estimate_frequencies(d);
                RunConfig config;
                config.seed = 99;
                config.design = infer_design(d);
                csv.push_back(write_dataset(d));
                json.push_back(emit_report(violation_test_or_degenerate(table, 0.05), table, check_symmetry(table, 0.05), config).dump(2));
            }
            for (std::size_t k = 1; k < 3; ++k) {
                compared += 2;
                identical += (csv[k] == csv[0]) + (json[k] == json[0]);
            }
        }
    return {compared == identical, fmt("%d/%d dataset and report comparisons byte-identical", identical, compared)};
}

Outcome_ perfect_correlation() {
    rng::Stream s = rng::named_stream(10, "acceptance-10");
    int passed = 0;
    for (int j = 0; j < 100; ++j) {
        const auto joint = random_joint(s);
        passed += check_perfect_correlation(sample_correlated_pairs(joint, 10000, s));
    }
    return {passed == 100, fmt("%d/100 joints pass over 10^4 copy pairs", passed)};
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* name;
        std::function<Outcome_()> run;
    };
    const std::vector<Criterion> criteria{
        {"1", "classical soundness fuzz", classical_soundness},
        {"2", "Wigner identity", wigner_identity},
        {"3", "quantum analytic violation at (0, 2pi/3, 4pi/3)",
         [] { return analytic_violation({BlochAngle(0.0), BlochAngle(2 * pi / 3), BlochAngle(4 * pi / 3)}); }},
        {"3'", "quantum analytic violation at the search optimum (0, 2pi/3, pi/3)",
         [] { return analytic_violation(kOptimal); }},
        {"4", "search optimum and classical floor", search_optimum},
        {"5", "end-to-end Monte Carlo verdicts", end_to_end},
        {"6", "two/three-ensemble design equivalence", design_equivalence},
        {"7", "symmetry gate", symmetry_gate},
        {"8", "interference round-trip", interference_round_trip},
        {"9", "determinism across worker counts", determinism},
        {"10", "perfect-correlation property", perfect_correlation},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome_ o{false, ""};
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("[%s] AC%-3s %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    }
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
