#include "wigner/violation_search.hpp"

#include "wigner/errors.hpp"
#include "wigner/inequality_engine.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace wigner {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Grid margins closer than this count as ties.
constexpr double kTieTolerance = 1e-14;

QuestionTriple gauge_fixed(double b_minus_a, double c_minus_a) noexcept {
    return {BlochAngle(0.0), BlochAngle(b_minus_a), BlochAngle(c_minus_a)};
}

struct Cell {
    double margin = std::numeric_limits<double>::infinity();
    std::size_t i = 0;
    std::size_t j = 0;
};

}  // namespace

double quantum_margin(double b_minus_a, double c_minus_a) noexcept {
    return wigner_conditional_check(predicted_conditional_triple(gauge_fixed(b_minus_a, c_minus_a))).margin;
}

SearchResult maximize_quantum_violation(std::size_t grid_steps, double refine_tol, SearchSpace space,
                                        unsigned workers) {
    if (grid_steps < 8) throw std::invalid_argument("grid_steps must be at least 8");
    if (!(refine_tol > 0.0)) throw std::invalid_argument("refine_tol must be positive");

    const double h = kTwoPi / static_cast<double>(grid_steps);
    const std::size_t rows = space == SearchSpace::Full ? grid_steps : 1;

    std::vector<Cell> row_best(rows);
    auto scan_rows = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            Cell best{std::numeric_limits<double>::infinity(), i, 0};
            for (std::size_t j = 0; j < grid_steps; ++j) {
                const double m = quantum_margin(static_cast<double>(i) * h, static_cast<double>(j) * h);
                if (m < best.margin - kTieTolerance) best = {m, i, j};
            }
            row_best[i] = best;
        }
    };

    const std::size_t n_workers = std::clamp<std::size_t>(workers, 1, rows);
    if (n_workers == 1) {
        scan_rows(0, rows);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (rows + n_workers - 1) / n_workers;
        for (std::size_t w = 0; w < n_workers; ++w)
            pool.emplace_back(scan_rows, std::min(rows, w * chunk), std::min(rows, (w + 1) * chunk));
    }

    Cell grid_best;
    for (const Cell& c : row_best)
        if (c.margin < grid_best.margin - kTieTolerance) grid_best = c;
    std::size_t evaluations = rows * grid_steps;

    // Compass search around the best cell.
    std::array<double, 2> x{static_cast<double>(grid_best.i) * h, static_cast<double>(grid_best.j) * h};
    double fx = grid_best.margin;
    double step = h;
    const std::size_t dims = space == SearchSpace::Full ? 2 : 1;
    while (step >= refine_tol) {
        std::array<double, 2> best_x = x;
        double best_f = fx;
        for (std::size_t d = 2 - dims; d < 2; ++d) {
            for (double dir : {1.0, -1.0}) {
                std::array<double, 2> trial = x;
                trial[d] += dir * step;
                const double f = quantum_margin(trial[0], trial[1]);
                ++evaluations;
                if (f < best_f) {
                    best_f = f;
                    best_x = trial;
                }
            }
        }
        if (best_f < fx) {
            x = best_x;
            fx = best_f;
        } else {
            step *= 0.5;
        }
    }

    const QuestionTriple angles = gauge_fixed(x[0], x[1]);
    return SearchResult{angles, wigner_conditional_check(predicted_conditional_triple(angles)).margin,
                        grid_best.margin, evaluations, refine_tol};
}

ClassicalFloor classical_margin_floor(std::size_t samples, rng::Stream& stream) {
    ClassicalFloor result{std::numeric_limits<double>::infinity(), 0, 0};
    auto consider = [&](const JointDistribution3& joint) {
        try {
            const double m = wigner_conditional_check(conditional_triple(joint)).margin;
            result.floor = std::min(result.floor, m);
            ++result.evaluated;
        } catch (const ZeroConditioningEvent&) {
            ++result.skipped;
        }
    };
    for (std::size_t atom = 0; atom < kAtoms; ++atom) consider(symmetrize(JointDistribution3::point_mass(atom_triple(atom))));
    for (std::size_t s = 0; s < samples; ++s) consider(symmetrize(random_joint(stream)));
    return result;
}

}  // namespace wigner
