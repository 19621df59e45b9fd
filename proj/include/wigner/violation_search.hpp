// violation_search.hpp - optimization of the quantum conditional-Wigner margin
// over question angles, and the numerical classical floor.

#pragma once

#include "wigner/qubit_model.hpp"
#include "wigner/rng.hpp"

#include <cstddef>

namespace wigner {

// Predicted margin with a = 0.
double quantum_margin(double b_minus_a, double c_minus_a) noexcept;

enum class SearchSpace {
    Full,              // (b-a, c-a) over [0, 2pi)^2
    FirstTwoCoincide,  // b = a, sweep c-a only
};

struct SearchResult {
    QuestionTriple best_angles;
    double best_margin;
    double grid_margin;  // best margin on the grid before refinement
    std::size_t evaluations;
    double refinement_tolerance;
};

// Grid over (b-a, c-a) with a = 0, ties to the lexicographically smallest
// cell, then compass search until the step falls below refine_tol.
// Preconditions: grid_steps >= 8, refine_tol > 0.
SearchResult maximize_quantum_violation(std::size_t grid_steps, double refine_tol,
                                        SearchSpace space = SearchSpace::Full, unsigned workers = 1);

struct ClassicalFloor {
    double floor;
    std::size_t evaluated;
    std::size_t skipped;  // samples with an empty conditioning event
};

// Minimum conditional-Wigner margin over `samples` symmetrized Dirichlet
// joints and the eight symmetrized vertex laws. samples = 0 scans the
// vertices only.
ClassicalFloor classical_margin_floor(std::size_t samples, rng::Stream& stream);

}  // namespace wigner
