// survey_protocol.hpp - simulated two-question surveys and the conditional
// frequency estimators computed from their responses.
//
// Three-ensemble design: branch BA asks b then a, BC asks b then c, CA asks
// c then a, each with n fresh agents.
// Two-ensemble design: S1 (2n agents) asks b first, then a after a "+1" and
// c after a "-1"; S2 (n agents) asks c then a.

#pragma once

#include "wigner/probability_core.hpp"
#include "wigner/qubit_model.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace wigner {

struct ClassicalHiddenVariable {
    JointDistribution3 joint;
};

struct QuantumUnpolarized {
    QuestionTriple questions;
    UnpolarizedSampling sampling = UnpolarizedSampling::FairCoin;
};

using PopulationModel = std::variant<ClassicalHiddenVariable, QuantumUnpolarized>;

enum class DesignKind { ThreeEnsemble, TwoEnsemble };

std::string_view to_string(DesignKind d) noexcept;

struct ProtocolDesign {
    DesignKind kind = DesignKind::ThreeEnsemble;
    std::size_t n_per_branch = 1;
};

enum class Branch { BA, BC, CA, S1, S2 };

std::string_view to_string(Branch b) noexcept;
Branch parse_branch(std::string_view token);

struct ResponseRecord {
    std::string respondent_id;
    Branch branch;
    Var first_question;
    Outcome first_answer;
    Var second_question;
    Outcome second_answer;

    friend bool operator==(const ResponseRecord&, const ResponseRecord&) = default;
};

// Empty optional when the record is consistent with its branch, otherwise
// a description of the inconsistency.
std::optional<std::string> branch_violation(const ResponseRecord& r);

struct ResponseDataset {
    std::vector<ResponseRecord> records;

    friend bool operator==(const ResponseDataset&, const ResponseDataset&) = default;
};

struct Count {
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;

    double ratio() const;  // throws EmptyConditioningBranch when trials == 0

    friend bool operator==(const Count&, const Count&) = default;
};

struct FrequencyTable {
    Count a_given_b_plus;
    Count c_given_b_minus;
    Count a_given_c_plus;
    // Per question: "+1" first answers over agents asked that question first.
    std::array<Count, 3> first_answer_plus;

    friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;
};

// Respondent id "r" + zero-padded global index.
std::string respondent_id(std::size_t index, std::size_t total);

// Deterministic in (pop, design, seed); `workers` only changes wall time.
ResponseDataset run_protocol(const PopulationModel& pop, const ProtocolDesign& design,
                             std::uint64_t seed, unsigned workers = 1);

// Answers of a classical agent with predetermined values; order-independent.
std::pair<Outcome, Outcome> classical_answers(const SignTriple& agent, Var first, Var second) noexcept;

// Raw counts; empty denominators are allowed.
FrequencyTable count_responses(const ResponseDataset& data);

// Counts for the three conditional estimators. Throws EmptyConditioningBranch
// when any denominator is zero.
FrequencyTable estimate_frequencies(const ResponseDataset& data);

CondTriple frequency_ratios(const FrequencyTable& table);

struct QuestionFairness {
    Var question;
    Count plus;
    double fraction;
    bool flagged;
};

struct SymmetryReport {
    double tolerance;
    std::vector<QuestionFairness> questions;  // only questions asked first somewhere

    bool all_fair() const noexcept;
};

SymmetryReport check_symmetry(const FrequencyTable& table, double tolerance);
SymmetryReport check_symmetry(const ResponseDataset& data, double tolerance);

using TriplePair = std::pair<SignTriple, SignTriple>;

// Pairs whose members are copies of one drawn triple (xi_theta = eta_theta).
std::vector<TriplePair> sample_correlated_pairs(const JointDistribution3& joint, std::size_t n,
                                                rng::Stream& stream);

bool check_perfect_correlation(const std::vector<TriplePair>& pairs) noexcept;

}  // namespace wigner
