// dataset_io.hpp - CSV response datasets, run configuration and JSON reports.
//
// Dataset format (header is fixed):
//   respondent_id,branch,first_question,first_answer,second_question,second_answer
//   r000000,BA,b,+1,a,-1

#pragma once

#include "wigner/inference_stats.hpp"
#include "wigner/survey_protocol.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wigner {

inline constexpr std::string_view kDatasetHeader =
    "respondent_id,branch,first_question,first_answer,second_question,second_answer";

// Throws FormatError (1-based line numbers) and DuplicateRespondent.
ResponseDataset parse_dataset(std::string_view text);

std::string write_dataset(const ResponseDataset& data);

enum class Command { Simulate, Test, Search, Interference };

std::string_view to_string(Command c) noexcept;

struct RunConfig {
    Command command = Command::Test;
    std::optional<QuestionTriple> angles;
    std::optional<std::vector<double>> atoms;
    bool symmetrize = false;
    ProtocolDesign design{};
    std::uint64_t seed = 0;
    double alpha = 0.05;
    double symmetry_tolerance = 0.05;
    std::string input_path;
    std::string output_path;
};

// The design actually present in a dataset (branch names decide it).
ProtocolDesign infer_design(const ResponseDataset& data);

std::string_view verdict(const TestResult& test) noexcept;

nlohmann::ordered_json emit_report(const TestResult& test, const FrequencyTable& table,
                                   const SymmetryReport& symmetry, const RunConfig& config);

}  // namespace wigner
