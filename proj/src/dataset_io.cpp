#include "wigner/dataset_io.hpp"

#include "wigner/errors.hpp"

#include <map>
#include <stdexcept>
#include <unordered_set>

namespace wigner {
namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

template <typename F>
auto field(std::size_t line, std::string_view name, F&& parse) {
    try {
        return parse();
    } catch (const std::invalid_argument& e) {
        throw FormatError(line, std::string(name) + ": " + e.what());
    }
}

}  // namespace

std::string_view to_string(Command c) noexcept {
    switch (c) {
        case Command::Simulate: return "simulate";
        case Command::Test: return "test";
        case Command::Search: return "search";
        case Command::Interference: return "interference";
    }
    return "?";
}

ResponseDataset parse_dataset(std::string_view text) {
    ResponseDataset data;
    std::unordered_set<std::string> seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool header_seen = false;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        if (!header_seen) {
            if (line != kDatasetHeader) throw FormatError(line_no, "expected header '" + std::string(kDatasetHeader) + "'");
            header_seen = true;
            continue;
        }
        if (line.empty()) {
            if (pos >= text.size()) break;
            throw FormatError(line_no, "empty row");
        }

        const auto cols = split(line, ',');
        if (cols.size() != 6) throw FormatError(line_no, "expected 6 fields, got " + std::to_string(cols.size()));
        if (cols[0].empty()) throw FormatError(line_no, "respondent_id is empty");

        ResponseRecord r;
        r.respondent_id = std::string(cols[0]);
        r.branch = field(line_no, "branch", [&] { return parse_branch(cols[1]); });
        r.first_question = field(line_no, "first_question", [&] { return parse_var(cols[2]); });
        r.first_answer = field(line_no, "first_answer", [&] { return parse_outcome(cols[3]); });
        r.second_question = field(line_no, "second_question", [&] { return parse_var(cols[4]); });
        r.second_answer = field(line_no, "second_answer", [&] { return parse_outcome(cols[5]); });
        if (auto why = branch_violation(r)) throw FormatError(line_no, *why);
        if (!seen.insert(r.respondent_id).second)
            throw DuplicateRespondent("line " + std::to_string(line_no) + ": duplicate respondent '" + r.respondent_id + "'");
        data.records.push_back(std::move(r));
    }
    if (!header_seen) throw FormatError(1, "missing header");
    return data;
}

std::string write_dataset(const ResponseDataset& data) {
    std::string out;
    out.reserve(32 * (data.records.size() + 1) + kDatasetHeader.size());
    out.append(kDatasetHeader).push_back('\n');
    for (const auto& r : data.records) {
        out.append(r.respondent_id).push_back(',');
        out.append(to_string(r.branch)).push_back(',');
        out.append(to_string(r.first_question)).push_back(',');
        out.append(to_string(r.first_answer)).push_back(',');
        out.append(to_string(r.second_question)).push_back(',');
        out.append(to_string(r.second_answer)).push_back('\n');
    }
    return out;
}

ProtocolDesign infer_design(const ResponseDataset& data) {
    std::map<Branch, std::size_t> sizes;
    for (const auto& r : data.records) ++sizes[r.branch];
    const bool two = sizes.contains(Branch::S1) || sizes.contains(Branch::S2);
    const bool three = sizes.contains(Branch::BA) || sizes.contains(Branch::BC) || sizes.contains(Branch::CA);
    if (two && three) throw std::invalid_argument("dataset mixes three-ensemble and two-ensemble branches");
    ProtocolDesign d;
    d.kind = two ? DesignKind::TwoEnsemble : DesignKind::ThreeEnsemble;
    d.n_per_branch = 0;
    if (two)
        d.n_per_branch = sizes[Branch::S2];
    else
        for (const auto& [b, n] : sizes) d.n_per_branch = std::max(d.n_per_branch, n);
    return d;
}

std::string_view verdict(const TestResult& test) noexcept {
    if (test.degenerate) return "inconclusive-degenerate";
    return test.significant_violation ? "quantum-like-violation" : "classical-consistent";
}

namespace {

nlohmann::ordered_json term_json(const Count& c, const Interval& iv) {
    nlohmann::ordered_json j;
    j["value"] = c.ratio();
    j["successes"] = c.successes;
    j["trials"] = c.trials;
    j["wilson"] = {iv.low, iv.high};
    return j;
}

}  // namespace

nlohmann::ordered_json emit_report(const TestResult& test, const FrequencyTable& table,
                                   const SymmetryReport& symmetry, const RunConfig& config) {
    nlohmann::ordered_json nu;
    nu["a_given_b_plus"] = term_json(table.a_given_b_plus, test.term_intervals[0]);
    nu["c_given_b_minus"] = term_json(table.c_given_b_minus, test.term_intervals[1]);
    nu["a_given_c_plus"] = term_json(table.a_given_c_plus, test.term_intervals[2]);

    nlohmann::ordered_json sym;
    sym["tolerance"] = symmetry.tolerance;
    sym["all_fair"] = symmetry.all_fair();
    sym["questions"] = nlohmann::ordered_json::array();
    for (const auto& q : symmetry.questions) {
        nlohmann::ordered_json e;
        e["question"] = to_string(q.question);
        e["plus"] = q.plus.successes;
        e["trials"] = q.plus.trials;
        e["fraction"] = q.fraction;
        e["flagged"] = q.flagged;
        sym["questions"].push_back(std::move(e));
    }

    nlohmann::ordered_json design;
    design["kind"] = to_string(config.design.kind);
    design["n_per_branch"] = config.design.n_per_branch;
    if (config.design.kind == DesignKind::TwoEnsemble) design["s1_to_s2_size_ratio"] = "2:1";

    nlohmann::ordered_json report;
    report["nu"] = std::move(nu);
    report["margin"] = test.margin_estimate;
    report["standard_error"] = test.standard_error;
    if (test.degenerate)
        report["z"] = nullptr;
    else
        report["z"] = test.z_statistic;
    report["p_value"] = test.p_value;
    report["alpha"] = test.alpha;
    report["verdict"] = verdict(test);
    report["symmetry_check"] = std::move(sym);
    report["seed"] = config.seed;
    report["design"] = std::move(design);
    return report;
}

}  // namespace wigner
