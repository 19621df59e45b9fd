#include "wigner/survey_protocol.hpp"

#include "wigner/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace wigner {

std::string_view to_string(DesignKind d) noexcept {
    return d == DesignKind::ThreeEnsemble ? "three" : "two";
}

std::string_view to_string(Branch b) noexcept {
    switch (b) {
        case Branch::BA: return "BA";
        case Branch::BC: return "BC";
        case Branch::CA: return "CA";
        case Branch::S1: return "S1";
        case Branch::S2: return "S2";
    }
    return "?";
}

Branch parse_branch(std::string_view token) {
    for (Branch b : {Branch::BA, Branch::BC, Branch::CA, Branch::S1, Branch::S2})
        if (token == to_string(b)) return b;
    throw std::invalid_argument("unknown branch '" + std::string(token) + "'");
}

namespace {

// Question asked second, given the branch and the first answer.
Var second_question_for(Branch b, Outcome first_answer) noexcept {
    switch (b) {
        case Branch::BA: return Var::A;
        case Branch::BC: return Var::C;
        case Branch::CA: return Var::A;
        case Branch::S1: return first_answer == Outcome::Plus ? Var::A : Var::C;
        case Branch::S2: return Var::A;
    }
    return Var::A;
}

Var first_question_for(Branch b) noexcept {
    return (b == Branch::CA || b == Branch::S2) ? Var::C : Var::B;
}

struct BranchBlock {
    Branch branch;
    std::size_t size;
};

std::vector<BranchBlock> blocks_for(const ProtocolDesign& design) {
    const std::size_t n = design.n_per_branch;
    if (design.kind == DesignKind::ThreeEnsemble)
        return {{Branch::BA, n}, {Branch::BC, n}, {Branch::CA, n}};
    return {{Branch::S1, 2 * n}, {Branch::S2, n}};
}

class AgentSimulator {
public:
    explicit AgentSimulator(const PopulationModel& pop) : pop_(pop) {}

    ResponseRecord operator()(Branch branch, rng::Stream& stream) const {
        ResponseRecord r{};
        r.branch = branch;
        r.first_question = first_question_for(branch);
        if (const auto* classical = std::get_if<ClassicalHiddenVariable>(&pop_)) {
            const SignTriple agent = sample_triple(classical->joint, stream);
            r.first_answer = agent[index(r.first_question)];
            r.second_question = second_question_for(branch, r.first_answer);
            r.second_answer = agent[index(r.second_question)];
            return r;
        }
        const auto& quantum = std::get<QuantumUnpolarized>(pop_);
        const BlochAngle first = quantum.questions[r.first_question];
        r.first_answer =
            sample_sequential(Unpolarized{}, std::span(&first, 1), stream, quantum.sampling).front();
        r.second_question = second_question_for(branch, r.first_answer);
        const BlochAngle second = quantum.questions[r.second_question];
        r.second_answer = sample_sequential(first.eigenstate(r.first_answer), std::span(&second, 1), stream).front();
        return r;
    }

private:
    const PopulationModel& pop_;
};

}  // namespace

std::optional<std::string> branch_violation(const ResponseRecord& r) {
    if (r.first_question == r.second_question) return "first and second question coincide";
    if (r.first_question != first_question_for(r.branch))
        return "branch " + std::string(to_string(r.branch)) + " must ask " +
               std::string(to_string(first_question_for(r.branch))) + " first";
    if (r.second_question != second_question_for(r.branch, r.first_answer))
        return "branch " + std::string(to_string(r.branch)) + " must ask " +
               std::string(to_string(second_question_for(r.branch, r.first_answer))) + " second";
    return std::nullopt;
}

double Count::ratio() const {
    if (trials == 0) throw EmptyConditioningBranch("empty conditioning branch");
    return static_cast<double>(successes) / static_cast<double>(trials);
}

std::string respondent_id(std::size_t index, std::size_t total) {
    std::size_t width = 6;
    for (std::size_t t = total; t >= 1000000; t /= 10) ++width;
    std::string digits = std::to_string(index);
    if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
    return "r" + digits;
}

ResponseDataset run_protocol(const PopulationModel& pop, const ProtocolDesign& design, std::uint64_t seed,
                             unsigned workers) {
    if (design.n_per_branch < 1) throw std::invalid_argument("n_per_branch must be at least 1");

    struct Slot {
        Branch branch;
        std::size_t index_in_branch;
    };
    std::vector<Slot> slots;
    for (const auto& block : blocks_for(design))
        for (std::size_t i = 0; i < block.size; ++i) slots.push_back({block.branch, i});

    ResponseDataset data;
    data.records.resize(slots.size());
    const AgentSimulator simulate(pop);
    const std::size_t total = slots.size();

    auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            rng::Stream stream = rng::named_stream(seed, to_string(slots[k].branch), slots[k].index_in_branch);
            ResponseRecord r = simulate(slots[k].branch, stream);
            r.respondent_id = respondent_id(k, total);
            data.records[k] = std::move(r);
        }
    };

    const std::size_t n_workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(total, 1));
    if (n_workers == 1) {
        run_range(0, total);
        return data;
    }
    {
        std::vector<std::jthread> pool;
        pool.reserve(n_workers);
        const std::size_t chunk = (total + n_workers - 1) / n_workers;
        for (std::size_t w = 0; w < n_workers; ++w) {
            const std::size_t begin = std::min(total, w * chunk);
            const std::size_t end = std::min(total, begin + chunk);
            pool.emplace_back(run_range, begin, end);
        }
    }
    return data;
}

std::pair<Outcome, Outcome> classical_answers(const SignTriple& agent, Var first, Var second) noexcept {
    return {agent[index(first)], agent[index(second)]};
}

FrequencyTable count_responses(const ResponseDataset& data) {
    if (data.records.empty()) throw std::invalid_argument("dataset is empty");
    FrequencyTable t;
    for (std::size_t row = 0; row < data.records.size(); ++row) {
        const ResponseRecord& r = data.records[row];
        if (auto why = branch_violation(r))
            throw std::invalid_argument("record " + r.respondent_id + ": " + *why);

        Count& first = t.first_answer_plus[index(r.first_question)];
        ++first.trials;
        if (r.first_answer == Outcome::Plus) ++first.successes;

        Count* target = nullptr;
        if (r.first_question == Var::B && r.first_answer == Outcome::Plus && r.second_question == Var::A)
            target = &t.a_given_b_plus;
        else if (r.first_question == Var::B && r.first_answer == Outcome::Minus && r.second_question == Var::C)
            target = &t.c_given_b_minus;
        else if (r.first_question == Var::C && r.first_answer == Outcome::Plus && r.second_question == Var::A)
            target = &t.a_given_c_plus;
        if (target == nullptr) continue;
        ++target->trials;
        if (r.second_answer == Outcome::Plus) ++target->successes;
    }
    return t;
}

FrequencyTable estimate_frequencies(const ResponseDataset& data) {
    FrequencyTable t = count_responses(data);
    frequency_ratios(t);
    return t;
}

CondTriple frequency_ratios(const FrequencyTable& table) {
    auto ratio = [](const Count& c, const char* name) {
        if (c.trials == 0) throw EmptyConditioningBranch(std::string("no agents in the conditioning event of ") + name);
        return c.ratio();
    };
    return CondTriple(ratio(table.a_given_b_plus, "nu(a=+1|b=+1)"), ratio(table.c_given_b_minus, "nu(c=+1|b=-1)"),
                      ratio(table.a_given_c_plus, "nu(a=+1|c=+1)"));
}

bool SymmetryReport::all_fair() const noexcept {
    return std::none_of(questions.begin(), questions.end(), [](const QuestionFairness& q) { return q.flagged; });
}

SymmetryReport check_symmetry(const FrequencyTable& table, double tolerance) {
    if (!(tolerance >= 0.0)) throw std::invalid_argument("symmetry tolerance must be non-negative");
    SymmetryReport report{tolerance, {}};
    for (Var v : kAllVars) {
        const Count& c = table.first_answer_plus[index(v)];
        if (c.trials == 0) continue;
        const double fraction = c.ratio();
        report.questions.push_back({v, c, fraction, std::abs(fraction - 0.5) > tolerance});
    }
    return report;
}

SymmetryReport check_symmetry(const ResponseDataset& data, double tolerance) {
    return check_symmetry(count_responses(data), tolerance);
}

std::vector<TriplePair> sample_correlated_pairs(const JointDistribution3& joint, std::size_t n,
                                                rng::Stream& stream) {
    std::vector<TriplePair> pairs;
    pairs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const SignTriple xi = sample_triple(joint, stream);
        pairs.emplace_back(xi, xi);
    }
    return pairs;
}

bool check_perfect_correlation(const std::vector<TriplePair>& pairs) noexcept {
    return std::all_of(pairs.begin(), pairs.end(), [](const TriplePair& p) { return p.first == p.second; });
}

}  // namespace wigner
