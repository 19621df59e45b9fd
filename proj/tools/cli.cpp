#include "wigner/cli.hpp"

#include "wigner/dataset_io.hpp"
#include "wigner/errors.hpp"
#include "wigner/inference_stats.hpp"
#include "wigner/violation_search.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace wigner::cli {
namespace {

struct Options {
    // simulate
    std::string model;
    std::string angles;
    std::string atoms;
    bool symmetrize = false;
    std::string design = "three";
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string out_path;
    unsigned workers = 1;
    std::string sampling = "coin";
    // test
    std::string input_path;
    double alpha = 0.05;
    std::string report_path;
    double symmetry_tol = 0.05;
    // search
    std::size_t grid = 360;
    double refine_tol = 1e-9;
    std::size_t floor_samples = 0;
    // interference
    double p = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
};

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_atoms(const std::string& text) {
    std::vector<double> w;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size()) throw InvalidInput("bad atom weight '" + token + "'");
        w.push_back(v);
    }
    if (w.size() != kAtoms) throw InvalidInput("--atoms needs 8 comma-separated weights");
    return w;
}

void write_file(const std::string& path, const std::string& content, std::ostream& out) {
    if (path == "-") {
        out << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot open '" + path + "' for writing");
    f << content;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int do_simulate(const Options& o, std::ostream& out) {
    RunConfig config;
    config.command = Command::Simulate;
    config.seed = o.seed;
    config.output_path = o.out_path;
    config.design = {o.design == "two" ? DesignKind::TwoEnsemble : DesignKind::ThreeEnsemble, o.n};
    if (o.n < 1) throw InvalidInput("--n must be at least 1");

    PopulationModel pop = ClassicalHiddenVariable{};
    if (o.model == "quantum") {
        if (o.angles.empty()) throw InvalidInput("--model quantum needs --angles a,b,c");
        config.angles = parse_question_triple(o.angles);
        pop = QuantumUnpolarized{*config.angles, o.sampling == "angle" ? UnpolarizedSampling::UniformAngle
                                                                       : UnpolarizedSampling::FairCoin};
    } else {
        if (o.atoms.empty()) throw InvalidInput("--model classical needs --atoms w1,...,w8");
        config.atoms = parse_atoms(o.atoms);
        config.symmetrize = o.symmetrize;
        auto joint = JointDistribution3::normalized(std::span<const double, kAtoms>(config.atoms->data(), kAtoms));
        pop = ClassicalHiddenVariable{o.symmetrize ? symmetrize(joint) : joint};
    }
    const ResponseDataset data = run_protocol(pop, config.design, config.seed, o.workers);
    write_file(o.out_path, write_dataset(data), out);
    if (o.out_path != "-")
        out << "wrote " << data.records.size() << " records to " << o.out_path << " (seed " << o.seed << ")\n";
    return kExitOk;
}

int do_test(const Options& o, std::ostream& out, std::ostream& err) {
    const ResponseDataset data = parse_dataset(read_file(o.input_path));
    RunConfig config;
    config.command = Command::Test;
    config.seed = o.seed;
    config.alpha = o.alpha;
    config.symmetry_tolerance = o.symmetry_tol;
    config.input_path = o.input_path;
    config.output_path = o.report_path;
    config.design = infer_design(data);

    const FrequencyTable table = estimate_frequencies(data);
    const TestResult test = violation_test_or_degenerate(table, o.alpha);
    const SymmetryReport symmetry = check_symmetry(table, o.symmetry_tol);
    const auto report = emit_report(test, table, symmetry, config);
    const std::string text = report.dump(2) + "\n";
    if (o.report_path.empty())
        out << text;
    else
        write_file(o.report_path, text, out);
    if (!symmetry.all_fair()) err << "warning: some questions do not have fair first-answer marginals\n";
    if (o.report_path != "-" && !o.report_path.empty()) out << verdict(test) << "\n";
    return test.degenerate ? kExitInconclusive : kExitOk;
}

int do_search(const Options& o, std::ostream& out) {
    const SearchResult r = maximize_quantum_violation(o.grid, o.refine_tol, SearchSpace::Full, o.workers);
    nlohmann::ordered_json j;
    j["best_angles"] = {r.best_angles.a.radians(), r.best_angles.b.radians(), r.best_angles.c.radians()};
    j["best_margin"] = r.best_margin;
    j["grid_margin"] = r.grid_margin;
    j["evaluations"] = r.evaluations;
    j["refinement_tolerance"] = r.refinement_tolerance;
    if (o.floor_samples > 0) {
        rng::Stream stream = rng::named_stream(o.seed, "classical-floor");
        const ClassicalFloor floor = classical_margin_floor(o.floor_samples, stream);
        j["classical_floor"] = floor.floor;
        j["classical_samples"] = floor.evaluated;
        j["classical_skipped"] = floor.skipped;
        j["gap"] = floor.floor - r.best_margin;
        j["seed"] = o.seed;
    }
    out << j.dump(2) << "\n";
    return kExitOk;
}

int do_interference(const Options& o, std::ostream& out) {
    const InterferenceResult r = interference_coefficient(o.p, o.p1, o.p2);
    nlohmann::ordered_json j;
    j["p"] = o.p;
    j["p1"] = o.p1;
    j["p2"] = o.p2;
    j["coefficient"] = r.coefficient;
    j["regime"] = to_string(r.regime);
    out << j.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Classical vs quantum-like response analysis via Wigner-type inequalities", "wigner"};
    app.require_subcommand(1);

    auto* sim = app.add_subcommand("simulate", "simulate a survey and write the response CSV");
    sim->add_option("--model", o.model, "population model")->required()->check(CLI::IsMember({"quantum", "classical"}));
    sim->add_option("--angles", o.angles, "question angles a,b,c in radians");
    sim->add_option("--atoms", o.atoms, "8 joint weights in order +++,++-,+-+,+--,-++,-+-,--+,---");
    sim->add_flag("--symmetrize", o.symmetrize, "symmetrize the classical joint");
    sim->add_option("--design", o.design, "protocol design")->check(CLI::IsMember({"three", "two"}));
    sim->add_option("--n", o.n, "agents per branch")->required();
    sim->add_option("--seed", o.seed, "root seed")->required();
    sim->add_option("--out", o.out_path, "output CSV ('-' for stdout)")->required();
    sim->add_option("--workers", o.workers, "simulation threads")->check(CLI::Range(1u, 1024u));
    sim->add_option("--sampling", o.sampling, "unpolarized sampling path")->check(CLI::IsMember({"coin", "angle"}));

    auto* test = app.add_subcommand("test", "test a response CSV for conditional Wigner violation");
    test->add_option("file", o.input_path, "response CSV")->required();
    test->add_option("--alpha", o.alpha, "significance level")->check(CLI::Range(0.0, 1.0));
    test->add_option("--report", o.report_path, "JSON report path ('-' or omitted for stdout)");
    test->add_option("--seed", o.seed, "seed recorded in the report");
    test->add_option("--symmetry-tol", o.symmetry_tol, "fair-marginal tolerance");

    auto* search = app.add_subcommand("search", "find question angles maximizing the violation");
    search->add_option("--grid", o.grid, "grid steps per axis")->check(CLI::Range(std::size_t{8}, std::size_t{100000}));
    search->add_option("--refine-tol", o.refine_tol, "pattern search step tolerance");
    search->add_option("--floor-samples", o.floor_samples, "classical floor Dirichlet samples");
    search->add_option("--seed", o.seed, "seed for the classical floor");
    search->add_option("--workers", o.workers, "grid threads")->check(CLI::Range(1u, 1024u));

    auto* interference = app.add_subcommand("interference", "interference coefficient from P, P1, P2");
    interference->add_option("--p", o.p, "observed probability")->required();
    interference->add_option("--p1", o.p1, "first alternative")->required();
    interference->add_option("--p2", o.p2, "second alternative")->required();

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("wigner");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    try {
        if (sim->parsed()) return do_simulate(o, out);
        if (test->parsed()) return do_test(o, out, err);
        if (search->parsed()) return do_search(o, out);
        return do_interference(o, out);
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const DuplicateRespondent& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const EmptyConditioningBranch& e) {
        err << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const DegenerateAlternatives& e) {
        err << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}

}  // namespace wigner::cli
