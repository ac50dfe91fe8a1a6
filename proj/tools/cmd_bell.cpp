// cmd-bell: build, analyze, classify and sample measurement-dependent
// hidden-variable models from the command line.
//
// Exit codes: 0 success, 1 invalid model, 2 verification failure,
// 64 malformed input, 65 bad parameter.

#include "CLI11.hpp"

#include "cmdbell/bell.hpp"
#include "cmdbell/classify.hpp"
#include "cmdbell/constraints.hpp"
#include "cmdbell/constructors.hpp"
#include "cmdbell/model_json.hpp"
#include "cmdbell/sampler.hpp"
#include "cmdbell/verification.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidModel = 1;
constexpr int kExitVerificationFailure = 2;
constexpr int kExitParseError = 64;
constexpr int kExitParameterError = 65;

std::ostream& out12(std::ostream& os) { return os << std::setprecision(12); }

int run_kernel_info(bool as_json, const std::string& csv_dir) {
    const cmdbell::ConstraintMatrix m = cmdbell::build_cmd_matrix();
    const cmdbell::ConstraintMatrix n = cmdbell::build_nosignal_matrix();
    const int rank_m = cmdbell::rank(m);
    const int rank_n = cmdbell::rank(n);
    const int null_m = cmdbell::kernel_basis(m).dimension();
    const int null_n = cmdbell::kernel_basis(n).dimension();
    const bool orth_m = m.rows_pairwise_orthogonal();
    const bool orth_n = n.rows_pairwise_orthogonal();

    if (!csv_dir.empty()) {
        for (const auto* matrix : {&m, &n}) {
            const std::string path = csv_dir + "/" + matrix->name + ".csv";
            std::ofstream file(path);
            if (!file)
                throw cmdbell::ParseError("cannot write '" + path + "'");
            cmdbell::write_csv(*matrix, file);
        }
    }

    const bool consistent =
        rank_m == 6 && null_m == 42 && rank_n == 7 && null_n == 41 && orth_m && orth_n;
    if (as_json) {
        nlohmann::json j;
        j["M"] = {{"rows", m.rows.size()}, {"rank", rank_m}, {"nullity", null_m},
                  {"orthogonal_rows", orth_m}};
        j["N"] = {{"rows", n.rows.size()}, {"rank", rank_n}, {"nullity", null_n},
                  {"orthogonal_rows", orth_n}};
        j["consistent"] = consistent;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "rank(M)=" << rank_m << " nullity=" << null_m << " rank(N)=" << rank_n
                  << " nullity=" << null_n << "\n";
        std::cout << "M rows pairwise orthogonal: " << (orth_m ? "yes" : "no") << "\n";
        std::cout << "N rows pairwise orthogonal: " << (orth_n ? "yes" : "no") << "\n";
        if (!csv_dir.empty())
            std::cout << "wrote " << csv_dir << "/M.csv and " << csv_dir << "/N.csv\n";
    }
    return consistent ? kExitOk : kExitVerificationFailure;
}

void print_classification(const cmdbell::Classification& c, bool as_json) {
    if (as_json) {
        std::cout << cmdbell::classification_to_json(c) << "\n";
        return;
    }
    std::cout << cmdbell::to_string(c.label) << "\n";
    out12(std::cout) << "in_ker_M: " << (c.in_ker_m ? "true" : "false")
                     << "  residual_M: " << c.residual_m << "\n"
                     << "in_ker_N: " << (c.in_ker_n ? "true" : "false")
                     << "  residual_N: " << c.residual_n << "\n";
}

int run_classify(const std::string& path, double tol, bool as_json) {
    const cmdbell::HVModel model = cmdbell::load_model_file(path);
    print_classification(cmdbell::classify(model, tol), as_json);
    return kExitOk;
}

int run_bell(const std::string& path, bool as_json) {
    const cmdbell::HVModel model = cmdbell::load_model_file(path);
    const cmdbell::BellReport report = cmdbell::make_bell_report(model);
    if (as_json) {
        std::cout << cmdbell::bell_report_to_json(report) << "\n";
        return kExitOk;
    }
    for (const auto& member : report.members) {
        out12(std::cout) << "w=(" << member.weights.w11 << "," << member.weights.w12 << ","
                         << member.weights.w21 << "," << member.weights.w22
                         << ")  S=" << member.bell_value << "  gamma=" << member.gamma << "\n";
    }
    out12(std::cout) << "max_bell_value: " << report.max_bell_value << "\n"
                     << "gamma_max: " << report.gamma_max << "\n"
                     << "hall_measure: " << report.hall_measure << "\n"
                     << "hall_bound: " << report.hall_bound << "\n";
    return kExitOk;
}

int run_construct(const std::string& kind, double epsilon, const cmdbell::BransAngles& angles,
                  std::uint64_t seed, double magnitude, const std::string& out_path,
                  bool as_json) {
    cmdbell::HVModel model;
    if (kind == "uniform")
        model = cmdbell::uniform_mi_model();
    else if (kind == "witness")
        model = cmdbell::signaling_cmd_witness(epsilon);
    else if (kind == "prbox")
        model = cmdbell::pr_box_model();
    else if (kind == "brans")
        model = cmdbell::brans_model(angles);
    else if (kind == "random-cmd")
        model = cmdbell::random_cmd_model(seed, magnitude);
    else if (kind == "random")
        model = cmdbell::random_model(seed, magnitude);
    else
        throw cmdbell::ParameterError(
            "unknown kind '" + kind +
            "' (expected uniform, witness, prbox, brans, random-cmd or random)");

    const cmdbell::Classification c = cmdbell::classify(model);
    const std::string text = cmdbell::model_to_json(model);
    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file)
            throw cmdbell::ParseError("cannot write model file '" + out_path + "'");
        file << text << "\n";
        print_classification(c, as_json);
    } else {
        // keep stdout a clean model document; the summary goes to stderr
        std::cout << text << "\n";
        std::cerr << cmdbell::to_string(c.label) << "\n";
    }
    return kExitOk;
}

int run_sample(const std::string& path, const std::string& pair_name, std::uint64_t shots,
               std::uint64_t seed, unsigned chunks, bool as_json) {
    const cmdbell::HVModel model = cmdbell::load_model_file(path);
    const cmdbell::SettingPair pair = cmdbell::pair_from_string(pair_name);
    const cmdbell::RunResult run = cmdbell::sample_run(model, pair, shots, seed, chunks);
    const cmdbell::Estimate estimate = cmdbell::estimate_correlation(run);
    if (as_json) {
        nlohmann::json j = nlohmann::json::parse(cmdbell::run_result_to_json(run));
        j["correlation"] = estimate.value;
        j["std_error"] = estimate.std_error;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << cmdbell::run_result_to_json(run) << "\n";
    out12(std::cout) << "correlation: " << estimate.value << " +- " << estimate.std_error
                     << "\n";
    return kExitOk;
}

int run_verify(bool as_json, std::uint64_t seed) {
    cmdbell::SuiteOptions options;
    options.seed = seed;
    const std::vector<cmdbell::CheckResult> results = cmdbell::run_acceptance_suite(options);
    if (as_json) {
        std::cout << cmdbell::suite_to_json(results) << "\n";
    } else {
        for (const cmdbell::CheckResult& r : results)
            std::cout << cmdbell::format_check_line(r) << "\n";
        std::cout << (cmdbell::all_passed(results) ? "all checks passed"
                                                   : "verification FAILED")
                  << "\n";
    }
    return cmdbell::all_passed(results) ? kExitOk : kExitVerificationFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"constraint-kernel analysis of measurement-dependent hidden-variable models "
                 "(two parties, two settings, two outcomes)"};
    app.require_subcommand(1);
    std::function<int()> action;

    // kernel-info
    {
        auto* cmd = app.add_subcommand("kernel-info",
                                       "ranks, nullities and orthogonality of M and N");
        auto json = std::make_shared<bool>(false);
        auto csv = std::make_shared<std::string>();
        cmd->add_flag("--json", *json, "machine-readable output");
        cmd->add_option("--export-csv", *csv, "directory for M.csv and N.csv");
        cmd->callback([&action, json, csv] {
            action = [json, csv] { return run_kernel_info(*json, *csv); };
        });
    }

    // classify
    {
        auto* cmd = app.add_subcommand("classify", "case label S1..S4 of a model file");
        auto path = std::make_shared<std::string>();
        auto tol = std::make_shared<double>(1e-9);
        auto json = std::make_shared<bool>(false);
        cmd->add_option("model", *path, "model JSON file")->required();
        cmd->add_option("--tol", *tol, "kernel residual tolerance (default 1e-9)");
        cmd->add_flag("--json", *json, "machine-readable output");
        cmd->callback([&action, path, tol, json] {
            action = [path, tol, json] { return run_classify(*path, *tol, *json); };
        });
    }

    // bell
    {
        auto* cmd = app.add_subcommand("bell",
                                       "CHSH values, gamma, gamma_max and the L1 bound");
        auto path = std::make_shared<std::string>();
        auto json = std::make_shared<bool>(false);
        cmd->add_option("model", *path, "model JSON file")->required();
        cmd->add_flag("--json", *json, "machine-readable output");
        cmd->callback([&action, path, json] {
            action = [path, json] { return run_bell(*path, *json); };
        });
    }

    // construct
    {
        auto* cmd = app.add_subcommand("construct", "write a landmark or random model");
        auto kind = std::make_shared<std::string>();
        auto epsilon = std::make_shared<double>(1.0 / 16.0);
        auto angles = std::make_shared<cmdbell::BransAngles>(cmdbell::standard_brans_angles());
        auto seed = std::make_shared<std::uint64_t>(12345);
        auto magnitude = std::make_shared<double>(1.0 / 32.0);
        auto out_path = std::make_shared<std::string>();
        auto json = std::make_shared<bool>(false);
        cmd->add_option("kind", *kind,
                        "uniform | witness | prbox | brans | random-cmd | random")
            ->required();
        cmd->add_option("--epsilon", *epsilon, "witness strength, in [0, 1/16]");
        cmd->add_option("--theta11", angles->theta11, "angle (rad) for pair A1B1");
        cmd->add_option("--theta12", angles->theta12, "angle (rad) for pair A1B2");
        cmd->add_option("--theta21", angles->theta21, "angle (rad) for pair A2B1");
        cmd->add_option("--theta22", angles->theta22, "angle (rad) for pair A2B2");
        cmd->add_option("--seed", *seed, "random-model seed");
        cmd->add_option("--magnitude", *magnitude, "max xi entry for random models");
        cmd->add_option("--out", *out_path, "output model file (default: stdout)");
        cmd->add_flag("--json", *json, "machine-readable classification echo");
        cmd->callback([&action, kind, epsilon, angles, seed, magnitude, out_path, json] {
            action = [kind, epsilon, angles, seed, magnitude, out_path, json] {
                return run_construct(*kind, *epsilon, *angles, *seed, *magnitude, *out_path,
                                     *json);
            };
        });
    }

    // sample
    {
        auto* cmd = app.add_subcommand("sample", "Monte Carlo run on one setting pair");
        auto path = std::make_shared<std::string>();
        auto pair = std::make_shared<std::string>("A1B1");
        auto shots = std::make_shared<std::uint64_t>(100000);
        auto seed = std::make_shared<std::uint64_t>(12345);
        auto chunks = std::make_shared<unsigned>(0);
        auto json = std::make_shared<bool>(false);
        cmd->add_option("model", *path, "model JSON file")->required();
        cmd->add_option("--pair", *pair, "setting pair (A1B1, A1B2, A2B1, A2B2)");
        cmd->add_option("--shots", *shots, "number of shots (default 100000)");
        cmd->add_option("--seed", *seed, "stream seed");
        cmd->add_option("--chunks", *chunks, "parallel chunks (0 = auto); counts are identical "
                                             "for every choice");
        cmd->add_flag("--json", *json, "machine-readable output");
        cmd->callback([&action, path, pair, shots, seed, chunks, json] {
            action = [path, pair, shots, seed, chunks, json] {
                return run_sample(*path, *pair, *shots, *seed, *chunks, *json);
            };
        });
    }

    // verify
    {
        auto* cmd = app.add_subcommand("verify", "run the acceptance suite");
        auto json = std::make_shared<bool>(false);
        auto seed = std::make_shared<std::uint64_t>(cmdbell::SuiteOptions{}.seed);
        cmd->add_flag("--json", *json, "machine-readable output");
        cmd->add_option("--seed", *seed, "suite seed (checks are deterministic given it)");
        cmd->callback([&action, json, seed] {
            action = [json, seed] { return run_verify(*json, *seed); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParameterError;
    }

    try {
        return action ? action() : kExitParameterError;
    } catch (const cmdbell::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const cmdbell::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParameterError;
    } catch (const cmdbell::ModelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidModel;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
