#include "echarge/cli.hpp"

#include "echarge/charge.hpp"
#include "echarge/errors.hpp"
#include "echarge/generators.hpp"
#include "echarge/io.hpp"
#include "echarge/parallel.hpp"

#include "CLI11.hpp"

#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <sstream>

namespace echarge::cli {

namespace {
    std::string read_file(const std::string &path) {
        std::ifstream in(path, std::ios::binary);
        if(!in) throw InputError(fmt::format("cannot open input file '{}'", path));
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    void write_output(const std::string &path, const std::string &content, std::ostream &out) {
        if(path.empty() || path == "-") {
            out << content;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if(!f) throw InputError(fmt::format("cannot open output file '{}'", path));
        f << content;
        if(!f) throw Error(fmt::format("failed writing '{}'", path));
    }

    struct Globals {
        std::string   tolerance_profile = "default";
        std::uint64_t seed              = 0;

        [[nodiscard]] Tolerances tolerances() const { return tolerance_profile == "strict" ? Tolerances::strict() : Tolerances::defaults(); }
    };

    std::vector<double> probs_or_uniform(const std::vector<double> &probs, std::size_t n) { return probs.empty() ? uniform_probs(n) : probs; }
} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entanglement-charge analysis of bipartite state ensembles", "echarge"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--tolerance-profile", g.tolerance_profile, "Numeric tolerance profile")->check(CLI::IsMember({"default", "strict"}));
    app.add_option("--seed", g.seed, "Optimizer seed");

    // validate
    auto       *validate = app.add_subcommand("validate", "Parse and validate an ensemble file");
    std::string validate_path;
    validate->add_option("input", validate_path, "Ensemble file")->required();

    // analyze
    auto       *analyze_cmd = app.add_subcommand("analyze", "Bound the entanglement charge of an ensemble file");
    std::string analyze_path;
    std::string access_mode = "off";
    std::string format      = "text";
    int         restarts    = 8;
    int         max_iters   = 500;
    int         outcomes    = 0;
    analyze_cmd->add_option("input", analyze_path, "Ensemble file")->required();
    analyze_cmd->add_option("--accessible-info", access_mode, "Estimate the accessible information")->check(CLI::IsMember({"off", "estimate"}));
    analyze_cmd->add_option("--restarts", restarts, "Optimizer restarts")->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--max-iters", max_iters, "Optimizer sweeps per restart")->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--outcomes", outcomes, "POVM outcomes (0: ensemble size)")->check(CLI::NonNegativeNumber);
    analyze_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}));

    // generate
    auto               *generate = app.add_subcommand("generate", "Write a canonical ensemble file");
    std::string         family;
    long                gbell_d = 2, dA = 2, dB = 2;
    double              theta   = 0.0;
    std::vector<double> gen_probs;
    std::string         gen_output;
    generate->add_option("family", family, "bell | gbell | product | rotated")->required()->check(CLI::IsMember({"bell", "gbell", "product", "rotated"}));
    generate->add_option("--d", gbell_d, "Local dimension for gbell");
    generate->add_option("--dA", dA, "Alice's dimension for product");
    generate->add_option("--dB", dB, "Bob's dimension for product");
    generate->add_option("--theta", theta, "Rotation angle in radians for rotated");
    generate->add_option("--probs", gen_probs, "Comma-separated probabilities (default uniform)")->delimiter(',');
    generate->add_option("-o,--output", gen_output, "Output path (default stdout)");

    // sweep
    auto               *sweep = app.add_subcommand("sweep", "Sweep the rotated family over theta and write CSV");
    std::string         sweep_family;
    double              theta_min = 0.0, theta_max = 0.0;
    int                 steps = 1;
    std::vector<double> sweep_probs;
    std::string         sweep_output;
    double              gate_cost = 0.0;
    sweep->add_option("family", sweep_family, "rotated")->required()->check(CLI::IsMember({"rotated"}));
    sweep->add_option("--theta-min", theta_min, "First angle (radians)")->required();
    sweep->add_option("--theta-max", theta_max, "Last angle (radians)")->required();
    sweep->add_option("--steps", steps, "Number of angles");
    sweep->add_option("--probs", sweep_probs, "Comma-separated probabilities over 4 (default uniform)")->delimiter(',');
    auto *gate_opt = sweep->add_option("--gate-cost", gate_cost, "Externally known entanglement cost of U(theta), in ebits");
    sweep->add_option("-o,--output", sweep_output, "Output path (default stdout)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if(!rev.empty()) rev.pop_back(); // program name
    try {
        app.parse(rev);
    } catch(const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kSuccess;
    } catch(const CLI::CallForAllHelp &e) {
        app.exit(e, out, err);
        return kSuccess;
    } catch(const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kInputError;
    }

    try {
        const Tolerances tol = g.tolerances();
        if(*validate) {
            const auto e = io::parse_ensemble(read_file(validate_path), tol);
            out << "valid: " << io::structure_summary(e, classify_structure(e, tol)) << "\n";
            return kSuccess;
        }
        if(*analyze_cmd) {
            const auto     e = io::parse_ensemble(read_file(analyze_path), tol);
            AnalyzeOptions opts;
            std::vector<std::string> extra_notes;
            if(access_mode == "estimate") {
                OptimizerConfig cfg;
                cfg.restarts  = restarts;
                cfg.max_iters = max_iters;
                cfg.outcomes  = outcomes;
                cfg.seed      = g.seed;
                auto est      = estimate_accessible_info(e, cfg, tol);
                opts.accessible_info = est.interval;
                extra_notes          = est.notes;
            }
            auto report = analyze(e, opts, tol);
            report.notes.insert(report.notes.end(), extra_notes.begin(), extra_notes.end());
            const io::ReportContext ctx{analyze_path, tol, g.tolerance_profile, g.seed};
            if(format == "structured")
                out << io::report_json(e, report, ctx).dump(2) << "\n";
            else
                out << io::report_text(e, report, ctx);
            return kSuccess;
        }
        if(*generate) {
            std::optional<Ensemble> e;
            if(family == "bell") e = bell_basis(probs_or_uniform(gen_probs, 4), tol);
            else if(family == "gbell") e = generalized_bell_basis(gbell_d, probs_or_uniform(gen_probs, static_cast<std::size_t>(std::max(gbell_d * gbell_d, 1L))), tol);
            else if(family == "product") e = product_basis(dA, dB, probs_or_uniform(gen_probs, static_cast<std::size_t>(std::max(dA * dB, 1L))), tol);
            else e = rotated_basis(theta, probs_or_uniform(gen_probs, 4), tol);
            const auto summary = io::structure_summary(*e, classify_structure(*e, tol));
            write_output(gen_output, io::write_ensemble(*e), out);
            (gen_output.empty() || gen_output == "-" ? err : out) << summary << "\n";
            return kSuccess;
        }
        if(*sweep) {
            const auto grid  = theta_grid(theta_min, theta_max, steps);
            const auto probs = probs_or_uniform(sweep_probs, 4);
            const auto rows  = sweep_rotated(grid, probs, gate_opt->count() ? std::optional<double>(gate_cost) : std::nullopt, tol);
            write_output(sweep_output, io::sweep_csv(rows), out);
            return kSuccess;
        }
    } catch(const InputError &e) {
        err << "echarge: " << e.what() << "\n";
        return kInputError;
    } catch(const std::exception &e) {
        err << "echarge: internal error: " << e.what() << "\n";
        return kInternalError;
    }
    return kInternalError;
}

} // namespace echarge::cli
