// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tricoil/cli.hpp"
#include "tricoil/error.hpp"

namespace {

struct Overrides {
    std::string config_path;
    std::string out;
    double alpha = 0.0;
    double delta = 0.0;
    int angles = 0;
    long long seed = 0;
    std::string frame_mode;
    std::string formula_mode;
};

} // namespace

int main(int argc, char** argv)
{
    using namespace tricoil;

    CLI::App app{"Tri-directional coil magnetic-induction link optimizer"};
    app.require_subcommand(1);

    Overrides ov;
    cli::RunOptions opts;
    app.add_option("--config", ov.config_path, "JSON scenario configuration")->check(CLI::ExistingFile);
    auto* out_opt = app.add_option("--out", ov.out, "Output directory (TRICOIL_OUT overrides)");
    auto* alpha_opt = app.add_option("--alpha", ov.alpha, "Receiver rotation angle, rad");
    auto* delta_opt = app.add_option("--delta", ov.delta, "Convergence threshold, dB");
    auto* angles_opt = app.add_option("--angles", ov.angles, "Number of sweep angles");
    auto* seed_opt = app.add_option("--seed", ov.seed, "Oracle seed");
    auto* frame_opt = app.add_option("--frame-mode", ov.frame_mode, "Receiver frame construction")
                          ->check(CLI::IsMember({"orthonormal", "paper"}));
    auto* formula_opt = app.add_option("--formula-mode", ov.formula_mode, "Coupling formula")
                            ->check(CLI::IsMember({"canonical", "paper"}));
    app.add_flag("--plot", opts.plot, "Also render SVG plots");
    app.fallthrough();

    app.add_subcommand("optimize", "Joint optimization trace at one angle (trace.csv)");
    app.add_subcommand("sweep-angle", "All strategies over the angle grid (sweep.csv)");
    app.add_subcommand("sweep-threshold", "Mean reduction and iterations per threshold (threshold.csv)");
    app.add_subcommand("oracle", "Brute-force checks of the closed forms (oracle.csv)");
    app.add_subcommand("mutual", "Mutual-inductance matrix at one angle (mutual.csv)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return cli::kExitValidation;
    }

    ScenarioConfig cfg;
    try {
        if (!ov.config_path.empty()) {
            std::ifstream f(ov.config_path, std::ios::binary);
            std::stringstream text;
            text << f.rdbuf();
            cfg = parse_config(text.str());
        }
        if (*out_opt)
            cfg.output_dir = ov.out;
        if (const char* env = std::getenv("TRICOIL_OUT"); env && *env)
            cfg.output_dir = env;
        if (*alpha_opt)
            cfg.alpha = ov.alpha;
        if (*delta_opt)
            cfg.delta = ov.delta;
        if (*angles_opt)
            cfg.angles = ov.angles;
        if (*seed_opt) {
            if (ov.seed < 0)
                throw ValidationError("seed", "must be non-negative");
            cfg.seed = static_cast<std::uint64_t>(ov.seed);
        }
        if (*frame_opt)
            cfg.frame_mode = frame_mode_from_string(ov.frame_mode);
        if (*formula_opt)
            cfg.formula_mode = formula_mode_from_string(ov.formula_mode);
        cfg.validate();
    } catch (const ParseError& e) {
        std::cerr << ov.config_path << ":" << e.line() << ": " << e.what() << '\n';
        return cli::kExitValidation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kExitValidation;
    }

    const std::string subcommand = app.get_subcommands().front()->get_name();
    return cli::run(subcommand, cfg, opts, std::cout);
}
