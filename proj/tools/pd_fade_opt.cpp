#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pdfade/config.hpp"
#include "pdfade/errors.hpp"
#include "pdfade/outage.hpp"
#include "pdfade/run.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Rate-split analysis for hybrid erasure/channel coding over "
                 "proportional-diversity block-Rayleigh fading"};
    app.require_subcommand(1);

    std::string config_path, out_path, method_name;
    std::uint64_t seed = 0;
    long trials = 0;

    const char* commands[] = {"point",      "optimize",   "sweep-rate",
                              "sweep-power", "trajectory", "validate-mc"};
    const char* descriptions[] = {
        "evaluate one rate split",
        "search the admissible grid for the best rate split",
        "optimal split as the overall rate falls",
        "rate sweep repeated across power levels",
        "fixed erasure-rate incremental-redundancy trajectory",
        "compare the Gaussian outage approximation against Monte Carlo"};
    for (int i = 0; i < 6; ++i) {
        CLI::App* sub = app.add_subcommand(commands[i], descriptions[i]);
        sub->add_option("--config", config_path, "key = value config file")
            ->required();
        sub->add_option("--out", out_path, "CSV output path (default: stdout)");
        sub->add_option("--seed", seed, "override the config seed");
        sub->add_option("--trials", trials, "override the Monte Carlo trial count");
        sub->add_option("--method", method_name,
                        "override the config method (Approx1..Approx4, MonteCarlo)");
    }

    CLI11_PARSE(app, argc, argv);
    CLI::App* sub = app.get_subcommands().front();

    try {
        pdfade::cli::RunConfig config =
            pdfade::cli::parse_config_file(config_path, sub->get_name());
        if (sub->count("--out")) config.out_path = out_path;
        if (sub->count("--seed")) config.seed = seed;
        if (sub->count("--trials")) {
            if (trials < 1) throw pdfade::config_error("--trials must be >= 1");
            config.trials = trials;
        }
        if (sub->count("--method"))
            config.method = pdfade::outage::parse_method(method_name);
        for (const auto& warning : config.warnings)
            std::cerr << "warning: " << warning << "\n";
        return pdfade::cli::run(config, std::cerr, std::cout);
    } catch (const pdfade::io_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
}
