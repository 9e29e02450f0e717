// synthdata CLI: config-driven synthetic tabular data generation, GAN
// training, and fidelity evaluation.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "synthdata/pipeline.hpp"
#include "synthdata/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"synthetic tabular data generation and fidelity evaluation"};
    app.set_version_flag("--version", std::string("synthdata ") + synthdata::kVersion);
    app.require_subcommand(0, 1);

    std::string config_path;
    std::string real_path;
    std::string synth_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed_override;

    auto* generate = app.add_subcommand("generate", "generate a synthetic dataset from a config");
    generate->add_option("--config", config_path, "run config (JSON)")->required();
    generate->add_option("--seed", seed_override, "override the config seed");

    auto* train = app.add_subcommand("train-gan", "train a GAN and persist the model");
    train->add_option("--config", config_path, "run config (JSON, method \"gan\")")->required();
    train->add_option("--seed", seed_override, "override the config seed");

    auto* evaluate = app.add_subcommand("evaluate", "compare a synthetic dataset to a reference");
    evaluate->add_option("--real", real_path, "reference dataset (CSV)")->required();
    evaluate->add_option("--synth", synth_path, "synthetic dataset (CSV)")->required();
    evaluate->add_option("--out", out_dir, "report output directory")->required();
    evaluate->add_option("--seed", seed_override, "override the scatter-sample seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (generate->parsed()) {
        return synthdata::pipeline::cmd_generate(config_path, seed_override);
    }
    if (train->parsed()) {
        return synthdata::pipeline::cmd_train_gan(config_path, seed_override);
    }
    if (evaluate->parsed()) {
        return synthdata::pipeline::cmd_evaluate(real_path, synth_path, out_dir, seed_override);
    }
    std::cerr << "error: a subcommand is required (generate, train-gan, evaluate)\n";
    return 2;
}
