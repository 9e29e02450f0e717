#pragma once

// Config-driven pipeline behind the CLI: JSON run configs, the three
// commands (generate, train-gan, evaluate), manifest emission, and the
// exit-code convention (0 success, 1 runtime/domain failure, 2 usage/config
// failure). Every failure path prints a single line starting with "error: "
// to stderr.
//
// A run config is a JSON object:
//   {
//     "method": "multivariate" | "bootstrap" | "copula" | "abm" | "gan",
//     "seed": 42,
//     "input": "real.csv",        // required by bootstrap, gan, abm from_column
//     "output": "out/data.csv",   // dataset path (generate) or model path (train-gan)
//     "<method>": { ... }         // exactly one method block, matching "method"
//   }
// Manifests written next to each output echo the fully resolved config under
// a "config" key and can themselves be passed back via --config.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "synthdata/dataset.hpp"
#include "synthdata/evaluation.hpp"
#include "synthdata/gan.hpp"
#include "synthdata/gen_abm.hpp"
#include "synthdata/gen_statistical.hpp"
#include "synthdata/svg_report.hpp"
#include "synthdata/version.hpp"

namespace synthdata::pipeline {

/// Anything wrong with the config document itself (exit code 2).
class ConfigError : public Error {
public:
    using Error::Error;
};

struct CopulaBlock {
    CopulaConfig cfg;
    bool scale_to_100 = false;
};

struct AbmBlock {
    std::size_t n_agents = 10000;
    std::vector<std::string> metric_names = default_metric_names();
    double sigma = 0.1;
    bool from_column = false;
    std::string column;   // when from_column
    double lo = 40.0;     // uniform source range
    double hi = 95.0;
};

struct GanBlock {
    GanConfig cfg;
    std::size_t n_samples = 10000;
    std::optional<std::string> model_output;
};

struct RunConfig {
    std::string method;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::optional<std::string> input;
    std::string output;
    std::optional<std::string> report_dir;

    std::optional<MultivariateConfig> multivariate;
    std::optional<BootstrapConfig> bootstrap;
    std::optional<CopulaBlock> copula;
    std::optional<AbmBlock> abm;
    std::optional<GanBlock> gan;
};

namespace detail {

using nlohmann::json;

inline const char* kMethods[] = {"multivariate", "bootstrap", "copula", "abm", "gan"};

inline void require_keys(const json& obj, const std::vector<std::string>& allowed,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool ok = false;
        for (const auto& a : allowed) ok = ok || key == a;
        if (!ok) {
            throw ConfigError("config: unknown field \"" + key + "\" in " + where);
        }
    }
}

template <typename T>
inline T get_field(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) {
        throw ConfigError("config: missing required field \"" + key + "\" in " + where);
    }
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError("config: field \"" + key + "\" in " + where + " has the wrong type");
    }
}

template <typename T>
inline T get_field_or(const json& obj, const std::string& key, const std::string& where,
                      T fallback) {
    if (!obj.contains(key)) return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError("config: field \"" + key + "\" in " + where + " has the wrong type");
    }
}

inline CorrelationMatrix parse_correlations(const json& rows,
                                            const std::vector<std::string>& labels,
                                            const std::string& where) {
    if (!rows.is_array() || rows.size() != labels.size()) {
        throw ConfigError("config: \"" + where + "\" must be a " +
                          std::to_string(labels.size()) + "x" + std::to_string(labels.size()) +
                          " matrix");
    }
    Matrix m(labels.size(), labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!rows.at(i).is_array() || rows.at(i).size() != labels.size()) {
            throw ConfigError("config: row " + std::to_string(i) + " of \"" + where +
                              "\" has the wrong length");
        }
        for (std::size_t j = 0; j < labels.size(); ++j) {
            try {
                m(i, j) = rows.at(i).at(j).get<double>();
            } catch (const json::exception&) {
                throw ConfigError("config: non-numeric entry in \"" + where + "\"");
            }
        }
    }
    return CorrelationMatrix{labels, std::move(m)};
}

inline const std::vector<std::string>& default_labels() {
    return default_metric_names();
}

inline MultivariateConfig parse_multivariate(const json& block) {
    require_keys(block,
                 {"labels", "means", "stds", "correlations", "n", "jitter_repair",
                  "jitter_eps"},
                 "\"multivariate\"");
    MultivariateConfig cfg;
    cfg.labels = get_field_or<std::vector<std::string>>(block, "labels", "\"multivariate\"",
                                                        default_labels());
    cfg.means = get_field_or<std::vector<double>>(block, "means", "\"multivariate\"",
                                                  {70.0, 65.0, 60.0});
    cfg.stds = get_field_or<std::vector<double>>(block, "stds", "\"multivariate\"",
                                                 {10.0, 12.0, 9.0});
    if (block.contains("correlations")) {
        cfg.target_corr = parse_correlations(block.at("correlations"), cfg.labels,
                                             "multivariate.correlations");
    } else {
        cfg.target_corr = make_correlation(
            cfg.labels, {{1.0, 0.8, 0.5}, {0.8, 1.0, 0.6}, {0.5, 0.6, 1.0}});
    }
    cfg.n = get_field_or<std::size_t>(block, "n", "\"multivariate\"", 10000);
    cfg.jitter_repair = get_field_or<bool>(block, "jitter_repair", "\"multivariate\"", false);
    cfg.jitter_eps = get_field_or<double>(block, "jitter_eps", "\"multivariate\"", 1e-8);
    if (cfg.means.size() != cfg.labels.size() || cfg.stds.size() != cfg.labels.size()) {
        throw ConfigError("config: multivariate labels/means/stds lengths disagree");
    }
    return cfg;
}

inline BootstrapConfig parse_bootstrap(const json& block) {
    require_keys(block, {"n_out", "mode", "noise"}, "\"bootstrap\"");
    BootstrapConfig cfg;
    cfg.n_out = get_field_or<std::size_t>(block, "n_out", "\"bootstrap\"", 10000);
    const std::string mode =
        get_field_or<std::string>(block, "mode", "\"bootstrap\"", "independent");
    if (mode == "independent") {
        cfg.mode = BootstrapMode::independent;
    } else if (mode == "joint") {
        cfg.mode = BootstrapMode::joint;
    } else {
        throw ConfigError("config: bootstrap.mode must be \"independent\" or \"joint\"");
    }
    if (block.contains("noise")) {
        const json& noise = block.at("noise");
        require_keys(noise, {"sigma", "fraction_of_std"}, "\"bootstrap.noise\"");
        if (noise.contains("sigma") == noise.contains("fraction_of_std")) {
            throw ConfigError(
                "config: bootstrap.noise needs exactly one of \"sigma\" or "
                "\"fraction_of_std\"");
        }
        if (noise.contains("sigma")) {
            cfg.noise = NoiseSigma::absolute(
                get_field<double>(noise, "sigma", "\"bootstrap.noise\""));
        } else {
            cfg.noise = NoiseSigma::fraction_of_std(
                get_field<double>(noise, "fraction_of_std", "\"bootstrap.noise\""));
        }
    }
    return cfg;
}

inline CopulaBlock parse_copula(const json& block) {
    require_keys(block,
                 {"labels", "latent_correlations", "marginals", "n", "scale_to_100",
                  "jitter_repair", "jitter_eps"},
                 "\"copula\"");
    CopulaBlock out;
    out.cfg = default_copula_config(get_field_or<std::size_t>(block, "n", "\"copula\"", 10000),
                                    0);
    if (block.contains("labels")) {
        out.cfg.labels = get_field<std::vector<std::string>>(block, "labels", "\"copula\"");
        if (out.cfg.labels.size() != 3 && !block.contains("latent_correlations")) {
            throw ConfigError(
                "config: copula with non-default labels needs \"latent_correlations\"");
        }
        if (out.cfg.labels.size() == 3 && !block.contains("latent_correlations")) {
            out.cfg.latent_corr.labels = out.cfg.labels;
        }
    }
    if (block.contains("latent_correlations")) {
        out.cfg.latent_corr = parse_correlations(block.at("latent_correlations"),
                                                 out.cfg.labels, "copula.latent_correlations");
    }
    if (block.contains("marginals")) {
        const json& marg = block.at("marginals");
        if (!marg.is_array() || marg.size() != out.cfg.labels.size()) {
            throw ConfigError("config: copula.marginals needs one {alpha, beta} per column");
        }
        out.cfg.marginals.clear();
        for (const auto& m : marg) {
            require_keys(m, {"alpha", "beta"}, "\"copula.marginals\"");
            out.cfg.marginals.push_back(
                BetaMarginal{get_field<double>(m, "alpha", "\"copula.marginals\""),
                             get_field<double>(m, "beta", "\"copula.marginals\"")});
        }
    } else if (out.cfg.labels.size() != out.cfg.marginals.size()) {
        throw ConfigError("config: copula with non-default labels needs \"marginals\"");
    }
    out.cfg.jitter_repair = get_field_or<bool>(block, "jitter_repair", "\"copula\"", false);
    out.cfg.jitter_eps = get_field_or<double>(block, "jitter_eps", "\"copula\"", 1e-8);
    out.scale_to_100 = get_field_or<bool>(block, "scale_to_100", "\"copula\"", false);
    return out;
}

inline AbmBlock parse_abm(const json& block) {
    require_keys(block, {"n_agents", "metric_names", "sigma", "performance"}, "\"abm\"");
    AbmBlock out;
    out.n_agents = get_field_or<std::size_t>(block, "n_agents", "\"abm\"", 10000);
    out.metric_names = get_field_or<std::vector<std::string>>(block, "metric_names", "\"abm\"",
                                                              default_metric_names());
    out.sigma = get_field_or<double>(block, "sigma", "\"abm\"", 0.1);
    if (block.contains("performance")) {
        const json& perf = block.at("performance");
        require_keys(perf, {"uniform", "from_column"}, "\"abm.performance\"");
        if (perf.contains("uniform") == perf.contains("from_column")) {
            throw ConfigError(
                "config: abm.performance needs exactly one of \"uniform\" or "
                "\"from_column\"");
        }
        if (perf.contains("uniform")) {
            const json& uni = perf.at("uniform");
            require_keys(uni, {"lo", "hi"}, "\"abm.performance.uniform\"");
            out.lo = get_field_or<double>(uni, "lo", "\"abm.performance.uniform\"", 40.0);
            out.hi = get_field_or<double>(uni, "hi", "\"abm.performance.uniform\"", 95.0);
        } else {
            out.from_column = true;
            out.column = get_field<std::string>(perf, "from_column", "\"abm.performance\"");
        }
    }
    return out;
}

inline GanBlock parse_gan(const json& block) {
    require_keys(block,
                 {"n_samples", "noise_dim", "hidden1", "hidden2", "learning_rate",
                  "batch_size", "epochs", "model_output"},
                 "\"gan\"");
    GanBlock out;
    out.n_samples = get_field_or<std::size_t>(block, "n_samples", "\"gan\"", 10000);
    out.cfg.noise_dim = get_field_or<std::size_t>(block, "noise_dim", "\"gan\"", 8);
    out.cfg.hidden1 = get_field_or<std::size_t>(block, "hidden1", "\"gan\"", 32);
    out.cfg.hidden2 = get_field_or<std::size_t>(block, "hidden2", "\"gan\"", 32);
    out.cfg.learning_rate = get_field_or<double>(block, "learning_rate", "\"gan\"", 0.01);
    out.cfg.batch_size = get_field_or<std::size_t>(block, "batch_size", "\"gan\"", 64);
    out.cfg.epochs = get_field_or<std::size_t>(block, "epochs", "\"gan\"", 2000);
    if (block.contains("model_output")) {
        out.model_output = get_field<std::string>(block, "model_output", "\"gan\"");
    }
    return out;
}

}  // namespace detail

inline RunConfig parse_run_config(const nlohmann::json& document) {
    using detail::json;
    json doc = document;
    // A manifest wraps the original config under "config"; accept it directly
    // so reruns from manifests reproduce the original outputs.
    if (doc.is_object() && doc.contains("config") && doc.contains("command")) {
        doc = doc.at("config");
    }
    if (!doc.is_object()) {
        throw ConfigError("config: top level must be a JSON object");
    }
    detail::require_keys(doc,
                         {"method", "seed", "input", "output", "report_dir", "multivariate",
                          "bootstrap", "copula", "abm", "gan"},
                         "the config");

    RunConfig cfg;
    cfg.method = detail::get_field<std::string>(doc, "method", "the config");
    bool known = false;
    for (const char* m : detail::kMethods) known = known || cfg.method == m;
    if (!known) {
        throw ConfigError("config: unknown method \"" + cfg.method + "\"");
    }

    int blocks = 0;
    for (const char* m : detail::kMethods) blocks += doc.contains(m) ? 1 : 0;
    if (blocks > 1) {
        throw ConfigError("config: exactly one method block allowed, found " +
                          std::to_string(blocks));
    }
    if (blocks == 1 && !doc.contains(cfg.method)) {
        throw ConfigError("config: method block does not match method \"" + cfg.method +
                          "\"");
    }

    if (doc.contains("seed")) {
        cfg.seed = detail::get_field<std::uint64_t>(doc, "seed", "the config");
        cfg.seed_set = true;
    }
    if (doc.contains("input")) {
        cfg.input = detail::get_field<std::string>(doc, "input", "the config");
    }
    cfg.output = detail::get_field_or<std::string>(doc, "output", "the config", "");
    if (doc.contains("report_dir")) {
        cfg.report_dir = detail::get_field<std::string>(doc, "report_dir", "the config");
    }

    const json block = doc.contains(cfg.method) ? doc.at(cfg.method) : json::object();
    if (cfg.method == "multivariate") {
        cfg.multivariate = detail::parse_multivariate(block);
    } else if (cfg.method == "bootstrap") {
        cfg.bootstrap = detail::parse_bootstrap(block);
    } else if (cfg.method == "copula") {
        cfg.copula = detail::parse_copula(block);
    } else if (cfg.method == "abm") {
        cfg.abm = detail::parse_abm(block);
    } else {
        cfg.gan = detail::parse_gan(block);
    }

    const bool needs_input = cfg.method == "bootstrap" || cfg.method == "gan" ||
                             (cfg.method == "abm" && cfg.abm->from_column);
    if (needs_input && !cfg.input) {
        throw ConfigError("config: missing required field \"input\" for method \"" +
                          cfg.method + "\"");
    }
    return cfg;
}

inline RunConfig load_run_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("config: cannot open file \"" + path + "\"");
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config: " + std::string(e.what()));
    }
    return parse_run_config(doc);
}

/// Fully resolved config echo (defaults made explicit), also valid as a
/// config document.
inline nlohmann::json run_config_to_json(const RunConfig& cfg) {
    using detail::json;
    json doc;
    doc["method"] = cfg.method;
    doc["seed"] = cfg.seed;
    if (cfg.input) doc["input"] = *cfg.input;
    doc["output"] = cfg.output;
    if (cfg.report_dir) doc["report_dir"] = *cfg.report_dir;

    if (cfg.multivariate) {
        const auto& m = *cfg.multivariate;
        json rows = json::array();
        for (std::size_t i = 0; i < m.labels.size(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m.labels.size(); ++j) {
                row.push_back(m.target_corr.entries(i, j));
            }
            rows.push_back(std::move(row));
        }
        doc["multivariate"] = {{"labels", m.labels},       {"means", m.means},
                               {"stds", m.stds},           {"correlations", rows},
                               {"n", m.n},                 {"jitter_repair", m.jitter_repair},
                               {"jitter_eps", m.jitter_eps}};
    }
    if (cfg.bootstrap) {
        const auto& b = *cfg.bootstrap;
        json noise;
        if (b.noise.kind == NoiseSigma::Kind::absolute) {
            noise = {{"sigma", b.noise.value}};
        } else {
            noise = {{"fraction_of_std", b.noise.value}};
        }
        doc["bootstrap"] = {
            {"n_out", b.n_out},
            {"mode", b.mode == BootstrapMode::joint ? "joint" : "independent"},
            {"noise", noise}};
    }
    if (cfg.copula) {
        const auto& c = cfg.copula->cfg;
        json rows = json::array();
        for (std::size_t i = 0; i < c.labels.size(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < c.labels.size(); ++j) {
                row.push_back(c.latent_corr.entries(i, j));
            }
            rows.push_back(std::move(row));
        }
        json marginals = json::array();
        for (const auto& m : c.marginals) {
            marginals.push_back({{"alpha", m.alpha}, {"beta", m.beta}});
        }
        doc["copula"] = {{"labels", c.labels},
                         {"latent_correlations", rows},
                         {"marginals", marginals},
                         {"n", c.n},
                         {"scale_to_100", cfg.copula->scale_to_100},
                         {"jitter_repair", c.jitter_repair},
                         {"jitter_eps", c.jitter_eps}};
    }
    if (cfg.abm) {
        const auto& a = *cfg.abm;
        json perf;
        if (a.from_column) {
            perf = {{"from_column", a.column}};
        } else {
            perf = {{"uniform", {{"lo", a.lo}, {"hi", a.hi}}}};
        }
        doc["abm"] = {{"n_agents", a.n_agents},
                      {"metric_names", a.metric_names},
                      {"sigma", a.sigma},
                      {"performance", perf}};
    }
    if (cfg.gan) {
        const auto& g = *cfg.gan;
        json block = {{"n_samples", g.n_samples},
                      {"noise_dim", g.cfg.noise_dim},
                      {"hidden1", g.cfg.hidden1},
                      {"hidden2", g.cfg.hidden2},
                      {"learning_rate", g.cfg.learning_rate},
                      {"batch_size", g.cfg.batch_size},
                      {"epochs", g.cfg.epochs}};
        if (g.model_output) block["model_output"] = *g.model_output;
        doc["gan"] = block;
    }
    return doc;
}

namespace detail {

inline void ensure_parent_dir(const std::string& path) {
    const std::filesystem::path parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
}

inline void write_text_file(const std::string& path, const std::string& text) {
    ensure_parent_dir(path);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open \"" + path + "\" for writing");
    out << text;
}

inline void write_manifest(const std::string& command, const RunConfig& cfg,
                           std::size_t rows, const std::string& beside) {
    const nlohmann::json manifest{
        {"command", command},
        {"tool", std::string("synthdata ") + kVersion},
        {"config", run_config_to_json(cfg)},
        {"rows", rows},
    };
    write_text_file(beside + ".manifest.json", manifest.dump(2) + "\n");
}

inline Dataset load_input(const RunConfig& cfg) {
    if (!cfg.input) throw ConfigError("config: missing required field \"input\"");
    return load_csv_file(*cfg.input);
}

}  // namespace detail

/// Runs the configured generator and returns the synthetic dataset. Loads the
/// input dataset itself when the method needs one. GAN sampling draws from
/// sub-stream 4 of the seed (training owns 0-3).
inline Dataset run_generate(const RunConfig& cfg) {
    if (!cfg.seed_set) {
        throw ConfigError("config: missing required field \"seed\" (pass it in the config "
                          "or with --seed)");
    }
    if (cfg.method == "multivariate") {
        MultivariateConfig m = *cfg.multivariate;
        m.seed = cfg.seed;
        return gen_multivariate(m);
    }
    if (cfg.method == "bootstrap") {
        BootstrapConfig b = *cfg.bootstrap;
        b.seed = cfg.seed;
        return gen_bootstrap(detail::load_input(cfg), b);
    }
    if (cfg.method == "copula") {
        CopulaConfig c = cfg.copula->cfg;
        c.seed = cfg.seed;
        Dataset d = gen_copula(c);
        if (!cfg.copula->scale_to_100) return d;
        std::vector<Column> cols;
        cols.reserve(d.n_cols());
        for (const auto& col : d.columns()) {
            std::vector<double> scaled(col.values.size());
            for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = col.values[i] * 100.0;
            cols.push_back(Column{col.name, std::move(scaled)});
        }
        return Dataset(std::move(cols));
    }
    if (cfg.method == "abm") {
        const AbmBlock& block = *cfg.abm;
        AbmConfig a;
        a.metric_names = block.metric_names;
        a.sigma = block.sigma;
        a.seed = cfg.seed;
        if (block.from_column) {
            Dataset source = detail::load_input(cfg);
            const std::size_t rows = source.column(block.column).values.size();
            a.n_agents = block.n_agents == 0 ? rows : block.n_agents;
            a.performance_source = PerformanceFromColumn{std::move(source), block.column};
        } else {
            a.n_agents = block.n_agents;
            a.performance_source = PerformanceUniform{block.lo, block.hi};
        }
        return gen_abm(a);
    }
    // gan
    const GanBlock& block = *cfg.gan;
    GanConfig g = block.cfg;
    g.seed = cfg.seed;
    const Dataset real = detail::load_input(cfg);
    const TrainResult trained = train_gan(real, g);
    if (block.model_output) {
        detail::ensure_parent_dir(*block.model_output);
        save_gan_model_file(trained.model, *block.model_output);
    }
    RngStream sample_stream = RngStream(cfg.seed).substream(4);
    return gan_sample(trained.model, block.n_samples, sample_stream);
}

inline int cmd_generate(const std::string& config_path,
                        std::optional<std::uint64_t> seed_override = std::nullopt) {
    RunConfig cfg;
    try {
        cfg = load_run_config_file(config_path);
        if (seed_override) {
            cfg.seed = *seed_override;
            cfg.seed_set = true;
        }
        if (!cfg.seed_set) {
            throw ConfigError("config: missing required field \"seed\" (pass it in the "
                              "config or with --seed)");
        }
        if (cfg.output.empty()) {
            throw ConfigError("config: missing required field \"output\"");
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        const Dataset data = run_generate(cfg);
        detail::ensure_parent_dir(cfg.output);
        write_csv_file(data, cfg.output);
        detail::write_manifest("generate", cfg, data.n_rows(), cfg.output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

inline int cmd_train_gan(const std::string& config_path,
                         std::optional<std::uint64_t> seed_override = std::nullopt) {
    RunConfig cfg;
    try {
        cfg = load_run_config_file(config_path);
        if (seed_override) {
            cfg.seed = *seed_override;
            cfg.seed_set = true;
        }
        if (cfg.method != "gan") {
            throw ConfigError("config: train-gan needs method \"gan\", got \"" + cfg.method +
                              "\"");
        }
        if (!cfg.seed_set) {
            throw ConfigError("config: missing required field \"seed\" (pass it in the "
                              "config or with --seed)");
        }
        if (cfg.output.empty()) {
            throw ConfigError("config: missing required field \"output\" (model path)");
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        GanConfig g = cfg.gan->cfg;
        g.seed = cfg.seed;
        const Dataset real = detail::load_input(cfg);
        const TrainResult trained = train_gan(real, g);
        detail::ensure_parent_dir(cfg.output);
        save_gan_model_file(trained.model, cfg.output);

        std::string log_csv = "step,d_loss,g_loss\n";
        for (const auto& s : trained.log.steps) {
            log_csv += std::to_string(s.step);
            log_csv.push_back(',');
            synthdata::detail::format_value(log_csv, s.d_loss);
            log_csv.push_back(',');
            synthdata::detail::format_value(log_csv, s.g_loss);
            log_csv.push_back('\n');
        }
        detail::write_text_file(cfg.output + ".trainlog.csv", log_csv);
        for (const auto& diag : trained.log.diagnostics) {
            if (diag.collapse_warning) {
                std::cerr << "warning: possible mode collapse on column \"" << diag.column
                          << "\" (synthetic std " << diag.synth_std << " vs real "
                          << diag.real_std << ")\n";
            }
        }
        detail::write_manifest("train-gan", cfg, real.n_rows(), cfg.output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

inline int cmd_evaluate(const std::string& real_path, const std::string& synth_path,
                        const std::string& out_dir,
                        std::optional<std::uint64_t> seed_override = std::nullopt) {
    try {
        const Dataset real = load_csv_file(real_path);
        const Dataset synth = load_csv_file(synth_path);
        const std::uint64_t scatter_seed =
            seed_override ? *seed_override : kScatterSampleSeed;
        const FidelityReport report = fidelity_report(real, synth, scatter_seed);

        std::filesystem::create_directories(out_dir);
        const auto join = [&out_dir](const char* name) {
            return (std::filesystem::path(out_dir) / name).string();
        };
        detail::write_text_file(join("report.json"), fidelity_report_json(report));
        detail::write_text_file(join("heatmap_real.svg"), render_heatmap(report.real_corr));
        detail::write_text_file(join("heatmap_synth.svg"), render_heatmap(report.synth_corr));

        CorrelationMatrix diff{report.real_corr.labels,
                               Matrix(report.real_corr.entries.rows(),
                                      report.real_corr.entries.cols())};
        for (std::size_t i = 0; i < diff.entries.rows(); ++i) {
            for (std::size_t j = 0; j < diff.entries.cols(); ++j) {
                diff.entries(i, j) =
                    report.real_corr.entries(i, j) - report.synth_corr.entries(i, j);
            }
        }
        detail::write_text_file(join("heatmap_diff.svg"), render_heatmap(diff));
        detail::write_text_file(join("pairplot.svg"), render_pairplot(real, synth));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace synthdata::pipeline
