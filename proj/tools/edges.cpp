// Command-line front end: edges {detect|sweep|montecarlo|factors} [options]

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "edges/error.hpp"
#include "edges/experiment.hpp"
#include "edges/tables.hpp"

namespace {

struct Invocation {
    std::string config_path;
    std::string preset;
    std::map<std::string, std::string> flags;
};

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& help,
                      Invocation& inv)
{
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", inv.config_path, "key = value config file");
    sub->add_option("--preset", inv.preset, "fig1, fig2, fig3-case1 or fig3-case2");
    for (const std::string& key : edges::config_keys()) {
        if (key == "preset") {
            continue;
        }
        sub->add_option("--" + key, inv.flags[key]);
    }
    return sub;
}

edges::ExperimentConfig load(const Invocation& inv)
{
    edges::Settings file;
    if (!inv.config_path.empty()) {
        std::ifstream in(inv.config_path);
        if (!in) {
            throw edges::PreconditionError("cannot open config '" + inv.config_path + "'");
        }
        file = edges::parse_settings(in, inv.config_path);
    }
    std::string preset = inv.preset;
    if (preset.empty() && file.count("preset")) {
        preset = file.at("preset");
    }
    edges::Settings flags;
    for (const auto& [key, value] : inv.flags) {
        if (!value.empty()) {
            flags[key] = value;
        }
    }
    std::vector<edges::Settings> layers;
    if (!preset.empty()) {
        layers.push_back(edges::preset_settings(preset));
    }
    layers.push_back(file);
    layers.push_back(flags);
    return edges::resolve_config(layers);
}

int fail(const char* kind, const std::string& message, int code)
{
    std::cerr << nlohmann::json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump()
              << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Jump detection from noisy Fourier data"};
    app.require_subcommand(1);
    Invocation inv;
    CLI::App* detect = add_command(app, "detect", "evaluate K on a grid and locate edges", inv);
    CLI::App* sweep = add_command(app, "sweep", "repeat detect over sweep_param/sweep_values", inv);
    CLI::App* mc = add_command(app, "montecarlo", "noise trials with amplitude statistics", inv);
    CLI::App* factors = add_command(app, "factors", "print the concentration factor table", inv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        return fail("usage", e.what(), 2);
    }

    try {
        const edges::ExperimentConfig config = load(inv);
        if (detect->parsed()) {
            const edges::DetectRun run = edges::run_detect(config);
            std::cout << "edges: " << run.detection.edges.size()
                      << "  epsilon_predicted: " << edges::format_number(run.detection.epsilon_predicted)
                      << "  plateau_max: " << edges::format_number(run.plateau.max)
                      << "  jump_error: " << edges::format_number(run.jump_error) << '\n';
            for (const edges::Edge& e : run.detection.edges) {
                std::cout << "  x = " << edges::format_number(e.location)
                          << "  amplitude = " << edges::format_number(e.amplitude) << '\n';
            }
            std::cout << "wrote " << config.output << "/\n";
        } else if (sweep->parsed()) {
            const auto rows = edges::run_sweep(config);
            std::cout << config.sweep_param << ",plateau_rms,plateau_max,jump_error,edge_count\n";
            for (const edges::SweepRow& r : rows) {
                std::cout << edges::format_number(r.value) << ',' << edges::format_number(r.plateau_rms)
                          << ',' << edges::format_number(r.plateau_max) << ','
                          << edges::format_number(r.jump_error) << ',' << r.edge_count << '\n';
            }
            std::cout << "wrote " << config.output << "/summary.csv\n";
        } else if (mc->parsed()) {
            const edges::MonteCarloSummary s = edges::run_montecarlo(config);
            for (std::size_t j = 0; j < s.amplitude_mean.size(); ++j) {
                std::cout << "jump " << j << ": mean " << edges::format_number(s.amplitude_mean[j])
                          << "  std " << edges::format_number(s.amplitude_std[j]) << '\n';
            }
            std::cout << "detection_rate: " << edges::format_number(s.detection_rate)
                      << "  plateau_rms: " << edges::format_number(s.plateau_rms) << '\n';
            std::cout << "wrote " << config.output << "/monte_carlo.csv\n";
        } else if (factors->parsed()) {
            edges::run_factors(config, std::cout);
        }
    } catch (const edges::PreconditionError& e) {
        return fail("config", e.what(), 2);
    } catch (const edges::NumericalError& e) {
        return fail("numerical", e.what(), 3);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), 1);
    }
    return 0;
}
