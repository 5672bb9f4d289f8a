#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "adsq/experiments.hpp"
#include "adsq/io.hpp"
#include "adsq/render.hpp"

namespace {

std::filesystem::path default_outdir() {
    if (const char* env = std::getenv("ADSQ_OUT_DIR")) return env;
    return std::filesystem::current_path();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"AdS2 black-hole qubit-chain simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir = default_outdir().string();
    int threads = 1;
    auto* run = app.add_subcommand("run", "run an experiment from a config file");
    run->add_option("--config", config_path, "JSON experiment config")->required();
    run->add_option("--out", out_dir, "output directory");
    run->add_option("--threads", threads, "worker threads");

    std::string render_in, render_kind, render_out;
    auto* render = app.add_subcommand("render", "render a CSV to SVG");
    render->add_option("--in", render_in, "input CSV")->required();
    render->add_option("--kind", render_kind, "heatmap | line")->required();
    render->add_option("--out", render_out, "output SVG (default: input with .svg)");

    bool quick = false;
    auto* validate = app.add_subcommand("validate", "run the invariant suite");
    validate->add_flag("--quick", quick, "reduced draw counts");

    std::string preset_name;
    bool preset_print = false;
    auto* preset = app.add_subcommand("preset", "run (or print) a named figure preset");
    preset->add_option("name", preset_name, "preset name")->required();
    preset->add_flag("--print", preset_print, "print the resolved config instead of running");
    preset->add_option("--out", out_dir, "output directory");
    preset->add_option("--threads", threads, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            std::ifstream in(config_path);
            if (!in) {
                std::cerr << "cannot open config: " << config_path << "\n";
                return 1;
            }
            adsq::json config = adsq::json::parse(in);
            auto result = adsq::run_experiment(config, out_dir, threads);
            for (const auto& f : result.files) std::cout << f.string() << "\n";
        } else if (render->parsed()) {
            if (render_out.empty())
                render_out = std::filesystem::path(render_in).replace_extension(".svg").string();
            adsq::render_svg(adsq::read_csv(render_in), render_kind, render_out);
            std::cout << render_out << "\n";
        } else if (validate->parsed()) {
            return adsq::run_validation(quick) == 0 ? 0 : 1;
        } else if (preset->parsed()) {
            adsq::json config = adsq::preset_config(preset_name);
            if (preset_print) {
                std::cout << config.dump(2) << "\n";
            } else {
                auto result = adsq::run_experiment(config, out_dir, threads);
                for (const auto& f : result.files) std::cout << f.string() << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
