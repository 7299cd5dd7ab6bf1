// Batch verification CLI: config checks, corpus runs, dimension formulas.
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"

#include "parhiggs/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigInvalid = 1;
constexpr int kExitInternal = 2;

int run_check(const std::string& config_path, std::uint64_t seed_override, bool has_seed,
              const std::string& out_path, const std::vector<std::string>& task_filter) {
    parhiggs::JobConfig cfg;
    try {
        cfg = parhiggs::load_config(config_path);
    } catch (const parhiggs::ConfigError& err) {
        std::cerr << "invalid config:\n";
        for (const auto& issue : err.issues()) std::cerr << "  - " << issue << "\n";
        return kExitConfigInvalid;
    }
    if (has_seed) cfg.seed = seed_override;
    if (!task_filter.empty()) {
        std::vector<std::string> kept;
        for (const auto& t : cfg.tasks)
            for (const auto& f : task_filter)
                if (t == f) kept.push_back(t);
        if (kept.empty()) {
            std::cerr << "invalid config:\n  - --task filter removed every task\n";
            return kExitConfigInvalid;
        }
        cfg.tasks = kept;
    }
    const std::string report = parhiggs::run_report(cfg);
    if (out_path.empty()) {
        std::cout << report;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot open output path " << out_path << "\n";
            return kExitInternal;
        }
        out << report;
    }
    return kExitOk;
}

int run_corpus(const std::string& dir) {
    namespace fs = std::filesystem;
    const auto files = parhiggs::emit_examples(dir);
    for (const auto& name : files) {
        const fs::path cfg_path = fs::path(dir) / name;
        const auto cfg = parhiggs::load_config(cfg_path.string());
        fs::path report_path = cfg_path;
        report_path.replace_extension(".report.json");
        parhiggs::write_report(cfg, report_path.string());
        std::cout << name << " -> " << report_path.filename().string() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for symplectic/orthogonal parabolic Higgs bundles on the "
                 "genus-0 marked curve"};
    app.require_subcommand(1);

    std::string config_path, out_path, corpus_dir;
    std::vector<std::string> task_filter;
    std::uint64_t seed = 0;
    bool has_seed = false;

    auto* check = app.add_subcommand("check", "Run the tasks of a JSON config and emit a report");
    check->add_option("config", config_path, "Path to a parhiggs-config/1 JSON file")->required();
    check->add_option("--seed", seed, "Override the config seed")->each([&has_seed](const std::string&) {
        has_seed = true;
    });
    check->add_option("--out", out_path, "Write the report here instead of stdout");
    check->add_option("--task", task_filter, "Run only the named tasks (repeatable)");

    auto* corpus = app.add_subcommand("corpus", "Write the bundled example corpus and run it");
    corpus->add_option("dir", corpus_dir, "Output directory")->required();

    std::string dim_group;
    int dim_m = 1, dim_g = 0, dim_r = 0;
    auto* dim = app.add_subcommand("dim", "Evaluate a strongly parabolic Higgs moduli dimension");
    dim->add_option("group", dim_group, "Sp, SO-even or SO-odd")->required();
    dim->add_option("m", dim_m, "half-rank parameter m >= 1")->required();
    dim->add_option("g", dim_g, "genus parameter g >= 0")->required();
    dim->add_option("r", dim_r, "number of marked points r >= 0")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(config_path, seed, has_seed, out_path, task_filter);
        if (corpus->parsed()) return run_corpus(corpus_dir);
        if (dim->parsed()) {
            parhiggs::ModuliDimParams params;
            std::string g = dim_group;
            for (auto& c : g) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            if (g == "sp") params.group = parhiggs::GroupKind::Sp;
            else if (g == "so-even" || g == "soeven") params.group = parhiggs::GroupKind::SOEven;
            else if (g == "so-odd" || g == "soodd") params.group = parhiggs::GroupKind::SOOdd;
            else {
                std::cerr << "unknown group \"" << dim_group << "\" (use Sp, SO-even or SO-odd)\n";
                return kExitConfigInvalid;
            }
            params.m = dim_m;
            params.g = dim_g;
            params.r = dim_r;
            std::cout << parhiggs::moduli_dimension(params) << "\n";
            return kExitOk;
        }
    } catch (const parhiggs::ConfigError& err) {
        std::cerr << "invalid config:\n";
        for (const auto& issue : err.issues()) std::cerr << "  - " << issue << "\n";
        return kExitConfigInvalid;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
