// modspace CLI: experiment runner plus direct access to norms, multipliers,
// products, and window construction.  Exit code 0 on success (for `run`, only
// when every pass flag is true), 1 on any failure or measurement miss.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "modspace/gabor.hpp"
#include "modspace/grid.hpp"
#include "modspace/harness.hpp"
#include "modspace/modnorm.hpp"
#include "modspace/multipliers.hpp"
#include "modspace/products.hpp"
#include "modspace/serialize.hpp"
#include "modspace/util.hpp"
#include "modspace/windows.hpp"

namespace {

using namespace modspace;

GridSpec parse_grid(const std::string& spec, int d) {
    int L = 0, n = 0;
    if (std::sscanf(spec.c_str(), "%d,%d", &L, &n) != 2)
        fail("--grid expects 'L,n', got '" + spec + "'");
    return make_grid(d, L, n);
}

// signals may be MSK1 binaries or the JSON sidecar; pick by extension
SampledSignal load_signal(const std::string& path) {
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return read_signal_json(path);
    return read_signal(path);
}

void store_signal(const std::string& path, const SampledSignal& f) {
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        write_signal_json(path, f);
    else
        write_signal(path, f);
}

int cmd_run(const std::string& config_path, std::uint64_t seed_override, bool seed_set,
            const std::string& out_override) {
    std::ifstream is(config_path);
    require(is.is_open(), "cannot open config: " + config_path);
    ExperimentConfig cfg = config_from_json(nlohmann::json::parse(is));
    if (seed_set) cfg.seed = seed_override;
    if (!out_override.empty()) cfg.out_csv = out_override;
    ExperimentResult res = run_experiment(cfg);
    write_reports(cfg, res);
    if (cfg.out_csv.empty()) std::cout << res.csv();
    std::cout << res.summary().dump() << "\n";
    return res.pass ? 0 : 1;
}

int cmd_list() {
    for (const CatalogEntry& e : experiment_catalog())
        std::cout << e.name << " → " << e.anchor << ": " << e.summary << "\n";
    return 0;
}

int cmd_norm(const std::string& signal_path, const std::string& flavor, double p, double q,
             const std::string& weight_path, const std::string& mode, double sigma) {
    SampledSignal f = load_signal(signal_path);
    WindowPair pair = make_window_pair(f.grid, sigma);
    ModNormRequest req;
    req.flavor = flavor == "W" ? Flavor::W : Flavor::M;
    require(flavor == "M" || flavor == "W", "--flavor must be M or W");
    req.p = p <= 0.0 ? Exponent::infinity() : Exponent::of(p);
    req.q = q <= 0.0 ? Exponent::infinity() : Exponent::of(q);
    req.mode = mode == "dense" ? NormMode::dense : NormMode::lattice;
    require(mode == "lattice" || mode == "dense", "--mode must be lattice or dense");
    if (!weight_path.empty()) req.w = read_weight(weight_path);
    std::cout << fmt_double(mod_norm(f, pair, req)) << "\n";
    return 0;
}

int cmd_apply(const std::string& kind, const std::string& symbol_path,
              const std::string& signal_path, const std::string& out_path) {
    SampledSignal f = load_signal(signal_path);
    StepSymbol sym = read_step_symbol(symbol_path);
    SampledSignal out = kind == "step" ? step_apply(sym, f) : fourier_step_apply(sym, f);
    require(kind == "step" || kind == "fourier-step", "--kind must be step or fourier-step");
    if (!out_path.empty()) store_signal(out_path, out);
    std::cout << "l2 " << fmt_double(l2_norm(out)) << " sup " << fmt_double(max_abs(out))
              << "\n";
    return 0;
}

int cmd_product(const std::string& kind, const std::vector<std::string>& factor_paths,
                const std::string& windows, const std::string& report_path,
                const std::string& out_path) {
    require(kind == "multiply" || kind == "convolve", "--kind must be multiply or convolve");
    require(windows == "auto", "only --windows auto is supported");
    require(factor_paths.size() >= 2 && factor_paths.size() <= 4, "2 to 4 factors");
    std::vector<SampledSignal> factors;
    for (const std::string& p : factor_paths) factors.push_back(load_signal(p));
    for (const SampledSignal& f : factors)
        require(f.grid == factors[0].grid, "factors must share one grid");
    ProductKind pk = kind == "multiply" ? ProductKind::multiply : ProductKind::convolve;
    ProductRequest req =
        make_product_windows(factors[0].grid, pk, static_cast<int>(factors.size()));
    SampledSignal out =
        pk == ProductKind::multiply ? stft_multiply(factors, req) : stft_convolve(factors, req);
    if (!out_path.empty()) store_signal(out_path, out);
    if (!report_path.empty()) {
        std::ofstream os(report_path);
        require(os.is_open(), "cannot open for writing: " + report_path);
        os << "field,value\n";
        os << "kind," << kind << "\n";
        os << "factors," << factors.size() << "\n";
        os << "pairing_target," << fmt_double(req.pairing_target) << "\n";
        os << "pairing," << fmt_complex(req.pairing) << "\n";
        os << "output_l2," << fmt_double(l2_norm(out)) << "\n";
        require(os.good(), "write failed: " + report_path);
    }
    std::cout << "l2 " << fmt_double(l2_norm(out)) << "\n";
    return 0;
}

int cmd_window_make(const std::string& grid, int d, double sigma, const std::string& out_path) {
    GridSpec g = parse_grid(grid, d);
    WindowPair pair = make_window_pair(g, sigma);
    std::cout << "partition_unity_error " << fmt_double(partition_unity_error(pair)) << "\n";
    if (!out_path.empty()) {
        store_signal(out_path + ".phi.msk", pair.phi);
        store_signal(out_path + ".psi.msk", pair.psi);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modulation-space toolkit: STFT analysis, multiplier and "
                 "product checks, experiment harness"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    std::uint64_t seed = 1;
    CLI::App* run = app.add_subcommand("run", "run an experiment from a JSON config");
    run->add_option("--config", config_path, "experiment config file")->required();
    CLI::Option* seed_opt = run->add_option("--seed", seed, "override the config seed");
    run->add_option("--out", out_path, "override the CSV output path");

    CLI::App* list = app.add_subcommand("list", "list experiments and their claims");

    std::string signal_path, weight_path, flavor = "M", mode = "lattice";
    double p = 2.0, q = 2.0, sigma = 2.0;
    CLI::App* norm = app.add_subcommand("norm", "modulation-space quasi-norm of a signal");
    norm->add_option("--signal", signal_path, "input signal (.msk or .json)")->required();
    norm->add_option("--flavor", flavor, "M or W");
    norm->add_option("--p", p, "position-side exponent (<= 0 for infinity)");
    norm->add_option("--q", q, "frequency-side exponent (<= 0 for infinity)");
    norm->add_option("--weight", weight_path, "weight descriptor JSON");
    norm->add_option("--mode", mode, "lattice or dense");
    norm->add_option("--sigma", sigma, "window regularity");

    std::string kind = "step", symbol_path;
    CLI::App* apply = app.add_subcommand("apply", "apply a step or Fourier-step multiplier");
    apply->add_option("--kind", kind, "step or fourier-step");
    apply->add_option("--symbol", symbol_path, "symbol descriptor JSON")->required();
    apply->add_option("--signal", signal_path, "input signal")->required();
    apply->add_option("--out", out_path, "output signal path");

    std::vector<std::string> factor_paths;
    std::string windows = "auto", report_path, prod_kind = "multiply";
    CLI::App* product = app.add_subcommand("product", "STFT multiplication / convolution");
    product->add_option("--kind", prod_kind, "multiply or convolve");
    product->add_option("--factors", factor_paths, "factor signal files")->required();
    product->add_option("--windows", windows, "window policy (auto)");
    product->add_option("--report", report_path, "report CSV path");
    product->add_option("--out", out_path, "output signal path");

    std::string grid = "16,32";
    int d = 1;
    CLI::App* wmake = app.add_subcommand("window-make", "build and export a window pair");
    wmake->add_option("--grid", grid, "grid as 'L,n'");
    wmake->add_option("--d", d, "dimension (1 or 2)");
    wmake->add_option("--sigma", sigma, "window regularity");
    wmake->add_option("--out", out_path, "output prefix");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path, seed, seed_opt->count() > 0, out_path);
        if (list->parsed()) return cmd_list();
        if (norm->parsed())
            return cmd_norm(signal_path, flavor, p, q, weight_path, mode, sigma);
        if (apply->parsed()) return cmd_apply(kind, symbol_path, signal_path, out_path);
        if (product->parsed())
            return cmd_product(prod_kind, factor_paths, windows, report_path, out_path);
        if (wmake->parsed()) return cmd_window_make(grid, d, sigma, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
