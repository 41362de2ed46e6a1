// jcm-sweep: time sweep of Jaynes-Cummings entanglement measures, written as CSV.
//
// Exit codes: 0 success, 1 configuration error, 2 oracle mismatch, 3 I/O error.

#include <cmath>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "jcm/sweep.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "Entanglement dynamics of the Jaynes-Cummings model with a mixed atom "
        "and a coherent field: negativity, entropies and mutual entropy over a "
        "time grid, emitted as CSV."};
    app.set_config("--config", "",
                   "flat 'key = value' file, '#' comments; command-line flags take precedence");

    const jcm::SweepConfig defaults;
    std::string preset;
    double alpha = std::abs(defaults.alpha);
    double alpha_sq = alpha * alpha;
    double g = defaults.g;
    double omega_a = defaults.omega_a;
    double delta = defaults.delta;
    double atom_ground_weight = defaults.atom_ground_weight;
    double t_start = defaults.t_start;
    double t_end = defaults.t_end;
    int n_points = defaults.n_points;
    double tail_tolerance = defaults.truncation.tail_tolerance;
    int buffer = defaults.truncation.buffer;
    bool oracle_check = false;
    int oracle_stride = defaults.oracle_stride;
    std::string output = defaults.output_path;

    auto* preset_opt =
        app.add_option("--preset", preset, "figure parameter set")
            ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4", "fig5"}));
    auto* alpha_opt = app.add_option("--alpha", alpha, "coherent amplitude |alpha|")
                          ->capture_default_str();
    auto* alpha_sq_opt = app.add_option("--alpha-sq", alpha_sq, "mean photon number |alpha|^2");
    alpha_opt->excludes(alpha_sq_opt);
    alpha_sq_opt->excludes(alpha_opt);
    auto* g_opt = app.add_option("--g", g, "atom-field coupling")->capture_default_str();
    auto* omega_a_opt = app.add_option("--omega-a", omega_a, "atomic transition frequency")
                            ->capture_default_str();
    auto* delta_opt =
        app.add_option("--delta", delta, "detuning omega_a - omega_f")->capture_default_str();
    auto* weight_opt = app.add_option("--atom-ground-weight", atom_ground_weight,
                                      "initial weight of the atomic ground state")
                           ->capture_default_str();
    auto* t_start_opt =
        app.add_option("--t-start", t_start, "grid start time")->capture_default_str();
    auto* t_end_opt = app.add_option("--t-end", t_end, "grid end time")->capture_default_str();
    auto* n_points_opt =
        app.add_option("--n-points", n_points, "grid size")->capture_default_str();
    auto* tail_opt = app.add_option("--tail-tolerance", tail_tolerance,
                                    "occupation mass allowed above the Fock cutoff")
                         ->capture_default_str();
    auto* buffer_opt = app.add_option("--buffer", buffer, "extra Fock levels above the cutoff")
                           ->capture_default_str();
    app.add_flag("--oracle-check", oracle_check,
                 "cross-validate against the brute-force propagator");
    auto* stride_opt = app.add_option("--oracle-stride", oracle_stride,
                                      "grid stride between oracle checks")
                           ->capture_default_str();
    auto* output_opt =
        app.add_option("--output", output, "CSV output path")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    jcm::SweepConfig config;
    try {
        if (*preset_opt) config = jcm::preset_config(preset);
        if (*alpha_opt) config.alpha = alpha;
        if (*alpha_sq_opt) {
            if (alpha_sq < 0.0) throw jcm::ConfigError("invalid configuration field(s): alpha-sq");
            config.alpha = std::sqrt(alpha_sq);
        }
        if (*g_opt) config.g = g;
        if (*omega_a_opt) config.omega_a = omega_a;
        if (*delta_opt) config.delta = delta;
        if (*weight_opt) config.atom_ground_weight = atom_ground_weight;
        if (*t_start_opt) config.t_start = t_start;
        if (*t_end_opt) config.t_end = t_end;
        if (*n_points_opt) config.n_points = n_points;
        if (*tail_opt) config.truncation.tail_tolerance = tail_tolerance;
        if (*buffer_opt) config.truncation.buffer = buffer;
        config.oracle_check = oracle_check;
        if (*stride_opt) config.oracle_stride = oracle_stride;
        if (*output_opt) config.output_path = output;
        config.validate();
    } catch (const jcm::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        const std::vector<jcm::MeasureRecord> records = jcm::run_sweep(config);
        jcm::emit_csv(records, config.output_path);
        std::cout << "wrote " << records.size() << " records to " << config.output_path << "\n";
    } catch (const jcm::OracleMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const jcm::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
