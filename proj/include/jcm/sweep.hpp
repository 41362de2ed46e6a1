#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "jcm/field_space.hpp"
#include "jcm/measures.hpp"

namespace jcm {

/// Bad sweep configuration; the message names the offending field(s).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Output-file failure; the message carries the path.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Closed-form and brute-force paths disagree beyond tolerance.
struct OracleMismatchError : std::runtime_error {
    OracleMismatchError(double t, std::string quantity, double closed_form, double oracle);

    double t;
    std::string quantity;
    double closed_form;
    double oracle;
};

/// Everything needed to run one time sweep.
struct SweepConfig {
    Complex alpha = 0.0;              ///< coherent amplitude of the initial field
    double g = 1.0;
    double omega_a = 1.0;
    double delta = 0.0;
    double atom_ground_weight = 0.0;
    double t_start = 0.0;
    double t_end = 25.0;
    int n_points = 1001;
    TruncationPolicy truncation;
    bool oracle_check = false;
    int oracle_stride = 10;           ///< cross-validate every k-th grid point
    std::string output_path = "sweep.csv";

    SystemParams params() const;

    /// Throws ConfigError naming each field that is out of range.
    void validate() const;
};

/// Named parameter sets reproducing the figure sweeps: alpha = sqrt(5), g = 1,
/// omega_a = 1, with (delta, atom_ground_weight) =
///   fig1: (0, 0)   fig2: (0, 1/2)   fig3: (5, 1/2)   fig4 and fig5: (10, 1/2).
/// Throws ConfigError for an unknown name.
SweepConfig preset_config(const std::string& name);

/// One MeasureRecord per grid point, ascending t. With oracle_check set,
/// every oracle_stride-th point is recomputed on the brute-force path and any
/// measure disagreeing beyond 1e-7 raises OracleMismatchError.
std::vector<MeasureRecord> run_sweep(const SweepConfig& config);

/// CSV serialization: fixed header
///   t,negativity,mutual_entropy,s_atom,s_field,s_joint,classical_bound,truncation_mass_lost
/// then one row per record. Values use shortest round-trip formatting, so
/// parsing a row and re-formatting it reproduces the bytes exactly, and
/// identical configs yield byte-identical files.
std::string format_csv(const std::vector<MeasureRecord>& records);

/// format_csv written to path; IoError on any filesystem failure.
void emit_csv(const std::vector<MeasureRecord>& records, const std::string& path);

}  // namespace jcm
