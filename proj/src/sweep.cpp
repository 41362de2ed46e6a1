#include "jcm/sweep.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "jcm/oracle.hpp"

namespace jcm {

namespace {

constexpr double kOracleTolerance = 1e-7;

std::string mismatch_message(double t, const std::string& quantity, double closed_form,
                             double oracle) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "oracle mismatch at t=" << t << ": " << quantity << " closed-form=" << closed_form
        << " oracle=" << oracle << " delta=" << (closed_form - oracle);
    return msg.str();
}

void append_value(std::string& out, double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

void cross_validate(const SystemParams& params, const FieldVector& field0,
                    const MeasureRecord& rec) {
    const MeasureRecord oracle = measure_oracle_point(params, field0, rec.t);
    const std::pair<const char*, std::pair<double, double>> pairs[] = {
        {"negativity", {rec.negativity, oracle.negativity}},
        {"mutual_entropy", {rec.mutual_entropy, oracle.mutual_entropy}},
        {"s_atom", {rec.s_atom, oracle.s_atom}},
        {"s_field", {rec.s_field, oracle.s_field}},
        {"s_joint", {rec.s_joint, oracle.s_joint}},
    };
    for (const auto& [name, values] : pairs)
        if (std::abs(values.first - values.second) > kOracleTolerance)
            throw OracleMismatchError(rec.t, name, values.first, values.second);
}

}  // namespace

OracleMismatchError::OracleMismatchError(double t_, std::string quantity_, double closed_form_,
                                         double oracle_)
    : std::runtime_error(mismatch_message(t_, quantity_, closed_form_, oracle_)),
      t(t_),
      quantity(std::move(quantity_)),
      closed_form(closed_form_),
      oracle(oracle_) {}

SystemParams SweepConfig::params() const {
    SystemParams p;
    p.g = g;
    p.omega_a = omega_a;
    p.delta = delta;
    p.atom_ground_weight = atom_ground_weight;
    return p;
}

void SweepConfig::validate() const {
    std::string bad;
    auto flag = [&bad](bool ok, const char* field) {
        if (ok) return;
        if (!bad.empty()) bad += ", ";
        bad += field;
    };
    flag(std::isfinite(alpha.real()) && std::isfinite(alpha.imag()), "alpha");
    flag(g > 0.0 && std::isfinite(g), "g");
    flag(std::isfinite(omega_a), "omega-a");
    flag(std::isfinite(delta), "delta");
    flag(atom_ground_weight >= 0.0 && atom_ground_weight <= 1.0, "atom-ground-weight");
    flag(t_start >= 0.0 && std::isfinite(t_start), "t-start");
    flag(t_end > t_start && std::isfinite(t_end), "t-end");
    flag(n_points >= 2, "n-points");
    flag(truncation.tail_tolerance > 0.0, "tail-tolerance");
    flag(truncation.buffer >= 1, "buffer");
    flag(oracle_stride >= 1, "oracle-stride");
    if (!bad.empty()) throw ConfigError("invalid configuration field(s): " + bad);
}

SweepConfig preset_config(const std::string& name) {
    SweepConfig c;
    c.alpha = std::sqrt(5.0);
    c.g = 1.0;
    c.omega_a = 1.0;
    if (name == "fig1") {
        c.delta = 0.0;
        c.atom_ground_weight = 0.0;
    } else if (name == "fig2") {
        c.delta = 0.0;
        c.atom_ground_weight = 0.5;
    } else if (name == "fig3") {
        c.delta = 5.0;
        c.atom_ground_weight = 0.5;
    } else if (name == "fig4" || name == "fig5") {
        c.delta = 10.0;
        c.atom_ground_weight = 0.5;
    } else {
        throw ConfigError("unknown preset: " + name);
    }
    return c;
}

std::vector<MeasureRecord> run_sweep(const SweepConfig& config) {
    config.validate();
    const SystemParams params = config.params();
    const int n_max = choose_truncation(config.alpha, config.truncation);
    const FieldVector field0 = coherent_coefficients(config.alpha, n_max);

    std::vector<MeasureRecord> records(config.n_points);
    const double step = (config.t_end - config.t_start) / (config.n_points - 1);
    for (int i = 0; i < config.n_points; ++i) {
        const double t = config.t_start + i * step;
        records[i] = measure_sweep_point(params, field0, t);
        if (config.oracle_check && i % config.oracle_stride == 0)
            cross_validate(params, field0, records[i]);
    }
    return records;
}

std::string format_csv(const std::vector<MeasureRecord>& records) {
    if (records.empty()) throw std::invalid_argument("format_csv: no records");
    std::string out =
        "t,negativity,mutual_entropy,s_atom,s_field,s_joint,classical_bound,"
        "truncation_mass_lost\n";
    for (const MeasureRecord& r : records) {
        append_value(out, r.t);
        out += ',';
        append_value(out, r.negativity);
        out += ',';
        append_value(out, r.mutual_entropy);
        out += ',';
        append_value(out, r.s_atom);
        out += ',';
        append_value(out, r.s_field);
        out += ',';
        append_value(out, r.s_joint);
        out += ',';
        append_value(out, r.classical_bound);
        out += ',';
        append_value(out, r.truncation_mass_lost);
        out += '\n';
    }
    return out;
}

void emit_csv(const std::vector<MeasureRecord>& records, const std::string& path) {
    const std::string body = format_csv(records);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open output file: " + path);
    file.write(body.data(), static_cast<std::streamsize>(body.size()));
    file.flush();
    if (!file) throw IoError("write failed: " + path);
}

}  // namespace jcm
