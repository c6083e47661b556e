// aao: command-line front end for the all-at-once probability engine.
//
// Subcommands: fig1, audit, born, chsh, dual, slits. Every command is
// deterministic given its flags (and seed, for dual); output is byte-identical
// across runs.

#include "aao/io.hpp"
#include "aao/ising.hpp"
#include "aao/knowledge.hpp"
#include "aao/presets.hpp"
#include "aao/retro.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace aao;

constexpr const char* exit_codes_help =
    "Exit codes:\n"
    "  0  success\n"
    "  2  parse error (bad usage or malformed input document)\n"
    "  3  validation error (well-formed but invalid content or arguments)\n"
    "  4  capacity error (free-site count above the enumeration cap)\n"
    "  5  duality sweep exceeded tolerance\n"
    "  6  I/O error\n"
    "  1  unexpected failure\n";

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::parse_error:
        return 2;
    case ErrorCode::capacity_exceeded:
        return 4;
    case ErrorCode::io_error:
        return 6;
    default:
        return 3;
    }
}

struct Options {
    std::string format; // empty = per-command default
    std::string output;
    std::optional<double> tolerance;
};

std::string resolve_format(const Options& opt, const std::string& fallback,
                           bool exact_available) {
    const std::string format = opt.format.empty() ? fallback : opt.format;
    if (format == "fractions" && !exact_available) {
        raise(ErrorCode::validation_error,
              "--format fractions requires exact-rational mode (beta = ln_sqrt2)");
    }
    return format;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) raise(ErrorCode::io_error, "cannot open " + opt.output + " for writing");
    out << text;
    if (!out.good()) raise(ErrorCode::io_error, "cannot write " + opt.output);
}

std::string probability_string(const ising::Distribution& dist, std::size_t index,
                               bool fractions) {
    if (fractions && dist.is_exact()) {
        return to_fraction_string(dist.exact_probability(index));
    }
    return io::format_double(dist.probability(index));
}

// ---------------------------------------------------------------- fig1 ----

void table_block(std::ostream& out, const std::string& label, const ising::Distribution& dist,
                 bool fractions, const char* note) {
    out << "P(s2,s3 | G=" << label << "), beta=ln(sqrt(2)), shared evidence: s1=+1" << note
        << "\n";
    out << "  s2  s3  P\n";
    for (std::size_t i = 0; i < dist.size(); ++i) {
        const auto config = dist.configuration_at(i);
        out << "  " << (config.spin(2) > 0 ? "+1" : "-1") << "  "
            << (config.spin(3) > 0 ? "+1" : "-1") << "  "
            << probability_string(dist, i, fractions) << "\n";
    }
}

int cmd_fig1(const Options& opt) {
    const std::string format = resolve_format(opt, "fractions", true);
    const knowledge::KnowledgeState state(presets::fig1_ensemble(),
                                          ising::InverseTemperature::ln_sqrt2());
    const auto table_1a = knowledge::conditional_distribution(state, "1a");
    const auto table_1b = knowledge::conditional_distribution(state, "1b");
    const auto same_sign = [](const ising::Configuration& c) { return c.spin(2) == c.spin(3); };
    const Rational event_1a = *ising::event_probability_exact(table_1a, same_sign);
    const Rational event_1b = *ising::event_probability_exact(table_1b, same_sign);

    std::ostringstream out;
    if (format == "csv") {
        out << "geometry,config,probability\n";
        for (const auto& [label, table] : {std::pair{"1a", &table_1a}, {"1b", &table_1b}}) {
            for (std::size_t i = 0; i < table->size(); ++i) {
                out << label << ',' << io::format_config(table->configuration_at(i)) << ','
                    << io::format_double(table->probability(i)) << "\n";
            }
        }
        out << "# P(s2==s3|1a)=" << to_fraction_string(event_1a) << "\n";
        out << "# P(s2==s3|1b)=" << to_fraction_string(event_1b) << "\n";
    } else {
        const bool fractions = format == "fractions";
        table_block(out, "1a", table_1a, fractions, "");
        out << "P(s2==s3|1a)="
            << (fractions ? to_fraction_string(event_1a) : io::format_double(to_double(event_1a)))
            << "\n\n";
        table_block(out, "1b", table_1b, fractions, " (s4 marginalized)");
        out << "P(s2==s3|1b)="
            << (fractions ? to_fraction_string(event_1b) : io::format_double(to_double(event_1b)))
            << "\n";
    }
    emit(opt, out.str());
    return 0;
}

// ---------------------------------------------------------------- audit ----

int cmd_audit(const Options& opt, const std::string& file) {
    knowledge::GeometryEnsemble ensemble = presets::fig1_ensemble();
    ising::InverseTemperature beta = ising::InverseTemperature::ln_sqrt2();
    if (!file.empty()) {
        io::EnsembleDocument doc = io::load_ensemble_document(file);
        ensemble = std::move(doc.ensemble);
        if (doc.beta) beta = *doc.beta;
    }
    const auto report =
        knowledge::independence_audit(ensemble, beta, opt.tolerance.value_or(1e-12));
    const std::string format = resolve_format(opt, "text", report.exact);

    std::ostringstream out;
    if (format == "csv") {
        out << io::audit_report_to_csv(report);
    } else {
        out << "independence audit: " << ensemble.geometry_count() << " geometries, scope (";
        for (std::size_t k = 0; k < report.scope.size(); ++k) {
            out << (k ? "," : "") << 's' << report.scope[k];
        }
        out << "), mode=" << (report.exact ? "exact-rational" : "floating") << "\n";
        for (const auto& pair : report.pairs) {
            out << "pair " << pair.label_a << "," << pair.label_b << ": max_diff="
                << (pair.max_diff_exact ? to_fraction_string(*pair.max_diff_exact)
                                        : io::format_double(pair.max_diff));
            out << ", tv_distance="
                << (pair.tv_distance_exact ? to_fraction_string(*pair.tv_distance_exact)
                                           : io::format_double(pair.tv_distance));
            out << "\n";
        }
        out << "max entry: " << io::format_config(report.argmax_configuration()) << " (pair "
            << report.worst().label_a << "," << report.worst().label_b << ")\n";
        out << "geometry_dependent=" << (report.geometry_dependent ? "true" : "false") << "\n";
    }
    emit(opt, out.str());
    return 0; // dependence is a finding, not an error
}

// ----------------------------------------------------------------- born ----

int cmd_born(const Options& opt, const std::vector<double>& gammas, int points) {
    if (points < 1 || points > 1'000'000) {
        raise(ErrorCode::validation_error, "--points must be between 1 and 1000000");
    }
    for (double gamma : gammas) {
        if (!(gamma > 0.0) || !std::isfinite(gamma)) {
            raise(ErrorCode::validation_error, "--gamma values must be positive, got " +
                                                   io::format_double(gamma));
        }
    }
    const std::string format = resolve_format(opt, "csv", false);
    std::vector<double> thetas(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k) {
        thetas[static_cast<std::size_t>(k)] = 2.0 * std::numbers::pi * k / points;
    }
    const auto rows = retro::born_limit_scan(thetas, gammas);

    std::vector<double> max_deviation(gammas.size(), 0.0);
    for (std::size_t g = 0; g < gammas.size(); ++g) {
        for (std::size_t k = 0; k < thetas.size(); ++k) {
            max_deviation[g] = std::max(max_deviation[g], rows[g * thetas.size() + k].deviation);
        }
    }

    std::ostringstream out;
    if (format == "csv") {
        out << "theta,gamma,value\n";
        for (const auto& row : rows) {
            out << io::format_double(row.theta) << ',' << io::format_double(row.gamma) << ','
                << io::format_double(row.deviation) << "\n";
        }
    } else {
        out << "Born-limit scan: " << points << " angles, " << gammas.size() << " gamma values\n";
    }
    for (std::size_t g = 0; g < gammas.size(); ++g) {
        out << "# gamma=" << io::format_double(gammas[g])
            << " max_deviation=" << io::format_double(max_deviation[g]) << "\n";
    }
    for (std::size_t g = 0; g + 1 < gammas.size(); ++g) {
        if (max_deviation[g + 1] == 0.0) continue;
        out << "# reduction gamma=" << io::format_double(gammas[g]) << " -> gamma="
            << io::format_double(gammas[g + 1]) << ": "
            << io::format_double(max_deviation[g] / max_deviation[g + 1]) << "x\n";
    }
    emit(opt, out.str());
    return 0;
}

// ----------------------------------------------------------------- chsh ----

int cmd_chsh(const Options& opt, const std::vector<double>& gammas) {
    for (double gamma : gammas) {
        if (!(gamma > 0.0) || !std::isfinite(gamma)) {
            raise(ErrorCode::validation_error, "--gamma values must be positive, got " +
                                                   io::format_double(gamma));
        }
    }
    const std::string format = resolve_format(opt, "csv", false);
    const auto angles = presets::chsh_standard_angles();

    std::ostringstream out;
    if (format != "csv") out << "CHSH at the standard settings\n";
    out << "a,a_prime,b,b_prime,gamma,chsh,bell_violating\n";
    for (double gamma : gammas) {
        const double value = retro::chsh_value(angles.a, angles.a_prime, angles.b, angles.b_prime,
                                               retro::AnsatzParams(gamma));
        out << io::format_double(angles.a) << ',' << io::format_double(angles.a_prime) << ','
            << io::format_double(angles.b) << ',' << io::format_double(angles.b_prime) << ','
            << io::format_double(gamma) << ',' << io::format_double(value) << ','
            << (value > 2.0 ? "true" : "false") << "\n";
    }
    emit(opt, out.str());
    return 0;
}

// ----------------------------------------------------------------- dual ----

int cmd_dual(const Options& opt, int samples, std::uint64_t seed) {
    if (samples < 1) raise(ErrorCode::validation_error, "--samples must be >= 1");
    const double tolerance = opt.tolerance.value_or(1e-10);
    const std::string format = resolve_format(opt, "text", false);

    // Raw-bit uniforms so the report is identical across standard libraries.
    std::mt19937_64 rng(seed);
    auto uniform01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    double max_residual = -1.0;
    double at_alpha = 0.0, at_beta = 0.0, at_gamma = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double alpha = 2.0 * std::numbers::pi * uniform01();
        const double beta_angle = 2.0 * std::numbers::pi * uniform01();
        const double gamma = 1e-3 * std::pow(2.0 / 1e-3, uniform01()); // log-uniform [1e-3, 2]
        const auto result =
            retro::duality_check({alpha, beta_angle}, retro::AnsatzParams(gamma), tolerance);
        if (result.residual > max_residual) {
            max_residual = result.residual;
            at_alpha = alpha;
            at_beta = beta_angle;
            at_gamma = gamma;
        }
    }
    const bool pass = max_residual <= tolerance;

    std::ostringstream out;
    if (format == "csv") {
        out << "samples,seed,tolerance,max_residual,pass\n";
        out << samples << ',' << seed << ',' << io::format_double(tolerance) << ','
            << io::format_double(max_residual) << ',' << (pass ? "true" : "false") << "\n";
    } else {
        out << "duality sweep: samples=" << samples << " seed=" << seed
            << " tolerance=" << io::format_double(tolerance) << "\n";
        out << "max_residual=" << io::format_double(max_residual)
            << " at alpha=" << io::format_double(at_alpha)
            << " beta=" << io::format_double(at_beta)
            << " gamma=" << io::format_double(at_gamma) << "\n";
        out << "result=" << (pass ? "pass" : "fail") << "\n";
    }
    emit(opt, out.str());
    return pass ? 0 : 5;
}

// ---------------------------------------------------------------- slits ----

int cmd_slits(const Options& opt) {
    const std::string format = resolve_format(opt, "csv", false);
    const auto which_path = knowledge::double_slit_demo(knowledge::SlitGeometry::which_path);
    const auto interference = knowledge::double_slit_demo(knowledge::SlitGeometry::interference);

    std::ostringstream out;
    if (format == "csv") {
        out << "geometry,P(N=1),P(N=2)\n";
        out << "which-path," << io::format_double(which_path.one_slit) << ','
            << io::format_double(which_path.two_slits) << "\n";
        out << "interference," << io::format_double(interference.one_slit) << ','
            << io::format_double(interference.two_slits) << "\n";
    } else {
        out << "P(N | G) for the delayed-choice double slit\n";
        out << "  which-path:   P(N=1)=" << io::format_double(which_path.one_slit)
            << "  P(N=2)=" << io::format_double(which_path.two_slits) << "\n";
        out << "  interference: P(N=1)=" << io::format_double(interference.one_slit)
            << "  P(N=2)=" << io::format_double(interference.two_slits) << "\n";
    }
    emit(opt, out.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"aao: exact all-at-once probabilities for small spin graphs:\n"
                 "geometry-conditional tables, independence audits, and the\n"
                 "retrocausal spin model's Born/Bell limits."};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    app.footer(exit_codes_help);

    Options opt;
    app.add_option("--format", opt.format, "Output format: csv, text, or fractions")
        ->check(CLI::IsMember({"csv", "text", "fractions"}));
    app.add_option("--output", opt.output, "Write output to a file instead of stdout");
    double tolerance_flag = 0.0;
    auto* tol_opt = app.add_option("--tolerance", tolerance_flag,
                                   "Override the command's tolerance (audit: dependence "
                                   "threshold, dual: residual bound)");

    auto* fig1 = app.add_subcommand(
        "fig1", "Both built-in conditional tables and the s2==s3 event probabilities");
    std::string audit_file;
    auto* audit = app.add_subcommand(
        "audit", "Independence-Fallacy audit of an ensemble file (default: built-in ensemble)");
    audit->add_option("file", audit_file, "Ensemble document (JSON)");
    std::vector<double> born_gammas{0.1, 0.05, 0.01};
    int born_points = 1000;
    auto* born = app.add_subcommand("born", "Born-limit deviation scan, CSV theta,gamma,value");
    born->add_option("--gamma", born_gammas, "Comma-separated gamma list")->delimiter(',');
    born->add_option("--points", born_points, "Number of theta grid points over [0, 2*pi)");
    std::vector<double> chsh_gammas{1e-6, 0.5, 1.0};
    auto* chsh = app.add_subcommand("chsh", "CHSH values at the standard settings per gamma");
    chsh->add_option("--gamma", chsh_gammas, "Comma-separated gamma list")->delimiter(',');
    int dual_samples = 100;
    std::uint64_t dual_seed = 0;
    auto* dual = app.add_subcommand("dual", "Entangled-vs-sequential duality residual sweep");
    dual->add_option("--samples", dual_samples, "Number of random (alpha, beta, gamma) triples");
    dual->add_option("--seed", dual_seed, "Random seed (sweep is deterministic given the seed)");
    auto* slits = app.add_subcommand("slits", "The double-slit conditional table P(N | G)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (tol_opt->count() > 0) {
        if (!(tolerance_flag > 0.0) || !std::isfinite(tolerance_flag)) {
            std::cerr << "error: --tolerance must be a positive real\n";
            return 3;
        }
        opt.tolerance = tolerance_flag;
    }

    try {
        if (fig1->parsed()) return cmd_fig1(opt);
        if (audit->parsed()) return cmd_audit(opt, audit_file);
        if (born->parsed()) return cmd_born(opt, born_gammas, born_points);
        if (chsh->parsed()) return cmd_chsh(opt, chsh_gammas);
        if (dual->parsed()) return cmd_dual(opt, dual_samples, dual_seed);
        if (slits->parsed()) return cmd_slits(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
