#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "singwell/analysis.hpp"
#include "singwell/oracle.hpp"
#include "singwell/spectra.hpp"

namespace {

using nlohmann::json;
using namespace singwell;

// fixed 17-significant-digit formatting: re-parsing reproduces the double
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

enum class Format { csv, json_fmt };

struct CommonOpts {
    std::string format = "csv";
    std::string output;  // empty = stdout

    Format fmt() const { return format == "json" ? Format::json_fmt : Format::csv; }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", opts.output, "output path (default stdout)");
}

int emit(const CommonOpts& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(opts.output);
    if (!out) {
        std::cerr << "cannot open output file: " << opts.output << "\n";
        return 1;
    }
    out << text;
    return out.good() ? 0 : 1;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += sep;
        s += parts[i];
    }
    return s;
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

// ---------------------------------------------------------------- classify

struct ClassifyOpts {
    double beta = 2.0;
    std::optional<double> g2, g1, g;
    CommonOpts common;
};

int run_classify(const ClassifyOpts& o) {
    analysis::PotentialSpec spec;
    if (o.beta == 2.0) {
        const double g2 = o.g2.value_or(o.g.value_or(0.0));
        spec = o.g1 ? analysis::PotentialSpec::kratzer(*o.g1, g2)
                    : analysis::PotentialSpec::inverse_square(g2);
    } else {
        // origin behavior for beta < 2 does not depend on the strength
        spec = analysis::PotentialSpec::inverse_power(o.beta, o.g.value_or(-1.0));
    }

    const auto roots = analysis::indicial_roots(spec);  // supercritical -> exit 2 upstream
    const auto cls = analysis::classify_boundary(spec);

    if (o.common.fmt() == Format::json_fmt) {
        json j;
        j["beta"] = spec.beta;
        j["g"] = spec.g;
        if (spec.g1) j["g1"] = *spec.g1;
        j["s_plus"] = roots.s_plus;
        j["s_minus"] = roots.s_minus;
        j["admissible_s"] = roots.admissible_s;
        j["branches"] = json::array();
        for (const auto& b : cls.branches) {
            json jb;
            jb["s"] = b.s;
            jb["psi_at_origin"] = analysis::to_string(b.psi_at_origin);
            jb["dpsi_at_origin"] = analysis::to_string(b.dpsi_at_origin);
            jb["parities"] = json::array();
            for (auto p : b.parities) jb["parities"].push_back(analysis::to_string(p));
            j["branches"].push_back(jb);
        }
        j["allowed_parities"] = json::array();
        for (auto p : cls.allowed_parities) j["allowed_parities"].push_back(analysis::to_string(p));
        j["degeneracy"] = analysis::to_string(cls.degeneracy);
        return emit(o.common, j.dump(2) + "\n");
    }

    std::ostringstream csv;
    csv << "s_plus,s_minus,admissible_s,s,psi_at_origin,dpsi_at_origin,parities,degeneracy\n";
    std::vector<std::string> adm;
    for (double s : roots.admissible_s) adm.push_back(fmt(s));
    for (const auto& b : cls.branches) {
        std::vector<std::string> par;
        for (auto p : b.parities) par.push_back(analysis::to_string(p));
        csv << fmt(roots.s_plus) << ',' << fmt(roots.s_minus) << ',' << join(adm, "|") << ','
            << fmt(b.s) << ',' << analysis::to_string(b.psi_at_origin) << ','
            << analysis::to_string(b.dpsi_at_origin) << ',' << join(par, "|") << ','
            << analysis::to_string(cls.degeneracy) << "\n";
    }
    return emit(o.common, csv.str());
}

// ---------------------------------------------------------------- spectrum

struct SpectrumOpts {
    double g1 = 0.0, g2 = 0.0;
    int nmax = 0;
    std::string domain = "half";
    CommonOpts common;
};

spectra::Domain parse_domain(const std::string& d) {
    return d == "full" ? spectra::Domain::full_line : spectra::Domain::half_line;
}

int run_spectrum(const SpectrumOpts& o) {
    if (o.g2 <= analysis::critical_coupling()) throw supercritical_error(o.g2);

    std::string verdict = "ok";
    std::vector<spectra::BoundState> states;
    if (o.g1 == 0.0) {
        const auto v = spectra::pure_inverse_square_verdict(o.g2);
        verdict = "no bound states";
        std::cerr << "no bound states: " << v.detail << "\n";
    } else {
        states = spectra::solve_spectrum({o.g1, o.g2, o.nmax, parse_domain(o.domain)});
        if (states.empty()) {
            verdict = "no bound states";
            std::cerr << "no bound states: repulsive Coulomb coupling g1 = " << fmt(o.g1) << "\n";
        }
    }

    if (o.common.fmt() == Format::json_fmt) {
        json j;
        j["verdict"] = verdict;
        j["states"] = json::array();
        for (const auto& st : states)
            j["states"].push_back({{"n", st.n},
                                   {"energy", st.energy},
                                   {"s", st.s},
                                   {"kappa", st.kappa}});
        return emit(o.common, j.dump(2) + "\n");
    }

    std::ostringstream csv;
    csv << "n,energy,s,kappa\n";
    for (const auto& st : states)
        csv << st.n << ',' << fmt(st.energy) << ',' << fmt(st.s) << ',' << fmt(st.kappa) << "\n";
    return emit(o.common, csv.str());
}

// ------------------------------------------------------------ wavefunction

struct WavefunctionOpts {
    double g1 = 0.0, g2 = 0.0;
    int n = 0;
    int samples = 600;
    double zmin = 0.0, zmax = 1.2;
    std::string domain = "half";
    CommonOpts common;
};

int run_wavefunction(const WavefunctionOpts& o) {
    if (o.g2 <= analysis::critical_coupling()) throw supercritical_error(o.g2);
    if (o.samples < 2) throw std::invalid_argument("wavefunction: need at least 2 samples");

    const auto states =
        spectra::solve_spectrum({o.g1, o.g2, o.n, parse_domain(o.domain)});
    if (states.empty())
        throw std::invalid_argument("wavefunction: no bound states for g1 = " + fmt(o.g1) +
                                    ", g2 = " + fmt(o.g2));
    const auto& st = states.back();  // quantum number o.n

    const auto zetas = linspace(o.zmin, o.zmax, o.samples);
    const auto psi = spectra::sample_eigenfunction(st, o.g1, o.g2, zetas);

    if (o.common.fmt() == Format::json_fmt) {
        json j;
        j["n"] = st.n;
        j["energy"] = st.energy;
        j["samples"] = json::array();
        for (std::size_t i = 0; i < zetas.size(); ++i)
            j["samples"].push_back(
                {{"zeta", zetas[i]}, {"psi", psi[i]}, {"rho", psi[i] * psi[i]}});
        return emit(o.common, j.dump(2) + "\n");
    }

    std::ostringstream csv;
    csv << "zeta,psi,rho\n";
    for (std::size_t i = 0; i < zetas.size(); ++i)
        csv << fmt(zetas[i]) << ',' << fmt(psi[i]) << ',' << fmt(psi[i] * psi[i]) << "\n";
    return emit(o.common, csv.str());
}

// ---------------------------------------------------------------- oracle

struct OracleOpts {
    double g1 = 0.0, g2 = 0.0;
    int nmax = 0;
    int points = 0;  // 0 = suggested default
    double zmin = 0.0, zmax = 0.0;
    bool diagnose = false;
    CommonOpts common;
};

int run_oracle(const OracleOpts& o) {
    if (o.g2 <= analysis::critical_coupling()) throw supercritical_error(o.g2);

    std::vector<spectra::BoundState> analytic;
    if (o.g1 != 0.0) {
        analytic = o.g2 == 0.0 ? spectra::hydrogen_spectrum(o.g1, o.nmax)
                               : spectra::kratzer_spectrum(o.g1, o.g2, o.nmax);
    }

    oracle::GridConfig cfg = oracle::suggest_grid(o.g1, o.g2, o.nmax + 1);
    if (o.points > 0) cfg.num_points = o.points;
    if (o.zmin > 0.0) cfg.zeta_min = o.zmin;
    if (o.zmax > 0.0) cfg.zeta_max = o.zmax;
    cfg.diagnose_fall_to_center = o.diagnose;

    const auto potential = analysis::PotentialSpec::kratzer(o.g1, o.g2);
    const auto grid = oracle::solve_grid(potential, cfg);

    if (grid.fall_to_center_warning.value_or(false))
        std::cerr << "warning: ground level shifted by >1e-3 relative under halving "
                     "zeta_min (fall-to-center diagnostic)\n";

    if (o.common.fmt() == Format::json_fmt) {
        json j;
        j["rows"] = json::array();
        for (int n = 0; n <= o.nmax; ++n) {
            json row;
            row["n"] = n;
            row["energy_grid"] = grid.energies[n];
            if (n < static_cast<int>(analytic.size())) {
                row["energy_analytic"] = analytic[n].energy;
                row["rel_error"] =
                    std::abs(grid.energies[n] - analytic[n].energy) / std::abs(analytic[n].energy);
            }
            j["rows"].push_back(row);
        }
        if (grid.fall_to_center_warning) j["fall_to_center_warning"] = *grid.fall_to_center_warning;
        return emit(o.common, j.dump(2) + "\n");
    }

    std::ostringstream csv;
    csv << "n,energy_analytic,energy_grid,rel_error\n";
    for (int n = 0; n <= o.nmax; ++n) {
        csv << n << ',';
        if (n < static_cast<int>(analytic.size())) {
            const double rel =
                std::abs(grid.energies[n] - analytic[n].energy) / std::abs(analytic[n].energy);
            csv << fmt(analytic[n].energy) << ',' << fmt(grid.energies[n]) << ',' << fmt(rel);
        } else {
            csv << ',' << fmt(grid.energies[n]) << ',';
        }
        csv << "\n";
    }
    return emit(o.common, csv.str());
}

// ---------------------------------------------------------------- figures

struct FiguresOpts {
    std::string out_dir = ".";
    int samples = 600;
    double zmax = 1.2;
};

int run_figures(const FiguresOpts& o) {
    if (o.samples < 2) throw std::invalid_argument("figures: need at least 2 samples");
    const auto zetas = linspace(0.0, o.zmax, o.samples);

    auto ground_curve = [&](double g1, double g2) {
        const auto states = spectra::solve_spectrum({g1, g2, 0, spectra::Domain::half_line});
        return spectra::sample_eigenfunction(states.front(), g1, g2, zetas);
    };

    {
        std::ofstream out(o.out_dir + "/fig1.csv");
        if (!out) {
            std::cerr << "cannot open " << o.out_dir << "/fig1.csv\n";
            return 1;
        }
        out << "g2,zeta,psi\n";
        const double g1 = -10.0;
        for (double g2 : {-0.124999, -0.1, 0.0, 0.1, 0.3}) {
            const auto psi = ground_curve(g1, g2);
            for (std::size_t i = 0; i < zetas.size(); ++i)
                out << fmt(g2) << ',' << fmt(zetas[i]) << ',' << fmt(psi[i]) << "\n";
        }
        if (!out.good()) return 1;
    }
    {
        std::ofstream out(o.out_dir + "/fig2.csv");
        if (!out) {
            std::cerr << "cannot open " << o.out_dir << "/fig2.csv\n";
            return 1;
        }
        out << "g1,zeta,psi\n";
        const double g2 = -0.124999;
        for (double g1 : {-10.0, -5.0}) {
            const auto psi = ground_curve(g1, g2);
            for (std::size_t i = 0; i < zetas.size(); ++i)
                out << fmt(g1) << ',' << fmt(zetas[i]) << ',' << fmt(psi[i]) << "\n";
        }
        if (!out.good()) return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bound states of 1D potentials singular at the origin"};
    app.require_subcommand(1);

    ClassifyOpts cls;
    auto* c_classify = app.add_subcommand("classify",
                                          "origin exponents, boundary behavior, parity and "
                                          "degeneracy verdicts");
    c_classify->add_option("--beta", cls.beta, "singularity exponent, 0 < beta <= 2")->required();
    double g2v = 0.0, g1v = 0.0, gv = 0.0;
    c_classify->add_option("--g2", g2v, "inverse-square coupling (beta = 2)");
    c_classify->add_option("--g1", g1v, "Coulomb coupling of a composite potential");
    c_classify->add_option("--g", gv, "generic dominant coupling (beta < 2)");
    add_common(c_classify, cls.common);

    SpectrumOpts spec;
    auto* c_spectrum = app.add_subcommand("spectrum", "closed-form bound-state levels");
    c_spectrum->add_option("--g1", spec.g1, "Coulomb coupling")->required();
    c_spectrum->add_option("--g2", spec.g2, "inverse-square coupling")->capture_default_str();
    c_spectrum->add_option("--nmax", spec.nmax, "highest quantum number")->capture_default_str();
    c_spectrum->add_option("--domain", spec.domain, "normalization domain")
        ->check(CLI::IsMember({"half", "full"}))
        ->capture_default_str();
    add_common(c_spectrum, spec.common);

    WavefunctionOpts wf;
    auto* c_wave = app.add_subcommand("wavefunction", "normalized eigenfunction samples");
    c_wave->add_option("--g1", wf.g1, "Coulomb coupling")->required();
    c_wave->add_option("--g2", wf.g2, "inverse-square coupling")->capture_default_str();
    c_wave->add_option("--n", wf.n, "quantum number")->capture_default_str();
    c_wave->add_option("--samples", wf.samples, "number of zeta samples")->capture_default_str();
    c_wave->add_option("--zmin", wf.zmin, "first sample")->capture_default_str();
    c_wave->add_option("--zmax", wf.zmax, "last sample")->capture_default_str();
    c_wave->add_option("--domain", wf.domain, "normalization domain")
        ->check(CLI::IsMember({"half", "full"}))
        ->capture_default_str();
    add_common(c_wave, wf.common);

    OracleOpts orc;
    auto* c_oracle = app.add_subcommand("oracle",
                                        "finite-difference cross-validation of the analytic "
                                        "levels");
    c_oracle->add_option("--g1", orc.g1, "Coulomb coupling")->required();
    c_oracle->add_option("--g2", orc.g2, "inverse-square coupling")->capture_default_str();
    c_oracle->add_option("--nmax", orc.nmax, "highest quantum number")->capture_default_str();
    c_oracle->add_option("--points", orc.points, "grid points (default 20000)");
    c_oracle->add_option("--zmin", orc.zmin, "inner cutoff override");
    c_oracle->add_option("--zmax", orc.zmax, "outer cutoff override");
    c_oracle->add_flag("--diagnose", orc.diagnose, "run the fall-to-center diagnostic");
    add_common(c_oracle, orc.common);

    FiguresOpts figs;
    auto* c_figures = app.add_subcommand("figures",
                                         "normalized ground-state curves for the standard "
                                         "parameter sets (fig1.csv, fig2.csv)");
    c_figures->add_option("--out-dir", figs.out_dir, "output directory")->capture_default_str();
    c_figures->add_option("--samples", figs.samples, "samples per curve")->capture_default_str();
    c_figures->add_option("--zmax", figs.zmax, "last sample")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(c_classify)) {
            if (c_classify->count("--g2")) cls.g2 = g2v;
            if (c_classify->count("--g1")) cls.g1 = g1v;
            if (c_classify->count("--g")) cls.g = gv;
            return run_classify(cls);
        }
        if (app.got_subcommand(c_spectrum)) return run_spectrum(spec);
        if (app.got_subcommand(c_wave)) return run_wavefunction(wf);
        if (app.got_subcommand(c_oracle)) return run_oracle(orc);
        if (app.got_subcommand(c_figures)) return run_figures(figs);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
