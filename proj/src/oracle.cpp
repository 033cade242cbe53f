#include "singwell/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "singwell/tridiag.hpp"

namespace singwell::oracle {

namespace {

struct Discretization {
    std::vector<double> diag;
    std::vector<double> sub;
    int offset;  // grid index of the first unknown
};

Discretization assemble(const analysis::PotentialSpec& potential, const GridConfig& cfg) {
    const double h = cfg.spacing();
    const double kinetic = 1.0 / (h * h);       // diagonal of -(1/2) D2
    const double coupling = -0.5 / (h * h);     // off-diagonal

    // unknowns: interior points for Dirichlet; the inner boundary point joins
    // for the Neumann variant (mirror across zeta_min - h/2 keeps symmetry)
    const int offset = cfg.neumann_at_inner ? 0 : 1;
    const int m = cfg.num_points - 1 - offset;  // outer point always Dirichlet

    Discretization d;
    d.offset = offset;
    d.diag.resize(m);
    d.sub.assign(m - 1, coupling);
    for (int j = 0; j < m; ++j) {
        const double zeta = cfg.zeta_min + (j + offset) * h;
        d.diag[j] = kinetic + potential(zeta);
    }
    if (cfg.neumann_at_inner) d.diag[0] = 0.5 * kinetic + potential(cfg.zeta_min);
    return d;
}

double ground_energy(const analysis::PotentialSpec& potential, const GridConfig& cfg,
                     Exec exec) {
    const Discretization d = assemble(potential, cfg);
    return tridiag::lowest_eigenvalues(d.diag, d.sub, 1, exec)[0];
}

}  // namespace

void GridConfig::validate() const {
    if (!(zeta_min > 0.0) || !(zeta_min < zeta_max))
        throw grid_error("GridConfig: need 0 < zeta_min < zeta_max");
    if (num_points < 100) throw grid_error("GridConfig: need num_points >= 100");
    if (num_eigenvalues < 1 || num_eigenvalues > num_points - 2)
        throw grid_error("GridConfig: num_eigenvalues out of range");
}

GridConfig suggest_grid(double g1, double g2, int num_eigenvalues) {
    if (num_eigenvalues < 1)
        throw std::invalid_argument("suggest_grid: need num_eigenvalues >= 1");
    GridConfig cfg;
    cfg.num_eigenvalues = num_eigenvalues;
    if (g1 < 0.0 && g2 > analysis::critical_coupling()) {
        const double s = 0.5 * (1.0 + std::sqrt(1.0 + 8.0 * g2));
        const double kappa0 = -g1 / s;                            // deepest level
        const double kappa_top = -g1 / (num_eigenvalues - 1 + s); // shallowest requested
        cfg.zeta_min = 1e-6 / kappa0;
        cfg.zeta_max = 40.0 / kappa_top;
    }
    return cfg;
}

GridSpectrum solve_grid(const analysis::PotentialSpec& potential, const GridConfig& cfg,
                        Exec exec) {
    potential.validate();
    cfg.validate();

    const Discretization d = assemble(potential, cfg);
    const auto eig = tridiag::lowest_eigenpairs(d.diag, d.sub, cfg.num_eigenvalues, exec);

    GridSpectrum out;
    out.config = cfg;
    out.energies = eig.values;
    out.vectors.resize(eig.vectors.size());

    const double h = cfg.spacing();
    for (std::size_t v = 0; v < eig.vectors.size(); ++v) {
        std::vector<double> full(cfg.num_points, 0.0);
        for (std::size_t j = 0; j < eig.vectors[v].size(); ++j)
            full[j + d.offset] = eig.vectors[v][j];
        // trapezoidal L2 normalization on the grid
        double norm = 0.0;
        for (int j = 0; j < cfg.num_points; ++j) {
            const double w = (j == 0 || j == cfg.num_points - 1) ? 0.5 : 1.0;
            norm += w * full[j] * full[j];
        }
        norm = std::sqrt(norm * h);
        for (double& t : full) t /= norm;
        out.vectors[v] = std::move(full);
    }

    if (cfg.diagnose_fall_to_center) {
        GridConfig half = cfg;
        half.zeta_min *= 0.5;
        half.diagnose_fall_to_center = false;
        const double e_half = ground_energy(potential, half, exec);
        const double scale = std::max(std::abs(out.energies[0]), 1e-300);
        out.fall_to_center_warning = std::abs(e_half - out.energies[0]) / scale > 1e-3;
    }
    return out;
}

std::vector<double> wronskian(std::span<const double> psi1, std::span<const double> psi2,
                              const GridConfig& cfg) {
    const std::size_t n = psi1.size();
    if (n != psi2.size() || static_cast<int>(n) != cfg.num_points)
        throw grid_error("wronskian: vectors must share the configured grid");
    if (n < 3) throw grid_error("wronskian: grid too small");

    const double h = cfg.spacing();
    auto deriv = [&](std::span<const double> f, std::size_t j) {
        if (j == 0) return (f[1] - f[0]) / h;
        if (j == n - 1) return (f[n - 1] - f[n - 2]) / h;
        return (f[j + 1] - f[j - 1]) / (2.0 * h);
    };

    std::vector<double> w(n);
    for (std::size_t j = 0; j < n; ++j)
        w[j] = psi1[j] * deriv(psi2, j) - psi2[j] * deriv(psi1, j);
    return w;
}

ConvergenceStudy convergence_study(const analysis::PotentialSpec& potential,
                                   const GridConfig& base, int levels, Exec exec) {
    if (levels < 2) throw std::invalid_argument("convergence_study: need levels >= 2");

    ConvergenceStudy study;
    GridConfig cfg = base;
    for (int l = 0; l < levels; ++l) {
        cfg.num_points = (base.num_points - 1) * (1 << l) + 1;  // exact halving of h
        study.rows.push_back({cfg.spacing(), ground_energy(potential, cfg, exec)});
    }

    const auto& r = study.rows;
    const int m = static_cast<int>(r.size());
    study.extrapolated = r.back().ground_energy;
    study.observed_order = 0.0;
    study.monotone_unbounded = false;

    if (m >= 3) {
        const double d1 = r[m - 2].ground_energy - r[m - 3].ground_energy;
        const double d2 = r[m - 1].ground_energy - r[m - 2].ground_energy;
        if (d2 != 0.0 && d1 / d2 > 0.0) {
            study.observed_order = std::log2(std::abs(d1 / d2));
            const double p = std::min(std::max(study.observed_order, 0.5), 4.0);
            study.extrapolated = r[m - 1].ground_energy + d2 / (std::pow(2.0, p) - 1.0);
        }
        bool same_sign = true;
        for (int i = 2; i < m; ++i) {
            const double a = r[i - 1].ground_energy - r[i - 2].ground_energy;
            const double b = r[i].ground_energy - r[i - 1].ground_energy;
            if (a * b <= 0.0) same_sign = false;
        }
        study.monotone_unbounded = same_sign && std::abs(d2) >= std::abs(d1);
    } else {
        const double d = r[1].ground_energy - r[0].ground_energy;
        study.extrapolated = r[1].ground_energy + d / 3.0;  // assume order 2
    }
    return study;
}

std::vector<double> fall_to_center_probe(const analysis::PotentialSpec& potential,
                                         const GridConfig& base, int halvings, Exec exec) {
    if (halvings < 1) throw std::invalid_argument("fall_to_center_probe: need halvings >= 1");
    std::vector<double> energies;
    GridConfig cfg = base;
    for (int j = 0; j <= halvings; ++j) {
        energies.push_back(ground_energy(potential, cfg, exec));
        cfg.zeta_min *= 0.5;
        cfg.num_points *= 2;
    }
    return energies;
}

}  // namespace singwell::oracle
