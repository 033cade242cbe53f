#pragma once

#include <optional>
#include <span>
#include <vector>

#include "singwell/analysis.hpp"
#include "singwell/exec.hpp"

namespace singwell::oracle {

// Uniform grid on [zeta_min, zeta_max] with Dirichlet psi = 0 at both
// cutoffs; neumann_at_inner switches the inner condition to psi' = 0 (the
// beta < 1, s = 0 even branch).  diagnose_fall_to_center re-solves with
// zeta_min halved and flags a >1e-3 relative drift of the ground level.
struct GridConfig {
    double zeta_min = 1e-6;
    double zeta_max = 40.0;
    int num_points = 20000;
    int num_eigenvalues = 1;
    bool neumann_at_inner = false;
    bool diagnose_fall_to_center = false;

    double spacing() const { return (zeta_max - zeta_min) / (num_points - 1); }
    void validate() const;
};

struct GridSpectrum {
    std::vector<double> energies;              // ascending, units mc^2
    std::vector<std::vector<double>> vectors;  // full grid length, trapezoid-normalized
    GridConfig config;
    std::optional<bool> fall_to_center_warning;  // set when the diagnostic ran
};

// Grid defaults from the design rules: zeta_min = 1e-6 / kappa_0,
// zeta_max = 40 / kappa of the shallowest requested level, 20 000 points.
GridConfig suggest_grid(double g1, double g2, int num_eigenvalues);

// Lowest eigenpairs of -(1/2) D2 + diag(V) by Sturm bisection plus inverse
// iteration; per-level work items run in parallel under Exec::parallel.
GridSpectrum solve_grid(const analysis::PotentialSpec& potential, const GridConfig& config,
                        Exec exec = Exec::parallel);

// W(zeta) = psi1 psi2' - psi2 psi1' with central differences; a uniformly
// tiny result for two same-energy vectors witnesses non-degeneracy.
std::vector<double> wronskian(std::span<const double> psi1, std::span<const double> psi2,
                              const GridConfig& config);

struct ConvergenceRow {
    double h;
    double ground_energy;
};

// h-refinement study at fixed domain: halve the spacing `levels-1` times.
// observed_order is estimated from the three finest levels and extrapolated
// is the Richardson value; monotone_unbounded flags drops that do not shrink
// (the fall-to-center signature under mesh refinement).
struct ConvergenceStudy {
    std::vector<ConvergenceRow> rows;
    double extrapolated;
    double observed_order;
    bool monotone_unbounded;
};

ConvergenceStudy convergence_study(const analysis::PotentialSpec& potential,
                                   const GridConfig& base, int levels,
                                   Exec exec = Exec::parallel);

// Ground level under successive halvings of zeta_min (num_points doubled in
// step so the spacing keeps tracking the cutoff).  A sequence decreasing
// without bound is the supercritical fall-to-center witness.
std::vector<double> fall_to_center_probe(const analysis::PotentialSpec& potential,
                                         const GridConfig& base, int halvings,
                                         Exec exec = Exec::parallel);

}  // namespace singwell::oracle
