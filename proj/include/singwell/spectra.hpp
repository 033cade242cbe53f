#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "singwell/analysis.hpp"
#include "singwell/exec.hpp"

namespace singwell::spectra {

enum class Domain { half_line, full_line };

// One bound state of the half-line problem.  energy = -kappa^2 / 2 in units
// of mc^2; kappa = |g1| / (n + s); norm_const scales the eigenfunction so the
// probability integral over the chosen domain is 1 (1.0 until normalized).
struct BoundState {
    int n;             // quantum number = interior node count
    double s;          // origin exponent
    double energy;     // < 0
    double kappa;      // decay rate k * lambda
    double norm_const = 1.0;
    std::optional<analysis::Parity> parity;  // set for full-line states
};

struct SpectrumRequest {
    double g1 = 0.0;
    double g2 = 0.0;
    int n_max = 0;
    Domain normalization_domain = Domain::half_line;
};

// Why the pure inverse-square potential has no bound states.
struct Verdict {
    bool has_bound_states;  // always false for this potential class
    enum class Reason { quantization_unsatisfiable, supercritical } reason;
    std::string detail;
};

// E_n = -g1^2 / (2 (n+1)^2) with s = 1 for attractive g1; empty for g1 >= 0.
std::vector<BoundState> hydrogen_spectrum(double g1, int n_max);

// E_n = -g1^2 / (2 (n+s)^2) with s = (1 + sqrt(1 + 8 g2)) / 2.  Requires
// g1 != 0 (g1 = 0 belongs to pure_inverse_square_verdict) and g2 > -1/8;
// empty for g1 > 0.  Reduces to hydrogen_spectrum exactly at g2 = 0.
std::vector<BoundState> kratzer_spectrum(double g1, double g2, int n_max);

// No bound states for V = g2 / zeta^2, whatever g2: subcritical couplings
// cannot satisfy the quantization condition -n = s (s > 1/2), supercritical
// ones are excluded by Hermiticity.
Verdict pure_inverse_square_verdict(double g2);

// N ζ^s e^{-κζ} L_n^(2s-1)(2κζ); zero at the origin for s > 0.
double eigenfunction(const BoundState& state, double g1, double g2, double zeta);

// Eigenfunction at many points; the per-point evaluations are independent
// and Exec::parallel distributes them over OpenMP threads (bitwise equal to
// the serial reference).
std::vector<double> sample_eigenfunction(const BoundState& state, double g1, double g2,
                                         std::span<const double> zetas,
                                         Exec exec = Exec::parallel);

// Fill norm_const so the probability integral over `domain` equals 1, using
// a generalized Gauss-Laguerre rule matched to the weight e^{-2κζ} ζ^{2s}
// (exact up to rounding).  Idempotent: the constant is recomputed from the
// state parameters, not rescaled.
BoundState normalize(const BoundState& state, double g1, double g2,
                     Domain domain = Domain::half_line);

// |psi|^2, the probability density.
double density(const BoundState& state, double g1, double g2, double zeta);

// Half-line overlap integral <psi_a, psi_b> for states of the same potential.
double overlap(const BoundState& a, const BoundState& b, double g1, double g2);

// Dispatch on (g1, g2) and normalize: empty for g1 >= 0 or g1 = 0.
std::vector<BoundState> solve_spectrum(const SpectrumRequest& req);

}  // namespace singwell::spectra
