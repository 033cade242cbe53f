#include "singwell/spectra.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "singwell/quadrature.hpp"
#include "singwell/specfun.hpp"

namespace singwell::spectra {

namespace {

double origin_exponent(double g2) {
    if (g2 <= analysis::critical_coupling()) throw supercritical_error(g2);
    return 0.5 * (1.0 + std::sqrt(1.0 + 8.0 * g2));
}

void check_state(const BoundState& state, double g1, double g2) {
    const double s = origin_exponent(g2);
    if (std::abs(state.s - s) > 1e-12 * std::max(1.0, s))
        throw std::invalid_argument("bound state does not match g2 (origin exponent differs)");
    const double kappa = std::abs(g1) / (state.n + state.s);
    if (std::abs(state.kappa - kappa) > 1e-12 * kappa)
        throw std::invalid_argument("bound state does not match g1 (decay rate differs)");
}

BoundState make_state(double g1, double s, int n) {
    const double kappa = std::abs(g1) / (n + s);
    return {n, s, -0.5 * kappa * kappa, kappa, 1.0, std::nullopt};
}

// integral_0^inf [zeta^s e^{-k z} L_n(2 k z)]^2 dzeta via the matched
// Gauss-Laguerre rule; the integrand is weight times a degree-2n polynomial
// after u = 2 kappa zeta, so the 200-node rule is exact up to rounding.
double norm_integral(const BoundState& state) {
    const double alpha = 2.0 * state.s;
    const auto rule = quadrature::gauss_laguerre(alpha, 200);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double l = specfun::laguerre(state.n, 2.0 * state.s - 1.0, rule.nodes[i]);
        sum += rule.weights[i] * l * l;
    }
    return sum * std::pow(2.0 * state.kappa, -(2.0 * state.s + 1.0));
}

}  // namespace

std::vector<BoundState> hydrogen_spectrum(double g1, int n_max) {
    if (n_max < 0) throw std::invalid_argument("hydrogen_spectrum: n_max must be >= 0");
    std::vector<BoundState> states;
    if (g1 >= 0.0) return states;  // no bound states for a repulsive (or absent) tail
    states.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) states.push_back(make_state(g1, 1.0, n));
    return states;
}

std::vector<BoundState> kratzer_spectrum(double g1, double g2, int n_max) {
    if (n_max < 0) throw std::invalid_argument("kratzer_spectrum: n_max must be >= 0");
    const double s = origin_exponent(g2);  // throws for supercritical g2
    if (g1 == 0.0)
        throw std::invalid_argument("kratzer_spectrum: g1 = 0 is the pure inverse-square "
                                    "potential; see pure_inverse_square_verdict");
    std::vector<BoundState> states;
    if (g1 > 0.0) return states;
    states.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) states.push_back(make_state(g1, s, n));
    return states;
}

Verdict pure_inverse_square_verdict(double g2) {
    if (g2 <= analysis::critical_coupling())
        return {false, Verdict::Reason::supercritical,
                "g2 = " + std::to_string(g2) + " <= -1/8: no Hermitian bound-state problem "
                "(fall to the center)"};
    const double s = origin_exponent(g2);
    return {false, Verdict::Reason::quantization_unsatisfiable,
            "quantization would need -n = s, impossible since s = " + std::to_string(s) +
            " > 1/2"};
}

double eigenfunction(const BoundState& state, double g1, double g2, double zeta) {
    check_state(state, g1, g2);
    if (zeta < 0.0) throw std::invalid_argument("eigenfunction: zeta must be >= 0");
    if (zeta == 0.0) return state.s > 0.0 ? 0.0 : state.norm_const;
    return state.norm_const * std::pow(zeta, state.s) * std::exp(-state.kappa * zeta) *
           specfun::laguerre(state.n, 2.0 * state.s - 1.0, 2.0 * state.kappa * zeta);
}

std::vector<double> sample_eigenfunction(const BoundState& state, double g1, double g2,
                                         std::span<const double> zetas, Exec exec) {
    check_state(state, g1, g2);
    std::vector<double> out(zetas.size());
    const bool par = exec == Exec::parallel;
    const std::int64_t n = static_cast<std::int64_t>(zetas.size());
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t i = 0; i < n; ++i) {
        const double z = zetas[i];
        if (z == 0.0) {
            out[i] = state.s > 0.0 ? 0.0 : state.norm_const;
        } else {
            out[i] = state.norm_const * std::pow(z, state.s) * std::exp(-state.kappa * z) *
                     specfun::laguerre(state.n, 2.0 * state.s - 1.0, 2.0 * state.kappa * z);
        }
    }
    return out;
}

BoundState normalize(const BoundState& state, double g1, double g2, Domain domain) {
    check_state(state, g1, g2);
    const double integral = norm_integral(state);
    if (!(integral > 0.0) || !std::isfinite(integral))
        throw no_convergence_error("normalize: quadrature produced a non-positive norm");
    BoundState out = state;
    const double halves = domain == Domain::full_line ? 2.0 : 1.0;
    out.norm_const = 1.0 / std::sqrt(halves * integral);
    return out;
}

double density(const BoundState& state, double g1, double g2, double zeta) {
    const double psi = eigenfunction(state, g1, g2, zeta);
    return psi * psi;
}

double overlap(const BoundState& a, const BoundState& b, double g1, double g2) {
    check_state(a, g1, g2);
    check_state(b, g1, g2);
    // same g2, hence same s; substitute u = (kappa_a + kappa_b) zeta
    const double s = a.s;
    const double ksum = a.kappa + b.kappa;
    const auto rule = quadrature::gauss_laguerre(2.0 * s, 200);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double u = rule.nodes[i];
        const double la = specfun::laguerre(a.n, 2.0 * s - 1.0, 2.0 * a.kappa * u / ksum);
        const double lb = specfun::laguerre(b.n, 2.0 * s - 1.0, 2.0 * b.kappa * u / ksum);
        sum += rule.weights[i] * la * lb;
    }
    return a.norm_const * b.norm_const * sum * std::pow(ksum, -(2.0 * s + 1.0));
}

std::vector<BoundState> solve_spectrum(const SpectrumRequest& req) {
    if (req.g1 == 0.0) return {};
    auto states = req.g2 == 0.0 ? hydrogen_spectrum(req.g1, req.n_max)
                                : kratzer_spectrum(req.g1, req.g2, req.n_max);
    for (auto& st : states) st = normalize(st, req.g1, req.g2, req.normalization_domain);
    return states;
}

}  // namespace singwell::spectra
