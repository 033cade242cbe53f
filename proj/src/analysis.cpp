#include "singwell/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace singwell::analysis {

double PotentialSpec::operator()(double zeta) const {
    double v = g / std::pow(zeta, beta);
    if (g1) v += *g1 / zeta;
    return v;
}

void PotentialSpec::validate() const {
    if (!(beta > 0.0) || !(beta <= 2.0))
        throw std::invalid_argument("PotentialSpec: beta must satisfy 0 < beta <= 2, got " +
                                    std::to_string(beta));
    if (g1 && beta != 2.0)
        throw std::invalid_argument("PotentialSpec: composite g1 term is only meaningful "
                                    "alongside a beta = 2 dominant term");
}

PotentialSpec PotentialSpec::coulomb(double g1) { return {1.0, g1, std::nullopt}; }

PotentialSpec PotentialSpec::inverse_square(double g2) { return {2.0, g2, std::nullopt}; }

PotentialSpec PotentialSpec::kratzer(double g1, double g2) {
    if (g2 == 0.0) return coulomb(g1);
    return {2.0, g2, g1};
}

PotentialSpec PotentialSpec::inverse_power(double beta, double g) {
    PotentialSpec spec{beta, g, std::nullopt};
    spec.validate();
    return spec;
}

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

const char* to_string(OriginValue v) { return v == OriginValue::zero ? "zero" : "finite"; }

const char* to_string(OriginDerivative d) {
    switch (d) {
        case OriginDerivative::zero: return "zero";
        case OriginDerivative::finite: return "finite";
        default: return "infinite";
    }
}

const char* to_string(Degeneracy d) {
    return d == Degeneracy::twofold ? "double" : "nondegenerate";
}

double critical_coupling() { return -0.125; }

IndicialSolution indicial_roots(const PotentialSpec& spec) {
    spec.validate();
    if (spec.beta == 2.0) {
        // s(s-1) = 2g
        if (spec.g <= critical_coupling()) throw supercritical_error(spec.g);
        const double rad = std::sqrt(1.0 + 8.0 * spec.g);
        const double s_plus = 0.5 * (1.0 + rad);
        const double s_minus = 0.5 * (1.0 - rad);
        // Hermiticity of the potential-energy operator keeps only Re s > 1/2
        return {s_plus, s_minus, {s_plus}};
    }
    // beta < 2: s(s-1) = 0 regardless of the coupling strength
    if (spec.beta >= 1.0) return {1.0, 0.0, {1.0}};
    return {1.0, 0.0, {0.0, 1.0}};
}

BoundaryClassification classify_boundary(const PotentialSpec& spec) {
    const IndicialSolution roots = indicial_roots(spec);

    if (spec.beta == 2.0) {
        // psi ~ zeta^s with s > 1/2: Dirichlet always; the derivative
        // vanishes for s > 1 (g > 0) and diverges for s < 1 (g < 0).
        OriginDerivative d = OriginDerivative::finite;
        if (spec.g > 0.0) d = OriginDerivative::zero;
        else if (spec.g < 0.0) d = OriginDerivative::infinite;
        OriginBranch branch{roots.s_plus, OriginValue::zero, d, {Parity::even, Parity::odd}};
        return {{branch}, {Parity::even, Parity::odd}, Degeneracy::twofold};
    }

    if (spec.beta >= 1.0) {
        // only s = 1 survives; the even extension would kink at the origin
        OriginBranch branch{1.0, OriginValue::zero, OriginDerivative::finite, {Parity::odd}};
        return {{branch}, {Parity::odd}, Degeneracy::nondegenerate};
    }

    // beta < 1: both branches, each with a single admitted parity
    OriginBranch even_branch{0.0, OriginValue::finite, OriginDerivative::zero, {Parity::even}};
    OriginBranch odd_branch{1.0, OriginValue::zero, OriginDerivative::finite, {Parity::odd}};
    return {{even_branch, odd_branch}, {Parity::even, Parity::odd}, Degeneracy::nondegenerate};
}

SampledFunction extend_to_full_line(std::span<const double> zeta,
                                    std::span<const double> psi, Parity p,
                                    const BoundaryClassification& cls) {
    if (zeta.size() != psi.size() || zeta.empty())
        throw grid_error("extend_to_full_line: zeta and psi must be equal-sized and non-empty");
    if (zeta.front() != 0.0)
        throw grid_error("extend_to_full_line: half-line samples must start at zeta = 0");
    for (std::size_t i = 1; i < zeta.size(); ++i)
        if (!(zeta[i] > zeta[i - 1]))
            throw grid_error("extend_to_full_line: zeta samples must be strictly increasing");

    if (std::find(cls.allowed_parities.begin(), cls.allowed_parities.end(), p) ==
        cls.allowed_parities.end())
        throw parity_error(std::string("extend_to_full_line: ") + to_string(p) +
                           " extension is not admitted by the boundary classification");

    double peak = 0.0;
    for (double v : psi) peak = std::max(peak, std::abs(v));
    if (p == Parity::odd && std::abs(psi.front()) > 1e-12 * peak)
        throw parity_error("extend_to_full_line: odd extension of psi(0) != 0 would introduce "
                           "a jump discontinuity at the origin");

    const std::size_t n = zeta.size();
    SampledFunction out;
    out.zeta.resize(2 * n - 1);
    out.value.resize(2 * n - 1);
    const double sign = p == Parity::even ? 1.0 : -1.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        out.zeta[i] = -zeta[n - 1 - i];
        out.value[i] = sign * psi[n - 1 - i];
    }
    std::copy(zeta.begin(), zeta.end(), out.zeta.begin() + (n - 1));
    std::copy(psi.begin(), psi.end(), out.value.begin() + (n - 1));
    if (p == Parity::odd) out.value[n - 1] = 0.0;
    return out;
}

double effective_coupling_3d(double g2, int l) {
    if (l < 0) throw std::invalid_argument("effective_coupling_3d: l must be >= 0");
    return g2 + 0.5 * l * (l + 1.0);
}

}  // namespace singwell::analysis
