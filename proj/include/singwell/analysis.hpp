#pragma once

#include <optional>
#include <span>
#include <vector>

#include "singwell/errors.hpp"

namespace singwell::analysis {

// Dimensionless potential with dominant origin singularity g / zeta^beta and
// an optional extra Coulomb tail g1 / zeta (Kratzer-type composites with
// beta = 2).  Units: zeta = |x| / (hbar/mc), energies in mc^2, so the radial
// equation reads psi'' - (kappa^2 + 2 V(zeta)) psi = 0.
struct PotentialSpec {
    double beta = 1.0;         // singularity exponent, 0 < beta <= 2
    double g = 0.0;            // dominant coupling (g2 when beta == 2)
    std::optional<double> g1;  // additional Coulomb coupling, composites only

    double operator()(double zeta) const;
    void validate() const;  // throws std::invalid_argument outside 0 < beta <= 2

    static PotentialSpec coulomb(double g1);
    static PotentialSpec inverse_square(double g2);
    static PotentialSpec kratzer(double g1, double g2);  // beta=2 composite; pure Coulomb at g2=0
    static PotentialSpec inverse_power(double beta, double g);
};

// Exponents of the local solution psi ~ zeta^s at the origin, with the
// subset retained by the Hermiticity criterion.
struct IndicialSolution {
    double s_plus;
    double s_minus;
    std::vector<double> admissible_s;
};

enum class Parity : int { even = +1, odd = -1 };
enum class OriginValue { zero, finite };
enum class OriginDerivative { zero, finite, infinite };
enum class Degeneracy { nondegenerate, twofold };

const char* to_string(Parity p);
const char* to_string(OriginValue v);
const char* to_string(OriginDerivative d);
const char* to_string(Degeneracy d);  // "nondegenerate" / "double"

// One admissible origin branch: the (psi(0+), psi'(0+)) behavior and the
// full-line parity extensions it admits.
struct OriginBranch {
    double s;
    OriginValue psi_at_origin;
    OriginDerivative dpsi_at_origin;
    std::vector<Parity> parities;
};

struct BoundaryClassification {
    std::vector<OriginBranch> branches;    // two for beta < 1, one otherwise
    std::vector<Parity> allowed_parities;  // union over branches
    Degeneracy degeneracy;                 // twofold iff beta == 2

    OriginValue psi_at_origin() const { return branches.front().psi_at_origin; }
    OriginDerivative dpsi_at_origin() const { return branches.front().dpsi_at_origin; }
};

// Critical inverse-square coupling below which no Hermitian bound-state
// problem exists: -1/8 in these units.
double critical_coupling();

// s(s-1) = 2g balance at the origin: s_pm = (1 +- sqrt(1+8g))/2 for beta = 2,
// (1, 0) for beta < 2.  Throws supercritical_error when beta = 2 and
// g <= -1/8 (complex or double root, nothing admissible).
IndicialSolution indicial_roots(const PotentialSpec& spec);

// Table of origin behaviors and admitted parity extensions.
BoundaryClassification classify_boundary(const PotentialSpec& spec);

struct SampledFunction {
    std::vector<double> zeta;
    std::vector<double> value;
};

// Mirror half-line samples (zeta[0] must be 0) onto the whole line with
// parity p.  The parity must be admitted by the classification, and an odd
// extension requires the sample at the origin to vanish.
SampledFunction extend_to_full_line(std::span<const double> zeta,
                                    std::span<const double> psi, Parity p,
                                    const BoundaryClassification& cls);

// 3D radial reduction: the inverse-square coupling picks up the centrifugal
// term, g2 -> g2 + l(l+1)/2.
double effective_coupling_3d(double g2, int l);

}  // namespace singwell::analysis
