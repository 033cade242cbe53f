#pragma once

#include <stdexcept>
#include <string>

namespace singwell {

// Argument sits on a pole of the gamma function (z = 0, -1, -2, ...), or a
// series parameter does.
class pole_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A series or quadrature failed to meet its tolerance within the iteration cap.
class no_convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Inverse-square coupling at or below the critical value -1/8: the indicial
// roots are complex (or a double root) and no admissible origin exponent
// exists.  Downstream code must not proceed with such couplings.
class supercritical_error : public std::domain_error {
public:
    explicit supercritical_error(double g2)
        : std::domain_error("supercritical inverse-square coupling g2 = " +
                            std::to_string(g2) +
                            " <= critical coupling g2c = -1/8 (-0.125): no bound-state problem"),
          coupling_(g2) {}
    double coupling() const noexcept { return coupling_; }

private:
    double coupling_;
};

// Requested parity extension is not admitted by the boundary classification,
// or the half-line samples cannot be extended continuously.
class parity_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Mismatched or malformed finite-difference grids.
class grid_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace singwell
