#pragma once

#include <span>
#include <vector>

#include "singwell/exec.hpp"

namespace singwell::tridiag {

struct Eigenpairs {
    std::vector<double> values;                // ascending
    std::vector<std::vector<double>> vectors;  // unit 2-norm, aligned with values
};

// Number of eigenvalues of the symmetric tridiagonal matrix (diag, sub)
// strictly below x, by the Sturm sequence of the LDL^T pivots.
// sub[i] couples rows i and i+1 (size diag.size() - 1).
int count_below(std::span<const double> diag, std::span<const double> sub, double x);

// Lowest k eigenvalues by per-index bisection.  Each index is an independent
// work item; Exec::parallel distributes them over OpenMP threads and produces
// bitwise the same result as Exec::serial.
std::vector<double> lowest_eigenvalues(std::span<const double> diag,
                                       std::span<const double> sub, int k,
                                       Exec exec = Exec::parallel);

// Lowest k eigenpairs: bisection for the values, then inverse iteration with
// a pivoted tridiagonal solve for each vector (deterministic per-index start
// vectors, so the two execution policies agree bitwise).
Eigenpairs lowest_eigenpairs(std::span<const double> diag,
                             std::span<const double> sub, int k,
                             Exec exec = Exec::parallel);

}  // namespace singwell::tridiag
