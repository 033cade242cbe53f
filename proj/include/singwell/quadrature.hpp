#pragma once

#include <functional>
#include <vector>

namespace singwell::quadrature {

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Generalized Gauss-Laguerre rule: sum_i w_i f(x_i) equals
// integral_0^inf u^alpha e^{-u} f(u) du exactly for polynomial f of degree
// <= 2n-1 (Golub-Welsch on the Jacobi matrix of the weight).
GaussRule gauss_laguerre(double alpha, int n);

// Composite Simpson on [a, b] with n subintervals (made even internally).
double simpson(const std::function<double(double)>& f, double a, double b, int n);

}  // namespace singwell::quadrature
