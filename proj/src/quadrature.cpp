#include "singwell/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "singwell/specfun.hpp"
#include "singwell/tridiag.hpp"

namespace singwell::quadrature {

GaussRule gauss_laguerre(double alpha, int n) {
    if (n < 1) throw std::invalid_argument("gauss_laguerre: need n >= 1");
    if (alpha <= -1.0) throw std::invalid_argument("gauss_laguerre: need alpha > -1");

    // Jacobi matrix of the weight u^alpha e^{-u}
    std::vector<double> diag(n), sub(n - 1);
    for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + alpha + 1.0;
    for (int k = 0; k + 1 < n; ++k) sub[k] = std::sqrt((k + 1.0) * (k + 1.0 + alpha));

    const auto eig = tridiag::lowest_eigenpairs(diag, sub, n, Exec::serial);

    const double mu0 = std::exp(specfun::log_gamma(alpha + 1.0).log_abs);
    GaussRule rule;
    rule.nodes = eig.values;
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        const double first = eig.vectors[i][0];
        rule.weights[i] = mu0 * first * first;
    }
    return rule;
}

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n < 2) n = 2;
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

}  // namespace singwell::quadrature
