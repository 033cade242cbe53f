#include "singwell/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace singwell::tridiag {

namespace {

// Minimum admissible pivot magnitude, LAPACK-style: safe_min scaled by the
// largest squared off-diagonal element.
double pivot_floor(std::span<const double> sub) {
    double emax2 = 1.0;
    for (double e : sub) emax2 = std::max(emax2, e * e);
    return std::numeric_limits<double>::min() * emax2;
}

struct Interval {
    double lo, hi;
};

Interval gershgorin(std::span<const double> diag, std::span<const double> sub) {
    const std::size_t n = diag.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(sub[i - 1]) : 0.0) +
                         (i + 1 < n ? std::abs(sub[i]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    const double pad = std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi));
    return {lo - pad, hi + pad};
}

int count_below_impl(std::span<const double> diag, std::span<const double> sub,
                     double x, double pivmin) {
    int count = 0;
    double d = 1.0;
    const std::size_t n = diag.size();
    for (std::size_t i = 0; i < n; ++i) {
        d = diag[i] - x - (i > 0 ? sub[i - 1] * sub[i - 1] / d : 0.0);
        if (std::abs(d) <= pivmin) d = -pivmin;
        if (d < 0.0) ++count;
    }
    return count;
}

// Bisect for the eigenvalue with 0-based index m in [lo, hi].
double bisect_index(std::span<const double> diag, std::span<const double> sub,
                    int m, Interval box, double pivmin) {
    double lo = box.lo, hi = box.hi;
    constexpr int kMaxIter = 128;
    for (int it = 0; it < kMaxIter; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // no representable midpoint left
        const double tol = 4.0 * std::numeric_limits<double>::epsilon() *
                           std::max(std::abs(lo), std::abs(hi));
        if (hi - lo <= tol) break;
        if (count_below_impl(diag, sub, mid, pivmin) <= m)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Deterministic start vector for inverse iteration; depends only on the
// eigenvalue index, never on thread scheduling.
void fill_start_vector(std::vector<double>& x, int index) {
    std::uint64_t state = 0x9e3779b97f4a7c15ull ^ (0x100000001b3ull * (index + 1));
    for (double& v : x) {
        // splitmix64 step
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z ^= z >> 31;
        v = static_cast<double>(z >> 11) * 0x1.0p-53 - 0.5;
    }
}

// One pass of (T - shift) x_out = x_in via Gaussian elimination with partial
// pivoting; fill-in limited to a second superdiagonal.  Overwrites x in place.
void solve_shifted(std::span<const double> diag, std::span<const double> sub,
                   double shift, std::vector<double>& x, double pivmin,
                   std::vector<double>& u, std::vector<double>& v,
                   std::vector<double>& w) {
    const std::size_t n = diag.size();
    double cur_d = diag[0] - shift;
    double cur_u1 = n > 1 ? sub[0] : 0.0;
    double cur_u2 = 0.0;
    double cur_b = x[0];

    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double low = sub[i];
        const double nxt_d = diag[i + 1] - shift;
        const double nxt_u1 = (i + 2 < n) ? sub[i + 1] : 0.0;
        const double nxt_b = x[i + 1];
        if (std::abs(low) > std::abs(cur_d)) {
            // swap the pivot row down
            const double m = cur_d / low;
            u[i] = low;
            v[i] = nxt_d;
            w[i] = nxt_u1;
            x[i] = nxt_b;
            cur_d = cur_u1 - m * nxt_d;
            cur_u1 = cur_u2 - m * nxt_u1;
            cur_b = cur_b - m * nxt_b;
        } else {
            if (std::abs(cur_d) <= pivmin) cur_d = pivmin;
            const double m = low / cur_d;
            u[i] = cur_d;
            v[i] = cur_u1;
            w[i] = cur_u2;
            x[i] = cur_b;
            cur_d = nxt_d - m * cur_u1;
            cur_u1 = nxt_u1 - m * cur_u2;
            cur_b = nxt_b - m * cur_b;
        }
        cur_u2 = 0.0;
    }
    u[n - 1] = std::abs(cur_d) <= pivmin ? pivmin : cur_d;
    v[n - 1] = 0.0;
    w[n - 1] = 0.0;
    x[n - 1] = cur_b;

    // back substitution
    x[n - 1] /= u[n - 1];
    if (n >= 2) x[n - 2] = (x[n - 2] - v[n - 2] * x[n - 1]) / u[n - 2];
    for (std::size_t ii = n; ii-- > 2;) {
        const std::size_t i = ii - 2;
        x[i] = (x[i] - v[i] * x[i + 1] - w[i] * x[i + 2]) / u[i];
    }
}

std::vector<double> inverse_iteration(std::span<const double> diag,
                                      std::span<const double> sub,
                                      double lambda, int index, double pivmin) {
    const std::size_t n = diag.size();
    std::vector<double> x(n), u(n), v(n), w(n);
    fill_start_vector(x, index);

    constexpr int kSweeps = 3;
    for (int sweep = 0; sweep < kSweeps; ++sweep) {
        solve_shifted(diag, sub, lambda, x, pivmin, u, v, w);
        double norm = 0.0;
        for (double t : x) norm += t * t;
        norm = std::sqrt(norm);
        if (!(norm > 0.0) || !std::isfinite(norm)) {
            // degenerate start; reseed and retry
            fill_start_vector(x, index + 101);
            continue;
        }
        for (double& t : x) t /= norm;
    }

    // fix the overall sign: largest-magnitude component positive
    std::size_t imax = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs(x[i]) > std::abs(x[imax])) imax = i;
    if (x[imax] < 0.0)
        for (double& t : x) t = -t;
    return x;
}

void check_args(std::span<const double> diag, std::span<const double> sub, int k) {
    if (diag.empty()) throw std::invalid_argument("tridiag: empty matrix");
    if (sub.size() + 1 != diag.size())
        throw std::invalid_argument("tridiag: sub must have diag.size()-1 entries");
    if (k < 1 || static_cast<std::size_t>(k) > diag.size())
        throw std::invalid_argument("tridiag: k out of range");
}

}  // namespace

int count_below(std::span<const double> diag, std::span<const double> sub, double x) {
    check_args(diag, sub, 1);
    return count_below_impl(diag, sub, x, pivot_floor(sub));
}

std::vector<double> lowest_eigenvalues(std::span<const double> diag,
                                       std::span<const double> sub, int k, Exec exec) {
    check_args(diag, sub, k);
    const double pivmin = pivot_floor(sub);
    const Interval box = gershgorin(diag, sub);
    std::vector<double> values(k);

    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic) if (par)
    for (int m = 0; m < k; ++m)
        values[m] = bisect_index(diag, sub, m, box, pivmin);

    std::sort(values.begin(), values.end());
    return values;
}

Eigenpairs lowest_eigenpairs(std::span<const double> diag,
                             std::span<const double> sub, int k, Exec exec) {
    Eigenpairs out;
    out.values = lowest_eigenvalues(diag, sub, k, exec);
    out.vectors.resize(k);

    const double pivmin = pivot_floor(sub);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic) if (par)
    for (int m = 0; m < k; ++m)
        out.vectors[m] = inverse_iteration(diag, sub, out.values[m], m, pivmin);

    return out;
}

}  // namespace singwell::tridiag
