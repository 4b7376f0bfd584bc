#include "umbilab/numerics.hpp"

#include <cmath>
#include <cstdlib>

#include "umbilab/errors.hpp"

namespace umb {

double pairwise_sum(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n <= 8) {
        double s = 0.0;
        for (double v : x) s += v;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

double golden_section_min(const std::function<double(double)>& f, double a, double b,
                          double tol) {
    if (!(b >= a)) throw invalid_input("golden_section_min: empty bracket");
    if (b - a <= tol) return 0.5 * (a + b);
    const double invphi = 0.6180339887498949;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw invalid_input("fit_line: need two samples of equal length");
    const std::size_t n = x.size();
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw invalid_input("fit_line: degenerate abscissae");
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (fit.slope * x[i] + fit.intercept);
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / n);
    fit.n = n;
    return fit;
}

LineFit fit_log_slope(std::span<const double> x, std::span<const double> y,
                      std::size_t min_samples) {
    if (x.size() != y.size()) throw invalid_input("fit_log_slope: length mismatch");
    if (x.size() < min_samples) throw invalid_input("fit_log_slope: too few samples");
    std::vector<double> ly(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!(y[i] > 0.0)) throw invalid_input("fit_log_slope: nonpositive value");
        ly[i] = std::log(y[i]);
    }
    return fit_line(x, ly);
}

void jacobi_sym_eig(std::vector<double>& a, std::size_t m, std::vector<double>& eigval,
                    std::vector<double>& eigvec) {
    eigvec.assign(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) eigvec[i * m + i] = 1.0;
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = p + 1; q < m; ++q) off += a[p * m + q] * a[p * m + q];
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                const double apq = a[p * m + q];
                if (std::abs(apq) < 1e-300) continue;
                const double tau = (a[q * m + q] - a[p * m + p]) / (2.0 * apq);
                const double t = (tau >= 0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < m; ++k) {
                    const double akp = a[k * m + p], akq = a[k * m + q];
                    a[k * m + p] = c * akp - s * akq;
                    a[k * m + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    const double apk = a[p * m + k], aqk = a[q * m + k];
                    a[p * m + k] = c * apk - s * aqk;
                    a[q * m + k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    const double vkp = eigvec[k * m + p], vkq = eigvec[k * m + q];
                    eigvec[k * m + p] = c * vkp - s * vkq;
                    eigvec[k * m + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    eigval.resize(m);
    for (std::size_t i = 0; i < m; ++i) eigval[i] = a[i * m + i];
    // sort ascending, keep columns aligned
    for (std::size_t i = 0; i + 1 < m; ++i) {
        std::size_t best = i;
        for (std::size_t j = i + 1; j < m; ++j)
            if (eigval[j] < eigval[best]) best = j;
        if (best != i) {
            std::swap(eigval[i], eigval[best]);
            for (std::size_t k = 0; k < m; ++k)
                std::swap(eigvec[k * m + i], eigvec[k * m + best]);
        }
    }
}

std::uint64_t SplitMix64::next_u64() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace umb
