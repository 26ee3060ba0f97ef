#include "spectough/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "spectough/errors.hpp"

namespace spectough {

std::string SpectralResult::to_json() const {
    nlohmann::ordered_json j;
    j["lambda1"] = lambda1;
    j["residual"] = residual;
    j["iterations"] = iterations;
    j["method"] = method;
    return j.dump();
}

namespace {

double norm2(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

void matvec(const DistanceMatrix& d, const std::vector<double>& x, std::vector<double>& y) {
    int n = d.order();
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += d.at(i, j) * x[j];
        y[i] = s;
    }
}

SpectralResult jacobi_fallback(const DistanceMatrix& d, double tol, long iterations_used) {
    int n = d.order();
    std::vector<double> a(d.entries().begin(), d.entries().end());
    std::vector<double> values, vectors;
    jacobi_eigensystem(std::move(a), n, values, vectors);

    int best = 0;
    for (int i = 1; i < n; ++i) {
        if (values[i] > values[best]) best = i;
    }
    SpectralResult r;
    r.lambda1 = values[best];
    r.perron.resize(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += vectors[static_cast<size_t>(i) * n + best];
    double sign = sum < 0 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) r.perron[i] = sign * vectors[static_cast<size_t>(i) * n + best];
    double nrm = norm2(r.perron);
    for (double& v : r.perron) v /= nrm;

    std::vector<double> y(n);
    matvec(d, r.perron, y);
    r.residual = 0.0;
    for (int i = 0; i < n; ++i) {
        r.residual = std::max(r.residual, std::fabs(y[i] - r.lambda1 * r.perron[i]));
        if (r.perron[i] <= 0.0) {
            throw NumericError("Jacobi fallback produced a nonpositive Perron entry");
        }
    }
    if (r.residual > tol) {
        throw NumericError("eigensolve residual " + std::to_string(r.residual) +
                           " above tolerance after Jacobi fallback");
    }
    r.iterations = iterations_used;
    r.method = "jacobi";
    return r;
}

}  // namespace

SpectralResult spectral_radius(const DistanceMatrix& d, double tol, long max_iter) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    if (max_iter < 0) throw std::invalid_argument("max_iter cannot be negative");
    int n = d.order();
    if (n == 1) {
        return SpectralResult{0.0, {1.0}, 0, 0.0, "power"};
    }

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    for (long iter = 1; iter <= max_iter; ++iter) {
        matvec(d, x, y);
        double lambda = 0.0;
        for (int i = 0; i < n; ++i) lambda += x[i] * y[i];
        double resid = 0.0;
        for (int i = 0; i < n; ++i) resid = std::max(resid, std::fabs(y[i] - lambda * x[i]));
        if (resid <= tol) {
            SpectralResult r;
            r.lambda1 = lambda;
            r.perron = x;
            r.iterations = iter;
            r.residual = resid;
            r.method = "power";
            return r;
        }
        double nrm = norm2(y);
        if (!(nrm > 0.0)) throw NumericError("power iteration collapsed to the zero vector");
        for (int i = 0; i < n; ++i) x[i] = y[i] / nrm;
    }
    return jacobi_fallback(d, tol, max_iter);
}

void jacobi_eigensystem(std::vector<double> a, int n, std::vector<double>& values,
                        std::vector<double>& vectors) {
    vectors.assign(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) vectors[static_cast<size_t>(i) * n + i] = 1.0;

    auto off_norm = [&]() {
        double s = 0.0;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double v = a[static_cast<size_t>(p) * n + q];
                s += 2.0 * v * v;
            }
        }
        return std::sqrt(s);
    };
    double scale = 0.0;
    for (double v : a) scale = std::max(scale, std::fabs(v));
    const double stop = (scale > 0 ? scale : 1.0) * 1e-14 * n;

    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps && off_norm() > stop; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[static_cast<size_t>(p) * n + q];
                if (std::fabs(apq) < 1e-300) continue;
                double app = a[static_cast<size_t>(p) * n + p];
                double aqq = a[static_cast<size_t>(q) * n + q];
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);

                a[static_cast<size_t>(p) * n + p] = app - t * apq;
                a[static_cast<size_t>(q) * n + q] = aqq + t * apq;
                a[static_cast<size_t>(p) * n + q] = 0.0;
                a[static_cast<size_t>(q) * n + p] = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        double arp = a[static_cast<size_t>(r) * n + p];
                        double arq = a[static_cast<size_t>(r) * n + q];
                        a[static_cast<size_t>(r) * n + p] = arp - s * (arq + tau * arp);
                        a[static_cast<size_t>(p) * n + r] = a[static_cast<size_t>(r) * n + p];
                        a[static_cast<size_t>(r) * n + q] = arq + s * (arp - tau * arq);
                        a[static_cast<size_t>(q) * n + r] = a[static_cast<size_t>(r) * n + q];
                    }
                    double vrp = vectors[static_cast<size_t>(r) * n + p];
                    double vrq = vectors[static_cast<size_t>(r) * n + q];
                    vectors[static_cast<size_t>(r) * n + p] = vrp - s * (vrq + tau * vrp);
                    vectors[static_cast<size_t>(r) * n + q] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }
    values.resize(n);
    for (int i = 0; i < n; ++i) values[i] = a[static_cast<size_t>(i) * n + i];
}

double perron_root(const std::vector<double>& matrix, int m) {
    if (m < 1) throw std::invalid_argument("matrix order must be at least 1");
    if (matrix.size() != static_cast<size_t>(m) * m) {
        throw std::invalid_argument("entry count does not match order");
    }
    if (m == 1) return matrix[0];
    for (double v : matrix) {
        if (v < 0.0) throw std::invalid_argument("perron_root needs a nonnegative matrix");
    }

    std::vector<double> x(m, 1.0), y(m);
    const long max_iter = 200000;
    for (long iter = 0; iter < max_iter; ++iter) {
        for (int i = 0; i < m; ++i) {
            double s = 0.0;
            for (int j = 0; j < m; ++j) s += matrix[static_cast<size_t>(i) * m + j] * x[j];
            y[i] = s;
        }
        // Collatz-Wielandt bracket: min_i y_i/x_i <= lambda <= max_i y_i/x_i
        double lo = y[0] / x[0], hi = lo;
        for (int i = 1; i < m; ++i) {
            double r = y[i] / x[i];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        if (!(lo > 0.0)) throw NumericError("matrix is reducible or degenerate");
        if (hi - lo <= 1e-13 * hi) return 0.5 * (lo + hi);
        double nrm = norm2(y);
        for (int i = 0; i < m; ++i) x[i] = y[i] / nrm;
    }
    throw NumericError("perron_root did not converge");
}

}  // namespace spectough
