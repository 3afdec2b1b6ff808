#include "fqesr/fit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fqesr {

namespace {

// Cholesky solve of the SPD system a*x = b, a row-major n x n. Returns false
// if the factorization breaks down.
bool cholesky_solve(std::vector<double> a, std::vector<double> b, std::size_t n,
                    std::vector<double>& x) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double sum = a[i * n + j];
            for (std::size_t k = 0; k < j; ++k) sum -= a[i * n + k] * a[j * n + k];
            if (i == j) {
                if (!(sum > 0.0)) return false;
                a[i * n + i] = std::sqrt(sum);
            } else {
                a[i * n + j] = sum / a[j * n + j];
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        double sum = b[i];
        for (std::size_t k = 0; k < i; ++k) sum -= a[i * n + k] * b[k];
        b[i] = sum / a[i * n + i];
    }
    x.assign(n, 0.0);
    for (std::size_t ii = n; ii-- > 0;) {
        double sum = b[ii];
        for (std::size_t k = ii + 1; k < n; ++k) sum -= a[k * n + ii] * x[k];
        x[ii] = sum / a[ii * n + ii];
    }
    return true;
}

bool cholesky_inverse(const std::vector<double>& a, std::size_t n, std::vector<double>& inv) {
    inv.assign(n * n, 0.0);
    std::vector<double> col(n), sol;
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(col.begin(), col.end(), 0.0);
        col[j] = 1.0;
        if (!cholesky_solve(a, col, n, sol)) return false;
        for (std::size_t i = 0; i < n; ++i) inv[i * n + j] = sol[i];
    }
    return true;
}

bool all_finite(const std::vector<double>& v) {
    for (double e : v)
        if (!std::isfinite(e)) return false;
    return true;
}

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double e : v) s += e * e;
    return std::sqrt(s);
}

} // namespace

FitResult linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("linear_fit: x and y length mismatch");
    const std::size_t n = x.size();
    if (n < 2) throw std::invalid_argument("linear_fit: need at least 2 points");

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        sxx += dx * dx;
        sxy += dx * (y[i] - my);
        scale = std::max(scale, x[i] * x[i]);
    }
    if (sxx <= 1e-28 * std::max(scale, 1e-300) * static_cast<double>(n))
        throw std::invalid_argument("linear_fit: degenerate abscissa (x values all equal)");

    FitResult r;
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    r.params = {slope, intercept};
    r.converged = true;
    r.iterations = 0;

    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = y[i] - (slope * x[i] + intercept);
        rss += e * e;
    }
    r.residual_norm = std::sqrt(rss);

    if (n > 2) {
        const double sigma2 = rss / static_cast<double>(n - 2);
        // (X^T X)^-1 in (slope, intercept) order
        const double var_slope = sigma2 / sxx;
        const double var_icpt = sigma2 * (1.0 / static_cast<double>(n) + mx * mx / sxx);
        const double cov_si = -sigma2 * mx / sxx;
        r.covariance = std::vector<double>{var_slope, cov_si, cov_si, var_icpt};
    }
    return r;
}

FitResult nlls_fit(const ModelFn& model, const std::vector<double>& x,
                   const std::vector<double>& y, std::vector<double> params,
                   const NllsOptions& opt) {
    if (x.size() != y.size()) throw std::invalid_argument("nlls_fit: x and y length mismatch");
    const std::size_t m = x.size();
    const std::size_t np = params.size();
    if (m == 0 || np == 0) throw std::invalid_argument("nlls_fit: empty data or parameter vector");

    auto residual = [&](const std::vector<double>& p, std::vector<double>& r) -> bool {
        const std::vector<double> f = model(p, x);
        if (f.size() != m) throw std::runtime_error("nlls_fit: model output length mismatch");
        if (!all_finite(f)) return false;
        r.resize(m);
        for (std::size_t i = 0; i < m; ++i) r[i] = y[i] - f[i];
        return true;
    };

    std::vector<double> r;
    if (!residual(params, r))
        throw std::runtime_error("nlls_fit: model produced non-finite output at initial parameters");
    double rnorm = norm2(r);

    FitResult out;
    out.params = params;
    out.residual_norm = rnorm;

    double lambda = opt.lambda_init;
    std::vector<double> jac(m * np), jtj(np * np), jtr(np), damped, step, trial, rt;

    auto fill_jacobian = [&](const std::vector<double>& p) {
        if (opt.jacobian) {
            jac = opt.jacobian(p, x);
            if (jac.size() != m * np) throw std::runtime_error("nlls_fit: jacobian size mismatch");
            return;
        }
        const std::vector<double> f0 = model(p, x);
        if (!all_finite(f0)) throw std::runtime_error("nlls_fit: model produced non-finite output");
        for (std::size_t j = 0; j < np; ++j) {
            std::vector<double> pj = p;
            const double h = std::max(opt.fd_abs_floor, opt.fd_rel_step * std::abs(pj[j]));
            pj[j] += h;
            const std::vector<double> fj = model(pj, x);
            if (!all_finite(fj))
                throw std::runtime_error("nlls_fit: model produced non-finite output in Jacobian step");
            for (std::size_t i = 0; i < m; ++i) jac[i * np + j] = (fj[i] - f0[i]) / h;
        }
    };

    int iter = 0;
    for (; iter < opt.max_iterations; ++iter) {
        fill_jacobian(params);

        std::fill(jtj.begin(), jtj.end(), 0.0);
        std::fill(jtr.begin(), jtr.end(), 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t a = 0; a < np; ++a) {
                jtr[a] += jac[i * np + a] * r[i];
                for (std::size_t b = a; b < np; ++b) jtj[a * np + b] += jac[i * np + a] * jac[i * np + b];
            }
        }
        for (std::size_t a = 0; a < np; ++a)
            for (std::size_t b = 0; b < a; ++b) jtj[a * np + b] = jtj[b * np + a];

        double diag_max = 0.0;
        for (std::size_t a = 0; a < np; ++a) diag_max = std::max(diag_max, jtj[a * np + a]);
        if (diag_max <= 0.0) break; // flat model: nothing to do

        bool accepted = false;
        for (int attempt = 0; attempt < 40 && !accepted; ++attempt) {
            damped = jtj;
            for (std::size_t a = 0; a < np; ++a)
                damped[a * np + a] += lambda * std::max(jtj[a * np + a], 1e-14 * diag_max);
            if (!cholesky_solve(damped, jtr, np, step)) {
                lambda *= opt.lambda_up;
                continue;
            }
            trial = params;
            for (std::size_t a = 0; a < np; ++a) trial[a] += step[a];
            if (!residual(trial, rt)) {
                lambda *= opt.lambda_up; // wild step, back off
                continue;
            }
            const double tnorm = norm2(rt);
            if (tnorm <= rnorm) {
                const double change = (rnorm - tnorm) / std::max(rnorm, 1e-300);
                params = trial;
                r = rt;
                const double prev = rnorm;
                rnorm = tnorm;
                lambda = std::max(lambda * opt.lambda_down, 1e-14);
                accepted = true;
                if (change < opt.tolerance || prev == 0.0) {
                    out.converged = true;
                    iter++;
                    goto done;
                }
            } else {
                lambda *= opt.lambda_up;
            }
        }
        if (!accepted) break; // damping exhausted without progress
    }
done:
    out.params = params;
    out.residual_norm = rnorm;
    out.iterations = iter;

    // Covariance from the undamped normal matrix at the solution.
    if (out.converged && m > np) {
        std::fill(jtj.begin(), jtj.end(), 0.0);
        fill_jacobian(params);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t a = 0; a < np; ++a)
                for (std::size_t b = a; b < np; ++b) jtj[a * np + b] += jac[i * np + a] * jac[i * np + b];
        for (std::size_t a = 0; a < np; ++a)
            for (std::size_t b = 0; b < a; ++b) jtj[a * np + b] = jtj[b * np + a];
        std::vector<double> inv;
        if (cholesky_inverse(jtj, np, inv)) {
            const double sigma2 = rnorm * rnorm / static_cast<double>(m - np);
            for (double& v : inv) v *= sigma2;
            out.covariance = std::move(inv);
        }
    }
    return out;
}

} // namespace fqesr
