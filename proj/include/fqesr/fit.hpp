#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace fqesr {

struct FitResult {
    std::vector<double> params;
    std::optional<std::vector<double>> covariance; // row-major p x p
    double residual_norm = 0.0;
    bool converged = false;
    int iterations = 0;
};

// Ordinary least squares line y = slope*x + intercept, closed form.
// params = {slope, intercept}; covariance from the normal equations.
FitResult linear_fit(const std::vector<double>& x, const std::vector<double>& y);

// model(params, x) -> predicted y over the whole abscissa at once.
using ModelFn =
    std::function<std::vector<double>(const std::vector<double>&, const std::vector<double>&)>;

// Optional analytic Jacobian: row-major (n_points x n_params).
using JacobianFn =
    std::function<std::vector<double>(const std::vector<double>&, const std::vector<double>&)>;

struct NllsOptions {
    int max_iterations = 200;
    double tolerance = 1e-10;   // relative residual-norm change between accepted steps
    double lambda_init = 1e-3;  // Levenberg-Marquardt damping
    double lambda_up = 10.0;
    double lambda_down = 0.3;
    double fd_rel_step = 1e-6;  // forward-difference Jacobian step, relative
    double fd_abs_floor = 1e-12;
    JacobianFn jacobian;        // empty -> finite differences
};

// Damped Gauss-Newton descent; the residual norm never increases between
// accepted steps. Non-convergence is reported via converged=false, a model
// returning non-finite values at the current point is an error.
FitResult nlls_fit(const ModelFn& model, const std::vector<double>& x,
                   const std::vector<double>& y, std::vector<double> initial_params,
                   const NllsOptions& options = {});

} // namespace fqesr
