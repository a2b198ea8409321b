#pragma once

#include <functional>
#include <vector>

namespace spsim {

// Derivative-free simplex minimizer (Nelder-Mead).
std::vector<double> nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                std::vector<double> x0, const std::vector<double>& step,
                                int max_iter = 4000, double ftol = 1e-12);

struct LmResult {
    std::vector<double> params;
    std::vector<std::vector<double>> covariance;
    double chi2 = 0.0;
    int n_points = 0;
    bool converged = false;
    int iterations = 0;
};

// Levenberg-style damped least squares with a numeric Jacobian on the
// residual vector r(p); covariance = (J^T J)^-1 * chi2/(n-p) at the optimum.
LmResult levenberg_marquardt(
    const std::function<std::vector<double>(const std::vector<double>&)>& residuals,
    std::vector<double> p0, int max_iter = 200, double ftol = 1e-10);

} // namespace spsim
