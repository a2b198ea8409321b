#include "spsim/fit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spsim {

std::vector<double> nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                std::vector<double> x0, const std::vector<double>& step,
                                int max_iter, double ftol) {
    const size_t n = x0.size();
    std::vector<std::vector<double>> simplex(n + 1, x0);
    for (size_t i = 0; i < n; ++i) simplex[i + 1][i] += step[i];
    std::vector<double> fv(n + 1);
    for (size_t i = 0; i <= n; ++i) fv[i] = f(simplex[i]);

    for (int iter = 0; iter < max_iter; ++iter) {
        // order
        std::vector<size_t> idx(n + 1);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return fv[a] < fv[b]; });
        std::vector<std::vector<double>> s2;
        std::vector<double> f2;
        for (size_t i : idx) {
            s2.push_back(simplex[i]);
            f2.push_back(fv[i]);
        }
        simplex = std::move(s2);
        fv = std::move(f2);
        if (std::abs(fv[n] - fv[0]) <= ftol * (std::abs(fv[0]) + ftol)) break;

        std::vector<double> centroid(n, 0.0);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j] / n;

        auto combine = [&](double coef) {
            std::vector<double> x(n);
            for (size_t j = 0; j < n; ++j)
                x[j] = centroid[j] + coef * (simplex[n][j] - centroid[j]);
            return x;
        };

        auto xr = combine(-1.0);
        double fr = f(xr);
        if (fr < fv[0]) {
            auto xe = combine(-2.0);
            double fe = f(xe);
            if (fe < fr) {
                simplex[n] = xe;
                fv[n] = fe;
            } else {
                simplex[n] = xr;
                fv[n] = fr;
            }
        } else if (fr < fv[n - 1]) {
            simplex[n] = xr;
            fv[n] = fr;
        } else {
            auto xc = combine(0.5);
            double fc = f(xc);
            if (fc < fv[n]) {
                simplex[n] = xc;
                fv[n] = fc;
            } else {
                for (size_t i = 1; i <= n; ++i) {
                    for (size_t j = 0; j < n; ++j)
                        simplex[i][j] = simplex[0][j] + 0.5 * (simplex[i][j] - simplex[0][j]);
                    fv[i] = f(simplex[i]);
                }
            }
        }
    }
    size_t best = 0;
    for (size_t i = 1; i <= n; ++i)
        if (fv[i] < fv[best]) best = i;
    return simplex[best];
}

namespace {

// solve A x = b in place, A symmetric positive-ish, n small
bool solve_linear(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>& x) {
    const size_t n = b.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-300) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (size_t r = col + 1; r < n; ++r) {
            double m = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= m * a[col][c];
            b[r] -= m * b[col];
        }
    }
    x.assign(n, 0.0);
    for (size_t r = n; r-- > 0;) {
        double s = b[r];
        for (size_t c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
        x[r] = s / a[r][r];
    }
    return true;
}

bool invert_matrix(std::vector<std::vector<double>> a, std::vector<std::vector<double>>& inv) {
    const size_t n = a.size();
    inv.assign(n, std::vector<double>(n, 0.0));
    for (size_t k = 0; k < n; ++k) {
        std::vector<double> e(n, 0.0);
        e[k] = 1.0;
        std::vector<double> col;
        if (!solve_linear(a, e, col)) return false;
        for (size_t r = 0; r < n; ++r) inv[r][k] = col[r];
    }
    return true;
}

} // namespace

LmResult levenberg_marquardt(
    const std::function<std::vector<double>(const std::vector<double>&)>& residuals,
    std::vector<double> p0, int max_iter, double ftol) {
    LmResult out;
    const size_t np = p0.size();
    auto chi2_of = [&](const std::vector<double>& p) {
        auto r = residuals(p);
        double s = 0.0;
        for (double v : r) s += v * v;
        return s;
    };

    std::vector<double> p = std::move(p0);
    auto r = residuals(p);
    const size_t m = r.size();
    double chi2 = 0.0;
    for (double v : r) chi2 += v * v;
    double lambda = 1e-3;

    for (int iter = 0; iter < max_iter; ++iter) {
        out.iterations = iter + 1;
        // numeric Jacobian
        std::vector<std::vector<double>> J(m, std::vector<double>(np));
        for (size_t j = 0; j < np; ++j) {
            double h = 1e-6 * std::max(1.0, std::abs(p[j]));
            auto pj = p;
            pj[j] += h;
            auto rj = residuals(pj);
            for (size_t i = 0; i < m; ++i) J[i][j] = (rj[i] - r[i]) / h;
        }
        std::vector<std::vector<double>> jtj(np, std::vector<double>(np, 0.0));
        std::vector<double> jtr(np, 0.0);
        for (size_t i = 0; i < m; ++i)
            for (size_t a = 0; a < np; ++a) {
                jtr[a] += J[i][a] * r[i];
                for (size_t b = a; b < np; ++b) jtj[a][b] += J[i][a] * J[i][b];
            }
        for (size_t a = 0; a < np; ++a)
            for (size_t b = 0; b < a; ++b) jtj[a][b] = jtj[b][a];

        bool improved = false;
        for (int tries = 0; tries < 12 && !improved; ++tries) {
            auto damped = jtj;
            for (size_t a = 0; a < np; ++a) damped[a][a] *= (1.0 + lambda);
            std::vector<double> delta;
            std::vector<double> neg_jtr(np);
            for (size_t a = 0; a < np; ++a) neg_jtr[a] = -jtr[a];
            if (!solve_linear(damped, neg_jtr, delta)) {
                lambda *= 10.0;
                continue;
            }
            auto pn = p;
            for (size_t a = 0; a < np; ++a) pn[a] += delta[a];
            double c2 = chi2_of(pn);
            if (c2 < chi2) {
                double rel = (chi2 - c2) / std::max(chi2, 1e-300);
                p = pn;
                r = residuals(p);
                chi2 = c2;
                lambda = std::max(lambda * 0.3, 1e-12);
                improved = true;
                if (rel < ftol) {
                    out.converged = true;
                    iter = max_iter; // stop outer loop
                }
            } else {
                lambda *= 10.0;
            }
        }
        if (!improved) {
            out.converged = true; // stuck at a (local) optimum
            break;
        }
    }

    out.params = p;
    out.chi2 = chi2;
    out.n_points = static_cast<int>(m);
    // covariance from the undamped normal matrix
    {
        std::vector<std::vector<double>> J(m, std::vector<double>(np));
        for (size_t j = 0; j < np; ++j) {
            double h = 1e-6 * std::max(1.0, std::abs(p[j]));
            auto pj = p;
            pj[j] += h;
            auto rj = residuals(pj);
            for (size_t i = 0; i < m; ++i) J[i][j] = (rj[i] - r[i]) / h;
        }
        std::vector<std::vector<double>> jtj(np, std::vector<double>(np, 0.0));
        for (size_t i = 0; i < m; ++i)
            for (size_t a = 0; a < np; ++a)
                for (size_t b = 0; b < np; ++b) jtj[a][b] += J[i][a] * J[i][b];
        std::vector<std::vector<double>> inv;
        if (invert_matrix(jtj, inv) && m > np) {
            double s2 = chi2 / static_cast<double>(m - np);
            for (auto& row : inv)
                for (auto& v : row) v *= s2;
            out.covariance = std::move(inv);
        }
    }
    return out;
}

} // namespace spsim
