#include "spsim/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace spsim {

namespace {

struct PulseTerm {
    double peak;
    double sigma_or_tau;
    bool gaussian;
    double center;
    double detuning; // rad/ps, Hamiltonian sign convention
    double phase;
};

std::vector<PulseTerm> build_terms(const EmitterParams& em, const DriveConfig& drive) {
    std::vector<PulseTerm> terms;
    for (size_t i = 0; i < drive.pulses.size(); ++i) {
        const PulseSpec& p = drive.pulses[i];
        double area = p.area(drive.repetition_rate_mhz, drive.power_area_kappa);
        PulseTerm t;
        t.peak = p.peak_rabi(area);
        t.gaussian = (p.envelope == PulseEnvelope::gaussian);
        t.sigma_or_tau = t.gaussian ? fwhm_to_sigma(p.duration_fwhm_ps)
                                    : p.duration_fwhm_ps / (2.0 * std::acosh(2.0));
        t.center = p.center_ps + (i == 1 ? drive.inter_pulse_delay_ps : 0.0);
        t.detuning = p.detuning_rad_per_ps(em);
        t.phase = p.phase_rad;
        terms.push_back(t);
    }
    return terms;
}

// <g|H|e> coefficient at time t
inline std::complex<double> drive_coeff(const std::vector<PulseTerm>& terms, double t) {
    std::complex<double> f{0.0, 0.0};
    for (const auto& p : terms) {
        double x = t - p.center;
        double env;
        if (p.gaussian)
            env = p.peak * std::exp(-x * x / (2.0 * p.sigma_or_tau * p.sigma_or_tau));
        else
            env = p.peak / std::cosh(x / p.sigma_or_tau);
        f += std::polar(0.5 * env, p.detuning * x + p.phase);
    }
    return f;
}

struct UnitaryState {
    std::complex<double> g, e;
};

inline UnitaryState deriv(const UnitaryState& s, std::complex<double> f) {
    const std::complex<double> mi{0.0, -1.0};
    return {mi * f * s.e, mi * std::conj(f) * s.g};
}

// rho stored as (gg, ee, ge); eg = conj(ge)
struct RhoState {
    double gg, ee;
    std::complex<double> ge;
};

inline RhoState deriv(const RhoState& r, std::complex<double> f, double gamma) {
    std::complex<double> eg = std::conj(r.ge);
    // -i[H,rho] with H = [[0,f],[f*,0]]
    double dgg = 2.0 * std::imag(f * eg);
    double dee = -dgg;
    std::complex<double> dge = std::complex<double>(0.0, -1.0) * f * (r.ee - r.gg);
    // decay
    dgg += gamma * r.ee;
    dee -= gamma * r.ee;
    dge -= 0.5 * gamma * r.ge;
    return {dgg, dee, dge};
}

Trajectory solve_once(const EmitterParams& em, const DriveConfig& drive, const SolveOptions& opts) {
    auto terms = build_terms(em, drive);
    double t0 = 0.0, t1 = 0.0;
    bool first = true;
    for (const auto& p : terms) {
        double half = opts.span * (p.gaussian ? p.sigma_or_tau : 2.2 * p.sigma_or_tau);
        double lo = p.center - half, hi = p.center + half;
        if (first || lo < t0) t0 = lo;
        if (first || hi > t1) t1 = hi;
        first = false;
    }
    const double dt = opts.dt_ps;
    const long nsteps = std::max(1L, std::lround(std::ceil((t1 - t0) / dt)));
    int stride = opts.store_every > 0 ? opts.store_every
                                      : std::max(1L, nsteps / 2000);

    Trajectory out;
    out.with_decay = opts.with_decay;
    out.time_ps.reserve(static_cast<size_t>(nsteps / stride) + 2);

    double max_norm_err = 0.0;
    double min_eig = 1.0;

    if (!opts.with_decay) {
        UnitaryState s{{1.0, 0.0}, {0.0, 0.0}};
        auto store = [&](double t) {
            out.time_ps.push_back(t);
            out.excited.push_back(std::norm(s.e));
            out.amp_g.push_back(s.g);
            out.amp_e.push_back(s.e);
        };
        store(t0);
        double t = t0;
        for (long i = 0; i < nsteps; ++i) {
            auto f1 = drive_coeff(terms, t);
            auto fm = drive_coeff(terms, t + 0.5 * dt);
            auto f2 = drive_coeff(terms, t + dt);
            UnitaryState k1 = deriv(s, f1);
            UnitaryState k2 = deriv({s.g + 0.5 * dt * k1.g, s.e + 0.5 * dt * k1.e}, fm);
            UnitaryState k3 = deriv({s.g + 0.5 * dt * k2.g, s.e + 0.5 * dt * k2.e}, fm);
            UnitaryState k4 = deriv({s.g + dt * k3.g, s.e + dt * k3.e}, f2);
            s.g += dt / 6.0 * (k1.g + 2.0 * k2.g + 2.0 * k3.g + k4.g);
            s.e += dt / 6.0 * (k1.e + 2.0 * k2.e + 2.0 * k3.e + k4.e);
            t = t0 + (i + 1) * dt;
            double nrm = std::sqrt(std::norm(s.g) + std::norm(s.e));
            max_norm_err = std::max(max_norm_err, std::abs(nrm - 1.0));
            if ((i + 1) % stride == 0 || i + 1 == nsteps) store(t);
        }
        out.final_occupation = std::norm(s.e);
    } else {
        const double gamma = em.decay_rate_per_ps();
        RhoState r{1.0, 0.0, {0.0, 0.0}};
        auto store = [&](double t) {
            out.time_ps.push_back(t);
            out.excited.push_back(r.ee);
        };
        store(t0);
        double t = t0;
        for (long i = 0; i < nsteps; ++i) {
            auto f1 = drive_coeff(terms, t);
            auto fm = drive_coeff(terms, t + 0.5 * dt);
            auto f2 = drive_coeff(terms, t + dt);
            RhoState k1 = deriv(r, f1, gamma);
            RhoState k2 = deriv({r.gg + 0.5 * dt * k1.gg, r.ee + 0.5 * dt * k1.ee,
                                 r.ge + 0.5 * dt * k1.ge}, fm, gamma);
            RhoState k3 = deriv({r.gg + 0.5 * dt * k2.gg, r.ee + 0.5 * dt * k2.ee,
                                 r.ge + 0.5 * dt * k2.ge}, fm, gamma);
            RhoState k4 = deriv({r.gg + dt * k3.gg, r.ee + dt * k3.ee, r.ge + dt * k3.ge},
                                f2, gamma);
            r.gg += dt / 6.0 * (k1.gg + 2.0 * k2.gg + 2.0 * k3.gg + k4.gg);
            r.ee += dt / 6.0 * (k1.ee + 2.0 * k2.ee + 2.0 * k3.ee + k4.ee);
            r.ge += dt / 6.0 * (k1.ge + 2.0 * k2.ge + 2.0 * k3.ge + k4.ge);
            t = t0 + (i + 1) * dt;
            max_norm_err = std::max(max_norm_err, std::abs(r.gg + r.ee - 1.0));
            // eigenvalues of the 2x2 Hermitian rho
            double tr = r.gg + r.ee;
            double det = r.gg * r.ee - std::norm(r.ge);
            double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
            min_eig = std::min(min_eig, tr / 2.0 - disc);
            if ((i + 1) % stride == 0 || i + 1 == nsteps) store(t);
        }
        out.final_occupation = r.ee;
    }
    out.max_norm_residual = max_norm_err;
    out.min_eigenvalue = min_eig;
    return out;
}

} // namespace

Trajectory solve_dynamics(const EmitterParams& emitter, const DriveConfig& drive,
                          const SolveOptions& opts) {
    emitter.validate();
    drive.validate();
    Trajectory out = solve_once(emitter, drive, opts);
    if (opts.verify_convergence) {
        SolveOptions half = opts;
        half.dt_ps = opts.dt_ps / 2.0;
        half.verify_convergence = false;
        Trajectory fine = solve_once(emitter, drive, half);
        double res = std::abs(fine.final_occupation - out.final_occupation);
        out.convergence_residual = res;
        if (res > opts.convergence_tol)
            throw ConvergenceError("solve_dynamics: step-halving residual " +
                                       std::to_string(res) + " exceeds tolerance",
                                   res);
    }
    return out;
}

} // namespace spsim
