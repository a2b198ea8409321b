#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "spsim/drive.hpp"
#include "spsim/emitter.hpp"

namespace spsim {

class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

  private:
    double residual_;
};

struct SolveOptions {
    double dt_ps = 0.002;
    bool with_decay = false;         // Lindblad with rate 1/T1
    int store_every = 0;             // 0: pick automatically (~2000 points)
    bool verify_convergence = false; // re-solve at dt/2, compare final occupation
    double convergence_tol = 1e-4;
    double span = 6.0;               // integration half-span in envelope sigmas beyond pulse centers
};

struct Trajectory {
    std::vector<double> time_ps;
    std::vector<double> excited;       // excited-state occupation
    std::vector<std::complex<double>> amp_g, amp_e; // unitary mode only
    double final_occupation = 0.0;
    double max_norm_residual = 0.0;    // max ||psi|-1| or |tr rho - 1| over all steps
    double min_eigenvalue = 0.0;       // Lindblad mode: most negative rho eigenvalue seen
    bool with_decay = false;
    double convergence_residual = -1.0; // set when verify_convergence was requested
};

// Two-level system in the frame rotating at the transition: fixed-step RK4 on
// i d/dt psi = H psi with <g|H|e> = sum_j Omega_j(t)/2 * exp(i Delta_j (t-c_j) + i phi_j),
// or on the Lindblad equation with decay 1/T1.
Trajectory solve_dynamics(const EmitterParams& emitter, const DriveConfig& drive,
                          const SolveOptions& opts = {});

} // namespace spsim
