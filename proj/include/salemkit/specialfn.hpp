#pragma once

#include "salemkit/numeric.hpp"
#include "salemkit/report.hpp"

#include <vector>

namespace salemkit {

/// Euler-Maclaurin settings for zeta. The direct-sum cutoff actually used is
/// max(em_terms, ceil(1.3 |Im s|)).
struct ZetaConfig {
    int em_terms = 12;
    int bernoulli_terms = 6;

    void validate() const;
};

/// Complex gamma function (Lanczos, reflected for Re(s) < 1/2).
Complex gamma(Complex s);

/// Principal-branch-free log gamma: exp(log_gamma(s)) == gamma(s). Used where
/// gamma itself would underflow.
Complex log_gamma(Complex s);

Complex zeta(Complex s, const ZetaConfig& cfg = {});

/// 1 - 2^(1-s), evaluated through its modulus and phase separately so that the
/// integer points are exact.
Complex eta_factor(Complex s);

/// Dirichlet eta via Borwein's alternating-series acceleration; finite at s = 1.
Complex dirichlet_eta(Complex s, int terms = 60);

/// G(s) = gamma(s) zeta(s) zeta(s - 1/2).
Complex symbol_G(Complex s);

/// Leading Stirling asymptotic of |gamma(sigma + i t)|, valid for |t| >= 5.
double stirling_modulus(double sigma, double t);

VerificationEntry fermi_mellin_check(Complex s);
VerificationEntry functional_equation_check(Complex s);

/// Hardy's Z(t): real-valued rotation of zeta on the critical line.
double hardy_z(double t);

/// Ordinates of sign changes of Z on [t_lo, t_hi], refined by bisection to 1e-8.
std::vector<double> critical_zero_scan(double t_lo, double t_hi, double step);

}  // namespace salemkit
