#pragma once

#include "salemkit/numeric.hpp"
#include "salemkit/report.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace salemkit {

struct KernelSpec {
    double r = 0.5;
    double series_tol = 1e-15;  // truncation tolerance on the divisor series
    double x_min_series = 1e-3;
    // largest allowed size of the subtracted pole terms in k_series
    double cancellation_cap = 1e5;

    void validate() const;
};

struct ContourSpec {
    double d = 0.75;
    double t_max = 40.0;
    double h = 0.05;

    void validate() const;
};

double divisor_sum(std::uint64_t n, double r);

/// d_r(1..n_max) by sieve.
class DivisorTable {
public:
    DivisorTable(std::size_t n_max, double r);
    double operator[](std::size_t n) const { return table_[n]; }
    std::size_t size() const { return table_.size() - 1; }
    double r() const { return r_; }

private:
    std::vector<double> table_;
    double r_;
};

/// Smallest N for which the tail bound of sum d_r(n) e^{-nx} past N is below tol.
std::size_t series_cutoff(double x, double r, double tol);

double raw_series(double x, const KernelSpec& spec = {});
double raw_series(double x, const KernelSpec& spec, const DivisorTable& table);

struct KSeriesValue {
    double value = 0.0;
    double truncation_bound = 0.0;
    double cancellation_bound = 0.0;
};

KSeriesValue k_series(double x, const KernelSpec& spec = {});
KSeriesValue k_series(double x, const KernelSpec& spec, const DivisorTable& table);

struct ContourValue {
    double value = 0.0;
    double imag = 0.0;
    double truncation_bound = 0.0;
};

ContourValue k_contour(double x, const ContourSpec& cs = {});

/// Inverse Mellin transform of gamma(s) zeta(s) zeta(s - r) along Re(s) = c,
/// which reproduces the raw divisor series for c > r + 1.
ContourValue raw_contour(double x, double r, double c, double t_max = 40.0, double h = 0.05);

struct ResidueCoefficients {
    double c32 = 0.0;  // coefficient of x^{-3/2}
    double c1 = 0.0;   // coefficient of x^{-1}
    double c32_fit = 0.0;
    double fit_residual = 0.0;  // relative distance of the fit from c32
    double gamma_candidate = 0.0;       // Gamma(3/2) zeta(3/2)
    double sqrt_half_pi_candidate = 0.0;  // sqrt(pi/2) zeta(3/2)
    double rejected_residual = 0.0;
    std::string selected;
};

ResidueCoefficients residue_coefficients();

/// Closed-form pole coefficients used by k_series.
double c32_coefficient();
double c1_coefficient();

/// K_sigma(x) = e^{sigma x} k(e^x). Holds the divisor table and the contour
/// node values, so repeated evaluation is cheap; immutable after construction.
class ScaledKernel {
public:
    ScaledKernel(double sigma, const KernelSpec& spec = {}, const ContourSpec& cs = {});

    double operator()(double x) const;
    double sigma() const { return sigma_; }

    /// Interval outside of which |K_sigma| stays below about 1e-14.
    std::pair<double, double> support() const;

    /// Analytic asymptotic tails used past support().
    double left_tail(double x) const;
    double right_tail(double x) const;

private:
    double contour_value(double x) const;

    double sigma_;
    KernelSpec spec_;
    DivisorTable table_;
    double h_;
    std::vector<Complex> g_;  // G(sigma + i k h), k = 0..
};

double scaled_kernel(double x, double sigma, const KernelSpec& spec = {}, const ContourSpec& cs = {});

/// Fourier transform of K_sigma: G(sigma - i t) / sqrt(2 pi).
Complex scaled_kernel_spectrum(double sigma, double t);

struct L2Certificate {
    VerificationEntry entry;
    double spatial = 0.0;
    double spectral = 0.0;
    double outside_60 = 0.0;  // fraction of the spatial norm with |x| > 60
};

L2Certificate l2_certificate_detail(double sigma);
VerificationEntry l2_certificate(double sigma);

/// e^{sigma x} / (e^{e^x} + 1)
double salem_kernel(double x, double sigma);

}  // namespace salemkit
