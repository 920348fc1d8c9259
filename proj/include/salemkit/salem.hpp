#pragma once

#include "salemkit/grid.hpp"
#include "salemkit/kernel.hpp"
#include "salemkit/report.hpp"

#include <string>
#include <vector>

namespace salemkit {

struct SalemParams {
    double sigma = 0.75;
    double m = 1.0;

    void validate() const;
};

enum class TestFunctionKind { gaussian, bump, sinc, modulated_sinc, csv };

/// Real-valued test input f.
///   gaussian        e^{-x^2/2}
///   bump            exp(1 - 1/(1 - (x/R)^2)) on |x| < R, params = {R}, R = 4 by default
///   sinc            sin(x)/x
///   modulated_sinc  cos(a x) sin(x)/x, params = {a}, a = 1 by default
///   csv             samples read from csv_path
/// The sinc family is sampled band-limited on sinc_grid() whatever grid is
/// requested: its spectrum is a sum of exact rectangles.
struct TestFunction {
    TestFunctionKind kind = TestFunctionKind::gaussian;
    std::vector<double> params;
    std::string csv_path;

    static TestFunction parse(const std::string& name);
    std::string name() const;
    bool sinc_family() const {
        return kind == TestFunctionKind::sinc || kind == TestFunctionKind::modulated_sinc;
    }
};

GridFunction realize(const TestFunction& f, const Grid& g);

/// Grid for band-limited sinc samples: dt = 1/64 on the spectral side, so
/// every integer and every multiple of 1/64 is a spectral node.
Grid sinc_grid();

/// Samples on g whose unitary-convention spectrum is `spectrum` on the t-grid of g.
GridFunction band_limited(const Grid& g, const std::function<Complex(double)>& spectrum);

/// Value of a rectangle of given height on [lo, hi], halved at the endpoints.
double rect(double t, double lo, double hi, double height);

/// e^{-iax} sin(x)/x built from its shifted rectangle spectrum.
GridFunction modulated_sinc_complex(double a, const Grid& g = sinc_grid());

/// Convolution of f with K_sigma sampled at f's spacing over its support.
GridFunction I_sigma(const GridFunction& f, const SalemParams& p);
GridFunction I_sigma(const GridFunction& f, const SalemParams& p, const ScaledKernel& kernel);

GridFunction modulate(const GridFunction& h, double m);

struct FactorizationResult {
    VerificationEntry entry;
    double max_rhs = 0.0;
    double imag_residue = 0.0;  // max |Im I_sigma| / max |I_sigma|
};

FactorizationResult factorization_detail(const TestFunction& f, const SalemParams& p, const Grid& grid);
FactorizationResult factorization_detail(const GridFunction& f, const SalemParams& p, const ScaledKernel& kernel,
                                         const std::string& label);
VerificationEntry factorization_check(const TestFunction& f, const SalemParams& p, const Grid& grid);

/// Hilbert-pair surrogate: H(Re h) = Im h and H(Im h) = -Re h on the central
/// half of the grid, normalized by the L2 norm of h.
VerificationEntry titchmarsh_pair_check(const GridFunction& h);

/// sup_{t < cutoff} |Fh(t)| / sup_t |Fh(t)|.
VerificationEntry halfline_null_check(const GridFunction& h, double cutoff);

/// h * P_y + i h * Q_y with P_y = y / (pi (x^2 + y^2)), Q_y = x / (pi (x^2 + y^2)).
GridFunction analytic_extension(const GridFunction& h, double y);

/// h(x + iy) from the spectrum: inverse transform of Fh(t) e^{-ty}. Spectral
/// noise at negative t grows by e^{|t| y}; use for band-limited h or small y.
GridFunction spectral_continuation(const GridFunction& h, double y);

/// log of int |Fh(t)|^2 e^{-2ty} dt, with everything below the detected
/// spectral cutoff set to zero.
struct WeightedEnergy {
    double cutoff = 0.0;
    std::vector<double> ys;
    std::vector<double> log_energy;
};

WeightedEnergy weighted_energy(const GridFunction& h, const std::vector<double>& ys);

/// Slope of log int |h(x+iy)|^2 dx against y, least squares over the last
/// half of ys with the model a + b y + c log y.
double growth_rate(const GridFunction& h, const std::vector<double>& ys);

double salem_residual(const TestFunction& f, const SalemParams& p, const Grid& grid);
double salem_residual(const GridFunction& f, const SalemParams& p);

VerificationReport sinc_example_suite(double m);

}  // namespace salemkit
