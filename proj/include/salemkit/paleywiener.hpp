#pragma once

#include "salemkit/grid.hpp"
#include "salemkit/report.hpp"
#include "salemkit/salem.hpp"

#include <vector>

namespace salemkit {

struct WindowFunction {
    GridFunction samples;
    double support_right_edge = 0.0;

    void validate() const;
};

/// (1 - (x/m)^2)^4 on [-m, m], zero elsewhere, sampled on g.
WindowFunction default_window(double m, const Grid& g);

struct SymbolProduct {
    GridFunction samples;        // on the spectral grid of the padded spatial grid
    double spatial_x0 = 0.0;     // origin of the I_sigma grid, for the inverse transform
    double m = 0.0;
    // sup_{x < -m} |f1| / sup |f1|, reported rather than enforced
    double null_below_ratio = 0.0;
};

/// f1(x) = G(sigma - i(x+m)) Ff(x+m) on the spectral grid of f.
SymbolProduct build_f1(const TestFunction& f, const SalemParams& p, const Grid& grid);
/// Complex f is accepted here; only a complex f can have a one-sided spectrum.
SymbolProduct build_f1(const GridFunction& f, const SalemParams& p);

struct ProductTransformResult {
    VerificationEntry entry;
    std::vector<Complex> lhs;
    std::vector<Complex> rhs;
};

/// Left side: int_{-m}^{m} e^{-itx} f1 f2 dx. Right side:
/// int Ibar(-x) Ff2(t - x) dx, with Ibar given on a spatial grid.
ProductTransformResult product_transform_detail(const SymbolProduct& f1, const WindowFunction& f2,
                                                const std::vector<double>& t_values, const GridFunction& ibar);
/// Same, with Ibar recovered from f1 by the inverse transform.
ProductTransformResult product_transform_detail(const SymbolProduct& f1, const WindowFunction& f2,
                                                const std::vector<double>& t_values);
VerificationEntry product_transform_check(const SymbolProduct& f1, const WindowFunction& f2,
                                          const std::vector<double>& t_values);

/// Scales f1 by 1/2 and f2 by 2 separately and checks both sides scale alike.
VerificationEntry product_transform_bilinearity(const SymbolProduct& f1, const WindowFunction& f2,
                                                const std::vector<double>& t_values);

struct LogIntegrability {
    double value = 0.0;          // grid part plus tail estimate (grid part only if divergent)
    double grid_part = 0.0;
    double tail = 0.0;
    double tail_exponent = 0.0;  // p in |log|h(x)|| ~ A |x|^p near the grid edges
    bool divergent = false;      // p >= 1: the Cauchy-weighted tail does not converge
    std::size_t excluded = 0;
};

/// int |log|h(-x)|| / (1 + x^2) dx over the grid with a fitted power-law tail.
LogIntegrability log_integrability(const GridFunction& h);

struct CauchyWeight {
    double numeric = 0.0;
    double closed_form = 0.0;
};

/// int_R |x|^{eps-1} / (1 + x^2) dx by quadrature and as pi / sin(eps pi / 2).
CauchyWeight cauchy_weight_integral(double epsilon);

VerificationEntry cauchy_weight_check(double epsilon);

/// Builds h = e^{-c |x|^{eps-1}} and compares log_integrability(h) with
/// c * cauchy_weight_integral(eps).numeric.
VerificationEntry decay_sufficiency_check(double epsilon, double c);

}  // namespace salemkit
