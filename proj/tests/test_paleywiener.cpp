#include "salemkit/error.hpp"
#include "salemkit/paleywiener.hpp"
#include "salemkit/transforms.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace salemkit;

namespace {

// transform of (1 - (x/m)^2)^4 on [-m, m]: m * 768 j_4(m w) / (m w)^4 / sqrt(2 pi)
double window_transform(double m, double w) {
    const double k = m * w;
    if (std::abs(k) < 1e-3) return m * 256.0 / 315.0 / sqrt_2pi * (1.0 - k * k / 11.0);
    return m * 768.0 * std::sph_bessel(4, std::abs(k)) / std::pow(k, 4) / sqrt_2pi;
}

const std::vector<double> ts{-2.0, 0.0, 2.0};

SymbolProduct gaussian_f1(const SalemParams& p) { return build_f1(TestFunction::parse("gaussian"), p, Grid{}); }

}  // namespace

TEST(Window, ShapeAndValidation) {
    const Grid g{-8.0, 16.0 / 1024, 1024};
    const WindowFunction w = default_window(2.0, g);
    EXPECT_EQ(w.support_right_edge, 2.0);
    EXPECT_NEAR(w.samples.values[512].real(), 1.0, 1e-15);
    for (std::size_t j = 0; j < g.n; ++j)
        if (std::abs(g.x(j)) >= 2.0) EXPECT_EQ(w.samples.values[j], Complex(0.0));
    EXPECT_THROW(default_window(0.0, g), Error);

    WindowFunction bad = w;
    bad.samples.values[g.n - 1] = 1.0;
    EXPECT_THROW(bad.validate(), Error);
    WindowFunction empty = w;
    for (auto& z : empty.samples.values) z = 0.0;
    EXPECT_THROW(empty.validate(), Error);
}

TEST(Window, TransformMatchesBesselClosedForm) {
    const Grid g{-8.0, 16.0 / 4096, 4096};
    for (double m : {1.0, 2.0}) {
        const WindowFunction w = default_window(m, g);
        for (double omega : {0.0, 0.3, 1.0, 2.5, 7.0, 20.0})
            EXPECT_NEAR(std::abs(dtft(w.samples, omega) - window_transform(m, omega)), 0.0, 1e-10)
                << "m=" << m << " w=" << omega;
    }
}

TEST(BuildF1, EqualsTransformOfModulatedISigma) {
    for (double sigma : {0.6, 0.75, 0.9}) {
        const SalemParams p{sigma, 1.0};
        const SymbolProduct f1 = gaussian_f1(p);
        const GridFunction f = realize(TestFunction::parse("gaussian"), Grid{});
        const SpectralFunction F = fourier(modulate(I_sigma(f, p), p.m), std::numeric_limits<double>::infinity());
        ASSERT_EQ(F.grid.n, f1.samples.grid.n);
        double err = 0.0;
        for (std::size_t k = 0; k < F.grid.n; ++k) err = std::max(err, std::abs(F.values[k] - f1.samples.values[k]));
        EXPECT_LT(err, 1e-4) << sigma;
        EXPECT_NEAR(F.x0, f1.spatial_x0, 1e-12);
    }
}

TEST(BuildF1, NullBelowShiftedCutoff) {
    // e^{-x^2/2 + 8ix} has spectrum e^{-(t-8)^2/2}, below e^{-32} for t < 0
    const GridFunction f = sample(Grid{}, [](double x) { return std::exp(Complex(-x * x / 2.0, 8.0 * x)); });
    const SymbolProduct one_sided = build_f1(f, SalemParams{0.75, 1.0});
    EXPECT_LE(one_sided.null_below_ratio, 1e-3);
    // a real f has a symmetric spectrum, so the ratio is reported, not small
    EXPECT_GT(gaussian_f1(SalemParams{}).null_below_ratio, 0.1);
}

TEST(BuildF1, ZeroFunction) {
    const SymbolProduct f1 = build_f1(GridFunction(Grid{}), SalemParams{});
    EXPECT_EQ(f1.samples.max_abs(), 0.0);
    EXPECT_EQ(f1.null_below_ratio, 0.0);
}

TEST(ProductTransform, GaussianBothIbarRoutes) {
    for (double sigma : {0.6, 0.75, 0.9}) {
        const SalemParams p{sigma, 1.0};
        const SymbolProduct f1 = gaussian_f1(p);
        const WindowFunction f2 = default_window(p.m, f1.samples.grid);
        const auto inv = product_transform_detail(f1, f2, ts);
        EXPECT_TRUE(inv.entry.pass) << sigma << " " << inv.entry.measured;

        const GridFunction f = realize(TestFunction::parse("gaussian"), Grid{});
        const auto spatial = product_transform_detail(f1, f2, ts, modulate(I_sigma(f, p), p.m));
        EXPECT_TRUE(spatial.entry.pass) << sigma << " " << spatial.entry.measured;
        EXPECT_LT(spatial.entry.measured, 1e-8);
        EXPECT_GT(std::abs(inv.lhs[1]), 1e-3);
    }
}

TEST(ProductTransform, RightSideWithClosedFormWindowTransform) {
    const SalemParams p{0.75, 1.0};
    const SymbolProduct f1 = gaussian_f1(p);
    const WindowFunction f2 = default_window(p.m, f1.samples.grid);
    const auto r = product_transform_detail(f1, f2, ts);
    const GridFunction ibar = inverse_fourier(SpectralFunction(f1.samples.grid, f1.samples.values, f1.spatial_x0));
    for (std::size_t i = 0; i < ts.size(); ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < ibar.size(); ++j)
            s += ibar.values[j] * window_transform(p.m, ts[i] + ibar.grid.x(j));
        s *= ibar.grid.dx;
        EXPECT_LT(std::abs(s - r.lhs[i]), 1e-6) << ts[i];
    }
}

TEST(ProductTransform, BilinearAndZero) {
    const SymbolProduct f1 = gaussian_f1(SalemParams{});
    const WindowFunction f2 = default_window(1.0, f1.samples.grid);
    const auto e = product_transform_bilinearity(f1, f2, ts);
    EXPECT_TRUE(e.pass) << e.measured;

    SymbolProduct zero = f1;
    for (auto& z : zero.samples.values) z = 0.0;
    const auto r = product_transform_detail(zero, f2, ts);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        EXPECT_EQ(r.lhs[i], Complex(0.0));
        EXPECT_EQ(r.rhs[i], Complex(0.0));
    }
    EXPECT_TRUE(r.entry.pass);
}

TEST(ProductTransform, Errors) {
    const SymbolProduct f1 = gaussian_f1(SalemParams{});
    try {
        product_transform_detail(f1, default_window(2.0, f1.samples.grid), ts);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::support_violation);
    }
    Grid other = f1.samples.grid;
    other.dx *= 2.0;
    try {
        product_transform_detail(f1, default_window(1.0, other), ts);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::grid_mismatch);
    }
}

TEST(LogIntegrability, ConstantOne) {
    const LogIntegrability li = log_integrability(sample(Grid{}, [](double) -> Complex { return 1.0; }));
    EXPECT_EQ(li.value, 0.0);
    EXPECT_FALSE(li.divergent);
    EXPECT_EQ(li.excluded, 0u);
}

TEST(LogIntegrability, SquareRootDecayProfile) {
    const Grid g{-100.0, 200.0 / 131072, 131072};
    const LogIntegrability li =
        log_integrability(sample(g, [](double x) -> Complex { return std::exp(-std::sqrt(std::abs(x))); }));
    EXPECT_FALSE(li.divergent);
    EXPECT_NEAR(li.tail_exponent, 0.5, 1e-9);
    EXPECT_NEAR(li.value, pi * std::sqrt(2.0), 1e-6 * pi * std::sqrt(2.0));
    EXPECT_GT(li.tail, 0.0);
}

TEST(LogIntegrability, GaussianDivergesWithHalfWidth) {
    std::vector<double> values;
    for (double L : {10.0, 15.0, 20.0}) {
        const Grid g{-L, 2.0 * L / 4096, 4096};
        const LogIntegrability li = log_integrability(sample(g, [](double x) -> Complex { return std::exp(-x * x); }));
        EXPECT_TRUE(li.divergent);
        EXPECT_NEAR(li.tail_exponent, 2.0, 1e-6);
        values.push_back(li.value);
    }
    // integrand x^2/(1+x^2) -> 1 on both sides: growth 2 per unit half-width
    EXPECT_NEAR((values[1] - values[0]) / 5.0, 2.0, 0.05);
    EXPECT_NEAR((values[2] - values[1]) / 5.0, 2.0, 0.05);
}

TEST(LogIntegrability, ExcludedNodes) {
    const Grid g;
    GridFunction h = sample(g, [](double) -> Complex { return 0.5; });
    for (std::size_t j = 0; j < 5; ++j) h.values[100 + 7 * j] = 0.0;
    EXPECT_EQ(log_integrability(h).excluded, 5u);
    for (std::size_t j = 0; j < 30; ++j) h.values[400 + j] = 1e-320;
    try {
        log_integrability(h);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::excluded_nodes);
    }
}

TEST(CauchyWeight, ClosedFormAgreement) {
    for (double eps : {0.25, 0.5, 1.0, 1.5, 1.75}) {
        const CauchyWeight w = cauchy_weight_integral(eps);
        EXPECT_NEAR(w.numeric, w.closed_form, 1e-8 * w.closed_form) << eps;
        EXPECT_TRUE(cauchy_weight_check(eps).pass);
    }
    EXPECT_NEAR(cauchy_weight_integral(1.0).numeric, pi, 1e-12);
    EXPECT_NEAR(cauchy_weight_integral(0.5).numeric, 4.44288293815836624702, 1e-8);
}

TEST(CauchyWeight, BlowUpNearTwoAndDomain) {
    const CauchyWeight a = cauchy_weight_integral(1.99), b = cauchy_weight_integral(1.999);
    EXPECT_GT(b.numeric, 9.0 * a.numeric);
    EXPECT_GT(b.closed_form, 9.0 * a.closed_form);
    EXPECT_NEAR(b.numeric / b.closed_form, 1.0, 1e-8);
    for (double eps : {0.05, 0.0, 2.0, 2.5}) {
        try {
            cauchy_weight_integral(eps);
            FAIL() << eps;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::domain);
        }
    }
}

TEST(DecaySufficiency, FullGrid) {
    for (double eps : {1.1, 1.5, 1.9})
        for (double c : {0.5, 1.0, 5.0}) {
            const VerificationEntry e = decay_sufficiency_check(eps, c);
            EXPECT_TRUE(e.pass) << e.check_id << " " << e.measured << " " << e.notes;
        }
    const VerificationEntry zero = decay_sufficiency_check(1.5, 0.0);
    EXPECT_TRUE(zero.pass);
    EXPECT_EQ(zero.measured, 0.0);
    EXPECT_THROW(decay_sufficiency_check(1.0, 1.0), Error);
    EXPECT_THROW(decay_sufficiency_check(1.5, -1.0), Error);
}
