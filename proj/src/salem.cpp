#include "salemkit/salem.hpp"

#include "salemkit/error.hpp"
#include "salemkit/specialfn.hpp"
#include "salemkit/transforms.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace salemkit {

namespace {

// sinc-family samples keep ~1/x tails, so edge checks use this threshold
constexpr double slow_tail_edge_tol = 2e-2;
constexpr double inf = std::numeric_limits<double>::infinity();
const double rect_height = std::sqrt(pi / 2.0);

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

GridFunction real_part(const GridFunction& h) {
    GridFunction out(h.grid);
    for (std::size_t j = 0; j < h.size(); ++j) out.values[j] = h.values[j].real();
    return out;
}

GridFunction imag_part(const GridFunction& h) {
    GridFunction out(h.grid);
    for (std::size_t j = 0; j < h.size(); ++j) out.values[j] = h.values[j].imag();
    return out;
}

double l2_norm(const GridFunction& h) {
    CompensatedSum<double> s;
    for (const auto& z : h.values) s += std::norm(z);
    return std::sqrt(s.value() * h.grid.dx);
}

bool in_central_half(const Grid& g, std::size_t j) { return j >= g.n / 4 && j < g.n - g.n / 4; }

std::string fmt_param(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

void SalemParams::validate() const {
    if (!(sigma > 0.5 && sigma < 1.0)) throw Error(ErrorKind::config, "sigma must lie in (1/2, 1)");
    if (!(m > 0.0) || !std::isfinite(m)) throw Error(ErrorKind::config, "m must be positive");
}

TestFunction TestFunction::parse(const std::string& name) {
    TestFunction f;
    if (name == "gaussian") f.kind = TestFunctionKind::gaussian;
    else if (name == "bump") f.kind = TestFunctionKind::bump;
    else if (name == "sinc") f.kind = TestFunctionKind::sinc;
    else if (name == "modulated_sinc") f.kind = TestFunctionKind::modulated_sinc;
    else if (name.rfind("csv:", 0) == 0) {
        f.kind = TestFunctionKind::csv;
        f.csv_path = name.substr(4);
    } else {
        throw Error(ErrorKind::config, "unknown test function '" + name + "'");
    }
    return f;
}

std::string TestFunction::name() const {
    switch (kind) {
        case TestFunctionKind::gaussian: return "gaussian";
        case TestFunctionKind::bump: return "bump";
        case TestFunctionKind::sinc: return "sinc";
        case TestFunctionKind::modulated_sinc: return "modulated_sinc";
        case TestFunctionKind::csv: return "csv:" + csv_path;
    }
    return "?";
}

Grid sinc_grid() { return Grid{-64.0 * pi, pi / 32.0, 4096}; }

double rect(double t, double lo, double hi, double height) {
    if (t > lo && t < hi) return height;
    if (t == lo || t == hi) return 0.5 * height;
    return 0.0;
}

GridFunction band_limited(const Grid& g, const std::function<Complex(double)>& spectrum) {
    g.validate();
    const double dt = 2.0 * pi / (static_cast<double>(g.n) * g.dx);
    const Grid tg{-static_cast<double>(g.n / 2) * dt, dt, g.n};
    std::vector<Complex> v(g.n);
    for (std::size_t k = 0; k < g.n; ++k) v[k] = spectrum(tg.x(k));
    GridFunction out = inverse_fourier(SpectralFunction(tg, std::move(v), g.x0));
    out.grid = g;
    return out;
}

GridFunction modulated_sinc_complex(double a, const Grid& g) {
    return band_limited(g, [a](double t) -> Complex { return rect(t, -a - 1.0, -a + 1.0, rect_height); });
}

GridFunction realize(const TestFunction& f, const Grid& g) {
    GridFunction out;
    switch (f.kind) {
        case TestFunctionKind::gaussian:
            out = sample(g, [](double x) -> Complex { return std::exp(-x * x / 2.0); });
            break;
        case TestFunctionKind::bump: {
            const double r = f.params.empty() ? 4.0 : f.params[0];
            if (!(r > 0.0)) throw Error(ErrorKind::config, "bump radius must be positive");
            out = sample(g, [r](double x) -> Complex {
                const double u = x / r;
                return std::abs(u) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - u * u)) : 0.0;
            });
            break;
        }
        case TestFunctionKind::sinc:
            out = band_limited(sinc_grid(), [](double t) -> Complex { return rect(t, -1.0, 1.0, rect_height); });
            break;
        case TestFunctionKind::modulated_sinc: {
            const double a = f.params.empty() ? 1.0 : f.params[0];
            out = band_limited(sinc_grid(), [a](double t) -> Complex {
                return 0.5 * (rect(t, -a - 1.0, -a + 1.0, rect_height) + rect(t, a - 1.0, a + 1.0, rect_height));
            });
            break;
        }
        case TestFunctionKind::csv: {
            std::ifstream in(f.csv_path);
            if (!in) throw Error(ErrorKind::config, "cannot open CSV '" + f.csv_path + "'");
            out = read_csv(in);
            if (out.max_imag() > 1e-12 * std::max(1.0, out.max_abs()))
                throw Error(ErrorKind::config, "CSV test function must be real-valued");
            break;
        }
    }
    for (auto& z : out.values) z = z.real();
    return out;
}

GridFunction I_sigma(const GridFunction& f, const SalemParams& p) {
    p.validate();
    return I_sigma(f, p, ScaledKernel(p.sigma));
}

GridFunction I_sigma(const GridFunction& f, const SalemParams& p, const ScaledKernel& kernel) {
    p.validate();
    if (kernel.sigma() != p.sigma) throw Error(ErrorKind::domain, "kernel sigma does not match parameters");
    if (f.max_imag() > 1e-12 * std::max(1.0, f.max_abs()))
        throw Error(ErrorKind::domain, "I_sigma expects a real-valued f");
    const double dx = f.grid.dx;
    const auto [lo, hi] = kernel.support();
    const auto count = static_cast<std::size_t>(std::ceil((hi - lo) / dx)) + 1;
    const Grid kg{lo, dx, std::max<std::size_t>(16, next_power_of_two(count))};
    GridFunction k(kg);
    for (std::size_t j = 0; j < count; ++j) k.values[j] = kernel(kg.x(j));
    return convolve(f, k);
}

GridFunction modulate(const GridFunction& h, double m) {
    GridFunction out = h;
    if (m == 0.0) return out;
    for (std::size_t j = 0; j < h.size(); ++j) out.values[j] *= std::polar(1.0, -m * h.grid.x(j));
    return out;
}

FactorizationResult factorization_detail(const GridFunction& f, const SalemParams& p, const ScaledKernel& kernel,
                                         const std::string& label) {
    const GridFunction I = I_sigma(f, p, kernel);
    const SpectralFunction lhs = fourier(modulate(I, p.m), inf);

    GridFunction fpad(Grid{f.grid.x0, f.grid.dx, I.grid.n});
    std::copy(f.values.begin(), f.values.end(), fpad.values.begin());
    const SpectralFunction ff = fourier(modulate(fpad, p.m), inf);

    double dev = 0.0, max_rhs = 0.0;
    for (std::size_t k = 0; k < lhs.grid.n; ++k) {
        const double tau = lhs.t(k) + p.m;
        if (std::abs(tau) > 15.0) continue;
        const Complex rhs = symbol_G(Complex(p.sigma, -tau)) * ff.values[k];
        dev = std::max(dev, std::abs(lhs.values[k] - rhs));
        max_rhs = std::max(max_rhs, std::abs(rhs));
    }
    FactorizationResult out;
    out.max_rhs = max_rhs;
    const double peak = I.max_abs();
    out.imag_residue = peak > 0.0 ? I.max_imag() / peak : 0.0;
    std::ostringstream id, notes;
    id << "salem.factorization[f=" << label << ",sigma=" << p.sigma << ",m=" << p.m << "]";
    notes << "max|rhs|=" << max_rhs << " over |t+m|<=15; Im I_sigma residue=" << out.imag_residue;
    out.entry = make_entry(id.str(), dev, 1e-4 * (1.0 + max_rhs),
                           "F[e^(-imz) I_sigma](t) = G(sigma-i(t+m)) Ff(t+m)", notes.str());
    return out;
}

FactorizationResult factorization_detail(const TestFunction& f, const SalemParams& p, const Grid& grid) {
    p.validate();
    return factorization_detail(realize(f, grid), p, ScaledKernel(p.sigma), f.name());
}

VerificationEntry factorization_check(const TestFunction& f, const SalemParams& p, const Grid& grid) {
    return factorization_detail(f, p, grid).entry;
}

VerificationEntry titchmarsh_pair_check(const GridFunction& h) {
    const double norm = l2_norm(h);
    double measured = 0.0;
    std::ostringstream notes;
    if (norm > 0.0) {
        const GridFunction v = real_part(h), w = imag_part(h);
        const GridFunction hv = hilbert(v, 4, slow_tail_edge_tol);
        const GridFunction hw = hilbert(w, 4, slow_tail_edge_tol);
        double e1 = 0.0, e2 = 0.0;
        for (std::size_t j = 0; j < h.size(); ++j) {
            if (!in_central_half(h.grid, j)) continue;
            e1 = std::max(e1, std::abs(hv.values[j] - w.values[j]));
            e2 = std::max(e2, std::abs(hw.values[j] + v.values[j]));
        }
        measured = std::max(e1, e2) / norm;
        notes << "|H(Re h) - Im h|=" << e1 << " |H(Im h) + Re h|=" << e2 << " ||h||_2=" << norm;
    } else {
        notes << "zero input";
    }
    return make_entry("salem.titchmarsh_pair", measured, 5e-3, "H(Re h) = Im h, H(Im h) = -Re h", notes.str());
}

VerificationEntry halfline_null_check(const GridFunction& h, double cutoff) {
    const SpectralFunction F = fourier(h, slow_tail_edge_tol);
    double below = 0.0, peak = 0.0;
    for (std::size_t k = 0; k < F.grid.n; ++k) {
        const double a = std::abs(F.values[k]);
        peak = std::max(peak, a);
        if (F.t(k) < cutoff) below = std::max(below, a);
    }
    std::ostringstream id;
    id << "salem.halfline_null[cutoff=" << cutoff << "]";
    return make_entry(id.str(), peak > 0.0 ? below / peak : 0.0, 1e-3, "Fh(t) = 0 for t < cutoff");
}

namespace {

GridFunction spectral_multiply(const GridFunction& h, std::size_t pad, const std::function<Complex(double)>& mult) {
    GridFunction padded = zero_pad(h, pad);
    SpectralFunction F = fourier(padded, inf);
    for (std::size_t k = 0; k < F.grid.n; ++k) F.values[k] *= mult(F.t(k));
    return restrict_to(inverse_fourier(F), h.grid, inf);
}

}  // namespace

GridFunction analytic_extension(const GridFunction& h, double y) {
    if (!(y > 0.0)) throw Error(ErrorKind::domain, "analytic extension requires y > 0");
    // P_y and i Q_y act as e^{-y|t|} and sgn(t) e^{-y|t|}
    return spectral_multiply(h, 4, [y](double t) -> Complex {
        const double sgn = t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0);
        return (1.0 + sgn) * std::exp(-y * std::abs(t));
    });
}

GridFunction spectral_continuation(const GridFunction& h, double y) {
    return spectral_multiply(h, 1, [y](double t) -> Complex { return std::exp(-t * y); });
}

WeightedEnergy weighted_energy(const GridFunction& h, const std::vector<double>& ys) {
    const SpectralFunction F = fourier(h, slow_tail_edge_tol);
    double peak = 0.0;
    for (const auto& z : F.values) peak = std::max(peak, std::abs(z));
    WeightedEnergy out;
    out.ys = ys;
    if (peak == 0.0) throw Error(ErrorKind::domain, "weighted energy of the zero function");
    std::size_t first = 0;
    while (std::abs(F.values[first]) <= 1e-12 * peak) ++first;
    if (first == 0)
        throw Error(ErrorKind::support_violation, "spectrum is not null below any cutoff on this grid");
    out.cutoff = F.t(first);
    for (double y : ys) {
        double lmax = -inf;
        for (std::size_t k = first; k < F.grid.n; ++k) {
            const double a = std::abs(F.values[k]);
            if (a > 0.0) lmax = std::max(lmax, 2.0 * std::log(a) - 2.0 * F.t(k) * y);
        }
        CompensatedSum<double> s;
        for (std::size_t k = first; k < F.grid.n; ++k) {
            const double a = std::abs(F.values[k]);
            if (a > 0.0) s += std::exp(2.0 * std::log(a) - 2.0 * F.t(k) * y - lmax);
        }
        out.log_energy.push_back(lmax + std::log(s.value() * F.grid.dx));
    }
    return out;
}

double growth_rate(const GridFunction& h, const std::vector<double>& ys) {
    if (ys.size() < 5) throw Error(ErrorKind::domain, "growth_rate needs at least five y values");
    for (std::size_t i = 0; i < ys.size(); ++i) {
        if (!(ys[i] > 0.0)) throw Error(ErrorKind::domain, "growth_rate needs positive y values");
        if (i > 0 && !(ys[i] > ys[i - 1])) throw Error(ErrorKind::domain, "growth_rate needs increasing y values");
    }
    const WeightedEnergy we = weighted_energy(h, ys);
    std::vector<double> c1, cy, clog, rhs;
    for (std::size_t i = ys.size() / 2; i < ys.size(); ++i) {
        c1.push_back(1.0);
        cy.push_back(ys[i]);
        clog.push_back(std::log(ys[i]));
        rhs.push_back(we.log_energy[i]);
    }
    return least_squares({c1, cy, clog}, rhs)[1];
}

double salem_residual(const GridFunction& f, const SalemParams& p) {
    const double peak = f.max_abs();
    if (peak == 0.0) return 0.0;
    return I_sigma(f, p).max_abs() / peak;
}

double salem_residual(const TestFunction& f, const SalemParams& p, const Grid& grid) {
    return salem_residual(realize(f, grid), p);
}

VerificationReport sinc_example_suite(double m) {
    if (!(m >= 1.0)) throw Error(ErrorKind::domain, "sinc example suite requires m >= 1");
    VerificationReport report;
    const std::string prefix = "salem.sinc[m=" + fmt_param(m) + "].";
    const Grid direct{-80.0, 160.0 / 4096, 4096};
    auto central_error = [](const GridFunction& a, const std::function<double(double)>& want) {
        double e = 0.0;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (in_central_half(a.grid, j)) e = std::max(e, std::abs(a.values[j] - want(a.grid.x(j))));
        return e;
    };

    {
        auto f = sample(direct, [m](double x) -> Complex { return m * sinc(m * x); });
        const double e = central_error(hilbert(f, 4, slow_tail_edge_tol),
                                       [m](double x) { return x == 0.0 ? 0.0 : (std::cos(m * x) - 1.0) / x; });
        report.add(make_entry(prefix + "1_hilbert_identity", e, 1e-3, "H[sin(mx)/x] = (cos(mx)-1)/x",
                              "central half of [-80, 80], n = 4096"));
    }
    {
        // cos(mx) sin(x)/x = (sin((m+1)x) - sin((m-1)x)) / 2x, whose transform follows term by term
        auto f = sample(direct, [m](double x) -> Complex { return std::cos(m * x) * sinc(x); });
        double split = 0.0;
        for (std::size_t j = 0; j < f.size(); ++j) {
            const double x = direct.x(j);
            if (x == 0.0) continue;
            const double lower = (m == 1.0) ? 0.0 : std::sin((m - 1.0) * x);
            split = std::max(split, std::abs(f.values[j].real() - (std::sin((m + 1.0) * x) - lower) / (2.0 * x)));
        }
        const double via_terms_max = central_error(hilbert(f, 4, slow_tail_edge_tol), [m](double x) {
            if (x == 0.0) return 0.0;
            const double lower = (m == 1.0) ? 0.0 : std::cos((m - 1.0) * x) - 1.0;
            return ((std::cos((m + 1.0) * x) - 1.0) - lower) / (2.0 * x);
        });
        const double via_imag = central_error(hilbert(f, 4, slow_tail_edge_tol),
                                              [m](double x) { return -std::sin(m * x) * sinc(x); });
        std::ostringstream notes;
        notes << "product-to-sum residual=" << split << " vs term-wise transform=" << via_terms_max
              << " vs Im(e^(-imx) sin(x)/x)=" << via_imag;
        report.add(make_entry(prefix + "2_product_to_sum", std::max({split, via_terms_max, via_imag}), 1e-3,
                              "H[cos(mx) sin(x)/x] = Im(e^(-imx) sin(x)/x)", notes.str()));
    }
    const GridFunction h = modulated_sinc_complex(m);
    {
        auto e = titchmarsh_pair_check(h);
        e.check_id = prefix + "3_pair_check";
        report.add(e);
    }
    {
        auto e = halfline_null_check(h, -m - 1.0);
        e.check_id = prefix + "4_halfline_null";
        report.add(e);
    }
    {
        const std::vector<double> ys{5, 10, 15, 20, 25, 30, 35, 40};
        const double slope = growth_rate(h, ys);
        const double want = 2.0 * (m + 1.0);
        std::ostringstream notes;
        notes << "slope=" << slope << " expected=" << want;
        report.add(make_entry(prefix + "5_growth_rate", std::abs(slope - want) / want, 0.02,
                              "lim (1/y) log int |h(x+iy)|^2 dx = 2 * (spectral cutoff)", notes.str()));
    }
    report.sort();
    return report;
}

}  // namespace salemkit
