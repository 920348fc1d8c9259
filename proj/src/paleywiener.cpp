#include "salemkit/paleywiener.hpp"

#include "salemkit/error.hpp"
#include "salemkit/specialfn.hpp"
#include "salemkit/transforms.hpp"

#include <future>
#include <limits>
#include <sstream>

namespace salemkit {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double symbol_cutoff = 150.0;
constexpr double underflow_floor = 1e-300;

// grid of the convolution in I_sigma, so the t-grids coincide
Grid convolution_grid(const GridFunction& f, double sigma) {
    const auto [lo, hi] = ScaledKernel(sigma).support();
    const auto count = static_cast<std::size_t>(std::ceil((hi - lo) / f.grid.dx)) + 1;
    const std::size_t nk = std::max<std::size_t>(16, next_power_of_two(count));
    return Grid{f.grid.x0 + lo, f.grid.dx, next_power_of_two(f.grid.n + nk - 1)};
}

void require_same_grid(const Grid& a, const Grid& b) {
    if (a.n != b.n || std::abs(a.dx - b.dx) > 1e-12 * a.dx || std::abs(a.x0 - b.x0) > 1e-9 * a.dx)
        throw Error(ErrorKind::grid_mismatch, "f1 and f2 must share one grid");
}

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

void WindowFunction::validate() const {
    const Grid& g = samples.grid;
    bool nonzero = false;
    for (std::size_t j = 0; j < samples.size(); ++j) {
        if (samples.values[j] != Complex(0.0)) nonzero = true;
        if (g.x(j) > support_right_edge && samples.values[j] != Complex(0.0))
            throw Error(ErrorKind::support_violation, "window is nonzero beyond its right edge");
    }
    if (!nonzero) throw Error(ErrorKind::domain, "window vanishes identically");
}

WindowFunction default_window(double m, const Grid& g) {
    if (!(m > 0.0)) throw Error(ErrorKind::config, "window half-width must be positive");
    WindowFunction w;
    w.support_right_edge = m;
    w.samples = sample(g, [m](double x) -> Complex {
        const double u = x / m;
        if (std::abs(u) >= 1.0) return 0.0;
        const double b = 1.0 - u * u;
        return b * b * b * b;
    });
    w.validate();
    return w;
}

SymbolProduct build_f1(const GridFunction& f, const SalemParams& p) {
    p.validate();
    const Grid cg = convolution_grid(f, p.sigma);
    GridFunction fpad(Grid{f.grid.x0, f.grid.dx, cg.n});
    std::copy(f.values.begin(), f.values.end(), fpad.values.begin());
    const SpectralFunction F = fourier(modulate(fpad, p.m), inf);

    SymbolProduct out;
    out.m = p.m;
    out.spatial_x0 = cg.x0;
    out.samples = GridFunction(F.grid);
    double below = 0.0, peak = 0.0;
    for (std::size_t k = 0; k < F.grid.n; ++k) {
        const double tau = F.t(k) + p.m;
        if (std::abs(tau) > symbol_cutoff || F.values[k] == Complex(0.0)) continue;
        const Complex v = symbol_G(Complex(p.sigma, -tau)) * F.values[k];
        out.samples.values[k] = v;
        peak = std::max(peak, std::abs(v));
        if (F.t(k) < -p.m) below = std::max(below, std::abs(v));
    }
    out.null_below_ratio = peak > 0.0 ? below / peak : 0.0;
    return out;
}

SymbolProduct build_f1(const TestFunction& f, const SalemParams& p, const Grid& grid) {
    return build_f1(realize(f, grid), p);
}

ProductTransformResult product_transform_detail(const SymbolProduct& f1, const WindowFunction& f2,
                                                const std::vector<double>& t_values, const GridFunction& ibar) {
    const Grid& g = f1.samples.grid;
    require_same_grid(g, f2.samples.grid);
    f2.validate();
    const double m = f1.m;

    double inside = 0.0, outside = 0.0;
    std::vector<std::size_t> nz;  // support of f2
    for (std::size_t j = 0; j < g.n; ++j) {
        const double a = std::abs(f1.samples.values[j] * f2.samples.values[j]);
        if (g.x(j) < -m || g.x(j) > m) outside = std::max(outside, a);
        else inside = std::max(inside, a);
        if (f2.samples.values[j] != Complex(0.0)) nz.push_back(j);
    }
    if (outside > 1e-6 * std::max(inside, std::numeric_limits<double>::min()))
        throw Error(ErrorKind::support_violation, "f1 f2 has mass outside [-m, m]");

    const double c = g.dx / sqrt_2pi;
    auto ff2 = [&](double w) {
        CompensatedSum<Complex> s;
        for (std::size_t j : nz) s += f2.samples.values[j] * std::polar(1.0, -w * g.x(j));
        return c * s.value();
    };
    auto both_sides = [&](double t) {
        CompensatedSum<Complex> l;
        for (std::size_t j : nz) l += std::polar(1.0, -t * g.x(j)) * f1.samples.values[j] * f2.samples.values[j];
        CompensatedSum<Complex> r;
        for (std::size_t j = 0; j < ibar.size(); ++j) {
            if (ibar.values[j] == Complex(0.0)) continue;
            r += ibar.values[j] * ff2(t + ibar.grid.x(j));
        }
        return std::make_pair(g.dx * l.value(), ibar.grid.dx * r.value());
    };

    std::vector<std::future<std::pair<Complex, Complex>>> jobs;
    for (double t : t_values) jobs.push_back(std::async(std::launch::async, both_sides, t));

    ProductTransformResult out;
    double dev = 0.0, lmax = 0.0;
    for (auto& job : jobs) {
        const auto [l, r] = job.get();
        out.lhs.push_back(l);
        out.rhs.push_back(r);
        dev = std::max(dev, std::abs(l - r));
        lmax = std::max(lmax, std::abs(l));
    }
    std::ostringstream id, notes;
    id << "paley.product_transform[m=" << fmt(m) << "]";
    notes << "max|lhs|=" << lmax << " at " << t_values.size()
          << " t values; f2 taken on [-m, m] only, though any f2 vanishing above m is admissible";
    out.entry = make_entry(id.str(), dev, 1e-3 * (1.0 + lmax),
                           "int_{-m}^{m} e^{-itx} f1 f2 dx = int Ibar(-x) Ff2(t-x) dx", notes.str());
    return out;
}

ProductTransformResult product_transform_detail(const SymbolProduct& f1, const WindowFunction& f2,
                                                const std::vector<double>& t_values) {
    const GridFunction ibar = inverse_fourier(SpectralFunction(f1.samples.grid, f1.samples.values, f1.spatial_x0));
    return product_transform_detail(f1, f2, t_values, ibar);
}

VerificationEntry product_transform_check(const SymbolProduct& f1, const WindowFunction& f2,
                                          const std::vector<double>& t_values) {
    return product_transform_detail(f1, f2, t_values).entry;
}

VerificationEntry product_transform_bilinearity(const SymbolProduct& f1, const WindowFunction& f2,
                                                const std::vector<double>& t_values) {
    const auto base = product_transform_detail(f1, f2, t_values);
    SymbolProduct half = f1;
    for (auto& z : half.samples.values) z *= 0.5;
    WindowFunction twice = f2;
    for (auto& z : twice.samples.values) z *= 2.0;
    const auto a = product_transform_detail(half, f2, t_values);
    const auto b = product_transform_detail(f1, twice, t_values);
    double err = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < t_values.size(); ++i) {
        scale = std::max({scale, std::abs(base.lhs[i]), std::abs(base.rhs[i])});
        err = std::max({err, std::abs(a.lhs[i] - 0.5 * base.lhs[i]), std::abs(a.rhs[i] - 0.5 * base.rhs[i]),
                        std::abs(b.lhs[i] - 2.0 * base.lhs[i]), std::abs(b.rhs[i] - 2.0 * base.rhs[i])});
    }
    return make_entry("paley.bilinearity[m=" + fmt(f1.m) + "]", scale > 0.0 ? err / scale : err, 1e-10,
                      "both sides are bilinear in (f1, f2)", "factors 1/2 on f1 and 2 on f2");
}

namespace {

// trapezoid over nodes 0..last taken every `stride`, excluded nodes contributing zero
double cauchy_trapezoid(const std::vector<double>& v, const Grid& g, std::size_t last, std::size_t stride) {
    CompensatedSum<double> s;
    for (std::size_t j = 0; j <= last; j += stride) {
        const double x = g.x(j);
        const double w = (j == 0 || j == last) ? 0.5 : 1.0;
        s += w * v[j] / (1.0 + x * x);
    }
    return s.value() * g.dx * static_cast<double>(stride);
}

struct PowerFit {
    double a = 0.0, p = 0.0;
    bool ok = false;
};

// |log h| ~ a |x|^p over |x| in [L/2, L] on one side
PowerFit fit_tail(const std::vector<double>& v, const std::vector<bool>& use, const Grid& g, std::size_t lo,
                  std::size_t hi) {
    std::vector<double> one, lx, rhs;
    for (std::size_t j = lo; j <= hi; ++j) {
        const double x = std::abs(g.x(j));
        if (!use[j] || !(v[j] > 0.0) || x == 0.0) continue;
        one.push_back(1.0);
        lx.push_back(std::log(x));
        rhs.push_back(std::log(v[j]));
    }
    PowerFit out;
    if (rhs.size() < 8) return out;
    const auto coef = least_squares({one, lx}, rhs);
    out.a = std::exp(coef[0]);
    out.p = coef[1];
    out.ok = true;
    return out;
}

// int_L^inf a x^p / (1 + x^2) dx for p < 1 and L > 1, by the series in 1/x^2
double power_tail(const PowerFit& f, double L) {
    CompensatedSum<double> s;
    double sign = 1.0;
    for (int k = 0; k < 60; ++k) {
        const double term = sign * std::pow(L, f.p - 2.0 * k - 1.0) / (2.0 * k + 1.0 - f.p);
        s += term;
        if (std::abs(term) < 1e-17 * std::abs(s.value())) break;
        sign = -sign;
    }
    return f.a * s.value();
}

}  // namespace

LogIntegrability log_integrability(const GridFunction& h) {
    const Grid& g = h.grid;
    g.validate();
    LogIntegrability out;
    std::vector<double> v(g.n, 0.0);
    std::vector<bool> use(g.n, true);
    for (std::size_t j = 0; j < g.n; ++j) {
        const double a = std::abs(h.values[j]);
        if (a < underflow_floor) {
            use[j] = false;
            ++out.excluded;
        } else {
            v[j] = std::abs(std::log(a));
        }
    }
    if (static_cast<double>(out.excluded) > 0.01 * static_cast<double>(g.n))
        throw Error(ErrorKind::excluded_nodes, std::to_string(out.excluded) + " of " + std::to_string(g.n) +
                                                   " nodes underflow");

    // common range for strides 1, 2, 4
    const std::size_t last = ((g.n - 1) / 4) * 4;
    const double t1 = cauchy_trapezoid(v, g, last, 1);
    const double t2 = cauchy_trapezoid(v, g, last, 2);
    const double t4 = cauchy_trapezoid(v, g, last, 4);
    // Aitken removes the leading fractional-order term from a cusp of |log h|
    const double d1 = t1 - t2, d2 = t2 - t4;
    const double denom = d1 - d2;
    out.grid_part = (std::abs(denom) > 1e-14 * std::abs(t1) && std::abs(d1) < std::abs(d2))
                        ? t1 - d1 * d1 / denom
                        : t1;

    const double left = -g.x0, right = g.x(last);
    std::size_t half_left = 0;
    while (half_left < g.n && g.x(half_left) < -left / 2.0) ++half_left;
    std::size_t half_right = last;
    while (half_right > 0 && g.x(half_right) > right / 2.0) --half_right;
    const PowerFit fl = fit_tail(v, use, g, 0, half_left);
    const PowerFit fr = fit_tail(v, use, g, half_right, last);
    out.tail_exponent = std::max(fl.ok ? fl.p : 0.0, fr.ok ? fr.p : 0.0);
    out.divergent = out.tail_exponent >= 1.0;
    if (!out.divergent) {
        if (fl.ok && left > 1.0) out.tail += power_tail(fl, left);
        if (fr.ok && right > 1.0) out.tail += power_tail(fr, right);
        out.value = out.grid_part + out.tail;
    } else {
        out.value = out.grid_part;
    }
    return out;
}

CauchyWeight cauchy_weight_integral(double epsilon) {
    if (!(epsilon > 0.05)) throw Error(ErrorKind::domain, "epsilon must exceed 0.05");
    if (!(epsilon < 2.0)) throw Error(ErrorKind::domain, "epsilon must be below 2");
    // x = u^{1/eps} on [0, 1] and x = w^{-1/(2-eps)} on [1, inf) make both pieces smooth
    const double pa = 2.0 / epsilon, pb = 2.0 / (2.0 - epsilon);
    const auto a = integrate(std::function<double(double)>([pa](double u) { return 1.0 / (1.0 + std::pow(u, pa)); }), 0.0, 1.0);
    const auto b = integrate(std::function<double(double)>([pb](double w) { return 1.0 / (1.0 + std::pow(w, pb)); }), 0.0, 1.0);
    CauchyWeight out;
    out.numeric = 2.0 * (a.value / epsilon + b.value / (2.0 - epsilon));
    out.closed_form = pi / std::sin(epsilon * pi / 2.0);
    return out;
}

VerificationEntry cauchy_weight_check(double epsilon) {
    const CauchyWeight w = cauchy_weight_integral(epsilon);
    std::ostringstream notes;
    notes << "numeric=" << w.numeric << " closed=" << w.closed_form
          << "; two-sided total, the half-line integral is half of it";
    return make_entry("paley.cauchy_weight[eps=" + fmt(epsilon) + "]",
                      std::abs(w.numeric - w.closed_form) / std::abs(w.closed_form), 1e-8,
                      "int |x|^(eps-1)/(1+x^2) dx = pi/sin(eps pi/2)", notes.str());
}

VerificationEntry decay_sufficiency_check(double epsilon, double c) {
    if (!(epsilon > 1.0 && epsilon < 2.0)) throw Error(ErrorKind::domain, "epsilon must lie in (1, 2)");
    if (!(c >= 0.0)) throw Error(ErrorKind::domain, "c must be nonnegative");
    const Grid g{-100.0, 200.0 / 131072, 131072};
    const GridFunction h = sample(g, [=](double x) -> Complex { return std::exp(-c * std::pow(std::abs(x), epsilon - 1.0)); });
    const LogIntegrability li = log_integrability(h);
    const double want = c * cauchy_weight_integral(epsilon).numeric;
    const double measured = want > 0.0 ? std::abs(li.value - want) / want : std::abs(li.value);
    std::ostringstream notes;
    notes << "log-integral=" << li.value << " (grid " << li.grid_part << " + tail " << li.tail
          << ", exponent " << li.tail_exponent << ") expected=" << want;
    return make_entry("paley.decay_sufficiency[eps=" + fmt(epsilon) + ",c=" + fmt(c) + "]", measured, 1e-6,
                      "h = e^(-c|x|^(eps-1)) gives int |log h|/(1+x^2) = c pi/sin(eps pi/2)", notes.str());
}

}  // namespace salemkit
