#include "salemkit/kernel.hpp"

#include "salemkit/error.hpp"
#include "salemkit/specialfn.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace salemkit {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr std::size_t max_series_terms = 10'000'000;

// sum_{|t| <= T} of h/(2 pi) * symbol(d + i t) * x^{-d - i t} on the nodes t = k h
template <typename Symbol>
ContourValue contour_trapezoid(double x, double d, double t_max, double h, Symbol symbol) {
    const double lx = std::log(x);
    const auto kmax = static_cast<long>(std::floor(t_max / h));
    CompensatedSum<Complex> sum;
    for (long k = -kmax; k <= kmax; ++k) {
        const double t = k * h;
        const Complex s(d, t);
        sum += symbol(s) * std::exp(-s * lx);
    }
    Complex v = sum.value() * (h / (2.0 * pi));
    const double edge = std::abs(symbol(Complex(d, kmax * h))) * std::exp(-d * lx);
    // the integrand decays at least like e^{-pi t / 2} past T
    return {v.real(), v.imag(), 4.0 * edge / (pi * pi)};
}

}  // namespace

void KernelSpec::validate() const {
    if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorKind::config, "kernel exponent r must lie in [0, 1)");
    if (!(series_tol > 0.0)) throw Error(ErrorKind::config, "series_tol must be positive");
    if (!(x_min_series > 0.0)) throw Error(ErrorKind::config, "x_min_series must be positive");
    if (!(cancellation_cap > 0.0)) throw Error(ErrorKind::config, "cancellation_cap must be positive");
}

void ContourSpec::validate() const {
    if (!(d > 0.0 && d < 1.0)) throw Error(ErrorKind::domain, "contour abscissa d must lie in (0, 1)");
    if (!(t_max > 0.0)) throw Error(ErrorKind::config, "contour height t_max must be positive");
    if (!(h > 0.0 && h <= 0.1)) throw Error(ErrorKind::config, "contour step h must lie in (0, 0.1]");
}

double divisor_sum(std::uint64_t n, double r) {
    if (n == 0) throw Error(ErrorKind::domain, "divisor_sum requires n >= 1");
    double sum = 0.0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        const std::uint64_t e = n / d;
        sum += std::pow(static_cast<double>(d), r);
        if (e != d) sum += std::pow(static_cast<double>(e), r);
    }
    return sum;
}

DivisorTable::DivisorTable(std::size_t n_max, double r) : table_(n_max + 1, 0.0), r_(r) {
    for (std::size_t d = 1; d <= n_max; ++d) {
        const double dr = std::pow(static_cast<double>(d), r);
        for (std::size_t m = d; m <= n_max; m += d) table_[m] += dr;
    }
}

std::size_t series_cutoff(double x, double r, double tol) {
    if (!(x > 0.0)) throw Error(ErrorKind::domain, "divisor series requires x > 0");
    // d_r(n) <= 2 n^{r+1/2}; past n >= 2(r+1/2)/x consecutive bounds shrink by e^{-x/2}
    const double a = r + 0.5;
    const double denom = -std::log1p(-std::exp(-0.5 * x));
    const double start = std::max(1.0, std::ceil(2.0 * a / x));
    auto log_tail = [&](double n) { return std::log(2.0) + a * std::log(n) - n * x + denom; };
    const double log_tol = std::log(tol);
    if (log_tail(static_cast<double>(max_series_terms)) > log_tol)
        throw Error(ErrorKind::truncation_budget,
                    "divisor series at x = " + std::to_string(x) + " needs more than 1e7 terms");
    double lo = start, hi = static_cast<double>(max_series_terms);
    if (log_tail(lo) <= log_tol) return static_cast<std::size_t>(lo);
    while (hi - lo > 1.0) {
        const double mid = std::floor(0.5 * (lo + hi));
        (log_tail(mid) <= log_tol ? hi : lo) = mid;
    }
    return static_cast<std::size_t>(hi);
}

double raw_series(double x, const KernelSpec& spec, const DivisorTable& table) {
    const std::size_t n = series_cutoff(x, spec.r, spec.series_tol);
    if (table.size() < n || table.r() != spec.r)
        throw Error(ErrorKind::domain, "divisor table too short for this x");
    CompensatedSum<double> sum;
    for (std::size_t k = 1; k <= n; ++k) sum += table[k] * std::exp(-static_cast<double>(k) * x);
    return sum.value();
}

double raw_series(double x, const KernelSpec& spec) {
    spec.validate();
    DivisorTable table(series_cutoff(x, spec.r, spec.series_tol), spec.r);
    return raw_series(x, spec, table);
}

double c32_coefficient() { return (salemkit::gamma(1.5) * zeta(1.5)).real(); }
double c1_coefficient() { return zeta(0.5).real(); }

KSeriesValue k_series(double x, const KernelSpec& spec, const DivisorTable& table) {
    if (spec.r != 0.5) throw Error(ErrorKind::domain, "k_series is defined for r = 1/2");
    if (!(x >= spec.x_min_series))
        throw Error(ErrorKind::domain, "k_series requires x >= x_min_series");
    const double c32 = c32_coefficient();
    const double c1 = c1_coefficient();
    const double corr32 = c32 * std::pow(x, -1.5);
    const double corr1 = c1 / x;
    const double size = std::abs(corr32) + std::abs(corr1);
    if (size > spec.cancellation_cap)
        throw Error(ErrorKind::cancellation, "pole corrections at x = " + std::to_string(x) +
                                                 " exceed the cancellation cap");
    const double raw = raw_series(x, spec, table);
    KSeriesValue out;
    out.value = (raw - corr32) - corr1;
    out.truncation_bound = spec.series_tol;
    out.cancellation_bound = 4.0 * eps * (std::abs(raw) + size);
    return out;
}

KSeriesValue k_series(double x, const KernelSpec& spec) {
    spec.validate();
    if (!(x >= spec.x_min_series))
        throw Error(ErrorKind::domain, "k_series requires x >= x_min_series");
    DivisorTable table(series_cutoff(x, spec.r, spec.series_tol), spec.r);
    return k_series(x, spec, table);
}

ContourValue k_contour(double x, const ContourSpec& cs) {
    cs.validate();
    if (!(x > 0.0)) throw Error(ErrorKind::domain, "k_contour requires x > 0");
    auto v = contour_trapezoid(x, cs.d, cs.t_max, cs.h, [](Complex s) { return symbol_G(s); });
    if (std::abs(v.imag) > 1e-8)
        throw Error(ErrorKind::nonreal_result, "contour integral has imaginary part " + std::to_string(v.imag));
    return v;
}

ContourValue raw_contour(double x, double r, double c, double t_max, double h) {
    if (!(x > 0.0)) throw Error(ErrorKind::domain, "raw_contour requires x > 0");
    if (!(c > r + 1.0)) throw Error(ErrorKind::domain, "raw_contour requires c > r + 1");
    return contour_trapezoid(x, c, t_max, h,
                             [r](Complex s) { return salemkit::gamma(s) * zeta(s) * zeta(s - r); });
}

ResidueCoefficients residue_coefficients() {
    ResidueCoefficients rc;
    rc.c1 = c1_coefficient();
    const double z32 = zeta(1.5).real();
    rc.gamma_candidate = salemkit::gamma(1.5).real() * z32;
    rc.sqrt_half_pi_candidate = std::sqrt(pi / 2.0) * z32;

    // x^{3/2} (raw - c1/x - k) is c32 plus contour error; fit a + b x^{3/2}
    const KernelSpec spec;
    const double xs[] = {0.02, 0.01, 0.005};
    DivisorTable table(series_cutoff(0.005, spec.r, spec.series_tol), spec.r);
    std::vector<double> col1, colx, rhs;
    for (double x : xs) {
        const double raw = raw_series(x, spec, table);
        const double k = k_contour(x).value;
        rhs.push_back(std::pow(x, 1.5) * (raw - rc.c1 / x - k));
        col1.push_back(1.0);
        colx.push_back(std::pow(x, 1.5));
    }
    rc.c32_fit = least_squares({col1, colx}, rhs)[0];
    const double rg = std::abs(rc.c32_fit - rc.gamma_candidate) / rc.gamma_candidate;
    const double rs = std::abs(rc.c32_fit - rc.sqrt_half_pi_candidate) / rc.sqrt_half_pi_candidate;
    if (rg <= rs) {
        rc.c32 = rc.gamma_candidate;
        rc.fit_residual = rg;
        rc.rejected_residual = rs;
        rc.selected = "Gamma(3/2) zeta(3/2)";
    } else {
        rc.c32 = rc.sqrt_half_pi_candidate;
        rc.fit_residual = rs;
        rc.rejected_residual = rg;
        rc.selected = "sqrt(pi/2) zeta(3/2)";
    }
    if (!(rc.fit_residual <= 1e-4))
        throw Error(ErrorKind::nonconvergence, "residue fit matches neither closed form (residual " +
                                                   std::to_string(rc.fit_residual) + ")");
    return rc;
}

ScaledKernel::ScaledKernel(double sigma, const KernelSpec& spec, const ContourSpec& cs)
    : sigma_(sigma),
      spec_(spec),
      table_((spec.validate(), series_cutoff(spec.x_min_series, spec.r, spec.series_tol)), spec.r) {
    if (!(sigma > 0.5 && sigma < 1.0)) throw Error(ErrorKind::domain, "sigma must lie in (1/2, 1)");
    if (!(cs.t_max > 0.0)) throw Error(ErrorKind::config, "contour height must be positive");
    // With abscissa d = sigma the contour gives K directly as (1/2pi) int G(sigma+it) e^{-ixt} dt.
    // The step keeps the alias K(x + 2pi/h) negligible over the whole left branch.
    const auto [lo, hi] = support();
    h_ = std::min(cs.h, 2.0 * pi / (-lo + 37.0 / (1.0 - sigma)));
    const auto kmax = static_cast<long>(std::ceil(cs.t_max / h_));
    g_.resize(kmax + 1);
    for (long k = 0; k <= kmax; ++k) g_[k] = symbol_G(Complex(sigma, k * h_));
    (void)hi;
}

std::pair<double, double> ScaledKernel::support() const {
    return {-32.0 / sigma_, 32.0 / (1.0 - sigma_)};
}

double ScaledKernel::left_tail(double x) const {
    static const double k0 = (zeta(0.0) * zeta(-0.5)).real();
    return k0 * std::exp(sigma_ * x);
}

double ScaledKernel::right_tail(double x) const {
    return -c32_coefficient() * std::exp((sigma_ - 1.5) * x) - c1_coefficient() * std::exp((sigma_ - 1.0) * x);
}

double ScaledKernel::contour_value(double x) const {
    CompensatedSum<double> sum;
    for (std::size_t k = g_.size() - 1; k >= 1; --k) {
        const double ph = -x * static_cast<double>(k) * h_;
        sum += 2.0 * (g_[k] * Complex(std::cos(ph), std::sin(ph))).real();
    }
    sum += g_[0].real();
    return sum.value() * h_ / (2.0 * pi);
}

double ScaledKernel::operator()(double x) const {
    if (!std::isfinite(x)) throw Error(ErrorKind::domain, "scaled kernel argument is not finite");
    const auto [lo, hi] = support();
    (void)hi;
    if (x < lo) return left_tail(x);
    if (x > 6.0) return right_tail(x);  // the divisor series is below e^{-400} here
    const double ex = std::exp(x);
    if (ex >= spec_.x_min_series) return std::exp(sigma_ * x) * k_series(ex, spec_, table_).value;
    return contour_value(x);
}

double scaled_kernel(double x, double sigma, const KernelSpec& spec, const ContourSpec& cs) {
    return ScaledKernel(sigma, spec, cs)(x);
}

Complex scaled_kernel_spectrum(double sigma, double t) {
    if (!(sigma > 0.5 && sigma < 1.0)) throw Error(ErrorKind::domain, "sigma must lie in (1/2, 1)");
    return symbol_G(Complex(sigma, -t)) / sqrt_2pi;
}

L2Certificate l2_certificate_detail(double sigma) {
    const ScaledKernel kernel(sigma);
    const auto [a, b] = kernel.support();
    const double dx = 0.05;
    const auto n = static_cast<long>(std::ceil((b - a) / dx));

    CompensatedSum<double> total, outside;
    for (long j = 0; j <= n; ++j) {
        const double x = a + j * dx;
        const double v = kernel(x);
        total += v * v * dx;
        if (std::abs(x) > 60.0) outside += v * v * dx;
    }
    // analytic tails past the sampled range
    const double k0 = kernel.left_tail(0.0);
    const double left = k0 * k0 * std::exp(2.0 * sigma * a) / (2.0 * sigma);
    const double amp1 = -c1_coefficient(), amp2 = -c32_coefficient();
    const double al = sigma - 1.0, be = sigma - 1.5;
    const double right = amp1 * amp1 * std::exp(2.0 * al * b) / (-2.0 * al) +
                         2.0 * amp1 * amp2 * std::exp((al + be) * b) / (-(al + be)) +
                         amp2 * amp2 * std::exp(2.0 * be * b) / (-2.0 * be);
    total += left + right;
    outside += (a < -60.0 ? left : 0.0) + (b > 60.0 ? right : 0.0);
    const double spatial = total.value();

    const double t_max = 40.0;
    auto g2 = [sigma](double t) { return std::norm(symbol_G(Complex(sigma, t))); };
    auto half = integrate(std::function<double(double)>(g2), 0.0, t_max, {1e-16, 1e-13, 4000});
    const double spectral = 2.0 * half.value / (2.0 * pi);
    // |G|^2 decays like e^{-pi t} t^{2 sigma - 1} |zeta zeta|^2 past T
    const double tail = 2.0 * 2.0 * g2(t_max) / pi / (2.0 * pi);
    if (tail > 1e-8 * spectral) throw Error(ErrorKind::tail_bound, "spectral tail bound too large");

    L2Certificate cert;
    cert.spatial = spatial;
    cert.spectral = spectral;
    cert.outside_60 = outside.value() / spatial;
    std::ostringstream id, notes;
    id << "kernel.l2_certificate[sigma=" << sigma << "]";
    notes.precision(15);
    notes << "spatial=" << spatial << " spectral=" << spectral << " spectral_tail_bound=" << tail;
    notes.precision(3);
    notes << " fraction_beyond_60=" << cert.outside_60;
    cert.entry = make_entry(id.str(), std::abs(spatial - spectral) / spectral, 1e-4,
                            "int |e^(sigma x) k(e^x)|^2 dx = (1/2pi) int |G(sigma+it)|^2 dt", notes.str());
    return cert;
}

VerificationEntry l2_certificate(double sigma) { return l2_certificate_detail(sigma).entry; }

double salem_kernel(double x, double sigma) {
    const double ex = std::exp(x);
    if (ex > 700.0) return 0.0;
    return std::exp(sigma * x) / (std::exp(ex) + 1.0);
}

}  // namespace salemkit
