#include "salemkit/transforms.hpp"

#include "salemkit/error.hpp"

#include <fftw3.h>

#include <limits>
#include <mutex>
#include <sstream>

namespace salemkit {

namespace {

// FFTW planning is not thread-safe; execution is.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

void check_edges(const GridFunction& f, double edge_tol) {
    const double peak = f.max_abs();
    if (peak == 0.0 || !std::isfinite(edge_tol)) return;
    const double edge = std::max(std::abs(f.values.front()), std::abs(f.values.back()));
    if (edge > edge_tol * peak) {
        std::ostringstream os;
        os << "edge samples reach " << edge / peak << " of the peak (threshold " << edge_tol << ")";
        throw Error(ErrorKind::support_violation, os.str());
    }
}

}  // namespace

void fft(std::vector<Complex>& data, bool forward) {
    const int n = static_cast<int>(data.size());
    if (n == 0) return;
    fftw_complex* buf = fftw_alloc_complex(static_cast<std::size_t>(n));
    std::copy(data.begin(), data.end(), reinterpret_cast<Complex*>(buf));
    fftw_plan plan;
    {
        std::lock_guard lock(plan_mutex());
        plan = fftw_plan_dft_1d(n, buf, buf, forward ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(plan_mutex());
        fftw_destroy_plan(plan);
    }
    std::copy(reinterpret_cast<Complex*>(buf), reinterpret_cast<Complex*>(buf) + n, data.begin());
    fftw_free(buf);
}

SpectralFunction fourier(const GridFunction& f, double edge_tol) {
    f.grid.validate();
    check_edges(f, edge_tol);
    const std::size_t n = f.grid.n;
    const double dt = 2.0 * pi / (static_cast<double>(n) * f.grid.dx);
    const Grid tg{-static_cast<double>(n / 2) * dt, dt, n};
    std::vector<Complex> work(n);
    for (std::size_t j = 0; j < n; ++j) work[j] = (j % 2 == 0) ? f.values[j] : -f.values[j];
    fft(work, true);
    const double scale = f.grid.dx / sqrt_2pi;
    for (std::size_t k = 0; k < n; ++k) {
        const double ph = -tg.x(k) * f.grid.x0;
        work[k] *= scale * Complex(std::cos(ph), std::sin(ph));
    }
    return {tg, std::move(work), f.grid.x0};
}

GridFunction inverse_fourier(const SpectralFunction& F) {
    if (F.convention() != Convention::unitary)
        throw Error(ErrorKind::convention_mismatch, "inverse_fourier expects the (1/sqrt(2pi)) e^{-itx} convention");
    F.grid.validate();
    const std::size_t n = F.grid.n;
    const double dx = 2.0 * pi / (static_cast<double>(n) * F.grid.dx);
    std::vector<Complex> work(n);
    const double scale = sqrt_2pi / (dx * static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        const double ph = F.t(k) * F.x0;
        work[k] = F.values[k] * scale * Complex(std::cos(ph), std::sin(ph));
    }
    fft(work, false);
    for (std::size_t j = 1; j < n; j += 2) work[j] = -work[j];
    return {Grid{F.x0, dx, n}, std::move(work)};
}

Complex dtft(const GridFunction& f, double t) {
    CompensatedSum<Complex> sum;
    for (std::size_t j = 0; j < f.size(); ++j) {
        const double ph = -t * f.grid.x(j);
        sum += f.values[j] * Complex(std::cos(ph), std::sin(ph));
    }
    return sum.value() * (f.grid.dx / sqrt_2pi);
}

GridFunction zero_pad(const GridFunction& f, std::size_t factor) {
    if (factor == 0 || !is_power_of_two(factor)) throw Error(ErrorKind::config, "padding factor must be a power of two");
    if (factor == 1) return f;
    const std::size_t n = f.grid.n;
    const std::size_t offset = n * (factor - 1) / 2;
    Grid g{f.grid.x0 - static_cast<double>(offset) * f.grid.dx, f.grid.dx, n * factor};
    std::vector<Complex> v(g.n);
    std::copy(f.values.begin(), f.values.end(), v.begin() + static_cast<std::ptrdiff_t>(offset));
    return {g, std::move(v)};
}

GridFunction restrict_to(const GridFunction& f, const Grid& target, double tol) {
    if (std::abs(target.dx - f.grid.dx) > 1e-12 * f.grid.dx)
        throw Error(ErrorKind::grid_mismatch, "restriction target has a different spacing");
    const double shift = (target.x0 - f.grid.x0) / f.grid.dx;
    const double rounded = std::round(shift);
    if (std::abs(shift - rounded) > 1e-6) throw Error(ErrorKind::grid_mismatch, "restriction target is not on the lattice");
    const auto offset = static_cast<long>(rounded);
    std::vector<Complex> v(target.n);
    double outside = 0.0;
    for (long j = 0; j < static_cast<long>(f.size()); ++j) {
        const long k = j - offset;
        if (k >= 0 && k < static_cast<long>(target.n))
            v[static_cast<std::size_t>(k)] = f.values[static_cast<std::size_t>(j)];
        else
            outside = std::max(outside, std::abs(f.values[static_cast<std::size_t>(j)]));
    }
    const double peak = f.max_abs();
    if (peak > 0.0 && outside > tol * peak) {
        std::ostringstream os;
        os << "restriction drops samples of relative size " << outside / peak;
        throw Error(ErrorKind::support_violation, os.str());
    }
    return {target, std::move(v)};
}

GridFunction hilbert(const GridFunction& f, std::size_t pad, double edge_tol) {
    f.grid.validate();
    check_edges(f, edge_tol);
    GridFunction padded = zero_pad(f, pad);
    SpectralFunction F = fourier(padded, std::numeric_limits<double>::infinity());
    for (std::size_t k = 0; k < F.grid.n; ++k) {
        const double t = F.t(k);
        const double sgn = t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0);
        F.values[k] *= Complex(0.0, sgn);
    }
    GridFunction out = inverse_fourier(F);
    return restrict_to(out, f.grid, std::numeric_limits<double>::infinity());
}

Complex hilbert_pv_direct(const GridFunction& f, double y) {
    const Grid& g = f.grid;
    if (!(y >= g.x0 + g.dx && y <= g.back() - g.dx))
        throw Error(ErrorKind::edge_proximity, "PV evaluation point lies within dx of the grid edge");
    const std::size_t n = f.size();
    // cubic interpolation for f(y) and f'(y) from the four surrounding nodes
    auto j0 = static_cast<long>(std::floor((y - g.x0) / g.dx)) - 1;
    j0 = std::clamp(j0, 0L, static_cast<long>(n) - 4);
    const double u = (y - g.x(static_cast<std::size_t>(j0))) / g.dx;
    Complex fy = 0.0, dfy = 0.0;
    for (int a = 0; a < 4; ++a) {
        double l = 1.0, dl = 0.0;
        for (int b = 0; b < 4; ++b) {
            if (b == a) continue;
            double prod = 1.0;
            for (int c = 0; c < 4; ++c)
                if (c != a && c != b) prod *= (u - c) / (a - c);
            dl += prod / (a - b);
            l *= (u - b) / (a - b);
        }
        fy += l * f.values[static_cast<std::size_t>(j0 + a)];
        dfy += dl * f.values[static_cast<std::size_t>(j0 + a)] / g.dx;
    }
    CompensatedSum<Complex> sum;
    for (std::size_t j = 0; j < n; ++j) {
        const double d = g.x(j) - y;
        const Complex q = std::abs(d) < 1e-9 * g.dx ? dfy : (f.values[j] - fy) / d;
        sum += (j == 0 || j == n - 1) ? 0.5 * q : q;
    }
    const Complex pv = sum.value() * g.dx + fy * std::log((g.back() - y) / (y - g.x0));
    return pv / pi;
}

GridFunction convolve(const GridFunction& f, const GridFunction& g) {
    f.grid.validate();
    g.grid.validate();
    if (std::abs(f.grid.dx - g.grid.dx) > 1e-12 * f.grid.dx)
        throw Error(ErrorKind::grid_mismatch, "convolution operands have different spacing");
    const std::size_t len = f.size() + g.size() - 1;
    const std::size_t n = next_power_of_two(len);
    if (n > (std::size_t{1} << 27))
        throw Error(ErrorKind::wraparound, "linear convolution does not fit the largest FFT buffer");
    std::vector<Complex> a(n), b(n);
    std::copy(f.values.begin(), f.values.end(), a.begin());
    std::copy(g.values.begin(), g.values.end(), b.begin());
    fft(a, true);
    fft(b, true);
    for (std::size_t k = 0; k < n; ++k) a[k] *= b[k];
    fft(a, false);
    const double scale = f.grid.dx / static_cast<double>(n);
    for (auto& z : a) z *= scale;
    for (std::size_t k = len; k < n; ++k) a[k] = 0.0;
    return {Grid{f.grid.x0 + g.grid.x0, f.grid.dx, n}, std::move(a)};
}

VerificationEntry plancherel_check(const GridFunction& f) {
    const SpectralFunction F = fourier(f, std::numeric_limits<double>::infinity());
    CompensatedSum<double> lhs, rhs;
    for (const auto& z : f.values) lhs += std::norm(z);
    for (const auto& z : F.values) rhs += std::norm(z);
    const double a = lhs.value() * f.grid.dx;
    const double b = rhs.value() * F.grid.dx;
    const double rel = a == 0.0 ? std::abs(b) : std::abs(a - b) / a;
    std::ostringstream os;
    os.precision(15);
    os << "spatial=" << a << " spectral=" << b;
    return make_entry("transforms.plancherel", rel, 1e-10, "int |f|^2 dx = int |Ff|^2 dt", os.str());
}

}  // namespace salemkit
