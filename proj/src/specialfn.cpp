#include "salemkit/specialfn.hpp"

#include "salemkit/error.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace salemkit {

namespace {

constexpr Complex I{0.0, 1.0};

// Lanczos coefficients for g = 671/128 (Numerical Recipes, 3rd ed.).
constexpr double lanczos_g = 5.24218750000000000;
constexpr std::array<double, 14> lanczos_c = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

// log gamma for Re(s) >= 1/2
Complex lanczos_log_gamma(Complex s) {
    Complex tmp = s + lanczos_g;
    tmp = (s + 0.5) * std::log(tmp) - tmp;
    Complex ser = 0.999999999999997092;
    Complex y = s;
    for (double c : lanczos_c) {
        y += 1.0;
        ser += c / y;
    }
    return tmp + std::log(sqrt_2pi * ser / s);
}

// log(sin(pi s)), stable for large |Im s|
Complex log_sin_pi(Complex s) {
    if (std::abs(s.imag()) < 20.0) return std::log(std::sin(pi * s));
    if (s.imag() > 0) {
        // sin(pi s) = e^{-i pi s} (1 - e^{2 i pi s}) / (-2i)
        return -I * pi * s + std::log(1.0 - std::exp(2.0 * I * pi * s)) - std::log(-2.0 * I);
    }
    return I * pi * s + std::log(1.0 - std::exp(-2.0 * I * pi * s)) - std::log(2.0 * I);
}

void check_gamma_domain(Complex s) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw Error(ErrorKind::domain, "gamma argument is not finite");
    if (s.real() <= -20.0) throw Error(ErrorKind::domain, "gamma requires Re(s) > -20");
    double r = std::round(s.real());
    if (r <= 0.0 && std::abs(s.imag()) < 1e-14 && std::abs(s.real() - r) < 1e-14)
        throw Error(ErrorKind::pole, "gamma has a pole at nonpositive integer " + std::to_string(r));
}

// B_{2k} / (2k)!
constexpr std::array<double, 12> bernoulli_over_factorial = [] {
    constexpr std::array<double, 12> b2k = {
        1.0 / 6,        -1.0 / 30,          1.0 / 42,         -1.0 / 30,
        5.0 / 66,       -691.0 / 2730,      7.0 / 6,          -3617.0 / 510,
        43867.0 / 798,  -174611.0 / 330,    854513.0 / 138,   -236364091.0 / 2730};
    std::array<double, 12> out{};
    double fact = 1.0;
    for (int k = 1; k <= 12; ++k) {
        fact *= (2.0 * k - 1) * (2.0 * k);
        out[k - 1] = b2k[k - 1] / fact;
    }
    return out;
}();

}  // namespace

void ZetaConfig::validate() const {
    if (em_terms < 10) throw Error(ErrorKind::config, "zeta em_terms must be >= 10");
    if (bernoulli_terms < 2 || bernoulli_terms > 12)
        throw Error(ErrorKind::config, "zeta bernoulli_terms must lie in [2, 12]");
}

Complex log_gamma(Complex s) {
    check_gamma_domain(s);
    if (s.real() < 0.5) return std::log(pi) - log_sin_pi(s) - lanczos_log_gamma(1.0 - s);
    return lanczos_log_gamma(s);
}

Complex gamma(Complex s) {
    Complex lg = log_gamma(s);
    if (lg.real() > 709.0) throw Error(ErrorKind::overflow, "gamma overflows double range");
    return std::exp(lg);
}

Complex zeta(Complex s, const ZetaConfig& cfg) {
    cfg.validate();
    if (std::abs(s - 1.0) < 1e-12) throw Error(ErrorKind::pole, "zeta has a pole at s = 1");
    if (!(s.real() > -1.0) || std::abs(s.imag()) > 200.0) {
        std::ostringstream os;
        os << "zeta outside the supported box Re(s) > -1, |Im s| <= 200 (s = " << s.real()
           << (s.imag() < 0 ? " - " : " + ") << std::abs(s.imag()) << "i)";
        throw Error(ErrorKind::precision_unattainable, os.str());
    }
    const int n = std::max(cfg.em_terms, static_cast<int>(std::ceil(1.3 * std::abs(s.imag()))));
    CompensatedSum<Complex> sum;
    for (int k = 1; k < n; ++k) sum += std::exp(-s * std::log(static_cast<double>(k)));
    const double ln_n = std::log(static_cast<double>(n));
    const Complex n_pow = std::exp(-s * ln_n);  // N^{-s}
    sum += n_pow * static_cast<double>(n) / (s - 1.0);
    sum += 0.5 * n_pow;
    // Bernoulli corrections: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    Complex rising = s;
    Complex power = n_pow / static_cast<double>(n);
    const double inv_n2 = 1.0 / (static_cast<double>(n) * n);
    for (int k = 1; k <= cfg.bernoulli_terms; ++k) {
        sum += bernoulli_over_factorial[k - 1] * rising * power;
        rising *= (s + (2.0 * k - 1)) * (s + 2.0 * k);
        power *= inv_n2;
    }
    return sum.value();
}

Complex eta_factor(Complex s) {
    // 2^{1-s} = 2^{1-sigma} e^{-i t ln 2}
    const double mod = std::pow(2.0, 1.0 - s.real());
    const double phase = -s.imag() * ln2;
    return 1.0 - mod * Complex(std::cos(phase), std::sin(phase));
}

Complex dirichlet_eta(Complex s, int terms) {
    const int n = terms;
    std::vector<double> d(n + 1);
    double term = 1.0 / n;  // (n+i-1)! 4^i / ((n-i)! (2i)!) at i = 0, times 1/n
    double acc = term;
    d[0] = n * acc;
    for (int i = 1; i <= n; ++i) {
        term *= 4.0 * (n + i - 1) * (n - i + 1) / ((2.0 * i - 1) * (2.0 * i));
        acc += term;
        d[i] = n * acc;
    }
    CompensatedSum<Complex> sum;
    for (int k = 0; k < n; ++k) {
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum += sign * (d[k] - d[n]) * std::exp(-s * std::log(k + 1.0));
    }
    return -sum.value() / d[n];
}

Complex symbol_G(Complex s) {
    if (std::abs(s - 1.5) < 1e-12) throw Error(ErrorKind::pole, "symbol G has a pole at s = 3/2");
    return gamma(s) * zeta(s) * zeta(s - 0.5);
}

double stirling_modulus(double sigma, double t) {
    if (std::abs(t) < 5.0)
        throw Error(ErrorKind::domain, "Stirling modulus asymptotic requires |t| >= 5");
    return sqrt_2pi * std::exp(-pi * std::abs(t) / 2.0) * std::pow(std::abs(t), sigma - 0.5);
}

VerificationEntry fermi_mellin_check(Complex s) {
    const double sigma = s.real();
    if (!(sigma > 0.0 && sigma <= 4.0) || std::abs(s.imag()) > 50.0)
        throw Error(ErrorKind::domain, "fermi_mellin_check requires Re(s) in (0, 4], |Im s| <= 50");
    QuadratureOptions opt{1e-13, 1e-13, 20000};

    // [0, 1]: x = u^{1/sigma} turns x^{s-1} dx into u^{i t / sigma} du / sigma when sigma < 1
    Complex head;
    if (sigma < 1.0) {
        const double p = 1.0 / sigma;
        const double w = s.imag() / sigma;
        head = integrate(
                   [&](double u) -> Complex {
                       if (u <= 0.0) return 0.0;
                       const double x = std::pow(u, p);
                       const double lu = std::log(u);
                       return Complex(std::cos(w * lu), std::sin(w * lu)) / (sigma * (std::exp(x) + 1.0));
                   },
                   0.0, 1.0, opt)
                   .value;
    } else {
        head = integrate(
                   [&](double x) -> Complex {
                       if (x <= 0.0) return s == 1.0 ? Complex(0.5) : Complex(0.0);
                       return std::exp((s - 1.0) * std::log(x)) / (std::exp(x) + 1.0);
                   },
                   0.0, 1.0, opt)
                   .value;
    }
    // [1, X] with X beyond the point where x^{sigma-1} e^{-x} < 1e-18
    double upper = 42.0;
    while ((sigma - 1.0) * std::log(upper) - upper > std::log(1e-18)) upper += 1.0;
    Complex tail = 0.0;
    for (double a = 1.0; a < upper; a += 8.0) {
        tail += integrate(
                    [&](double x) -> Complex {
                        return std::exp((s - 1.0) * std::log(x) - x) / (1.0 + std::exp(-x));
                    },
                    a, std::min(a + 8.0, upper), opt)
                    .value;
    }
    const Complex lhs = head + tail;

    Complex rhs;
    std::string notes;
    if (std::abs(s - 1.0) < 1e-8) {
        rhs = gamma(s) * dirichlet_eta(s);
        notes = "right side at s = 1 taken as the limit via accelerated eta";
    } else {
        rhs = gamma(s) * zeta(s) * eta_factor(s);
    }
    std::ostringstream id;
    id << "specialfn.fermi_mellin[s=" << s.real() << (s.imag() < 0 ? "-" : "+") << std::abs(s.imag())
       << "i]";
    std::ostringstream os;
    os << "lhs=" << lhs.real() << "+" << lhs.imag() << "i rhs=" << rhs.real() << "+" << rhs.imag() << "i";
    if (!notes.empty()) os << "; " << notes;
    return make_entry(id.str(), std::abs(lhs - rhs), 1e-8,
                      "int_0^inf x^(s-1)/(e^x+1) dx = Gamma(s) zeta(s) (1-2^(1-s))", os.str());
}

VerificationEntry functional_equation_check(Complex s) {
    if (!(s.real() > -0.5 && s.real() < 1.5))
        throw Error(ErrorKind::domain, "functional_equation_check requires Re(s) in (-0.5, 1.5)");
    if (std::abs(s) < 1e-12) throw Error(ErrorKind::pole, "functional equation has a pole at s = 0");
    if (std::abs(s - 1.0) < 1e-12) throw Error(ErrorKind::pole, "functional equation has a pole at s = 1");
    const Complex lhs = zeta(s);
    const Complex rhs = std::exp(s * ln2 + (s - 1.0) * std::log(pi)) * std::sin(pi * s / 2.0) *
                        gamma(1.0 - s) * zeta(1.0 - s);
    std::ostringstream id;
    id << "specialfn.functional_equation[s=" << s.real() << (s.imag() < 0 ? "-" : "+")
       << std::abs(s.imag()) << "i]";
    return make_entry(id.str(), std::abs(lhs - rhs), 1e-9,
                      "zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)");
}

double hardy_z(double t) {
    const Complex g = gamma(Complex(0.25, 0.5 * t));
    const double phase = -0.5 * t * std::log(pi);
    const Complex rot = (g / std::abs(g)) * Complex(std::cos(phase), std::sin(phase));
    return (rot * zeta(Complex(0.5, t))).real();
}

std::vector<double> critical_zero_scan(double t_lo, double t_hi, double step) {
    if (!(t_lo > 0.0 && t_lo < t_hi && t_hi <= 100.0))
        throw Error(ErrorKind::domain, "zero scan requires 0 < t_lo < t_hi <= 100");
    if (!(step > 0.0)) throw Error(ErrorKind::domain, "zero scan step must be positive");
    std::vector<double> zeros;
    const auto steps = static_cast<long>(std::ceil((t_hi - t_lo) / step));
    double a = t_lo;
    double za = hardy_z(a);
    for (long k = 1; k <= steps; ++k) {
        double b = std::min(t_lo + k * step, t_hi);
        double zb = hardy_z(b);
        if (za == 0.0) {
            zeros.push_back(a);
        } else if (za * zb < 0.0) {
            double lo = a, hi = b, zlo = za;
            while (hi - lo > 1e-9) {
                double mid = 0.5 * (lo + hi);
                double zm = hardy_z(mid);
                if (zm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (zlo * zm < 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    zlo = zm;
                }
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        a = b;
        za = zb;
    }
    return zeros;
}

}  // namespace salemkit
