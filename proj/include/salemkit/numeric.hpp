#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <type_traits>
#include <vector>

namespace salemkit {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double sqrt_2pi = 2.5066282746310005024157652848110;
inline constexpr double ln2 = std::numbers::ln2;


/// Neumaier's variant of Kahan summation.
template <typename T>
class CompensatedSum {
public:
    void add(T x) {
        T t = sum_ + x;
        if constexpr (std::is_same_v<T, double>) {
            if (std::abs(sum_) >= std::abs(x))
                comp_ += (sum_ - t) + x;
            else
                comp_ += (x - t) + sum_;
        } else {
            // componentwise for complex values
            double re = compensate(sum_.real(), x.real(), t.real());
            double im = compensate(sum_.imag(), x.imag(), t.imag());
            comp_ += T(re, im);
        }
        sum_ = t;
    }
    CompensatedSum& operator+=(T x) {
        add(x);
        return *this;
    }
    T value() const { return sum_ + comp_; }

private:
    static double compensate(double s, double x, double t) {
        return std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    }
    T sum_{};
    T comp_{};
};

template <typename T>
struct QuadratureResult {
    T value{};
    double error = 0.0;
    int intervals = 0;
};

struct QuadratureOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_intervals = 4000;
};

/// Adaptive 7/15-point Gauss-Kronrod on [a, b]. Throws nonconvergence when
/// the interval budget runs out before the error estimate meets tolerance.
QuadratureResult<double> integrate(const std::function<double(double)>& f, double a, double b,
                                   const QuadratureOptions& opt = {});
QuadratureResult<Complex> integrate(const std::function<Complex(double)>& f, double a, double b,
                                    const QuadratureOptions& opt = {});

/// Ordinary least squares for a small dense system (columns = basis functions
/// evaluated at the sample points). Returns the coefficient vector.
std::vector<double> least_squares(const std::vector<std::vector<double>>& columns,
                                  std::span<const double> rhs);

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_power_of_two(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace salemkit
