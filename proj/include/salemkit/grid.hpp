#pragma once

#include "salemkit/numeric.hpp"

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

namespace salemkit {

struct Grid {
    double x0 = -40.0;
    double dx = 80.0 / 2048;
    std::size_t n = 2048;

    void validate() const;
    double x(std::size_t j) const { return x0 + static_cast<double>(j) * dx; }
    double back() const { return x(n - 1); }
};

/// Uniform-grid samples of a complex function.
struct GridFunction {
    Grid grid;
    std::vector<Complex> values;

    GridFunction() = default;
    GridFunction(const Grid& g, std::vector<Complex> v);
    explicit GridFunction(const Grid& g) : grid(g), values(g.n) {}

    std::size_t size() const { return values.size(); }
    double max_abs() const;
    double max_imag() const;
};

GridFunction sample(const Grid& g, const std::function<Complex(double)>& f);

enum class Convention {
    unitary,     // (1/sqrt(2 pi)) int e^{-itx} f(x) dx
    ordinary,    // int e^{-2 pi i t x} f(x) dx, recognized only to be rejected
};

/// Samples in the frequency variable t. The convention tag is fixed at
/// construction. x0 remembers the origin of the spatial grid so the inverse
/// transform can restore it exactly.
class SpectralFunction {
public:
    SpectralFunction(const Grid& t_grid, std::vector<Complex> v, double x0,
                     Convention c = Convention::unitary);

    Grid grid;
    std::vector<Complex> values;
    double x0;

    Convention convention() const { return convention_; }
    double t(std::size_t k) const { return grid.x(k); }

private:
    Convention convention_;
};

/// CSV with a "# x0=..,dx=..,n=.." header line and columns x,re,im.
void write_csv(std::ostream& os, const GridFunction& f);
GridFunction read_csv(std::istream& is);

}  // namespace salemkit
