#include "salemkit/grid.hpp"

#include "salemkit/error.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace salemkit {

void Grid::validate() const {
    if (!std::isfinite(x0)) throw Error(ErrorKind::config, "grid x0 must be finite");
    if (!(dx > 0.0) || !std::isfinite(dx)) throw Error(ErrorKind::config, "grid dx must be positive");
    if (n < 16 || !is_power_of_two(n))
        throw Error(ErrorKind::config, "grid n must be a power of two >= 16 (got " + std::to_string(n) + ")");
}

GridFunction::GridFunction(const Grid& g, std::vector<Complex> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.n)
        throw Error(ErrorKind::grid_mismatch, "sample count does not match grid size");
    for (const auto& z : values)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw Error(ErrorKind::domain, "grid function has non-finite samples");
}

double GridFunction::max_abs() const {
    double m = 0.0;
    for (const auto& z : values) m = std::max(m, std::abs(z));
    return m;
}

double GridFunction::max_imag() const {
    double m = 0.0;
    for (const auto& z : values) m = std::max(m, std::abs(z.imag()));
    return m;
}

GridFunction sample(const Grid& g, const std::function<Complex(double)>& f) {
    g.validate();
    std::vector<Complex> v(g.n);
    for (std::size_t j = 0; j < g.n; ++j) v[j] = f(g.x(j));
    return {g, std::move(v)};
}

SpectralFunction::SpectralFunction(const Grid& t_grid, std::vector<Complex> v, double origin, Convention c)
    : grid(t_grid), values(std::move(v)), x0(origin), convention_(c) {
    if (values.size() != grid.n)
        throw Error(ErrorKind::grid_mismatch, "spectral sample count does not match grid size");
}

void write_csv(std::ostream& os, const GridFunction& f) {
    os << std::setprecision(17);
    os << "# x0=" << f.grid.x0 << ",dx=" << f.grid.dx << ",n=" << f.grid.n << "\n";
    os << "x,re,im\n";
    for (std::size_t j = 0; j < f.size(); ++j)
        os << f.grid.x(j) << "," << f.values[j].real() << "," << f.values[j].imag() << "\n";
}

GridFunction read_csv(std::istream& is) {
    std::string line;
    Grid g;
    bool have_header = false;
    std::vector<double> xs;
    std::vector<Complex> vs;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = line.substr(1);
            for (char& c : body)
                if (c == ',' || c == '=') c = ' ';
            std::istringstream hs(body);
            std::string key;
            double val;
            while (hs >> key >> val) {
                if (key == "x0") g.x0 = val;
                else if (key == "dx") g.dx = val;
                else if (key == "n") g.n = static_cast<std::size_t>(val);
            }
            have_header = true;
            continue;
        }
        if (line.rfind("x,", 0) == 0) continue;
        std::istringstream ls(line);
        double x = 0, re = 0, im = 0;
        char c1 = 0, c2 = 0;
        ls >> x >> c1 >> re;
        if (!ls || c1 != ',') throw Error(ErrorKind::config, "malformed CSV row: " + line);
        if (ls >> c2 >> im) {
            if (c2 != ',') throw Error(ErrorKind::config, "malformed CSV row: " + line);
        } else {
            im = 0.0;
        }
        xs.push_back(x);
        vs.emplace_back(re, im);
    }
    if (xs.size() < 2) throw Error(ErrorKind::config, "CSV holds fewer than two samples");
    if (!have_header) {
        g.x0 = xs.front();
        g.dx = xs[1] - xs[0];
        g.n = xs.size();
    }
    if (g.n != xs.size()) throw Error(ErrorKind::config, "CSV row count does not match header n");
    for (std::size_t j = 0; j < xs.size(); ++j)
        if (std::abs(xs[j] - g.x(j)) > 1e-9 * std::max(1.0, std::abs(xs[j])))
            throw Error(ErrorKind::config, "CSV abscissae are not uniform");
    g.validate();
    return {g, std::move(vs)};
}

}  // namespace salemkit
