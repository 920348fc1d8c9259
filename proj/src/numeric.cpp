#include "salemkit/numeric.hpp"

#include "salemkit/error.hpp"

#include <Eigen/Dense>

#include <queue>
#include <tuple>
#include <utility>
#include <string>

namespace salemkit {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::config: return "config";
        case ErrorKind::domain: return "domain";
        case ErrorKind::pole: return "pole";
        case ErrorKind::overflow: return "overflow";
        case ErrorKind::precision_unattainable: return "precision-unattainable";
        case ErrorKind::nonconvergence: return "nonconvergence";
        case ErrorKind::support_violation: return "support-violation";
        case ErrorKind::grid_mismatch: return "grid-mismatch";
        case ErrorKind::wraparound: return "wraparound";
        case ErrorKind::nonreal_result: return "nonreal-result";
        case ErrorKind::cancellation: return "cancellation";
        case ErrorKind::truncation_budget: return "truncation-budget";
        case ErrorKind::tail_bound: return "tail-bound";
        case ErrorKind::edge_proximity: return "edge-proximity";
        case ErrorKind::convention_mismatch: return "convention-mismatch";
        case ErrorKind::excluded_nodes: return "excluded-nodes";
    }
    return "unknown";
}

namespace {

// 15-point Kronrod abscissae with the embedded 7-point Gauss rule.
constexpr double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                           0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245, 0.0};
constexpr double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T>
struct Segment {
    double a, b;
    T value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <typename T, typename F>
Segment<T> gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    T fc = f(c);
    T kron = fc * wgk[7];
    T gauss = fc * wg[3];
    for (int j = 0; j < 7; ++j) {
        T f1 = f(c - h * xgk[j]);
        T f2 = f(c + h * xgk[j]);
        kron += (f1 + f2) * wgk[j];
        if (j % 2 == 1) gauss += (f1 + f2) * wg[j / 2];
    }
    return {a, b, kron * h, std::abs((kron - gauss) * h)};
}

template <typename T>
std::pair<T, double> resum(std::priority_queue<Segment<T>> heap) {
    CompensatedSum<T> sum;
    double e = 0.0;
    while (!heap.empty()) {
        sum += heap.top().value;
        e += heap.top().error;
        heap.pop();
    }
    return {sum.value(), e};
}

template <typename T, typename F>
QuadratureResult<T> adaptive(const F& f, double a, double b, const QuadratureOptions& opt) {
    if (!(std::isfinite(a) && std::isfinite(b)))
        throw Error(ErrorKind::domain, "integration limits must be finite");
    if (a == b) return {};
    std::priority_queue<Segment<T>> heap;
    heap.push(gk15<T>(f, a, b));
    T total = heap.top().value;
    double err = heap.top().error;
    int count = 1;
    while (err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
        if (count >= opt.max_intervals)
            throw Error(ErrorKind::nonconvergence,
                        "adaptive quadrature exhausted " + std::to_string(opt.max_intervals) +
                            " intervals (error estimate " + std::to_string(err) + ")");
        Segment<T> worst = heap.top();
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        auto left = gk15<T>(f, worst.a, mid);
        auto right = gk15<T>(f, mid, worst.b);
        heap.push(left);
        heap.push(right);
        ++count;
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        if (!std::isfinite(std::abs(total)))
            throw Error(ErrorKind::nonconvergence, "integrand produced a non-finite value");
        if (count % 64 == 0) std::tie(total, err) = resum(heap);
    }
    std::tie(total, err) = resum(heap);
    return {total, err, count};
}

}  // namespace

QuadratureResult<double> integrate(const std::function<double(double)>& f, double a, double b,
                                   const QuadratureOptions& opt) {
    return adaptive<double>(f, a, b, opt);
}

QuadratureResult<Complex> integrate(const std::function<Complex(double)>& f, double a, double b,
                                    const QuadratureOptions& opt) {
    return adaptive<Complex>(f, a, b, opt);
}

std::vector<double> least_squares(const std::vector<std::vector<double>>& columns,
                                  std::span<const double> rhs) {
    const auto rows = static_cast<Eigen::Index>(rhs.size());
    const auto cols = static_cast<Eigen::Index>(columns.size());
    if (cols == 0 || rows < cols)
        throw Error(ErrorKind::domain, "least squares needs at least as many samples as unknowns");
    Eigen::MatrixXd a(rows, cols);
    Eigen::VectorXd b(rows);
    for (Eigen::Index j = 0; j < cols; ++j) {
        if (static_cast<Eigen::Index>(columns[j].size()) != rows)
            throw Error(ErrorKind::domain, "least squares column length mismatch");
        for (Eigen::Index i = 0; i < rows; ++i) a(i, j) = columns[j][i];
    }
    for (Eigen::Index i = 0; i < rows; ++i) b(i) = rhs[i];
    Eigen::VectorXd x = a.colPivHouseholderQr().solve(b);
    return {x.data(), x.data() + x.size()};
}

}  // namespace salemkit
