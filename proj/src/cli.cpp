#include "salemkit/cli.hpp"

#include "salemkit/error.hpp"
#include "salemkit/paleywiener.hpp"
#include "salemkit/salem.hpp"
#include "salemkit/specialfn.hpp"
#include "salemkit/transforms.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace salemkit {

using json = nlohmann::ordered_json;

namespace {

std::shared_ptr<spdlog::logger> logger() {
    static const std::shared_ptr<spdlog::logger> log = [] {
        auto l = spdlog::stderr_color_mt("salemkit");
        const char* env = std::getenv("SALEMKIT_LOG");
        const std::string level = env ? env : "error";
        if (level == "debug") l->set_level(spdlog::level::debug);
        else if (level == "info") l->set_level(spdlog::level::info);
        else l->set_level(spdlog::level::err);
        return l;
    }();
    return log;
}

// a checker that must say "fail" on this input, recorded as a passing entry when it does
VerificationEntry expect_rejection(const VerificationEntry& e, const std::string& id) {
    std::ostringstream notes;
    notes << "checker measured " << e.measured << " against tolerance " << e.tolerance << " and must fail";
    return make_entry(id, e.pass ? 1.0 : 0.0, 0.5, e.anchor, notes.str());
}

SalemParams params(const ScenarioConfig& cfg) { return SalemParams{cfg.sigma, cfg.m}; }

VerificationReport specialfn_suite() {
    VerificationReport r;
    for (Complex s : {Complex(2.0), Complex(1.0), Complex(0.6, 3.0), Complex(0.8, -5.0)}) r.add(fermi_mellin_check(s));
    for (Complex s : {Complex(0.3, 5.0), Complex(0.7, -12.0), Complex(0.5, 20.0), Complex(0.25, 40.0)})
        r.add(functional_equation_check(s));

    const auto coarse = critical_zero_scan(10.0, 30.0, 0.1);
    const auto fine = critical_zero_scan(10.0, 30.0, 0.02);
    double dev = coarse.size() == fine.size() && coarse.size() == 3 ? 0.0 : 1.0;
    if (dev == 0.0)
        for (std::size_t i = 0; i < coarse.size(); ++i) dev = std::max(dev, std::abs(coarse[i] - fine[i]));
    std::ostringstream notes;
    notes << std::setprecision(10) << "zeros:";
    for (double t : coarse) notes << ' ' << t;
    r.add(make_entry("specialfn.critical_zeros[10,30]", dev, 1e-6, "Z(t) = 0, step 0.1 scan vs step 0.02 scan",
                     notes.str()));
    r.sort();
    return r;
}

VerificationReport kernel_suite(const ScenarioConfig& cfg) {
    VerificationReport r;
    for (double x : {0.05, 0.1, 0.5, 1.0, 2.0, 5.0}) {
        const double s = k_series(x).value;
        const ContourValue c = k_contour(x, cfg.contour);
        std::ostringstream id, notes;
        id << "kernel.series_vs_contour[x=" << x << "]";
        notes << std::setprecision(17) << "series=" << s << " contour=" << c.value << " T=" << cfg.contour.t_max
              << " h=" << cfg.contour.h;
        r.add(make_entry(id.str(), std::abs(s - c.value), 1e-7,
                         "sum d_{1/2}(n) e^{-nx} - poles = (1/2pi i) int G(s) x^{-s} ds", notes.str()));
    }
    const ResidueCoefficients rc = residue_coefficients();
    std::ostringstream notes;
    notes << std::setprecision(17) << "selected " << rc.selected << "; fitted " << rc.c32_fit << " vs Gamma(3/2)zeta(3/2) "
          << rc.gamma_candidate << "; rejected sqrt(pi/2)zeta(3/2) misses by " << rc.rejected_residual;
    r.add(make_entry("kernel.residue_coefficient", rc.fit_residual, 1e-4,
                     "x^{-3/2} coefficient of sum d_{1/2}(n) e^{-nx} = Gamma(3/2) zeta(3/2)", notes.str()));
    for (double sigma : {0.55, 0.6, 0.75, 0.85, 0.9}) r.add(l2_certificate(sigma));
    r.sort();
    return r;
}

VerificationReport transforms_suite() {
    VerificationReport r;
    {
        auto e = plancherel_check(sample(Grid{}, [](double x) -> Complex { return std::exp(-x * x / 2.0); }));
        e.check_id += "[gaussian]";
        r.add(e);
        auto b = plancherel_check(realize(TestFunction::parse("bump"), Grid{}));
        b.check_id += "[bump]";
        r.add(b);
    }
    const Grid wide{-512.0, 1024.0 / 16384, 16384};
    const std::vector<std::pair<std::string, std::function<double(double)>>> family = {
        {"gaussian", [](double x) { return std::exp(-x * x / 2.0); }},
        {"lorentzian", [](double x) { return 1.0 / (1.0 + x * x); }},
        {"sech", [](double x) { return 1.0 / std::cosh(x); }},
    };
    for (const auto& [name, fn] : family) {
        const GridFunction f = sample(wide, [&](double x) -> Complex { return fn(x); });
        const GridFunction hh = hilbert(hilbert(f));
        double err = 0.0;
        for (std::size_t j = wide.n / 4; j < wide.n - wide.n / 4; ++j)
            err = std::max(err, std::abs(hh.values[j] + f.values[j]));
        r.add(make_entry("transforms.hilbert_involution[" + name + "]", err, 2e-3, "H(H f) = -f",
                         "central half of [-512, 512], n = 16384"));
    }
    {
        const Grid g{-160.0, 320.0 / 4096, 4096};
        const GridFunction f = sample(g, [](double x) -> Complex { return 1.0 / (1.0 + x * x); });
        const GridFunction h = hilbert(f);
        double spectral = 0.0, direct = 0.0;
        for (int i = 0; i < 20; ++i) {
            const std::size_t j = 2048 + static_cast<std::size_t>((i - 10) * 40);
            const double y = g.x(j);
            const Complex pv = hilbert_pv_direct(f, y);
            spectral = std::max(spectral, std::abs(h.values[j] - Complex(-y / (1.0 + y * y))));
            direct = std::max(direct, std::abs(pv - Complex(-y / (1.0 + y * y))));
        }
        std::ostringstream notes;
        notes << "spectral " << spectral << ", principal value " << direct << " at 20 nodes";
        r.add(make_entry("transforms.hilbert_lorentzian", std::max(spectral, direct), 1e-4,
                         "H[1/(1+x^2)](y) = -y/(1+y^2)", notes.str()));
    }
    r.sort();
    return r;
}

VerificationReport salem_suite(const ScenarioConfig& cfg) {
    VerificationReport r;
    const SalemParams p = params(cfg);
    const ScaledKernel kernel(p.sigma);
    for (std::string name : {"gaussian", "bump", "sinc", "modulated_sinc"}) {
        const TestFunction f = TestFunction::parse(name);
        r.add(factorization_detail(realize(f, cfg.grid), p, kernel, f.name()).entry);
    }
    r.append(sinc_example_suite(std::max(1.0, cfg.m)));

    const GridFunction gauss = realize(TestFunction::parse("gaussian"), Grid{});
    r.add(expect_rejection(titchmarsh_pair_check(gauss), "salem.gaussian_rejected.pair"));
    r.add(expect_rejection(halfline_null_check(gauss, 0.0), "salem.gaussian_rejected.halfline"));

    const double rect_h = std::sqrt(pi / 2.0);
    const GridFunction control = band_limited(sinc_grid(), [rect_h](double t) -> Complex { return rect(t, 0.0, 1.0, rect_h); });
    const double slope = growth_rate(control, {5, 10, 15, 20, 25, 30, 35, 40});
    std::ostringstream notes;
    notes << "slope=" << slope << " for spectrum on [0, 1]";
    r.add(make_entry("salem.growth_control", std::abs(slope), 0.02, "lim (1/y) log int |h(x+iy)|^2 dx = 0",
                     notes.str()));
    r.sort();
    return r;
}

VerificationReport paley_suite(const ScenarioConfig& cfg) {
    VerificationReport r;
    const SalemParams p = params(cfg);
    const SymbolProduct f1 = build_f1(TestFunction::parse(cfg.f_kind), p, cfg.grid);
    const WindowFunction f2 = default_window(p.m, f1.samples.grid);
    const std::vector<double> ts{-2.0, 0.0, 2.0};
    r.add(product_transform_check(f1, f2, ts));
    r.add(product_transform_bilinearity(f1, f2, ts));
    for (double eps : {0.25, 0.5, 1.0, 1.5, 1.75}) r.add(cauchy_weight_check(eps));
    for (double eps : {1.1, 1.5, 1.9})
        for (double c : {0.5, 1.0, 5.0}) r.add(decay_sufficiency_check(eps, c));
    r.sort();
    return r;
}

std::string timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json config_json(const ScenarioConfig& cfg, const json& extra) {
    json c;
    c["sigma"] = cfg.sigma;
    c["m"] = cfg.m;
    c["f"] = cfg.f_kind;
    c["grid"] = {{"x0", cfg.grid.x0}, {"dx", cfg.grid.dx}, {"n", cfg.grid.n}};
    c["suites"] = cfg.suites;
    c["format"] = cfg.format == OutputFormat::json ? "json" : "csv";
    c["threads"] = cfg.threads;
    c["contour"] = {{"t_max", cfg.contour.t_max}, {"h", cfg.contour.h}};
    for (const auto& [k, v] : extra.items()) c[k] = v;
    return c;
}

json entries_json(const VerificationReport& r) {
    json a = json::array();
    for (const auto& e : r.entries)
        a.push_back({{"check_id", e.check_id},
                      {"measured", e.measured},
                      {"tolerance", e.tolerance},
                      {"pass", e.pass},
                      {"anchor", e.anchor},
                      {"notes", e.notes}});
    return a;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

// writes to the --out path or to `out`
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw Error(ErrorKind::config, "cannot write '" + path + "'");
            os_ = &file_;
        }
    }
    std::ostream& stream() { return *os_; }

private:
    std::ofstream file_;
    std::ostream* os_;
};

void emit_report(const ScenarioConfig& cfg, const std::string& command, const VerificationReport& r,
                 const json& extra, const json& observations, std::ostream& out) {
    Sink sink(cfg.output_path, out);
    if (cfg.format == OutputFormat::csv) {
        sink.stream() << "check_id,measured,tolerance,pass,anchor,notes\n";
        for (const auto& e : r.entries)
            sink.stream() << csv_field(e.check_id) << ',' << num(e.measured) << ',' << num(e.tolerance) << ','
                          << (e.pass ? "true" : "false") << ',' << csv_field(e.anchor) << ',' << csv_field(e.notes)
                          << '\n';
        return;
    }
    json m;
    m["schema"] = 1;
    m["tool_version"] = tool_version;
    m["command"] = command;
    m["timestamp"] = timestamp();
    m["config"] = config_json(cfg, extra);
    m["entries"] = entries_json(r);
    m["observations"] = observations;
    m["summary"] = {{"total", r.entries.size()}, {"failed", r.failures()}};
    sink.stream() << m.dump(2) << '\n';
}

int report_exit(const VerificationReport& r) { return r.all_pass() ? 0 : 1; }

int cmd_verify(const ScenarioConfig& cfg, std::ostream& out) {
    const VerificationReport r = run_suites(cfg);
    emit_report(cfg, "verify", r, json::object(), json::object(), out);
    logger()->info("{} entries, {} failed", r.entries.size(), r.failures());
    return report_exit(r);
}

int cmd_kernel_table(const ScenarioConfig& cfg, double x_lo, double x_hi, int steps, std::ostream& out) {
    if (!(x_lo >= KernelSpec{}.x_min_series)) throw Error(ErrorKind::config, "--x-lo must be at least 1e-3");
    if (!(x_hi >= x_lo) || !std::isfinite(x_hi)) throw Error(ErrorKind::config, "--x-hi must not be below --x-lo");
    if (steps < 1) throw Error(ErrorKind::config, "--steps must be positive");
    if (x_hi == x_lo && steps != 1) throw Error(ErrorKind::config, "a single point takes --steps 1");

    struct Row {
        double x, s, c;
    };
    std::vector<Row> rows;
    for (int i = 0; i < steps; ++i) {
        const double x = steps == 1 ? x_lo : x_lo * std::pow(x_hi / x_lo, static_cast<double>(i) / (steps - 1));
        rows.push_back({x, k_series(x).value, k_contour(x, cfg.contour).value});
    }
    Sink sink(cfg.output_path, out);
    if (cfg.format == OutputFormat::csv) {
        sink.stream() << "x,k_series,k_contour,abs_diff\n";
        for (const auto& row : rows)
            sink.stream() << num(row.x) << ',' << num(row.s) << ',' << num(row.c) << ',' << num(std::abs(row.s - row.c))
                          << '\n';
    } else {
        json a = json::array();
        for (const auto& row : rows)
            a.push_back({{"x", row.x}, {"k_series", row.s}, {"k_contour", row.c}, {"abs_diff", std::abs(row.s - row.c)}});
        json m;
        m["schema"] = 1;
        m["tool_version"] = tool_version;
        m["command"] = "kernel-table";
        m["timestamp"] = timestamp();
        m["config"] = config_json(cfg, {{"x_lo", x_lo}, {"x_hi", x_hi}, {"steps", steps}});
        m["rows"] = a;
        sink.stream() << m.dump(2) << '\n';
    }
    return 0;
}

int cmd_zeros(double t_lo, double t_hi, std::ostream& out) {
    if (!(t_lo > 0.0 && t_lo < t_hi && t_hi <= 100.0))
        throw Error(ErrorKind::config, "zeros needs 0 < --t-lo < --t-hi <= 100");
    for (double t : critical_zero_scan(t_lo, t_hi, 0.1)) out << std::fixed << std::setprecision(8) << t << '\n';
    return 0;
}

int cmd_salem(const ScenarioConfig& cfg, std::ostream& out) {
    const SalemParams p = params(cfg);
    const TestFunction f = TestFunction::parse(cfg.f_kind);
    const GridFunction fs = realize(f, cfg.grid);
    const ScaledKernel kernel(p.sigma);
    VerificationReport r;
    const FactorizationResult fr = factorization_detail(fs, p, kernel, f.name());
    r.add(fr.entry);

    // the Titchmarsh surrogates on Ibar and on f are reported as numbers only
    const GridFunction ibar = modulate(I_sigma(fs, p, kernel), p.m);
    const double inf = std::numeric_limits<double>::infinity();
    auto below_ratio = [inf](const GridFunction& h, double cutoff) {
        const SpectralFunction F = fourier(h, inf);
        double below = 0.0, peak = 0.0;
        for (std::size_t k = 0; k < F.grid.n; ++k) {
            peak = std::max(peak, std::abs(F.values[k]));
            if (F.t(k) < cutoff) below = std::max(below, std::abs(F.values[k]));
        }
        return peak > 0.0 ? below / peak : 0.0;
    };
    json obs;
    obs["factorization_max_rhs"] = fr.max_rhs;
    obs["i_sigma_imag_residue"] = fr.imag_residue;
    obs["ibar_pair_residual"] = titchmarsh_pair_check(ibar).measured;
    obs["ibar_spectrum_below_minus_m"] = below_ratio(ibar, -p.m);
    obs["f_spectrum_below_zero"] = below_ratio(fs, 0.0);
    obs["salem_residual"] = salem_residual(fs, p);
    emit_report(cfg, "salem", r, json::object(), obs, out);
    return report_exit(r);
}

int cmd_growth(const ScenarioConfig& cfg, double a, std::ostream& out) {
    const TestFunction f = TestFunction::parse(cfg.f_kind);
    if (!f.sinc_family()) throw Error(ErrorKind::config, "growth takes --f sinc or --f modulated_sinc");
    if (f.kind == TestFunctionKind::sinc) a = 0.0;
    const GridFunction h = modulated_sinc_complex(a);
    const std::vector<double> ys{5, 10, 15, 20, 25, 30, 35, 40};
    const WeightedEnergy we = weighted_energy(h, ys);
    const double slope = growth_rate(h, ys);
    const double want = 2.0 * (a + 1.0);
    VerificationReport r;
    std::ostringstream id, notes;
    id << "salem.growth[a=" << a << "]";
    notes << "h = e^(-iax) sin(x)/x, spectral cutoff " << we.cutoff << ", slope " << slope << ", expected " << want;
    r.add(make_entry(id.str(), std::abs(slope - want) / std::abs(want), 0.02,
                     "lim (1/y) log int |h(x+iy)|^2 dx = 2 * (spectral cutoff)", notes.str()));

    if (cfg.format == OutputFormat::csv) {
        Sink sink(cfg.output_path, out);
        sink.stream() << "y,log_energy\n";
        for (std::size_t i = 0; i < ys.size(); ++i) sink.stream() << num(ys[i]) << ',' << num(we.log_energy[i]) << '\n';
    } else {
        json table = json::array();
        for (std::size_t i = 0; i < ys.size(); ++i) table.push_back({{"y", ys[i]}, {"log_energy", we.log_energy[i]}});
        json obs;
        obs["slope"] = slope;
        obs["expected_slope"] = want;
        obs["cutoff"] = we.cutoff;
        obs["table"] = table;
        emit_report(cfg, "growth", r, {{"a", a}}, obs, out);
    }
    return report_exit(r);
}

int cmd_paley(const ScenarioConfig& cfg, double epsilon, double c, std::ostream& out) {
    if (!(epsilon > 1.0 && epsilon < 2.0)) throw Error(ErrorKind::config, "--epsilon must lie in (1, 2)");
    if (!(c >= 0.0)) throw Error(ErrorKind::config, "--c must be nonnegative");
    const SalemParams p = params(cfg);
    VerificationReport r;
    const SymbolProduct f1 = build_f1(TestFunction::parse(cfg.f_kind), p, cfg.grid);
    const WindowFunction f2 = default_window(p.m, f1.samples.grid);
    const std::vector<double> ts{-2.0, 0.0, 2.0};
    const auto pt = product_transform_detail(f1, f2, ts);
    r.add(pt.entry);
    r.add(product_transform_bilinearity(f1, f2, ts));
    r.add(cauchy_weight_check(epsilon));
    r.add(decay_sufficiency_check(epsilon, c));
    r.sort();

    const Grid g{-100.0, 200.0 / 131072, 131072};
    const LogIntegrability li = log_integrability(
        sample(g, [=](double x) -> Complex { return std::exp(-c * std::pow(std::abs(x), epsilon - 1.0)); }));
    const CauchyWeight w = cauchy_weight_integral(epsilon);
    json obs;
    obs["log_integral"] = li.value;
    obs["log_integral_tail"] = li.tail;
    obs["tail_exponent"] = li.tail_exponent;
    obs["divergent"] = li.divergent;
    obs["cauchy_weight_numeric"] = w.numeric;
    obs["cauchy_weight_closed_form"] = w.closed_form;
    obs["f1_null_below_minus_m"] = f1.null_below_ratio;
    json lhs = json::array(), rhs = json::array();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        lhs.push_back({pt.lhs[i].real(), pt.lhs[i].imag()});
        rhs.push_back({pt.rhs[i].real(), pt.rhs[i].imag()});
    }
    obs["product_transform"] = {{"t", ts}, {"lhs", lhs}, {"rhs", rhs}};
    emit_report(cfg, "paley", r, {{"epsilon", epsilon}, {"c", c}}, obs, out);
    return report_exit(r);
}

}  // namespace

void ScenarioConfig::validate() const {
    params(*this).validate();
    TestFunction::parse(f_kind);
    try {
        grid.validate();
    } catch (const Error& e) {
        throw Error(ErrorKind::config, e.what());
    }
    if (suites.empty()) throw Error(ErrorKind::config, "no suite selected");
    for (const auto& s : suites)
        if (s != "all" && std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw Error(ErrorKind::config, "unknown suite '" + s + "'");
    if (!(contour.t_max > 0.0) || !(contour.h > 0.0 && contour.h <= 0.1))
        throw Error(ErrorKind::config, "contour needs --contour-tmax > 0 and --contour-step in (0, 0.1]");
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"specialfn", "kernel", "transforms", "salem", "paley"};
    return names;
}

VerificationReport run_suite(const std::string& suite, const ScenarioConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    if (suite == "specialfn") r = specialfn_suite();
    else if (suite == "kernel") r = kernel_suite(cfg);
    else if (suite == "transforms") r = transforms_suite();
    else if (suite == "salem") r = salem_suite(cfg);
    else if (suite == "paley") r = paley_suite(cfg);
    else throw Error(ErrorKind::config, "unknown suite '" + suite + "'");
    logger()->debug("suite {}: {} entries in {:.2f} s", suite, r.entries.size(),
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    return r;
}

VerificationReport run_suites(const ScenarioConfig& cfg) {
    std::vector<std::string> todo;
    for (const auto& s : cfg.suites) {
        if (s == "all") todo.insert(todo.end(), suite_names().begin(), suite_names().end());
        else todo.push_back(s);
    }
    std::sort(todo.begin(), todo.end());
    todo.erase(std::unique(todo.begin(), todo.end()), todo.end());

    const std::size_t width = cfg.threads == 0 ? todo.size() : cfg.threads;
    VerificationReport all;
    for (std::size_t first = 0; first < todo.size(); first += width) {
        std::vector<std::future<VerificationReport>> jobs;
        for (std::size_t i = first; i < std::min(todo.size(), first + width); ++i) {
            logger()->info("running suite {}", todo[i]);
            jobs.push_back(std::async(std::launch::async, [&cfg, name = todo[i]] { return run_suite(name, cfg); }));
        }
        for (auto& j : jobs) all.append(j.get());
    }
    all.sort();
    return all;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"salemkit: numerical checks of the Salem criterion machinery"};
    app.require_subcommand(1);

    ScenarioConfig cfg;
    std::string format = "json";
    double x_lo = 0.01, x_hi = 10.0, t_lo = 10.0, t_hi = 30.0, epsilon = 1.5, c = 1.0;
    int steps = 50;
    std::optional<double> a;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--sigma", cfg.sigma, "abscissa sigma in (1/2, 1)");
        sub->add_option("--m", cfg.m, "modulation m > 0");
        sub->add_option("--f", cfg.f_kind, "gaussian, bump, sinc, modulated_sinc or csv:PATH");
        sub->add_option("--grid-x0", cfg.grid.x0, "left grid end");
        sub->add_option("--grid-dx", cfg.grid.dx, "grid spacing");
        sub->add_option("--grid-n", cfg.grid.n, "number of samples, a power of two");
        sub->add_option("--out", cfg.output_path, "output file (default standard output)");
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--threads", cfg.threads, "maximum concurrent suites (0: no cap)");
        sub->add_option("--contour-tmax", cfg.contour.t_max, "contour truncation height");
        sub->add_option("--contour-step", cfg.contour.h, "contour trapezoid step");
    };

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    common(verify);
    verify->add_option("--suite", cfg.suites, "specialfn, kernel, transforms, salem, paley or all")->delimiter(',');
    CLI::App* table = app.add_subcommand("kernel-table", "tabulate k(x) by series and by contour");
    common(table);
    table->add_option("--x-lo", x_lo);
    table->add_option("--x-hi", x_hi);
    table->add_option("--steps", steps);
    CLI::App* zeros = app.add_subcommand("zeros", "critical-line zero ordinates");
    common(zeros);
    zeros->add_option("--t-lo", t_lo);
    zeros->add_option("--t-hi", t_hi);
    CLI::App* salem = app.add_subcommand("salem", "factorization and Titchmarsh surrogates for one f");
    common(salem);
    CLI::App* growth = app.add_subcommand("growth", "exponential type of e^(-iax) sin(x)/x");
    common(growth);
    growth->add_option("--a", a, "modulation (default m - 1)");
    CLI::App* paley = app.add_subcommand("paley", "product transform and log-integrability");
    common(paley);
    paley->add_option("--epsilon", epsilon, "decay exponent in (1, 2)");
    paley->add_option("--c", c, "decay constant");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    cfg.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;

    try {
        cfg.validate();
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (table->parsed()) return cmd_kernel_table(cfg, x_lo, x_hi, steps, out);
        if (zeros->parsed()) return cmd_zeros(t_lo, t_hi, out);
        if (salem->parsed()) return cmd_salem(cfg, out);
        if (growth->parsed()) return cmd_growth(cfg, a.value_or(cfg.m - 1.0), out);
        if (paley->parsed()) return cmd_paley(cfg, epsilon, c, out);
    } catch (const Error& e) {
        err << "salemkit: " << e.what() << '\n';
        return e.kind() == ErrorKind::config ? 2 : 3;
    } catch (const std::exception& e) {
        err << "salemkit: " << e.what() << '\n';
        return 3;
    }
    return 2;
}

}  // namespace salemkit
