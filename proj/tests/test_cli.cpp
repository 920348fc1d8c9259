#include "salemkit/cli.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using json = nlohmann::json;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

// runs the installed executable through the shell, stderr discarded
CliResult run(const std::string& args) {
    const std::string cmd = std::string(SALEMKIT_EXE) + " " + args + " 2>/dev/null";
    CliResult r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) out.push_back(l);
    return out;
}

std::string without_timestamp(const std::string& s) {
    std::string out;
    for (const auto& l : lines(s))
        if (l.find("\"timestamp\"") == std::string::npos) out += l + "\n";
    return out;
}

}  // namespace

TEST(CliVerify, AllSuitesPass) {
    const std::string path = testing::TempDir() + "salemkit_report.json";
    const CliResult r = run("verify --suite all --sigma 0.75 --m 1 --out " + path);
    EXPECT_EQ(r.code, 0);
    std::ifstream in(path);
    const json j = json::parse(in);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["tool_version"], salemkit::tool_version);
    EXPECT_EQ(j["config"]["sigma"], 0.75);
    EXPECT_GE(j["entries"].size(), 40u);
    EXPECT_EQ(j["summary"]["failed"], 0);
    std::string previous;
    for (const auto& e : j["entries"]) {
        EXPECT_TRUE(e["pass"].get<bool>()) << e["check_id"];
        EXPECT_FALSE(e["anchor"].get<std::string>().empty()) << e["check_id"];
        EXPECT_LE(previous, e["check_id"].get<std::string>());
        previous = e["check_id"];
    }
    std::remove(path.c_str());
}

TEST(CliVerify, DegradedContourFails) {
    const CliResult r = run("verify --suite kernel --contour-tmax 5");
    EXPECT_EQ(r.code, 1);
    const json j = json::parse(r.out);
    EXPECT_GT(j["summary"]["failed"].get<int>(), 0);
}

TEST(CliVerify, ConfigErrors) {
    EXPECT_EQ(run("verify --sigma 1.2").code, 2);
    EXPECT_EQ(run("verify --m -1").code, 2);
    EXPECT_EQ(run("verify --grid-n 1000").code, 2);
    EXPECT_EQ(run("verify --suite nope").code, 2);
    EXPECT_EQ(run("verify --format xml").code, 2);
    EXPECT_EQ(run("verify --contour-step 0.5").code, 2);
    EXPECT_EQ(run("salem --f cauchy").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(CliVerify, CsvHasHeader) {
    const CliResult r = run("verify --suite specialfn --format csv");
    EXPECT_EQ(r.code, 0);
    const auto ls = lines(r.out);
    ASSERT_GT(ls.size(), 1u);
    EXPECT_EQ(ls[0], "check_id,measured,tolerance,pass,anchor,notes");
}

TEST(CliVerify, DeterministicModuloTimestamp) {
    const CliResult a = run("verify --suite salem,paley --threads 1");
    const CliResult b = run("verify --suite salem,paley --threads 1");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(without_timestamp(a.out), without_timestamp(b.out));

    // the thread cap changes only its own echo
    json ja = json::parse(a.out), jc = json::parse(run("verify --suite salem,paley --threads 2").out);
    EXPECT_EQ(ja["entries"], jc["entries"]);
}

TEST(CliKernelTable, Rows) {
    CliResult r = run("kernel-table --x-lo 0.01 --x-hi 10 --steps 50 --format csv");
    ASSERT_EQ(r.code, 0);
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 51u);
    EXPECT_EQ(ls[0], "x,k_series,k_contour,abs_diff");
    double worst = 0.0;
    for (std::size_t i = 1; i < ls.size(); ++i) worst = std::max(worst, std::stod(ls[i].substr(ls[i].rfind(',') + 1)));
    EXPECT_LE(worst, 1e-6);
    EXPECT_NEAR(std::stod(ls[1]), 0.01, 1e-15);
    EXPECT_NEAR(std::stod(ls[50]), 10.0, 1e-12);

    r = run("kernel-table --x-lo 1 --x-hi 1 --steps 1 --format csv");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out).size(), 2u);
    EXPECT_EQ(run("kernel-table --x-lo 10 --x-hi 1").code, 2);
    EXPECT_EQ(run("kernel-table --x-lo 0").code, 2);
}

TEST(CliZeros, Ordinates) {
    CliResult r = run("zeros --t-lo 10 --t-hi 30");
    ASSERT_EQ(r.code, 0);
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 3u);
    EXPECT_EQ(ls[0], "14.13472514");
    EXPECT_EQ(ls[1], "21.02203964");
    EXPECT_EQ(ls[2], "25.01085758");
    r = run("zeros --t-lo 1 --t-hi 10");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(run("zeros --t-lo 30 --t-hi 10").code, 2);
    EXPECT_EQ(run("zeros --t-lo 10 --t-hi 200").code, 2);
}

TEST(CliScenarios, Growth) {
    const CliResult r = run("growth --f modulated_sinc --a 1 --m 2");
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_NEAR(j["observations"]["slope"].get<double>(), 4.0, 0.08);
    EXPECT_EQ(j["observations"]["table"].size(), 8u);
    // --a defaults to m - 1
    const json d = json::parse(run("growth --f modulated_sinc --m 3").out);
    EXPECT_NEAR(d["observations"]["slope"].get<double>(), 6.0, 0.12);
    EXPECT_EQ(lines(run("growth --f modulated_sinc --format csv").out)[0], "y,log_energy");
    EXPECT_EQ(run("growth --f gaussian").code, 2);
}

TEST(CliScenarios, Salem) {
    const CliResult r = run("salem --f gaussian --sigma 0.75 --m 1");
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    ASSERT_EQ(j["entries"].size(), 1u);
    EXPECT_LE(j["entries"][0]["measured"].get<double>(), 1e-4);
    EXPECT_GT(j["observations"]["salem_residual"].get<double>(), 0.0);
}

TEST(CliScenarios, Paley) {
    const CliResult r = run("paley --epsilon 1.5 --c 1");
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    const double want = M_PI * std::sqrt(2.0);
    EXPECT_NEAR(j["observations"]["log_integral"].get<double>(), want, 1e-6 * want);
    EXPECT_EQ(j["summary"]["failed"], 0);
    EXPECT_EQ(run("paley --epsilon 2.5").code, 2);
}
