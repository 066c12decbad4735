#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path work_dir() {
    static const fs::path dir = [] {
        const fs::path p = fs::temp_directory_path() / "tsfine_test_cli";
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

int run(const std::string& args) {
    const std::string cmd = std::string(TSFINE_CLI_PATH) + " " + args;
    const int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("simulate then fit recovers the AR(2) coefficients") {
    const auto dir = work_dir();
    const auto series = (dir / "s.txt").string();
    CHECK(run("simulate --phi 0.25,0.5 --sigma 1 --n 500 --seed 7 -o " + series +
              " 2>/dev/null") == 0);
    CHECK(fs::exists(series));

    const auto out = (dir / "fit_out.json").string();
    CHECK(run("fit " + series + " --order 2 > " + out + " 2>/dev/null") == 0);
    const auto j = json::parse(slurp(out));
    REQUIRE(j["phi_hat"].size() == 2);
    CHECK(std::abs(j["phi_hat"][0].get<double>() - 0.25) <= 0.15);
    CHECK(std::abs(j["phi_hat"][1].get<double>() - 0.5) <= 0.15);
}

TEST_CASE("fit with an output directory writes fit.json and residuals") {
    const auto dir = work_dir();
    const auto series = (dir / "s2.txt").string();
    REQUIRE(run("simulate --phi 0.25,0.5 --n 400 --seed 3 -o " + series +
                " 2>/dev/null") == 0);
    const auto out = (dir / "fitdir").string();
    CHECK(run("fit " + series + " --order 2 -o " + out + " 2>/dev/null") == 0);
    CHECK(fs::exists(fs::path(out) / "fit.json"));
    CHECK(fs::exists(fs::path(out) / "residuals.txt"));
}

TEST_CASE("missing input file exits with the data error code") {
    CHECK(run("fit " + (work_dir() / "missing.txt").string() +
              " --order 2 2>/dev/null") == 2);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run("fit 2>/dev/null") == 1);               // missing required args
    CHECK(run("frobnicate 2>/dev/null") == 1);        // unknown subcommand
    CHECK(run("simulate --phi nonsense -o /dev/null 2>/dev/null") == 1);
}

TEST_CASE("numerical/domain failures exit with code 3") {
    const auto series = (work_dir() / "unit_root.txt").string();
    CHECK(run("simulate --phi 1.0 --n 100 --seed 1 -o " + series + " 2>/dev/null") == 3);
}

TEST_CASE("degenerate (constant) series exits with the data error code") {
    const auto path = work_dir() / "flat.txt";
    std::ofstream out(path);
    for (int i = 0; i < 100; ++i) out << "2.5\n";
    out.close();
    CHECK(run("identify " + path.string() + " 2>/dev/null") == 2);
    CHECK(run("fit " + path.string() + " --order 1 2>/dev/null") == 2);
}

TEST_CASE("identify emits a verdict for white noise") {
    const auto dir = work_dir();
    const auto series = (dir / "wn.txt").string();
    REQUIRE(run("simulate --phi '' --n 500 --seed 11 -o " + series + " 2>/dev/null") == 0);
    const auto out = (dir / "verdict_out.json").string();
    CHECK(run("identify " + series + " > " + out + " 2>/dev/null") == 0);
    const auto j = json::parse(slurp(out));
    CHECK(j.contains("order_estimate"));
    CHECK(j.contains("white_noise"));
    CHECK(j.contains("whiteness_q"));
}

TEST_CASE("acf/pac/diagnose write their documented files") {
    const auto dir = work_dir();
    const auto series = (dir / "s3.txt").string();
    REQUIRE(run("simulate --phi 0.25,0.5 --n 200 --seed 5 -o " + series +
                " 2>/dev/null") == 0);

    const auto acf_dir = (dir / "acf_out").string();
    CHECK(run("acf " + series + " --max-lag 20 -o " + acf_dir + " 2>/dev/null") == 0);
    CHECK(fs::exists(fs::path(acf_dir) / "acf.tsv"));
    CHECK(fs::exists(fs::path(acf_dir) / "acf.svg"));

    const auto pac_dir = (dir / "pac_out").string();
    CHECK(run("pac " + series + " --max-lag 20 -o " + pac_dir + " --format tsv 2>/dev/null") == 0);
    CHECK(fs::exists(fs::path(pac_dir) / "pac.tsv"));
    CHECK_FALSE(fs::exists(fs::path(pac_dir) / "pac.svg"));

    const auto diag_dir = (dir / "diag_out").string();
    CHECK(run("diagnose " + series + " -o " + diag_dir + " 2>/dev/null") == 0);
    for (const char* name : {"histogram.tsv", "histogram.svg", "normal_scores.tsv",
                             "normal_scores.svg", "time_plot.tsv", "time_plot.svg",
                             "lagged_scatter.tsv", "lagged_scatter.svg",
                             "summary.json"}) {
        CHECK(fs::exists(fs::path(diag_dir) / name));
    }
}

TEST_CASE("simulate accepts the full model flag surface") {
    const auto series = (work_dir() / "arima.txt").string();
    CHECK(run("simulate --phi 0.3 --theta 0.4,-0.1 --theta0 0.5 --d 1 --sigma 2 "
              "--n 200 --seed 9 --burn-in 300 -o " + series + " 2>/dev/null") == 0);
    CHECK(fs::exists(series));
}

TEST_CASE("csv input with --column") {
    const auto path = work_dir() / "data.csv";
    std::ofstream out(path);
    out << "t,value\n";
    for (int i = 0; i < 60; ++i) out << i << ',' << (i % 2 == 0 ? 1.0 : -1.0) << '\n';
    out.close();
    const auto acf_dir = (work_dir() / "csv_out").string();
    CHECK(run("acf " + path.string() + " --column value --max-lag 5 -o " + acf_dir +
              " --format tsv 2>/dev/null") == 0);
    CHECK(fs::exists(fs::path(acf_dir) / "acf.tsv"));
}

TEST_CASE("reproduce-paper emits exactly its documented artifact set") {
    const auto dir = (work_dir() / "paper_run").string();
    CHECK(run("reproduce-paper -o " + dir + " >/dev/null 2>/dev/null") == 0);

    const std::set<std::string> expected{
        "series.txt",       "histogram.tsv",     "histogram.svg",
        "normal_scores.tsv", "normal_scores.svg", "acf.tsv",
        "acf.svg",          "pac.tsv",           "pac.svg",
        "fit.json",         "verdict.json"};
    std::set<std::string> found;
    for (const auto& entry : fs::directory_iterator(dir)) {
        found.insert(entry.path().filename().string());
    }
    CHECK(found == expected);

    const auto j = json::parse(slurp(fs::path(dir) / "fit.json"));
    CHECK(std::abs(j["phi_hat"][0].get<double>() - 0.25) <= 0.15);
    CHECK(std::abs(j["phi_hat"][1].get<double>() - 0.5) <= 0.15);
    const auto v = json::parse(slurp(fs::path(dir) / "verdict.json"));
    CHECK(v["order_estimate"] == 2);
}
