// tsfine command-line front end: simulate ARIMA sample paths and run the
// ACF/PAC identification battery over series files.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsfine/diagnostics.hpp"
#include "tsfine/errors.hpp"
#include "tsfine/estimation.hpp"
#include "tsfine/identification.hpp"
#include "tsfine/io.hpp"
#include "tsfine/process_model.hpp"
#include "tsfine/simulation.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;

std::vector<double> parse_coeff_list(const std::string& text) {
    std::vector<double> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        try {
            std::size_t used = 0;
            const double v = std::stod(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(v);
        } catch (const std::exception&) {
            throw tsfine::InputError("cannot parse coefficient '" + token + "'");
        }
    }
    return out;
}

struct CommonModelArgs {
    std::string phi;
    std::string theta;
    double theta0 = 0.0;
    int d = 0;
    double sigma = 1.0;
    std::uint64_t seed = 0;
    std::size_t n = 500;
    std::size_t burn_in = 1000;
};

void add_model_flags(CLI::App* cmd, CommonModelArgs& args) {
    cmd->add_option("--phi", args.phi, "AR coefficients, comma separated (empty for none)");
    cmd->add_option("--theta", args.theta, "MA coefficients, comma separated");
    cmd->add_option("--theta0", args.theta0, "drift term");
    cmd->add_option("--d", args.d, "differencing order")->check(CLI::NonNegativeNumber);
    cmd->add_option("--sigma", args.sigma, "innovation standard deviation");
    cmd->add_option("--seed", args.seed, "RNG seed");
    cmd->add_option("--n", args.n, "sample length");
    cmd->add_option("--burn-in", args.burn_in, "discarded transient length");
}

tsfine::TimeSeries run_simulation(const CommonModelArgs& args) {
    tsfine::ModelSpec model;
    model.phi = parse_coeff_list(args.phi);
    model.theta = parse_coeff_list(args.theta);
    model.theta0 = args.theta0;
    model.d = args.d;
    model.sigma2 = args.sigma * args.sigma;
    tsfine::NoiseSpec noise{args.seed, args.n, args.sigma};
    return tsfine::simulate_arima(model, noise, args.burn_in);
}

tsfine::TimeSeries load_series(const std::string& path, const std::string& column) {
    tsfine::SeriesFile file;
    file.path = path;
    file.column = column;
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
        file.format = tsfine::SeriesFormat::Csv;
    }
    return tsfine::read_series(file);
}

struct FormatChoice {
    bool tsv = true;
    bool svg = true;
    bool json = true;
};

FormatChoice parse_format(const std::string& format) {
    FormatChoice out;
    if (format == "all") return out;
    out.tsv = out.svg = out.json = false;
    std::string token;
    std::istringstream in(format);
    while (std::getline(in, token, ',')) {
        if (token == "tsv") out.tsv = true;
        else if (token == "svg") out.svg = true;
        else if (token == "json") out.json = true;
        else throw tsfine::InputError("unknown format '" + token + "'");
    }
    return out;
}

fs::path prepare_dir(const std::string& dir) {
    fs::path p(dir);
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec) throw tsfine::DataError("cannot create output directory: " + dir);
    return p;
}

void note(const std::string& message) { std::cerr << message << '\n'; }

void warn_unreliable_lags(const tsfine::LagProfile& acf) {
    if (acf.reliable_max_lag > 0 &&
        static_cast<std::size_t>(acf.max_lag()) > acf.reliable_max_lag) {
        note("note: lags above " + std::to_string(acf.reliable_max_lag) +
             " (n/4) are unreliable at this sample size");
    }
}

int cmd_simulate(const CommonModelArgs& args, const std::string& out_path) {
    const tsfine::TimeSeries series = run_simulation(args);
    tsfine::write_series(series, out_path);
    note("wrote " + out_path);
    return kExitOk;
}

int cmd_acf(const std::string& input, const std::string& column, int max_lag,
            double z_plot, const std::string& out_dir, const std::string& format) {
    const FormatChoice choice = parse_format(format);
    const tsfine::TimeSeries series = load_series(input, column);
    const tsfine::LagProfile acf = tsfine::empirical_acf(series, max_lag);
    warn_unreliable_lags(acf);
    const fs::path dir = prepare_dir(out_dir);
    if (choice.tsv) {
        tsfine::write_profile(acf, (dir / "acf.tsv").string(), tsfine::ProfileFormat::Tsv);
        note("wrote " + (dir / "acf.tsv").string());
    }
    if (choice.svg) {
        const double band = z_plot / std::sqrt(static_cast<double>(series.n()));
        tsfine::write_profile(tsfine::acf_stem(acf, band), (dir / "acf.svg").string(),
                              tsfine::ProfileFormat::Svg);
        note("wrote " + (dir / "acf.svg").string());
    }
    return kExitOk;
}

int cmd_pac(const std::string& input, const std::string& column, int max_lag,
            double z_plot, const std::string& out_dir, const std::string& format) {
    const FormatChoice choice = parse_format(format);
    const tsfine::TimeSeries series = load_series(input, column);
    const tsfine::PacProfile pac = tsfine::empirical_pac(series, max_lag, z_plot);
    const fs::path dir = prepare_dir(out_dir);
    if (choice.tsv) {
        tsfine::write_profile(pac, (dir / "pac.tsv").string(), tsfine::ProfileFormat::Tsv);
        note("wrote " + (dir / "pac.tsv").string());
    }
    if (choice.svg) {
        tsfine::write_profile(pac, (dir / "pac.svg").string(), tsfine::ProfileFormat::Svg);
        note("wrote " + (dir / "pac.svg").string());
    }
    return kExitOk;
}

int cmd_fit(const std::string& input, const std::string& column, int order,
            const std::string& out_dir) {
    const tsfine::TimeSeries series = load_series(input, column);
    const tsfine::FitResult fit = tsfine::fit_ar(series, order);
    const std::string json = tsfine::fit_result_json(fit);
    if (out_dir.empty()) {
        std::cout << json;
        return kExitOk;
    }
    const fs::path dir = prepare_dir(out_dir);
    {
        std::ofstream out((dir / "fit.json").string(), std::ios::binary);
        if (!out) throw tsfine::DataError("cannot write fit.json");
        out << json;
    }
    tsfine::write_series(fit.residuals, (dir / "residuals.txt").string());
    note("wrote " + (dir / "fit.json").string() + " and " +
         (dir / "residuals.txt").string());
    return kExitOk;
}

int cmd_identify(const std::string& input, const std::string& column,
                 const tsfine::ClassifyOptions& options, const std::string& out_dir) {
    const tsfine::TimeSeries series = load_series(input, column);
    const tsfine::IdentificationVerdict verdict = tsfine::classify(series, options);
    const std::string json = tsfine::verdict_json(verdict);
    if (out_dir.empty()) {
        std::cout << json;
        return kExitOk;
    }
    const fs::path dir = prepare_dir(out_dir);
    std::ofstream out((dir / "verdict.json").string(), std::ios::binary);
    if (!out) throw tsfine::DataError("cannot write verdict.json");
    out << json;
    note("wrote " + (dir / "verdict.json").string());
    return kExitOk;
}

int cmd_diagnose(const std::string& input, const std::string& column, int lag,
                 int bins, const std::string& out_dir, const std::string& format) {
    const FormatChoice choice = parse_format(format);
    const tsfine::TimeSeries series = load_series(input, column);
    const fs::path dir = prepare_dir(out_dir);

    const auto emit = [&](const tsfine::PlotData& plot, const std::string& stem) {
        if (choice.tsv) {
            tsfine::write_profile(plot, (dir / (stem + ".tsv")).string(),
                                  tsfine::ProfileFormat::Tsv);
            note("wrote " + (dir / (stem + ".tsv")).string());
        }
        if (choice.svg) {
            tsfine::write_profile(plot, (dir / (stem + ".svg")).string(),
                                  tsfine::ProfileFormat::Svg);
            note("wrote " + (dir / (stem + ".svg")).string());
        }
    };

    emit(tsfine::histogram(series, bins), "histogram");
    emit(tsfine::normal_scores(series), "normal_scores");
    emit(tsfine::time_plot(series), "time_plot");
    emit(tsfine::lagged_scatter(series, lag), "lagged_scatter");

    if (choice.json) {
        std::ofstream out((dir / "summary.json").string(), std::ios::binary);
        if (!out) throw tsfine::DataError("cannot write summary.json");
        out << tsfine::summary_json(tsfine::summary_stats(series));
        note("wrote " + (dir / "summary.json").string());
    }
    return kExitOk;
}

// End-to-end regeneration of the AR(2) reference experiment:
//   z_t = 0.25 z_{t-1} + 0.5 z_{t-2} + a_t,  a_t ~ N(0, 1),  n = 500.
int cmd_reproduce_paper(std::uint64_t seed, const std::string& out_dir) {
    CommonModelArgs args;
    args.phi = "0.25,0.5";
    args.sigma = 1.0;
    args.seed = seed;
    args.n = 500;
    args.burn_in = 1000;

    const tsfine::TimeSeries series = run_simulation(args);
    const fs::path dir = prepare_dir(out_dir);

    tsfine::write_series(series, (dir / "series.txt").string());

    const tsfine::PlotData hist = tsfine::histogram(series);
    tsfine::write_profile(hist, (dir / "histogram.tsv").string(), tsfine::ProfileFormat::Tsv);
    tsfine::write_profile(hist, (dir / "histogram.svg").string(), tsfine::ProfileFormat::Svg);

    const tsfine::PlotData scores = tsfine::normal_scores(series);
    tsfine::write_profile(scores, (dir / "normal_scores.tsv").string(),
                          tsfine::ProfileFormat::Tsv);
    tsfine::write_profile(scores, (dir / "normal_scores.svg").string(),
                          tsfine::ProfileFormat::Svg);

    const int max_lag = 25;
    const double z_plot = 1.96;
    const tsfine::LagProfile acf = tsfine::empirical_acf(series, max_lag);
    tsfine::write_profile(acf, (dir / "acf.tsv").string(), tsfine::ProfileFormat::Tsv);
    const double band = z_plot / std::sqrt(static_cast<double>(series.n()));
    tsfine::write_profile(tsfine::acf_stem(acf, band), (dir / "acf.svg").string(),
                          tsfine::ProfileFormat::Svg);

    const tsfine::PacProfile pac = tsfine::empirical_pac(series, max_lag, z_plot);
    tsfine::write_profile(pac, (dir / "pac.tsv").string(), tsfine::ProfileFormat::Tsv);
    tsfine::write_profile(pac, (dir / "pac.svg").string(), tsfine::ProfileFormat::Svg);

    const tsfine::FitResult fit = tsfine::fit_ar(series, 2);
    {
        std::ofstream out((dir / "fit.json").string(), std::ios::binary);
        if (!out) throw tsfine::DataError("cannot write fit.json");
        out << tsfine::fit_result_json(fit);
    }

    const tsfine::IdentificationVerdict verdict = tsfine::classify(series, {});
    {
        std::ofstream out((dir / "verdict.json").string(), std::ios::binary);
        if (!out) throw tsfine::DataError("cannot write verdict.json");
        out << tsfine::verdict_json(verdict);
    }

    std::cout << tsfine::fit_result_json(fit);
    note("experiment outputs in " + dir.string());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tsfine: ARIMA simulation and ACF/PAC structure detection"};
    app.require_subcommand(1);

    // simulate
    CommonModelArgs sim_args;
    std::string sim_out = "series.txt";
    auto* sim = app.add_subcommand("simulate", "generate a seeded ARIMA sample path");
    add_model_flags(sim, sim_args);
    sim->add_option("-o,--out", sim_out, "output series file");

    // acf / pac
    std::string acf_in, acf_col, acf_dir = ".", acf_fmt = "all";
    int acf_lag = 25;
    double acf_zplot = 1.96;
    auto* acf = app.add_subcommand("acf", "empirical autocorrelation profile");
    acf->add_option("input", acf_in, "series file")->required();
    acf->add_option("--column", acf_col, "CSV column name or index");
    acf->add_option("--max-lag", acf_lag, "largest lag");
    acf->add_option("--z-plot", acf_zplot, "plotting band multiplier");
    acf->add_option("-o,--out", acf_dir, "output directory");
    acf->add_option("--format", acf_fmt, "tsv,svg or all");

    std::string pac_in, pac_col, pac_dir = ".", pac_fmt = "all";
    int pac_lag = 25;
    double pac_zplot = 1.96;
    auto* pac = app.add_subcommand("pac", "empirical partial autocorrelation profile");
    pac->add_option("input", pac_in, "series file")->required();
    pac->add_option("--column", pac_col, "CSV column name or index");
    pac->add_option("--max-lag", pac_lag, "largest lag");
    pac->add_option("--z-plot", pac_zplot, "plotting band multiplier");
    pac->add_option("-o,--out", pac_dir, "output directory");
    pac->add_option("--format", pac_fmt, "tsv,svg or all");

    // fit
    std::string fit_in, fit_col, fit_dir;
    int fit_order = 0;
    auto* fit = app.add_subcommand("fit", "Yule-Walker AR(p) fit");
    fit->add_option("input", fit_in, "series file")->required();
    fit->add_option("--column", fit_col, "CSV column name or index");
    fit->add_option("--order", fit_order, "AR order p")->required();
    fit->add_option("-o,--out", fit_dir,
                    "output directory (fit.json + residuals.txt); stdout when omitted");

    // identify
    std::string id_in, id_col, id_dir;
    tsfine::ClassifyOptions id_opts;
    auto* identify = app.add_subcommand("identify", "white noise vs AR(p) verdict");
    identify->add_option("input", id_in, "series file")->required();
    identify->add_option("--column", id_col, "CSV column name or index");
    identify->add_option("--max-lag", id_opts.max_lag, "largest lag inspected");
    identify->add_option("--z-id", id_opts.z_id, "decision band multiplier");
    identify->add_option("--z-plot", id_opts.z_plot, "plotting band multiplier");
    identify->add_option("--alpha", id_opts.alpha, "whiteness level (0.05 or 0.01)");
    identify->add_option("-o,--out", id_dir,
                         "output directory (verdict.json); stdout when omitted");

    // diagnose
    std::string diag_in, diag_col, diag_dir = ".", diag_fmt = "all";
    int diag_lag = 1, diag_bins = 0;
    auto* diagnose =
        app.add_subcommand("diagnose", "histogram, normal scores, time and lag plots");
    diagnose->add_option("input", diag_in, "series file")->required();
    diagnose->add_option("--column", diag_col, "CSV column name or index");
    diagnose->add_option("--lag", diag_lag, "lag for the scatter plot");
    diagnose->add_option("--bins", diag_bins, "histogram bins (0 = Sturges rule)");
    diagnose->add_option("-o,--out", diag_dir, "output directory");
    diagnose->add_option("--format", diag_fmt, "tsv,svg,json or all");

    // reproduce-paper
    std::uint64_t paper_seed = 42;
    std::string paper_dir = "reproduce-paper-out";
    auto* paper = app.add_subcommand(
        "reproduce-paper", "run the built-in AR(2) reference experiment end to end");
    paper->add_option("--seed", paper_seed, "RNG seed");
    paper->add_option("-o,--out", paper_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sim->parsed()) return cmd_simulate(sim_args, sim_out);
        if (acf->parsed())
            return cmd_acf(acf_in, acf_col, acf_lag, acf_zplot, acf_dir, acf_fmt);
        if (pac->parsed())
            return cmd_pac(pac_in, pac_col, pac_lag, pac_zplot, pac_dir, pac_fmt);
        if (fit->parsed()) return cmd_fit(fit_in, fit_col, fit_order, fit_dir);
        if (identify->parsed()) return cmd_identify(id_in, id_col, id_opts, id_dir);
        if (diagnose->parsed())
            return cmd_diagnose(diag_in, diag_col, diag_lag, diag_bins, diag_dir, diag_fmt);
        if (paper->parsed()) return cmd_reproduce_paper(paper_seed, paper_dir);
    } catch (const tsfine::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const tsfine::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
    return kExitOk;
}
