#include "tsfine/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

#include <nlohmann/json.hpp>

#include "tsfine/errors.hpp"

namespace tsfine {

namespace {

std::string_view trim(std::string_view s) {
    const auto not_space = [](char c) {
        return c != ' ' && c != '\t' && c != '\r' && c != '\n';
    };
    while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
    return s;
}

// Locale-independent full-token parse; leading '+' tolerated.
bool parse_double(std::string_view token, double& out) {
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    if (token.empty()) return false;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            fields.push_back(trim(line.substr(start, i - start)));
            start = i + 1;
        }
    }
    return fields;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open for writing: " + path);
    return out;
}

void finish_out(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw DataError("write failed: " + path);
}

TimeSeries read_plain(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open: " + path);

    TimeSeries out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        double v = 0.0;
        if (!parse_double(body, v) || !std::isfinite(v)) {
            throw DataError(path + ": unparseable value at line " +
                            std::to_string(line_no));
        }
        out.values.push_back(v);
    }
    if (out.values.empty()) {
        throw DataError(path + ": no values found");
    }
    return out;
}

TimeSeries read_csv(const std::string& path, const std::string& column) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open: " + path);

    TimeSeries out;
    std::string line;
    std::size_t line_no = 0;
    long col = -1;
    bool first_content = true;

    // A column given as digits selects by 0-based index, anything else by
    // header name; empty selects the first column.
    long requested_index = 0;
    std::string requested_name;
    if (!column.empty()) {
        if (std::all_of(column.begin(), column.end(),
                        [](char c) { return c >= '0' && c <= '9'; })) {
            requested_index = std::stol(column);
        } else {
            requested_name = column;
            requested_index = -1;
        }
    }

    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto fields = split_csv(body);

        if (first_content) {
            first_content = false;
            if (!requested_name.empty()) {
                for (std::size_t i = 0; i < fields.size(); ++i) {
                    if (fields[i] == requested_name) {
                        col = static_cast<long>(i);
                        break;
                    }
                }
                if (col < 0) {
                    throw DataError(path + ": column '" + requested_name +
                                    "' not found in header");
                }
                continue;  // header row consumed
            }
            col = requested_index;
            // Header row is optional: skip the first row when the selected
            // field does not parse as a number.
            double probe = 0.0;
            if (col < static_cast<long>(fields.size()) &&
                !parse_double(fields[col], probe)) {
                continue;
            }
        }

        if (col >= static_cast<long>(fields.size())) {
            throw DataError(path + ": missing column at line " +
                            std::to_string(line_no));
        }
        double v = 0.0;
        if (!parse_double(fields[col], v) || !std::isfinite(v)) {
            throw DataError(path + ": unparseable value at line " +
                            std::to_string(line_no));
        }
        out.values.push_back(v);
    }
    if (out.values.empty()) {
        throw DataError(path + ": no values found");
    }
    return out;
}

const char* kind_label(ProfileKind kind) {
    return kind == ProfileKind::Empirical ? "empirical" : "theoretical";
}

}  // namespace

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

TimeSeries read_series(const SeriesFile& file) {
    return file.format == SeriesFormat::Csv ? read_csv(file.path, file.column)
                                            : read_plain(file.path);
}

TimeSeries read_series(const std::string& path) {
    SeriesFile file;
    file.path = path;
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
        file.format = SeriesFormat::Csv;
    }
    return read_series(file);
}

void write_series(const TimeSeries& series, const std::string& path) {
    if (series.values.empty()) throw DataError("nothing to write: empty series");
    auto out = open_out(path);
    for (double v : series.values) out << format_value(v) << '\n';
    finish_out(out, path);
}

void write_profile(const LagProfile& profile, const std::string& path,
                   ProfileFormat format) {
    if (profile.values.empty()) throw DataError("nothing to write: empty profile");
    if (format == ProfileFormat::Svg) {
        const double band =
            profile.kind == ProfileKind::Empirical && profile.n > 0
                ? 1.96 / std::sqrt(static_cast<double>(profile.n))
                : 0.0;
        auto out = open_out(path);
        out << render_svg(acf_stem(profile, band));
        finish_out(out, path);
        return;
    }
    auto out = open_out(path);
    out << "# kind\t" << kind_label(profile.kind) << '\n';
    if (profile.kind == ProfileKind::Empirical) {
        out << "# n\t" << profile.n << '\n';
        out << "# reliable_max_lag\t" << profile.reliable_max_lag << '\n';
    }
    out << "# gamma0\t" << format_value(profile.gamma0) << '\n';
    out << "# columns\tlag\tvalue\n";
    for (std::size_t k = 0; k < profile.values.size(); ++k) {
        out << k << '\t' << format_value(profile.values[k]) << '\n';
    }
    finish_out(out, path);
}

void write_profile(const PacProfile& profile, const std::string& path,
                   ProfileFormat format) {
    if (profile.values.empty()) throw DataError("nothing to write: empty profile");
    if (format == ProfileFormat::Svg) {
        auto out = open_out(path);
        out << render_svg(pac_stem(profile));
        finish_out(out, path);
        return;
    }
    auto out = open_out(path);
    out << "# kind\t" << kind_label(profile.kind) << '\n';
    out << "# band\t" << format_value(profile.band) << '\n';
    out << "# columns\tlag\tpac\n";
    for (std::size_t i = 0; i < profile.values.size(); ++i) {
        out << (i + 1) << '\t' << format_value(profile.values[i]) << '\n';
    }
    finish_out(out, path);
}

void write_profile(const PlotData& plot, const std::string& path,
                   ProfileFormat format) {
    if (plot.points.empty() && plot.bins.empty()) {
        throw DataError("nothing to write: empty plot data");
    }
    if (format == ProfileFormat::Svg) {
        auto out = open_out(path);
        out << render_svg(plot);
        finish_out(out, path);
        return;
    }
    auto out = open_out(path);
    out << "# kind\t" << to_string(plot.kind) << '\n';
    out << "# n\t" << plot.n << '\n';
    if (plot.band != 0.0) out << "# band\t" << format_value(plot.band) << '\n';
    if (plot.kind == PlotKind::NormalScores) {
        out << "# correlation\t" << format_value(plot.correlation) << '\n';
    }
    if (plot.kind == PlotKind::Histogram) {
        out << "# columns\tbin_left\tbin_right\tcount\n";
        for (const auto& bin : plot.bins) {
            out << format_value(bin.left) << '\t' << format_value(bin.right)
                << '\t' << bin.count << '\n';
        }
    } else {
        out << "# columns\tx\ty\n";
        for (const auto& [x, y] : plot.points) {
            out << format_value(x) << '\t' << format_value(y) << '\n';
        }
    }
    finish_out(out, path);
}

namespace {

struct Frame {
    // pixel geometry
    static constexpr double width = 720.0, height = 440.0;
    static constexpr double left = 64.0, right = 700.0;
    static constexpr double top = 44.0, bottom = 392.0;
    double xmin, xmax, ymin, ymax;

    double px(double x) const {
        return left + (x - xmin) / (xmax - xmin) * (right - left);
    }
    double py(double y) const {
        return bottom - (y - ymin) / (ymax - ymin) * (bottom - top);
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

void axes(std::ostringstream& svg, const Frame& f, const std::string& title) {
    svg << "<rect width=\"" << Frame::width << "\" height=\"" << Frame::height
        << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << (Frame::left + Frame::right) / 2.0
        << "\" y=\"26\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">"
        << title << "</text>\n";
    svg << "<line x1=\"" << Frame::left << "\" y1=\"" << Frame::bottom
        << "\" x2=\"" << Frame::right << "\" y2=\"" << Frame::bottom
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << Frame::left << "\" y1=\"" << Frame::top
        << "\" x2=\"" << Frame::left << "\" y2=\"" << Frame::bottom
        << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = f.xmin + (f.xmax - f.xmin) * i / 4.0;
        const double yv = f.ymin + (f.ymax - f.ymin) * i / 4.0;
        svg << "<text x=\"" << num(f.px(xv)) << "\" y=\"" << Frame::bottom + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"11\">"
            << label(xv) << "</text>\n";
        svg << "<text x=\"" << Frame::left - 6 << "\" y=\"" << num(f.py(yv) + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
               "font-size=\"11\">"
            << label(yv) << "</text>\n";
    }
}

void pad_range(double& lo, double& hi) {
    if (lo == hi) {
        lo -= 0.5;
        hi += 0.5;
        return;
    }
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
}

}  // namespace

std::string render_svg(const PlotData& plot) {
    Frame f{0.0, 1.0, 0.0, 1.0};

    if (plot.kind == PlotKind::Histogram) {
        if (plot.bins.empty()) throw DataError("nothing to render: empty histogram");
        f.xmin = plot.bins.front().left;
        f.xmax = plot.bins.back().right;
        f.ymin = 0.0;
        f.ymax = 0.0;
        for (const auto& bin : plot.bins) {
            f.ymax = std::max(f.ymax, static_cast<double>(bin.count));
        }
        f.ymax *= 1.05;
        if (f.ymax == 0.0) f.ymax = 1.0;
    } else {
        if (plot.points.empty()) throw DataError("nothing to render: empty plot");
        f.xmin = f.xmax = plot.points.front().first;
        f.ymin = f.ymax = plot.points.front().second;
        for (const auto& [x, y] : plot.points) {
            f.xmin = std::min(f.xmin, x);
            f.xmax = std::max(f.xmax, x);
            f.ymin = std::min(f.ymin, y);
            f.ymax = std::max(f.ymax, y);
        }
        if (plot.kind == PlotKind::AcfStem || plot.kind == PlotKind::PacStem) {
            f.ymin = std::min({f.ymin, -plot.band, 0.0});
            f.ymax = std::max({f.ymax, plot.band, 0.0});
        }
        pad_range(f.xmin, f.xmax);
        pad_range(f.ymin, f.ymax);
    }

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Frame::width
        << "\" height=\"" << Frame::height << "\" viewBox=\"0 0 " << Frame::width
        << ' ' << Frame::height << "\">\n";
    axes(svg, f, plot.title.empty() ? to_string(plot.kind) : plot.title);

    switch (plot.kind) {
        case PlotKind::Histogram: {
            for (const auto& bin : plot.bins) {
                const double x0 = f.px(bin.left), x1 = f.px(bin.right);
                const double y = f.py(static_cast<double>(bin.count));
                svg << "<rect x=\"" << num(x0) << "\" y=\"" << num(y)
                    << "\" width=\"" << num(x1 - x0) << "\" height=\""
                    << num(f.py(0.0) - y)
                    << "\" fill=\"#4878a8\" stroke=\"white\"/>\n";
            }
            break;
        }
        case PlotKind::TimePlot: {
            svg << "<polyline fill=\"none\" stroke=\"#4878a8\" stroke-width=\"1\" "
                   "points=\"";
            for (const auto& [x, y] : plot.points) {
                svg << num(f.px(x)) << ',' << num(f.py(y)) << ' ';
            }
            svg << "\"/>\n";
            break;
        }
        case PlotKind::NormalScores:
        case PlotKind::LaggedScatter: {
            for (const auto& [x, y] : plot.points) {
                svg << "<circle cx=\"" << num(f.px(x)) << "\" cy=\"" << num(f.py(y))
                    << "\" r=\"2.5\" fill=\"#4878a8\" fill-opacity=\"0.7\"/>\n";
            }
            break;
        }
        case PlotKind::AcfStem:
        case PlotKind::PacStem: {
            svg << "<line x1=\"" << Frame::left << "\" y1=\"" << num(f.py(0.0))
                << "\" x2=\"" << Frame::right << "\" y2=\"" << num(f.py(0.0))
                << "\" stroke=\"#888888\"/>\n";
            if (plot.band > 0.0) {
                for (const double b : {plot.band, -plot.band}) {
                    svg << "<line x1=\"" << Frame::left << "\" y1=\"" << num(f.py(b))
                        << "\" x2=\"" << Frame::right << "\" y2=\"" << num(f.py(b))
                        << "\" stroke=\"#c04040\" stroke-dasharray=\"6 4\"/>\n";
                }
            }
            for (const auto& [x, y] : plot.points) {
                svg << "<line x1=\"" << num(f.px(x)) << "\" y1=\"" << num(f.py(0.0))
                    << "\" x2=\"" << num(f.px(x)) << "\" y2=\"" << num(f.py(y))
                    << "\" stroke=\"#4878a8\" stroke-width=\"2\"/>\n";
                svg << "<circle cx=\"" << num(f.px(x)) << "\" cy=\"" << num(f.py(y))
                    << "\" r=\"2.5\" fill=\"#4878a8\"/>\n";
            }
            break;
        }
    }

    svg << "</svg>\n";
    return svg.str();
}

std::string fit_result_json(const FitResult& fit) {
    nlohmann::json j;
    j["p"] = fit.p;
    j["phi_hat"] = fit.phi_hat;
    j["sigma2_hat"] = fit.sigma2_hat;
    j["sample_mean"] = fit.sample_mean;
    j["gamma0_hat"] = fit.gamma0_hat;
    j["n_residuals"] = fit.residuals.values.size();
    return j.dump(2) + "\n";
}

std::string verdict_json(const IdentificationVerdict& verdict) {
    nlohmann::json j;
    j["n"] = verdict.n;
    j["order_estimate"] = verdict.order_estimate;
    j["significant_lags"] = verdict.significant_lags;
    j["decision_band"] = verdict.decision_band;
    j["acf_classification"] = to_string(verdict.acf_classification);
    j["white_noise"] = verdict.white_noise;
    j["whiteness_q"] = verdict.whiteness.q;
    j["whiteness_lags"] = verdict.whiteness.lags_used;
    j["whiteness_threshold"] = verdict.whiteness.threshold;
    j["whiteness_alpha"] = verdict.whiteness.alpha;
    j["whiteness_pass"] = verdict.whiteness.pass;
    return j.dump(2) + "\n";
}

std::string summary_json(const SummaryStats& stats) {
    nlohmann::json j;
    j["n"] = stats.n;
    j["mean"] = stats.mean;
    j["variance"] = stats.variance;
    j["min"] = stats.min;
    j["max"] = stats.max;
    return j.dump(2) + "\n";
}

}  // namespace tsfine
