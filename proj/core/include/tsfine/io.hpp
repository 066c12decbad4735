#pragma once

#include <string>

#include "tsfine/diagnostics.hpp"
#include "tsfine/estimation.hpp"
#include "tsfine/identification.hpp"
#include "tsfine/process_model.hpp"
#include "tsfine/simulation.hpp"

namespace tsfine {

enum class SeriesFormat { Plain, Csv };

/// Description of a series on disk. Plain files carry one value per line with
/// '#' comments; CSV files may carry a header row, and `column` selects a
/// column by name or 0-based index (default: first column).
struct SeriesFile {
    std::string path;
    SeriesFormat format = SeriesFormat::Plain;
    std::string column;
};

enum class ProfileFormat { Tsv, Svg };

TimeSeries read_series(const SeriesFile& file);

/// Reads a series choosing the format from the extension (.csv -> CSV).
TimeSeries read_series(const std::string& path);

/// One value per line, 17 significant digits (value-exact round trip).
void write_series(const TimeSeries& series, const std::string& path);

/// Profile serialization. TSV: '#' header lines (kind, n, gamma0 / band),
/// then lag <TAB> value rows at 17 significant digits. SVG: a static stem
/// chart with +-band guides where a band applies.
void write_profile(const LagProfile& profile, const std::string& path,
                   ProfileFormat format);
void write_profile(const PacProfile& profile, const std::string& path,
                   ProfileFormat format);
void write_profile(const PlotData& plot, const std::string& path,
                   ProfileFormat format);

/// Self-contained SVG renderings.
std::string render_svg(const PlotData& plot);

/// Flat JSON summaries.
std::string fit_result_json(const FitResult& fit);
std::string verdict_json(const IdentificationVerdict& verdict);
std::string summary_json(const SummaryStats& stats);

/// 17-significant-digit decimal rendering used by every text format.
std::string format_value(double v);

}  // namespace tsfine
