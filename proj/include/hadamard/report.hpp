#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hadamard/json_io.hpp"
#include "hadamard/polynomial.hpp"
#include "hadamard/roots.hpp"

namespace hadamard {

/// Principal-branch power f^[p] at one swept p.
struct SweepRecord {
    double p;
    Stability stable;
    double max_modulus;
    std::vector<Complex> roots;
};

/// from, from + step, ... up to `to` (inclusive up to a 1e-9 step slack).
/// Empty when from > to; throws InvalidInput when step <= 0.
std::vector<double> power_range(double from, double to, double step);

/// Evaluates every power concurrently; records come back sorted by p.
std::vector<SweepRecord> sweep(const MonicPolynomial& f, const std::vector<double>& powers);

/// Header p,stable,max_modulus,root_re_1,root_im_1,... then one row per record.
std::string sweep_csv(const std::vector<SweepRecord>& records, std::size_t degree);

/// Scatter of every root plus the unit circle: black markers for powers
/// whose f^[p] is not stable, gray for stable ones.
std::string sweep_svg(const std::vector<SweepRecord>& records, const std::string& title);

/// First swept power after which every record is stable (scanning in the
/// given order), if the sweep ends stable.
std::optional<double> detected_onset(const std::vector<SweepRecord>& records, bool increasing);

void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Recomputes every published constant of example 1 or 2 and writes the report
/// directory; returns the summary also written as report.json.
Json reproduce_example(int example, const std::filesystem::path& out_dir);

} // namespace hadamard
