#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "chordal/capacity.hpp"
#include "chordal/grunsky.hpp"
#include "chordal/loewner.hpp"
#include "chordal/transforms.hpp"

namespace chordal::io {

/// Parses a measure from its JSON text:
///   {"atoms": [[x, w], ...],
///    "segments": [{"interval": [lo, hi],
///                  "density": "semicircle" | "arcsine" | "uniform" | "poly:c0,c1,...",
///                  "order": n, "weight": w}]}
/// Named densities have unit mass on their interval before `weight`
/// (default 1) is applied; polynomial densities are used as given.
RealMeasure measure_from_json(std::string_view text);
RealMeasure load_measure(const std::filesystem::path& path);

/// Parses a driver configuration:
///   {"horizon": T,
///    "driver": {"type": "piecewise_constant", "breaks": [...], "measures": [...]}
///            | {"type": "moving_atom", "samples": [[t, u], ...]}}
DriverFamily driver_from_json(std::string_view text);
DriverFamily load_driver(const std::filesystem::path& path);

/// "a+bi", "a-bi", "bi", "a" (no spaces); "i" alone means 1i.
cplx parse_complex(std::string_view text);
/// Comma separated reals, e.g. "1,0,1,0,2".
std::vector<double> parse_real_list(std::string_view text);
/// One point per non-empty line, either a complex literal or "re,im".
std::vector<cplx> load_grid(const std::filesystem::path& path);

std::string to_json(const GrunskyReport& report);
std::string to_json(const CapacityReport& report, int resolution, int sweeps);

/// Shortest decimal form that round-trips, with "-0" folded to "0".
std::string format_real(double v);

}  // namespace chordal::io
