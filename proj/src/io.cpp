#include "chordal/io.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "chordal/errors.hpp"
#include "json.hpp"

namespace chordal::io {

using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

double parse_real(std::string_view s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw DomainError("not a number: '" + std::string(s) + "'");
  }
  return v;
}

template <class T>
T get(const json& j, const char* key) {
  if (!j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw DomainError(std::string("field '") + key + "' has the wrong type");
  }
}

DensitySegment parse_segment(const json& s) {
  if (!s.is_object()) throw DomainError("segment must be an object");
  const auto interval = get<std::vector<double>>(s, "interval");
  if (interval.size() != 2) throw DomainError("segment interval needs [lo, hi]");
  const double lo = interval[0];
  const double hi = interval[1];
  if (!(lo < hi)) throw DomainError("segment interval needs lo < hi");
  const std::string name = get<std::string>(s, "density");
  const int order = s.contains("order") ? get<int>(s, "order") : 64;
  const double weight = s.contains("weight") ? get<double>(s, "weight") : 1.0;
  if (!(weight >= 0.0)) throw DomainError("segment weight must be >= 0");

  Density base;
  if (name == "semicircle") {
    base = densities::semicircle(lo, hi);
  } else if (name == "arcsine") {
    base = densities::arcsine(lo, hi);
  } else if (name == "uniform") {
    base = densities::uniform(lo, hi);
  } else if (name.rfind("poly:", 0) == 0) {
    base = densities::polynomial(parse_real_list(std::string_view(name).substr(5)));
  } else if (name == "poly") {
    base = densities::polynomial(get<std::vector<double>>(s, "coeffs"));
  } else {
    throw DomainError("unknown density '" + name + "'");
  }
  Density density = base;
  if (weight != 1.0) {
    density = [base, weight](double x) { return weight * base(x); };
  }
  return {lo, hi, std::move(density), order};
}

RealMeasure parse_measure(const json& j) {
  if (!j.is_object()) throw DomainError("measure must be a JSON object");
  std::vector<Atom> atoms;
  if (j.contains("atoms")) {
    for (const auto& a : get<std::vector<std::vector<double>>>(j, "atoms")) {
      if (a.size() != 2) throw DomainError("atom must be [position, weight]");
      atoms.push_back({a[0], a[1]});
    }
  }
  std::vector<DensitySegment> segments;
  if (j.contains("segments")) {
    if (!j.at("segments").is_array()) throw DomainError("segments must be an array");
    for (const auto& s : j.at("segments")) segments.push_back(parse_segment(s));
  }
  RealMeasure mu(std::move(atoms), std::move(segments));
  if (mu.empty()) throw DomainError("measure has neither atoms nor segments");
  return mu;
}

}  // namespace

RealMeasure measure_from_json(std::string_view text) {
  return parse_measure(parse_json(text));
}

RealMeasure load_measure(const std::filesystem::path& path) {
  return measure_from_json(read_file(path));
}

DriverFamily driver_from_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw DomainError("driver config must be a JSON object");
  const double horizon = get<double>(j, "horizon");
  if (!(horizon >= 0.0)) throw DomainError("horizon must be >= 0");
  if (!j.contains("driver") || !j.at("driver").is_object()) {
    throw DomainError("missing 'driver' object");
  }
  const json& d = j.at("driver");
  const std::string type = get<std::string>(d, "type");
  if (type == "piecewise_constant") {
    auto breaks = get<std::vector<double>>(d, "breaks");
    if (!d.contains("measures") || !d.at("measures").is_array()) {
      throw DomainError("piecewise_constant driver needs 'measures'");
    }
    std::vector<RealMeasure> measures;
    for (const auto& m : d.at("measures")) measures.push_back(parse_measure(m));
    return DriverFamily::piecewise_constant(std::move(breaks), std::move(measures),
                                            horizon);
  }
  if (type == "moving_atom") {
    std::vector<std::pair<double, double>> samples;
    for (const auto& s : get<std::vector<std::vector<double>>>(d, "samples")) {
      if (s.size() != 2) throw DomainError("sample must be [t, u]");
      samples.emplace_back(s[0], s[1]);
    }
    DriverFamily family = DriverFamily::moving_atom(std::move(samples));
    if (horizon > family.horizon()) {
      throw DomainError("moving_atom samples end before the horizon");
    }
    return family;
  }
  throw DomainError("unknown driver type '" + type + "'");
}

DriverFamily load_driver(const std::filesystem::path& path) {
  return driver_from_json(read_file(path));
}

cplx parse_complex(std::string_view text) {
  if (text.empty()) throw DomainError("empty complex literal");
  if (text.back() != 'i') return {parse_real(text), 0.0};
  const std::string_view body = text.substr(0, text.size() - 1);
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' &&
        body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_of = [](std::string_view s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s);
  };
  if (split == std::string_view::npos) return {0.0, imag_of(body)};
  return {parse_real(body.substr(0, split)), imag_of(body.substr(split))};
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    out.push_back(parse_real(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<cplx> load_grid(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  std::vector<cplx> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      out.push_back(parse_complex(line));
    } else {
      const auto v = parse_real_list(line);
      if (v.size() != 2) throw DomainError("grid line must be 're,im'");
      out.emplace_back(v[0], v[1]);
    }
  }
  return out;
}

std::string format_real(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string to_json(const GrunskyReport& r) {
  json j;
  j["N"] = r.N;
  j["c_matrix"] = r.c_matrix.to_rows();
  j["eigenvalues"] = r.eigenvalues;
  j["max_abs_eigenvalue"] = r.max_abs_eigenvalue;
  j["verdict"] = to_string(r.verdict);
  j["boundary_tol"] = r.boundary_tol;
  j["symmetry_defect"] = r.symmetry_defect;
  return j.dump(2);
}

std::string to_json(const CapacityReport& r, int resolution, int sweeps) {
  json j;
  j["n_points"] = r.n_points;
  j["resolution"] = resolution;
  j["sweeps"] = sweeps;
  j["epsilon"] = r.epsilon;
  j["d_image"] = r.d_image;
  j["d_interval"] = r.d_interval;
  j["ratio"] = r.ratio;
  j["self_intersects"] = r.self_intersects;
  j["unbounded"] = r.unbounded;
  j["verdict"] = to_string(r.verdict);
  return j.dump(2);
}

}  // namespace chordal::io
