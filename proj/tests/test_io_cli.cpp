#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "chordal/cli.hpp"
#include "chordal/errors.hpp"
#include "chordal/io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace chordal;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "chordal_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "chordal");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kSlit =
    R"({"horizon": 2, "driver": {"type": "piecewise_constant", "breaks": [0],
        "measures": [{"atoms": [[0, 1]]}]}})";
const char* kSemicircle = R"({"segments": [{"interval": [-2, 2], "density": "semicircle"}]})";

}  // namespace

TEST_CASE("parse_complex") {
  CHECK(io::parse_complex("0+1i") == cplx{0, 1});
  CHECK(io::parse_complex("-1.5-2i") == cplx{-1.5, -2});
  CHECK(io::parse_complex("3i") == cplx{0, 3});
  CHECK(io::parse_complex("i") == cplx{0, 1});
  CHECK(io::parse_complex("-i") == cplx{0, -1});
  CHECK(io::parse_complex("2") == cplx{2, 0});
  CHECK(io::parse_complex("1e-3+2e+1i") == cplx{1e-3, 20});
  CHECK_THROWS_AS(io::parse_complex("1+xi"), DomainError);
  CHECK_THROWS_AS(io::parse_complex(""), DomainError);
}

TEST_CASE("parse_real_list and format_real") {
  CHECK(io::parse_real_list("1,0,-2.5") == std::vector<double>{1, 0, -2.5});
  CHECK_THROWS_AS(io::parse_real_list("1,,2"), DomainError);
  CHECK(io::format_real(0.0) == "0");
  CHECK(io::format_real(-0.0) == "0");
  CHECK(io::format_real(0.1) == "0.1");
  CHECK(io::format_real(1.0 / 3.0) == "0.3333333333333333");
}

TEST_CASE("measure and driver JSON") {
  const RealMeasure mu = io::measure_from_json(
      R"({"atoms": [[1, 0.25]], "segments": [{"interval": [0, 1], "density": "poly:0,1.5"}]})");
  CHECK(mu.mass() == doctest::Approx(1.0).epsilon(1e-14));
  const RealMeasure w = io::measure_from_json(
      R"({"segments": [{"interval": [0, 2], "density": "uniform", "weight": 0.5, "order": 8}]})");
  CHECK(w.mass() == doctest::Approx(0.5));
  CHECK_THROWS_AS(io::measure_from_json("{"), DomainError);
  CHECK_THROWS_AS(io::measure_from_json("{}"), DomainError);
  CHECK_THROWS_AS(io::measure_from_json(R"({"segments": [{"interval": [0, 1], "density": "cauchy"}]})"),
                  DomainError);
  const DriverFamily d = io::driver_from_json(kSlit);
  CHECK(d.horizon() == 2.0);
  const DriverFamily m = io::driver_from_json(
      R"({"horizon": 1, "driver": {"type": "moving_atom", "samples": [[0, 0], [1, 1]]}})");
  CHECK(m.is_moving_atom());
  CHECK_THROWS_AS(io::driver_from_json(
                      R"({"horizon": 3, "driver": {"type": "moving_atom", "samples": [[0, 0], [1, 1]]}})"),
                  DomainError);
  CHECK_THROWS_AS(io::driver_from_json(R"({"horizon": 1, "driver": {"type": "brownian"}})"),
                  DomainError);
}

TEST_CASE("load_grid") {
  const auto path = write_temp("grid.txt", "# points\n0+1i\n1.5,2\n\n-1-0.5i\n");
  const auto g = io::load_grid(path);
  REQUIRE(g.size() == 3);
  CHECK(g[1] == cplx{1.5, 2});
}

TEST_CASE("cli evolve") {
  const auto driver = write_temp("slit.json", kSlit);
  const Run r = run({"evolve", "--driver", driver.string(), "--t", "1", "--z", "0+1i"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.rfind("t,re_z,im_z,re_f,im_f,err_bound\n1,0,1,0,1.7320508", 0) == 0);
  const auto grid = write_temp("g.txt", "0+1i\n0+3i\n");
  const Run g = run({"evolve", "--driver", driver.string(), "--t", "1", "--grid",
                     grid.string(), "--tol", "1e-10"});
  CHECK(g.code == cli::kOk);
  CHECK(std::count(g.out.begin(), g.out.end(), '\n') == 3);
  // Thread count does not change the bytes.
  const Run g1 = run({"evolve", "--driver", driver.string(), "--t", "1", "--grid",
                      grid.string(), "--tol", "1e-10", "--threads", "1"});
  CHECK(g1.out == g.out);
  CHECK(run({"evolve", "--driver", driver.string(), "--t", "1", "--z", "0+0i"}).code ==
        cli::kUsageError);
  CHECK(run({"evolve", "--driver", driver.string(), "--t", "5", "--z", "0+1i"}).code ==
        cli::kUsageError);
  CHECK(run({"evolve", "--driver", "/nonexistent.json", "--t", "1", "--z", "i"}).code ==
        cli::kUsageError);
}

TEST_CASE("cli grunsky") {
  const Run pass = run({"grunsky", "--moments", "1,0,1,0,2", "--order", "2"});
  CHECK(pass.code == cli::kOk);
  CHECK(pass.out.find("\"verdict\": \"pass\"") != std::string::npos);
  CHECK(pass.out.find("\"max_abs_eigenvalue\": 0.0") != std::string::npos);
  const Run fail = run({"grunsky", "--moments", "1,0,1,0,1", "--order", "2"});
  CHECK(fail.out.find("\"verdict\": \"fail\"") != std::string::npos);
  CHECK(fail.out.find("\"max_abs_eigenvalue\": 2.0") != std::string::npos);
  const auto uni = write_temp("u.json",
                              R"({"segments": [{"interval": [0, 8], "density": "semicircle"}]})");
  const Run norm = run({"grunsky", "--measure", uni.string(), "--order", "3", "--normalize"});
  CHECK(norm.out.find("\"verdict\": \"pass\"") != std::string::npos);
  CHECK(run({"grunsky", "--measure", uni.string(), "--order", "3"}).code == cli::kUsageError);
  CHECK(run({"grunsky", "--order", "2"}).code == cli::kUsageError);
}

TEST_CASE("cli transform, invert, hayman") {
  const auto mu = write_temp("sc.json", kSemicircle);
  const Run t = run({"transform", "--measure", mu.string(), "--z", "0+1i"});
  CHECK(t.code == cli::kOk);
  CHECK(t.out.find("-0.618033988749") != std::string::npos);
  CHECK(t.out.find("error_estimate") != std::string::npos);
  const Run n = run({"transform", "--measure", mu.string(), "--z", "i", "--op", "nevanlinna"});
  CHECK(n.out.find("\"nu_mass\"") != std::string::npos);
  CHECK(run({"transform", "--measure", mu.string(), "--z", "i", "--op", "bogus"}).code ==
        cli::kUsageError);
  const Run inv = run({"invert", "--measure", mu.string(), "--interval", "-3,3"});
  CHECK(inv.code == cli::kOk);
  CHECK(nlohmann::json::parse(inv.out)["value"].get<double>() == doctest::Approx(2.0).epsilon(1e-3));
  const auto csv = std::filesystem::temp_directory_path() / "chordal_tests" / "curve.csv";
  const Run h = run({"hayman", "--measure", mu.string(), "--n", "16", "--resolution", "256",
                     "--curve-csv", csv.string()});
  CHECK(h.code == cli::kOk);
  CHECK(h.out.find("consistent_with_univalence") != std::string::npos);
  CHECK(std::filesystem::file_size(csv) > 0);
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({"evolve", "--t", "1"}).code == cli::kUsageError);
  CHECK(run({"--help"}).code == cli::kOk);
}
