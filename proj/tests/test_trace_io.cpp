#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "gcg/rng.hpp"
#include "gcg/solver_nonmonotone.hpp"
#include "gcg/solver_parameter_free.hpp"
#include "gcg/trace_io.hpp"
#include "support.hpp"

using namespace gcg;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const char* name) {
  const fs::path dir = fs::temp_directory_path() / "gcg_io_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("trace round-trips bit exactly through CSV") {
  Rng rng(61);
  const Problem prob(SmoothOracle::quadratic(rng.spd_matrix(3),
                                             rng.normal_vector(3)),
                     NonsmoothTerm::simplex(3, 1.0));
  PfConfig cfg;
  cfg.gap_tol = 0.0;
  cfg.max_iters = 40;
  const RunResult rr = pf_run(prob, Vector::Constant(3, 1.0 / 3.0), cfg);

  const auto path = temp_file("roundtrip.csv");
  write_trace_csv(path.string(), rr.trace);
  const auto back = read_trace_csv(path.string());

  REQUIRE(back.size() == rr.trace.size());
  for (std::size_t j = 0; j < back.size(); ++j) {
    CHECK(back[j].k == rr.trace[j].k);
    CHECK(back[j].f_x == rr.trace[j].f_x);
    CHECK(back[j].f_ref == rr.trace[j].f_ref);
    CHECK(back[j].gap == rr.trace[j].gap);
    CHECK(back[j].step == rr.trace[j].step);
    CHECK(back[j].backtracks == rr.trace[j].backtracks);
    CHECK(back[j].l_k.has_value() == rr.trace[j].l_k.has_value());
    if (back[j].l_k) CHECK(*back[j].l_k == *rr.trace[j].l_k);
    CHECK(back[j].elapsed_ns == 0);  // timing zeroed by default
  }
}

TEST_CASE("trace file schema") {
  const Problem prob = test::box_quad_1d();
  NmConfig cfg;
  cfg.p = 1.0;
  cfg.pk_value = 1.0;
  const RunResult rr = nm_run(prob, test::vec({1}), cfg);
  const auto path = temp_file("schema.csv");
  write_trace_csv(path.string(), rr.trace);

  const std::string text = slurp(path);
  CHECK(text.rfind("k,f_x,f_ref,gap,step,backtracks,l_k,elapsed_ns\n", 0) == 0);
  // nm rows leave the l_k column empty
  CHECK(text.find(",,0\n") != std::string::npos);
  // two data rows for the hand fixture
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}

TEST_CASE("writer output is deterministic; timing is opt-in") {
  const Problem prob = test::box_quad_1d();
  PfConfig cfg;
  const RunResult rr = pf_run(prob, test::vec({1}), cfg);

  const auto a = temp_file("det_a.csv"), b = temp_file("det_b.csv");
  write_trace_csv(a.string(), rr.trace);
  write_trace_csv(b.string(), rr.trace);
  CHECK(slurp(a) == slurp(b));

  const auto timed = temp_file("det_timed.csv");
  write_trace_csv(timed.string(), rr.trace, /*include_timing=*/true);
  const auto back = read_trace_csv(timed.string());
  bool any_timing = false;
  for (const auto& r : back) any_timing = any_timing || r.elapsed_ns > 0;
  CHECK(any_timing);
}

TEST_CASE("17 significant digits survive parsing") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(std::stod(format_double(0.52428799999999998)) == 0.52428799999999998);
}

TEST_CASE("plot companion carries running min gap and objective gap") {
  std::vector<IterateRecord> trace(4);
  const double gaps[4] = {2.0, 0.5, 0.8, 0.1};
  const double fs[4] = {3.0, 2.0, 1.5, 1.0};
  for (int j = 0; j < 4; ++j) {
    trace[j].k = j;
    trace[j].gap = gaps[j];
    trace[j].f_x = fs[j];
  }
  const auto path = temp_file("plot.csv");
  write_plot_csv(path.string(), trace);
  const std::string text = slurp(path);
  CHECK(text.rfind("k,min_gap,f_minus_best\n", 0) == 0);
  CHECK(text.find("\n1,0.5,1\n") != std::string::npos);
  CHECK(text.find("\n2,0.5,0.5\n") != std::string::npos);
  CHECK(text.find("\n3,0.10000000000000001,0\n") != std::string::npos);
}

TEST_CASE("reader rejects malformed files") {
  const auto path = temp_file("bad.csv");
  {
    std::ofstream out(path);
    out << "wrong,header\n";
  }
  CHECK_THROWS_AS(read_trace_csv(path.string()), Error);

  {
    std::ofstream out(path);
    out << "k,f_x,f_ref,gap,step,backtracks,l_k,elapsed_ns\n";
    out << "0,1.0,1.0\n";  // short row
  }
  CHECK_THROWS_AS(read_trace_csv(path.string()), Error);

  CHECK_THROWS_AS(read_trace_csv("/nonexistent/trace.csv"), Error);
}
