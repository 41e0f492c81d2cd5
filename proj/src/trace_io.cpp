#include "gcg/trace_io.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

namespace gcg {

namespace {

constexpr const char* kTraceHeader =
    "k,f_x,f_ref,gap,step,backtracks,l_k,elapsed_ns";

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s, const std::string& path, int line) {
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || errno == ERANGE)
    raise(ErrorCode::ParseError,
          path + ":" + std::to_string(line) + ": bad number '" + s + "'");
  return v;
}

std::int64_t parse_int(const std::string& s, const std::string& path,
                       int line) {
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (end == s.c_str() || errno == ERANGE)
    raise(ErrorCode::ParseError,
          path + ":" + std::to_string(line) + ": bad integer '" + s + "'");
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_trace_csv(const std::string& path,
                     const std::vector<IterateRecord>& trace,
                     bool include_timing) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::IoError, "cannot open for writing: " + path);
  out << kTraceHeader << "\n";
  for (const IterateRecord& r : trace) {
    out << r.k << ',' << format_double(r.f_x) << ',' << format_double(r.f_ref)
        << ',' << format_double(r.gap) << ',' << format_double(r.step) << ','
        << r.backtracks << ',';
    if (r.l_k) out << format_double(*r.l_k);
    out << ',' << (include_timing ? r.elapsed_ns : 0) << "\n";
  }
  if (!out) raise(ErrorCode::IoError, "write failed: " + path);
}

std::vector<IterateRecord> read_trace_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::IoError, "cannot open for reading: " + path);

  std::string line;
  if (!std::getline(in, line))
    raise(ErrorCode::ParseError, path + ": empty trace file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTraceHeader)
    raise(ErrorCode::ParseError,
          path + ":1: unexpected header '" + line + "'");

  std::vector<IterateRecord> trace;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 8)
      raise(ErrorCode::ParseError, path + ":" + std::to_string(lineno) +
                                       ": expected 8 fields, got " +
                                       std::to_string(f.size()));
    IterateRecord r;
    r.k = parse_int(f[0], path, lineno);
    r.f_x = parse_double(f[1], path, lineno);
    r.f_ref = parse_double(f[2], path, lineno);
    r.gap = parse_double(f[3], path, lineno);
    r.step = parse_double(f[4], path, lineno);
    r.backtracks = static_cast<int>(parse_int(f[5], path, lineno));
    if (!f[6].empty()) r.l_k = parse_double(f[6], path, lineno);
    r.elapsed_ns = parse_int(f[7], path, lineno);
    trace.push_back(r);
  }
  return trace;
}

void write_plot_csv(const std::string& path,
                    const std::vector<IterateRecord>& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::IoError, "cannot open for writing: " + path);

  double best_f = std::numeric_limits<double>::infinity();
  for (const IterateRecord& r : trace) best_f = std::min(best_f, r.f_x);

  out << "k,min_gap,f_minus_best\n";
  double min_gap = std::numeric_limits<double>::infinity();
  for (const IterateRecord& r : trace) {
    min_gap = std::min(min_gap, r.gap);
    out << r.k << ',' << format_double(min_gap) << ','
        << format_double(r.f_x - best_f) << "\n";
  }
  if (!out) raise(ErrorCode::IoError, "write failed: " + path);
}

}  // namespace gcg
