#pragma once

#include <string>

#include "gcg/types.hpp"

namespace gcg {

/// Renders a double with 17 significant digits (round-trip exact for 64-bit).
std::string format_double(double v);

/// Trace CSV schema, fixed: k,f_x,f_ref,gap,step,backtracks,l_k,elapsed_ns.
/// l_k is empty for nonmonotone rows and terminal rows. elapsed_ns is written
/// as 0 unless include_timing is set, so that identical runs produce
/// byte-identical files.
void write_trace_csv(const std::string& path,
                     const std::vector<IterateRecord>& trace,
                     bool include_timing = false);

std::vector<IterateRecord> read_trace_csv(const std::string& path);

/// Companion plot data: k, min_{l<=k} gap, F(x^k) - best objective seen in
/// the trace. Header: k,min_gap,f_minus_best.
void write_plot_csv(const std::string& path,
                    const std::vector<IterateRecord>& trace);

}  // namespace gcg
