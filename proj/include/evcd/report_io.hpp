#ifndef EVCD_REPORT_IO_HPP
#define EVCD_REPORT_IO_HPP

#include <iosfwd>
#include <string>

#include "evcd/graph.hpp"
#include "evcd/pipeline.hpp"

namespace evcd {

/// Everything the CLI needs to reproduce a run, echoed into the report.
struct RunConfig {
    std::string input;
    std::string format;  // "edge-list" | "gml"
    SweepConfig sweep;
};

// Single-document JSON report: {config, graph_summary, per_c, best_c}.
// Deterministic key order and full-precision floats, so identical runs
// serialize byte-identically.
std::string report_to_json(const Graph& g, const DetectionReport& report,
                           const RunConfig& cfg);

// CSV: header "c,Q_e,Q_h,Q_fuzzy", one row per c.
void write_curve_csv(const DetectionReport& report, std::ostream& out);

// Embedding for one c, one row per node: label,coord_1,...,coord_{c-1}.
void write_embedding_csv(const Graph& g, const PerCResult& res,
                         std::ostream& out);

// DOT rendering of the hard credal partition at one c: singleton nodes are
// colored by community, imprecise nodes dashed, outliers diamond-shaped.
void write_dot(const Graph& g, const PerCResult& res, std::ostream& out);

}  // namespace evcd

#endif
