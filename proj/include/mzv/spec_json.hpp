#pragma once

#include <string>
#include <vector>

#include "mzv/dc_values.hpp"
#include "mzv/partial_values.hpp"

namespace mzv {

struct SpecOptions {
    bool simplify = true;
    bool numeric = false;
    double tolerance = 1e-10;
};

struct SpecFile {
    ProblemSpec spec;
    SpecOptions options;
};

/// Parses the JSON problem document:
/// { "n": 2, "T": 2, "polynomials": ["...", ...], "twists": ["a/b", ...],
///   "options": {"simplify": bool, "numeric": bool, "tolerance": float} }
/// The last polynomial is the inner one over n variables. Diagnostics carry
/// the offending field name.
SpecFile parse_spec_json(const std::string& text);

/// Parses the direct fully-twisted request:
/// { "polys": [...], "k": [nonnegative...] } or { "polys": [...],
///   "args": [integers...] }, plus "twists": ["a/b", ...] and optional
///   "nvars". Returns the evaluation point.
DCPoint parse_dc_request_json(const std::string& text);

std::string trace_json(const std::vector<TraceEntry>& trace);

} // namespace mzv
