#pragma once

#include <string>

#include "tracemin/oracle.hpp"

namespace tracemin {

/// The one rendering used for every floating value that leaves the library:
/// 15 significant digits, shortest form ("%.15g").
std::string format_double(double v);

/// Minimal JSON string escaping (tags are plain ASCII, but stay honest).
std::string json_escape(const std::string& s);

/// One-line stable schema:
/// {"n":N,"m":M,"psi":V,"minimizer_tags":[...],"count_scanned":C}
std::string to_json(const OracleResult& r);

}  // namespace tracemin
