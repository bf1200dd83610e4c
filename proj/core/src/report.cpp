#include "tracemin/report.hpp"

#include <cstdio>

namespace tracemin {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string to_json(const OracleResult& r) {
    std::string out = "{\"n\":" + std::to_string(r.n) + ",\"m\":" + std::to_string(r.m) +
                      ",\"psi\":" + format_double(r.psi) + ",\"minimizer_tags\":[";
    for (std::size_t i = 0; i < r.minimizer_tags.size(); ++i) {
        if (i) out += ',';
        out += '"' + json_escape(r.minimizer_tags[i]) + '"';
    }
    out += "],\"count_scanned\":" + std::to_string(r.count_scanned) + "}";
    return out;
}

}  // namespace tracemin
