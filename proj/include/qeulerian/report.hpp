#pragma once

#include <map>
#include <optional>
#include <string>

namespace qeulerian {

// Outcome of one identity verification. pass holds exactly when the two
// rendered sides are equal as polynomials; witness points at the first
// mismatch otherwise.
struct VerifyReport {
    std::string identity;
    std::map<std::string, long long> params;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    std::optional<std::string> witness;

    std::string json() const {
        auto esc = [](const std::string& s) {
            std::string out;
            for (char c : s) {
                switch (c) {
                    case '"': out += "\\\""; break;
                    case '\\': out += "\\\\"; break;
                    case '\n': out += "\\n"; break;
                    default: out += c;
                }
            }
            return out;
        };
        std::string out = "{\"identity\":\"" + esc(identity) + "\",\"params\":{";
        bool first = true;
        for (const auto& [k, v] : params) {
            if (!first) out += ',';
            first = false;
            out += '"' + esc(k) + "\":" + std::to_string(v);
        }
        out += "},\"lhs\":\"" + esc(lhs) + "\",\"rhs\":\"" + esc(rhs) + "\",\"pass\":";
        out += pass ? "true" : "false";
        out += ",\"witness\":";
        out += witness ? '"' + esc(*witness) + '"' : std::string("null");
        out += '}';
        return out;
    }
};

}  // namespace qeulerian
