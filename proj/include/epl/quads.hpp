#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "epl/network.hpp"

namespace epl {

// Versioned header line of the quad text format. Records follow, one per
// line: subject, predicate, object, w_pos, w_neg separated by tabs.
inline constexpr std::string_view kQuadsHeader = "# epl-quads v1";

class QuadFormatError : public std::runtime_error {
public:
    QuadFormatError(const std::string& source, std::size_t line,
                    const std::string& message);

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Vertices are interned in order of first appearance; repeated (s,p,o)
// records revise the entry by evidence summation. Rejects a missing or
// wrong header and malformed records, reporting the line number.
EvidenceNetwork read_quads(std::istream& in, const std::string& source_name);
EvidenceNetwork load_quads(const std::filesystem::path& path);

// Canonical form: header, then one record per stored entry sorted by
// (predicate, subject, object) byte order. Weights print as the shortest
// decimal that parses back to the same double, so save/load/save is
// byte-identical.
std::string quads_to_string(const EvidenceNetwork& net);
void save_quads(const EvidenceNetwork& net, const std::filesystem::path& path);

// Tab-separated table, one row per stored entry in canonical quad order:
// subject, predicate, object, w_pos, w_neg, f, c. Numbers use fixed
// 6-decimal formatting; an undefined frequency prints as `undef`.
std::string truth_report(const EvidenceNetwork& net,
                         double k = kDefaultEvidenceConstant);

// Shortest decimal that parses back to the same double; the record form
// used by the quad format.
std::string format_weight(double value);

}  // namespace epl
