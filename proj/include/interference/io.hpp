#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "interference/certify.hpp"
#include "interference/matrix.hpp"
#include "interference/sampling.hpp"

namespace interference {

inline constexpr const char* kVersion = "0.1.0";

/// FNV-1a over dimensions and raw entry bytes, as "fnv1a:<16 hex digits>".
std::string matrix_digest(const ComplexMatrix& m);

/// Common "# key: value" preamble. Every file the library writes starts with
/// one; readers skip any number of leading '#' lines.
struct MetadataHeader {
    std::string command;                 // reconstructed argv
    std::optional<std::uint64_t> seed;
    std::optional<std::string> input_digest;
    bool timestamp = true;
};
void write_header(std::ostream& os, const MetadataHeader& header);

/// Matrix JSON: {"rows": n, "cols": n, "entries": [[re, im], ...]} row-major.
/// `verify_unitary` additionally enforces the 1e-12 unitarity invariant.
ComplexMatrix load_matrix_json(std::istream& is, const std::string& name,
                               bool verify_unitary = false);
ComplexMatrix load_matrix_json_file(const std::string& path, bool verify_unitary = false);
void write_matrix_json(std::ostream& os, const ComplexMatrix& m);

/// Device specifier: "fourier:<n>", "bs:<R>", or a path to a matrix JSON.
ComplexMatrix parse_device(const std::string& spec);

/// Event files: '#' metadata lines carrying source/seed/input/device, then
/// one comma-separated arrangement per line.
void write_events(std::ostream& os, const EventStream& stream, const MetadataHeader& header);
EventStream load_events(std::istream& is, const std::string& name);
EventStream load_events_file(const std::string& path);

/// JSON certification report (after the '#' preamble):
/// {"test", "verdict", "statistic", "threshold", "events", "confidence"}.
void write_report_json(std::ostream& os, const CertificationReport& report);

/// Shortest round-trippable decimal form of a double.
std::string format_double(double v);

}  // namespace interference
