#include "interference/io.hpp"

#include <charconv>
#include <chrono>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "interference/errors.hpp"
#include "interference/linalg.hpp"

namespace interference {

using nlohmann::json;

std::string matrix_digest(const ComplexMatrix& m) {
    std::uint64_t hash = 1469598103934665603ull;  // FNV offset basis
    const auto mix = [&hash](const void* data, std::size_t len) {
        const auto* bytes = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < len; ++i) {
            hash ^= bytes[i];
            hash *= 1099511628211ull;
        }
    };
    const std::uint64_t rows = m.rows(), cols = m.cols();
    mix(&rows, sizeof rows);
    mix(&cols, sizeof cols);
    for (const Complex& v : m.entries()) {
        const double re = v.real(), im = v.imag();
        mix(&re, sizeof re);
        mix(&im, sizeof im);
    }
    std::ostringstream os;
    os << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0') << hash;
    return os.str();
}

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

void write_header(std::ostream& os, const MetadataHeader& header) {
    os << "# interference " << kVersion << "\n";
    if (header.timestamp) {
        const auto now = std::chrono::system_clock::now();
        const std::time_t t = std::chrono::system_clock::to_time_t(now);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
        os << "# created: " << buf << "\n";
    }
    if (!header.command.empty()) os << "# command: " << header.command << "\n";
    if (header.seed) os << "# seed: " << *header.seed << "\n";
    if (header.input_digest) os << "# input-digest: " << *header.input_digest << "\n";
}

namespace {

// readers accept any number of leading '#' lines before the payload
std::string strip_comment_lines(std::istream& is) {
    std::string payload, line;
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] == '#') continue;
        payload += line;
        payload += '\n';
    }
    return payload;
}

}  // namespace

ComplexMatrix load_matrix_json(std::istream& is, const std::string& name,
                               bool verify_unitary) {
    json doc;
    try {
        doc = json::parse(strip_comment_lines(is));
    } catch (const json::parse_error& e) {
        throw parse_error(name + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
        !doc.contains("entries"))
        throw parse_error(name + ": expected fields rows, cols, entries");
    const std::size_t rows = doc["rows"].get<std::size_t>();
    const std::size_t cols = doc["cols"].get<std::size_t>();
    const auto& entries = doc["entries"];
    if (!entries.is_array() || entries.size() != rows * cols)
        throw parse_error(name + ": field 'entries' must hold rows*cols pairs, got " +
                          std::to_string(entries.size()));
    std::vector<Complex> values;
    values.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& pair = entries[i];
        if (!pair.is_array() || pair.size() != 2)
            throw parse_error(name + ": entry " + std::to_string(i) +
                              " must be a [re, im] pair");
        values.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    ComplexMatrix m(rows, cols, std::move(values));
    if (verify_unitary && !m.is_unitary())
        throw domain_error(name + ": matrix fails the unitarity check");
    return m;
}

ComplexMatrix load_matrix_json_file(const std::string& path, bool verify_unitary) {
    std::ifstream is(path);
    if (!is) throw parse_error(path + ": cannot open");
    return load_matrix_json(is, path, verify_unitary);
}

void write_matrix_json(std::ostream& os, const ComplexMatrix& m) {
    os << "{\"rows\": " << m.rows() << ", \"cols\": " << m.cols() << ", \"entries\": [";
    for (std::size_t i = 0; i < m.entries().size(); ++i) {
        if (i) os << ", ";
        os << '[' << format_double(m.entries()[i].real()) << ", "
           << format_double(m.entries()[i].imag()) << ']';
    }
    os << "]}\n";
}

ComplexMatrix parse_device(const std::string& spec) {
    if (spec.rfind("fourier:", 0) == 0) {
        const int n = std::stoi(spec.substr(8));
        return fourier_unitary(n);
    }
    if (spec.rfind("bs:", 0) == 0) {
        const double r = std::stod(spec.substr(3));
        return beam_splitter(r);
    }
    return load_matrix_json_file(spec);
}

void write_events(std::ostream& os, const EventStream& stream, const MetadataHeader& header) {
    write_header(os, header);
    os << "# source: " << stream.source << "\n";
    os << "# seed: " << stream.seed << "\n";
    os << "# input: " << stream.input.str() << "\n";
    os << "# device: " << stream.device_digest << "\n";
    for (const Arrangement& ev : stream.events) os << ev.str() << "\n";
}

EventStream load_events(std::istream& is, const std::string& name) {
    EventStream stream{{}, "unknown", 0, Arrangement({0}), "none"};
    std::string line;
    std::size_t lineno = 0;
    bool have_input = false;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto grab = [&line](const char* key) -> std::optional<std::string> {
                const std::string prefix = std::string("# ") + key + ": ";
                if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
                return std::nullopt;
            };
            if (auto v = grab("source")) stream.source = *v;
            if (auto v = grab("seed")) stream.seed = std::stoull(*v);
            if (auto v = grab("device")) stream.device_digest = *v;
            if (auto v = grab("input")) {
                stream.input = Arrangement::parse(*v);
                have_input = true;
            }
            continue;
        }
        try {
            stream.events.push_back(Arrangement::parse(line));
        } catch (const parse_error& e) {
            throw parse_error(name + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (stream.events.size() > 1 &&
            stream.events.back().modes() != stream.events.front().modes())
            throw parse_error(name + ":" + std::to_string(lineno) +
                              ": inconsistent mode count");
    }
    if (stream.events.empty()) throw parse_error(name + ": no events found");
    if (!have_input) stream.input = stream.events.front();
    return stream;
}

EventStream load_events_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw parse_error(path + ": cannot open");
    return load_events(is, path);
}

void write_report_json(std::ostream& os, const CertificationReport& report) {
    json doc{{"test", report.test},
             {"verdict", report.verdict()},
             {"statistic", report.statistic},
             {"threshold", report.threshold},
             {"events", report.events_used}};
    if (report.confidence)
        doc["confidence"] = *report.confidence;
    else
        doc["confidence"] = nullptr;
    os << doc.dump(2) << "\n";
}

}  // namespace interference
