// Command-line front end: reproducible, file-based workflows over the library.
// Every stochastic subcommand requires an explicit --seed; outputs start with
// a '#' metadata preamble and are byte-identical for identical invocations
// (use --no-timestamp to drop the only non-deterministic line).

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "interference/certify.hpp"
#include "interference/entangle.hpp"
#include "interference/errors.hpp"
#include "interference/io.hpp"
#include "interference/linalg.hpp"
#include "interference/partialdist.hpp"
#include "interference/sampling.hpp"
#include "interference/suppression.hpp"
#include "interference/transition.hpp"

namespace itf = interference;

namespace {

struct OutputTarget {
    std::string path;  // empty: stdout
    std::ofstream file;

    std::ostream& open() {
        if (path.empty()) return std::cout;
        file.open(path);
        if (!file) throw itf::error("cannot open output file " + path);
        return file;
    }
};

std::string join_args(int argc, char** argv) {
    std::ostringstream os;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) os << ' ';
        os << argv[i];
    }
    return os.str();
}

itf::EventStream read_stream(const std::string& events_path) {
    if (events_path.empty() || events_path == "-")
        return itf::load_events(std::cin, "<stdin>");
    return itf::load_events_file(events_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"many-particle interference toolkit"};
    app.require_subcommand(1);
    const std::string command_line = join_args(argc, argv);

    bool no_timestamp = false;
    app.add_flag("--no-timestamp", no_timestamp, "omit the timestamp header line");

    // ---- prob ----
    auto* prob = app.add_subcommand("prob", "exact transition probability");
    std::string prob_species = "boson", prob_r, prob_s, prob_device;
    prob->add_option("--species", prob_species, "distinguishable|boson|fermion");
    prob->add_option("--r", prob_r, "input occupations, e.g. 1,1")->required();
    prob->add_option("--s", prob_s, "output occupations")->required();
    prob->add_option("--device", prob_device, "fourier:n | bs:R | matrix.json")->required();

    // ---- dist ----
    auto* dist = app.add_subcommand("dist", "full output distribution as CSV");
    std::string dist_species = "boson", dist_r, dist_device;
    OutputTarget dist_out;
    dist->add_option("--species", dist_species);
    dist->add_option("--r", dist_r)->required();
    dist->add_option("--device", dist_device)->required();
    dist->add_option("-o,--output", dist_out.path, "output file (default stdout)");

    // ---- sample ----
    auto* sample = app.add_subcommand("sample", "generate an event stream");
    std::string sample_source, sample_r, sample_device;
    std::uint64_t sample_k = 0, sample_seed = 0;
    OutputTarget sample_out;
    sample->add_option("--source", sample_source,
                       "exact-boson|exact-fermion|exact-distinguishable|"
                       "classical-mc|uniform|meanfield")
        ->required();
    sample->add_option("--r", sample_r, "input occupations")->required();
    sample->add_option("--device", sample_device, "needed unless source=uniform");
    sample->add_option("--k", sample_k, "number of events")->required();
    sample->add_option("--seed", sample_seed, "RNG seed (mandatory)")->required();
    sample->add_option("-o,--output", sample_out.path);

    // ---- suppression ----
    auto* supp = app.add_subcommand("suppression", "suppression-law verdict");
    std::string supp_r, supp_s, supp_species = "boson";
    int supp_n = 0;
    supp->add_option("--r", supp_r)->required();
    supp->add_option("--s", supp_s)->required();
    supp->add_option("--n", supp_n, "mode count")->required();
    supp->add_option("--species", supp_species, "boson (default) or fermion");

    // ---- certify ----
    auto* cert = app.add_subcommand("certify", "run a certification test on an event file");
    std::string cert_test, cert_events, cert_device, cert_r;
    std::uint64_t cert_allowed = 0;
    double cert_z = 5.0;
    OutputTarget cert_out;
    cert->add_option("--test", cert_test, "symmetric|mean-occupation|uniform|suppression")
        ->required();
    cert->add_option("--events", cert_events, "event file ('-' or absent: stdin)");
    cert->add_option("--device", cert_device, "device (required for mean-occupation/uniform)");
    cert->add_option("--r", cert_r, "input occupations (default: stream header)");
    cert->add_option("--allowed-violations", cert_allowed);
    cert->add_option("--z-threshold", cert_z);
    cert->add_option("-o,--output", cert_out.path);

    // ---- hom-scan ----
    auto* hom = app.add_subcommand("hom-scan", "two-mode signal over a displacement grid");
    int hom_r1 = 1, hom_r2 = 1, hom_grid = 201;
    double hom_lambda = 800e-9, hom_dlambda = 2.5e-9, hom_xmax = 0.0;
    std::string hom_device = "bs:0.5", hom_outputs;
    OutputTarget hom_out;
    hom->add_option("--r1", hom_r1, "photons in mode 1");
    hom->add_option("--r2", hom_r2, "photons in mode 2");
    hom->add_option("--device", hom_device, "2x2 device (default bs:0.5)");
    hom->add_option("--grid", hom_grid, "number of grid points (default 201)");
    hom->add_option("--lambda", hom_lambda, "central wavelength [m]");
    hom->add_option("--dlambda", hom_dlambda, "spectral FWHM [m]");
    hom->add_option("--xmax", hom_xmax, "scan limit [m] (default 2 l_c)");
    hom->add_option("--s", hom_outputs, "comma-separated s1 values (default all)");
    hom->add_option("-o,--output", hom_out.path);

    // ---- multimode-scan ----
    auto* mm = app.add_subcommand("multimode-scan",
                                  "multimode signal along a delay-pattern ray");
    std::string mm_r, mm_device, mm_pattern;
    int mm_grid = 61;
    double mm_lambda = 800e-9, mm_dlambda = 2.5e-9, mm_xmax = 0.0;
    OutputTarget mm_out;
    mm->add_option("--r", mm_r)->required();
    mm->add_option("--device", mm_device)->required();
    mm->add_option("--pattern", mm_pattern,
                   "per-mode delay multipliers, e.g. 0,1,-1  (times = pattern * x / c)")
        ->required();
    mm->add_option("--grid", mm_grid);
    mm->add_option("--lambda", mm_lambda);
    mm->add_option("--dlambda", mm_dlambda);
    mm->add_option("--xmax", mm_xmax, "ray endpoint [m] (default 2 l_c)");
    mm->add_option("-o,--output", mm_out.path);

    // ---- entangle ----
    auto* ent = app.add_subcommand("entangle", "post-selected qudit state from a device");
    std::string ent_w, ent_species = "boson";
    int ent_parties = 0, ent_dim = 2;
    OutputTarget ent_out;
    ent->add_option("--w", ent_w, "device matrix JSON, (N d) x (N d)")->required();
    ent->add_option("--parties", ent_parties, "N")->required();
    ent->add_option("--local-dim", ent_dim, "d (default 2)");
    ent->add_option("--species", ent_species, "boson or fermion");
    ent->add_option("-o,--output", ent_out.path);

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "time permanent evaluation over N");
    int bench_min = 10, bench_max = 24;
    std::uint64_t bench_seed = 1;
    OutputTarget bench_out;
    bench->add_option("--min-n", bench_min);
    bench->add_option("--max-n", bench_max);
    bench->add_option("--seed", bench_seed);
    bench->add_option("-o,--output", bench_out.path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2
    }

    try {
        itf::MetadataHeader header;
        header.command = command_line;
        header.timestamp = !no_timestamp;

        if (*prob) {
            const auto u = itf::parse_device(prob_device);
            const double p = itf::probability(itf::species_from_string(prob_species),
                                              itf::Arrangement::parse(prob_r),
                                              itf::Arrangement::parse(prob_s), u);
            // clamp to [0, 1] for reporting only
            std::cout << itf::format_double(std::min(std::max(p, 0.0), 1.0)) << "\n";
        } else if (*dist) {
            const auto u = itf::parse_device(dist_device);
            const auto r = itf::Arrangement::parse(dist_r);
            const auto species = itf::species_from_string(dist_species);
            const auto outputs = itf::enumerate_arrangements(r.particles(), r.modes());
            const auto probs = itf::full_distribution(species, r, u);
            auto& os = dist_out.open();
            header.input_digest = itf::matrix_digest(u);
            itf::write_header(os, header);
            os << "arrangement,probability\n";
            for (std::size_t i = 0; i < outputs.size(); ++i)
                os << '"' << outputs[i].str() << "\"," << itf::format_double(probs[i])
                   << "\n";
        } else if (*sample) {
            const auto r = itf::Arrangement::parse(sample_r);
            itf::EventStream stream{{}, "", 0, r, "none"};
            if (sample_source == "uniform") {
                stream = itf::sample_uniform(r.particles(), r.modes(), sample_k, sample_seed);
            } else {
                if (sample_device.empty())
                    throw itf::error("--device is required for source " + sample_source);
                const auto u = itf::parse_device(sample_device);
                if (sample_source == "classical-mc")
                    stream = itf::sample_classical_mc(r, u, sample_k, sample_seed);
                else if (sample_source == "meanfield")
                    stream = itf::sample_meanfield(r, u, sample_k, sample_seed);
                else if (sample_source.rfind("exact-", 0) == 0)
                    stream = itf::sample_exact(
                        itf::species_from_string(sample_source.substr(6)), r, u, sample_k,
                        sample_seed);
                else
                    throw itf::error("unknown source " + sample_source);
            }
            header.seed = sample_seed;
            header.input_digest = stream.device_digest;
            itf::write_events(sample_out.open(), stream, header);
        } else if (*supp) {
            const auto r = itf::Arrangement::parse(supp_r);
            const auto s = itf::Arrangement::parse(supp_s);
            const auto verdict = supp_species == "fermion"
                                     ? itf::fermion_suppressed(r, s, supp_n)
                                     : itf::boson_suppressed(r, s, supp_n);
            std::cout << (verdict.suppressed ? "suppressed" : "not suppressed") << "\n";
            for (const auto& w : verdict.witnesses) {
                const char* dir =
                    w.direction == itf::SuppressionWitness::Direction::forward ? "forward"
                                                                               : "reversed";
                std::cout << "witness: direction=" << dir << " m=" << w.m << " p=" << w.p
                          << " Q=" << w.q << " (Q mod " << supp_n << " = " << w.q % supp_n
                          << ")\n";
            }
        } else if (*cert) {
            const itf::EventStream stream = read_stream(cert_events);
            const itf::Arrangement r =
                cert_r.empty() ? stream.input : itf::Arrangement::parse(cert_r);
            itf::CertificationReport report;
            if (cert_test == "symmetric") {
                report = itf::symmetric_test(stream);
            } else if (cert_test == "mean-occupation" || cert_test == "uniform") {
                if (cert_device.empty())
                    throw itf::error("--device is required for test " + cert_test);
                const auto u = itf::parse_device(cert_device);
                const std::string digest = itf::matrix_digest(u);
                if (stream.device_digest != "none" && stream.device_digest != "unknown" &&
                    stream.device_digest != digest)
                    throw itf::error("stream was sampled from a different device (digest " +
                                     stream.device_digest + " vs " + digest + ")");
                report = cert_test == "uniform"
                             ? itf::uniform_discrimination(stream, r, u)
                             : itf::mean_occupation_test(stream, r, u, cert_z);
            } else if (cert_test == "suppression") {
                const int n = stream.events.front().modes();
                const std::string fourier_digest =
                    itf::matrix_digest(itf::fourier_unitary(n));
                if (stream.device_digest != "none" && stream.device_digest != "unknown" &&
                    stream.device_digest != fourier_digest)
                    throw itf::error("suppression test applies to the Fourier device only");
                report = itf::suppression_certification(stream, r, n, cert_allowed);
            } else {
                throw itf::error("unknown test " + cert_test);
            }
            auto& os = cert_out.open();
            itf::write_header(os, header);
            itf::write_report_json(os, report);
            std::cerr << report.test << ": " << report.verdict() << "\n";
        } else if (*hom) {
            const auto u = itf::parse_device(hom_device);
            auto packets = itf::WavepacketSet::from_wavelengths(hom_lambda, hom_dlambda,
                                                                {0.0, 0.0});
            const double lc = packets.coherence_length();
            const double xmax = hom_xmax > 0.0 ? hom_xmax : 2.0 * lc;
            std::vector<int> wanted;
            if (!hom_outputs.empty())
                for (int v : itf::Arrangement::parse(hom_outputs).occupations())
                    wanted.push_back(v);
            auto& os = hom_out.open();
            itf::write_header(os, header);
            os << "# l_c: " << itf::format_double(lc) << "\n";
            os << "x";
            const int total = hom_r1 + hom_r2;
            for (int s1 = 0; s1 <= total; ++s1) {
                if (!wanted.empty() &&
                    std::find(wanted.begin(), wanted.end(), s1) == wanted.end())
                    continue;
                os << ",P(" << s1 << "," << total - s1 << ")";
            }
            os << "\n";
            for (int i = 0; i < hom_grid; ++i) {
                const double x = -xmax + 2.0 * xmax * i / (hom_grid - 1);
                const auto signal = itf::two_mode_signal(hom_r1, hom_r2, x, u, packets);
                os << itf::format_double(x);
                for (int s1 = 0; s1 <= total; ++s1) {
                    if (!wanted.empty() &&
                        std::find(wanted.begin(), wanted.end(), s1) == wanted.end())
                        continue;
                    os << ',' << itf::format_double(signal[s1]);
                }
                os << "\n";
            }
        } else if (*mm) {
            const auto u = itf::parse_device(mm_device);
            const auto r = itf::Arrangement::parse(mm_r);
            std::vector<double> pattern;
            std::istringstream ps(mm_pattern);
            std::string field;
            while (std::getline(ps, field, ',')) pattern.push_back(std::stod(field));
            if (static_cast<int>(pattern.size()) != r.modes())
                throw itf::error("pattern length must match the mode count");
            auto packets =
                itf::WavepacketSet::from_wavelengths(mm_lambda, mm_dlambda,
                                                     std::vector<double>(r.modes(), 0.0));
            const double lc = packets.coherence_length();
            const double xmax = mm_xmax > 0.0 ? mm_xmax : 2.0 * lc;
            const auto outputs = itf::enumerate_arrangements(r.particles(), r.modes());
            auto& os = mm_out.open();
            itf::write_header(os, header);
            os << "# l_c: " << itf::format_double(lc) << "\n";
            os << "x";
            for (const auto& s : outputs) os << ",\"P(" << s.str() << ")\"";
            os << "\n";
            for (int i = 0; i < mm_grid; ++i) {
                const double x = xmax * i / (mm_grid - 1);
                for (std::size_t j = 0; j < pattern.size(); ++j)
                    packets.arrival_times[j] =
                        pattern[j] * x / itf::WavepacketSet::kSpeedOfLight;
                const auto signal = itf::multimode_signal(r, packets, u);
                os << itf::format_double(x);
                for (const double p : signal) os << ',' << itf::format_double(p);
                os << "\n";
            }
        } else if (*ent) {
            const auto w = itf::load_matrix_json_file(ent_w);
            const itf::DeviceW device(w, ent_parties, ent_dim);
            const auto species = itf::species_from_string(ent_species);
            const auto tensor = itf::multipartite_coefficients(device, species);
            auto& os = ent_out.open();
            header.input_digest = itf::matrix_digest(w);
            itf::write_header(os, header);
            os << "{\n  \"parties\": " << tensor.parties
               << ",\n  \"local_dim\": " << tensor.local_dim << ",\n  \"species\": \""
               << itf::to_string(species) << "\",\n  \"post_selection_probability\": "
               << itf::format_double(tensor.norm() * tensor.norm())
               << ",\n  \"tensor\": [";
            for (std::size_t i = 0; i < tensor.amplitudes.size(); ++i) {
                if (i) os << ", ";
                os << '[' << itf::format_double(tensor.amplitudes[i].real()) << ", "
                   << itf::format_double(tensor.amplitudes[i].imag()) << ']';
            }
            os << "],\n  \"cut_ranks\": {";
            bool first = true;
            // every bipartition, up to complement symmetry: party 0 stays left
            for (unsigned mask = 1; mask < (1u << (ent_parties - 1)); ++mask) {
                std::vector<int> cut{0};
                for (int p = 1; p < ent_parties; ++p)
                    if (mask >> (p - 1) & 1) cut.push_back(p);
                if (static_cast<int>(cut.size()) == ent_parties) continue;
                std::string label;
                for (int p : cut) label += (label.empty() ? "" : "+") + std::to_string(p);
                if (!first) os << ", ";
                first = false;
                os << '"' << label << "\": " << itf::bipartition_rank(tensor, cut);
            }
            os << "}\n}\n";
        } else if (*bench) {
            auto& os = bench_out.open();
            itf::write_header(os, header);
            os << "N,seconds\n";
            for (int n = bench_min; n <= bench_max; ++n) {
                const auto u = itf::haar_random_unitary(n, bench_seed);
                const auto start = std::chrono::steady_clock::now();
                volatile double sink = std::abs(itf::permanent(u));
                (void)sink;
                const std::chrono::duration<double> dt =
                    std::chrono::steady_clock::now() - start;
                os << n << ',' << itf::format_double(dt.count()) << "\n";
            }
        }
    } catch (const itf::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
