// Command-line front end: graph construction, spectral reports, building
// balls, and hash walks, with canonical JSON/DOT/CSV output.
//
// Exit codes: 0 success, 2 invalid configuration or input, 3 construction
// failure, 4 eigensolver non-convergence.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sspectra/building.hpp"
#include "sspectra/cgl.hpp"
#include "sspectra/ec.hpp"
#include "sspectra/errors.hpp"
#include "sspectra/ff.hpp"
#include "sspectra/g2.hpp"
#include "sspectra/serialize.hpp"
#include "sspectra/spectra.hpp"

namespace {

bool is_prime_u64(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void require_config(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void validate_run(int g, long long ell, uint64_t p) {
    require_config(is_prime_u64(p), "p must be prime");
    require_config(p >= 5, "p must be at least 5");
    require_config(static_cast<long long>(p) != ell, "p must differ from l");
    bool known = (g == 1 && (ell == 2 || ell == 3)) || (g == 2 && ell == 2);
    require_config(known, "supported (g, l) pairs: (1,2), (1,3), (2,2)");
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output path " + out_path);
    f << text;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open graph file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

sspectra::WeightedMultiGraph build_graph(int g, long long ell, uint64_t p, int threads) {
    sspectra::Fq F(p);
    if (g == 1) return sspectra::build_gr1(F, static_cast<int>(ell), threads);
    return sspectra::build_gr2(F, threads).graph;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"superspecial isogeny graphs, their spectra, and hash walks"};
    app.require_subcommand(1);

    int g = 2;
    long long ell = 2;
    uint64_t p = 13;
    int threads = 1;
    int n = 2;
    int radius = 1;
    std::string format = "json";
    std::string out_path;
    std::string graph_file;
    std::string message;

    auto* cmd_graph = app.add_subcommand("graph", "build an isogeny graph and serialize it");
    cmd_graph->add_option("--g", g, "genus (1 or 2)");
    cmd_graph->add_option("--l", ell, "isogeny degree l");
    cmd_graph->add_option("--p", p, "field characteristic p");
    cmd_graph->add_option("--threads", threads, "worker threads (default 1)");
    cmd_graph->add_option("--format", format, "json | dot | csv");
    cmd_graph->add_option("--out", out_path, "output path (default stdout)");

    auto* cmd_spectra = app.add_subcommand("spectra", "spectral report of a graph");
    cmd_spectra->add_option("--g", g, "genus (1 or 2)");
    cmd_spectra->add_option("--l", ell, "isogeny degree l");
    cmd_spectra->add_option("--p", p, "field characteristic p");
    cmd_spectra->add_option("--threads", threads, "worker threads (default 1)");
    cmd_spectra->add_option("--graph-file", graph_file, "load a serialized graph instead");
    cmd_spectra->add_option("--out", out_path, "output path (default stdout)");

    auto* cmd_building = app.add_subcommand("building", "ball report in the special 1-complex");
    cmd_building->add_option("--n", n, "rank n (1..3)");
    cmd_building->add_option("--l", ell, "residue characteristic l (2 or 3)");
    cmd_building->add_option("--radius", radius, "ball radius");
    cmd_building->add_option("--out", out_path, "output path (default stdout)");

    auto* cmd_hash = app.add_subcommand("hash", "message-driven walk digest");
    cmd_hash->add_option("--g", g, "genus (1 or 2)");
    cmd_hash->add_option("--p", p, "field characteristic p");
    cmd_hash->add_option("--message", message, "hex message (default empty)");
    cmd_hash->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_graph->parsed()) {
            validate_run(g, ell, p);
            require_config(threads >= 1, "threads must be positive");
            require_config(format == "json" || format == "dot" || format == "csv",
                           "format must be json, dot, or csv");
            auto graph = build_graph(g, ell, p, threads);
            std::string text;
            if (format == "json")
                text = sspectra::graph_to_json(graph, g, ell, p);
            else if (format == "dot")
                text = sspectra::graph_to_dot(graph);
            else
                text = sspectra::graph_to_csv(graph);
            emit(out_path, text);
        } else if (cmd_spectra->parsed()) {
            sspectra::WeightedMultiGraph graph;
            if (!graph_file.empty()) {
                auto loaded = sspectra::graph_from_json(slurp(graph_file));
                validate_run(loaded.g, loaded.ell, loaded.p);
                g = loaded.g;
                ell = loaded.ell;
                p = loaded.p;
                graph = std::move(loaded.graph);
            } else {
                validate_run(g, ell, p);
                require_config(threads >= 1, "threads must be positive");
                graph = build_graph(g, ell, p, threads);
            }
            auto report = sspectra::spectral_report(graph, g, ell, p);
            emit(out_path, sspectra::spectral_report_to_json(report));
        } else if (cmd_building->parsed()) {
            require_config(n >= 1 && n <= 3, "rank n must lie in 1..3");
            require_config(ell == 2 || ell == 3, "residue characteristic must be 2 or 3");
            require_config(radius >= 0, "radius must be nonnegative");
            auto b = sspectra::ball(sspectra::lattice_standard(n, ell), radius);
            emit(out_path, sspectra::ball_report_to_json(b, n, ell, radius));
        } else if (cmd_hash->parsed()) {
            require_config(is_prime_u64(p) && p >= 5, "p must be a prime at least 5");
            require_config(g == 1 || g == 2, "genus must be 1 or 2");
            auto bits = sspectra::hex_to_bits(message);
            sspectra::Fq F(p);
            std::string line;
            if (g == 1) {
                line = std::to_string(sspectra::cgl1_hash(F, bits));
            } else {
                require_config(bits.size() % 3 == 0,
                               "genus-2 messages need a bit count divisible by 3");
                line = sspectra::cgl2_hash(F, bits);
            }
            emit(out_path, line + "\n");
        }
    } catch (const sspectra::ConvergenceFailure& e) {
        std::cerr << "eigensolver failure: " << e.what() << "\n";
        return 4;
    } catch (const sspectra::BadPrime& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const sspectra::ScaleExceeded& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "construction failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
