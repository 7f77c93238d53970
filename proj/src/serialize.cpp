#include "sspectra/serialize.hpp"

#include <cstdio>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace sspectra {
namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

std::string jstr(const std::string& s) { return "\"" + json_escape(s) + "\""; }

std::string jfloat(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string jbool(bool b) { return b ? "true" : "false"; }

// CSV field, quoted when it contains a comma, quote, or newline
std::string csv_field(const std::string& s) {
    bool need = s.find_first_of(",\"\n") != std::string::npos;
    if (!need) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string graph_to_json(const WeightedMultiGraph& g, int genus, long long ell, uint64_t p) {
    std::string out = "{";
    out += "\"degree\":" + std::to_string(g.degree) + ",";
    out += "\"edges\":[";
    bool first = true;
    for (const auto& [e, m] : g.edges) {
        if (!first) out += ",";
        first = false;
        out += "{\"from\":" + std::to_string(e.first) + ",\"mult\":" + std::to_string(m) +
               ",\"to\":" + std::to_string(e.second) + "}";
    }
    out += "],";
    out += "\"g\":" + std::to_string(genus) + ",";
    out += "\"l\":" + std::to_string(ell) + ",";
    out += "\"p\":" + std::to_string(p) + ",";
    out += "\"vertices\":[";
    for (int i = 0; i < g.size(); ++i) {
        if (i) out += ",";
        out += "{\"key\":" + jstr(g.keys[static_cast<size_t>(i)]) +
               ",\"kind\":" + jstr(g.kinds[static_cast<size_t>(i)]) +
               ",\"ra\":" + std::to_string(g.ra[static_cast<size_t>(i)]) + "}";
    }
    out += "]}\n";
    return out;
}

std::string graph_to_dot(const WeightedMultiGraph& g) {
    std::string out = "digraph isogeny {\n";
    for (int i = 0; i < g.size(); ++i) {
        out += "  v" + std::to_string(i) + " [label=" + jstr(g.keys[static_cast<size_t>(i)]) +
               ", kind=" + jstr(g.kinds[static_cast<size_t>(i)]) + "];\n";
    }
    for (const auto& [e, m] : g.edges) {
        out += "  v" + std::to_string(e.first) + " -> v" + std::to_string(e.second) +
               " [label=\"" + std::to_string(m) + "\"];\n";
    }
    out += "}\n";
    return out;
}

std::string graph_to_csv(const WeightedMultiGraph& g) {
    std::string out = "from,to,mult\n";
    for (const auto& [e, m] : g.edges) {
        out += csv_field(g.keys[static_cast<size_t>(e.first)]) + "," +
               csv_field(g.keys[static_cast<size_t>(e.second)]) + "," + std::to_string(m) + "\n";
    }
    return out;
}

LoadedGraph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("graph JSON does not parse: ") + e.what());
    }
    auto need = [&](const char* k) -> const nlohmann::json& {
        if (!j.contains(k)) throw std::invalid_argument(std::string("graph JSON misses ") + k);
        return j.at(k);
    };
    LoadedGraph out;
    if (!need("g").is_number_integer() || !need("l").is_number_integer() ||
        !need("p").is_number_unsigned() || !need("degree").is_number_integer())
        throw std::invalid_argument("graph JSON scalar fields must be integers");
    out.g = j.at("g").get<int>();
    out.ell = j.at("l").get<long long>();
    out.p = j.at("p").get<uint64_t>();
    out.graph.degree = j.at("degree").get<int>();
    const auto& vs = need("vertices");
    const auto& es = need("edges");
    if (!vs.is_array() || !es.is_array())
        throw std::invalid_argument("graph JSON vertices/edges must be arrays");
    for (const auto& v : vs) {
        if (!v.is_object() || !v.contains("key") || !v.contains("kind") || !v.contains("ra") ||
            !v.at("key").is_string() || !v.at("kind").is_string() ||
            !v.at("ra").is_number_integer())
            throw std::invalid_argument("graph JSON vertex entries need key/kind/ra");
        out.graph.keys.push_back(v.at("key").get<std::string>());
        out.graph.kinds.push_back(v.at("kind").get<std::string>());
        out.graph.ra.push_back(v.at("ra").get<int>());
    }
    const int nv = out.graph.size();
    for (const auto& e : es) {
        if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e.contains("mult") ||
            !e.at("from").is_number_integer() || !e.at("to").is_number_integer() ||
            !e.at("mult").is_number_integer())
            throw std::invalid_argument("graph JSON edge entries need from/to/mult");
        int u = e.at("from").get<int>(), v = e.at("to").get<int>();
        long long m = e.at("mult").get<long long>();
        if (u < 0 || u >= nv || v < 0 || v >= nv || m <= 0)
            throw std::invalid_argument("graph JSON edge endpoints or multiplicity out of range");
        out.graph.edges[{u, v}] += m;
    }
    return out;
}

std::string spectral_report_to_json(const SpectralReport& r) {
    std::string out = "{";
    out += "\"conjecture_lower\":" + (r.conjecture_lower ? jfloat(*r.conjecture_lower) : "null");
    out += ",\"conjecture_upper\":" + (r.conjecture_upper ? jfloat(*r.conjecture_upper) : "null");
    out += ",\"eigenvalues\":[";
    for (size_t i = 0; i < r.eigenvalues.size(); ++i) {
        if (i) out += ",";
        out += jfloat(r.eigenvalues[i]);
    }
    out += "]";
    out += ",\"g\":" + std::to_string(r.g);
    out += ",\"kazhdan\":" + (r.kazhdan ? jfloat(*r.kazhdan) : "null");
    out += ",\"kazhdan_pass\":" + jbool(r.kazhdan_pass);
    out += ",\"l\":" + std::to_string(r.ell);
    out += ",\"lambda2\":" + jfloat(r.lambda2);
    out += ",\"lambda_star\":" + jfloat(r.lambda_star);
    out += ",\"mean_abs_nontrivial\":" + jfloat(r.mean_abs_nontrivial);
    out += ",\"p\":" + std::to_string(r.p);
    out += ",\"ramanujan_normalized\":" + jfloat(r.ramanujan_normalized);
    out += ",\"ramanujan_pass\":" + jbool(r.ramanujan_pass);
    out += ",\"reversible\":" + jbool(r.reversible);
    out += ",\"spectral_radius_normalized\":" + jfloat(r.spectral_radius_normalized);
    out += "}\n";
    return out;
}

std::string ball_report_to_json(const BallResult& b, int n, long long ell, int radius) {
    long long edge_total = 0;
    for (const auto& [e, m] : b.graph.edges) edge_total += m;
    std::map<int, long long> hist;
    for (int lab : b.label) hist[lab] += 1;
    std::string out = "{";
    out += "\"bipartite_by_label\":" + jbool(b.bipartite_by_label);
    out += ",\"degree\":" + std::to_string(b.graph.degree);
    out += ",\"edge_count\":" + std::to_string(edge_total);
    out += ",\"expanded\":" + std::to_string(b.expanded);
    out += ",\"interior_regular\":" + jbool(b.interior_regular);
    out += ",\"l\":" + std::to_string(ell);
    out += ",\"label_histogram\":{";
    bool first = true;
    for (const auto& [lab, cnt] : hist) {
        if (!first) out += ",";
        first = false;
        out += jstr(std::to_string(lab)) + ":" + std::to_string(cnt);
    }
    out += "}";
    out += ",\"n\":" + std::to_string(n);
    out += ",\"radius\":" + std::to_string(radius);
    out += ",\"vertex_count\":" + std::to_string(b.graph.size());
    out += "}\n";
    return out;
}

}  // namespace sspectra
