#pragma once

// Canonical text serializations: JSON (sorted keys, decimal integers,
// 17-significant-digit floats, newline-terminated), DOT with multiplicity
// edge labels, and CSV edge lists.  Emission is hand-rolled so byte-identical
// output is guaranteed; parsing of graph JSON uses the vendored reader.

#include <cstdint>
#include <string>

#include "sspectra/building.hpp"
#include "sspectra/spectra.hpp"

namespace sspectra {

// {"degree":..,"edges":[{"from":..,"mult":..,"to":..}],"g":..,"l":..,"p":..,
//  "vertices":[{"key":..,"kind":..,"ra":..}]}
std::string graph_to_json(const WeightedMultiGraph& g, int genus, long long ell, uint64_t p);

// Directed DOT graph; each edge carries its multiplicity as the label.
std::string graph_to_dot(const WeightedMultiGraph& g);

// RFC-4180 CSV edge list: header from,to,mult; key fields quoted as needed.
std::string graph_to_csv(const WeightedMultiGraph& g);

struct LoadedGraph {
    WeightedMultiGraph graph;
    int g{0};
    long long ell{0};
    uint64_t p{0};
};

// Inverse of graph_to_json; throws std::invalid_argument on any schema
// violation (missing field, wrong type, index out of range).
LoadedGraph graph_from_json(const std::string& text);

// Spectral report with bound comparisons, sorted keys.
std::string spectral_report_to_json(const SpectralReport& r);

// Ball report: counts, regularity and bipartiteness flags, label histogram.
std::string ball_report_to_json(const BallResult& b, int n, long long ell, int radius);

}  // namespace sspectra
