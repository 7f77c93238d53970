#pragma once

// Weighted multigraph container for the regular isogeny graphs, the
// automorphism-weighted random-walk operator, and its spectrum.
//
// Every graph handled here is D-out-regular with integer edge
// multiplicities m(u,v).  The walk matrix is P(u,v) = m(u,v)/D (exact
// rationals with common denominator D).  Each vertex carries the order
// ra(v) >= 1 of its reduced automorphism group; the walk is reversible
// with respect to the measure w(v) = 1/ra(v), which holds iff
//     m(u,v) * ra(v) == m(v,u) * ra(u)   for all u, v  (integer identity).
// Under that identity S = W^{1/2} P W^{-1/2} (W = diag(w)) is symmetric and
// is diagonalized with cyclic Jacobi rotations.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sspectra/errors.hpp"

namespace sspectra {

struct WeightedMultiGraph {
    int degree{0};                  // uniform out-degree D
    std::vector<std::string> keys;  // canonical vertex tokens
    std::vector<std::string> kinds; // "elliptic" | "jacobian" | "product" | ""
    std::vector<int> ra;            // reduced automorphism orders, >= 1
    std::map<std::pair<int, int>, long long> edges;  // (u,v) -> multiplicity

    int size() const { return static_cast<int>(keys.size()); }
    long long mult(int u, int v) const {
        auto it = edges.find({u, v});
        return it == edges.end() ? 0 : it->second;
    }
    // index of a key, -1 if absent
    int index_of(const std::string& key) const;
};

// Throws IrregularGraph unless every row's multiplicities sum to D.
void check_regular(const WeightedMultiGraph& g);

// Row-stochastic walk matrix as floats; the rational row sums are verified
// exactly (sum_v m(u,v) == D) before any conversion.
std::vector<std::vector<double>> random_walk_matrix(const WeightedMultiGraph& g);

struct BalanceViolation {
    int u{0};
    int v{0};
    long long lhs{0};  // m(u,v) * ra(v)
    long long rhs{0};  // m(v,u) * ra(u)
};

// Exact detailed-balance check of m(u,v)/ra(u) ~ m(v,u)/ra(v); empty result
// means the walk is reversible w.r.t. 1/ra.
std::vector<BalanceViolation> check_detailed_balance(const WeightedMultiGraph& g);

// Eigenvalues of the symmetrized walk operator, descending.  Throws
// NotReversible if detailed balance fails, ConvergenceFailure if the Jacobi
// sweeps do not reach the off-diagonal threshold.
std::vector<double> eigenvalues(const WeightedMultiGraph& g);

// Internal knobs of the Jacobi solver, exposed for tests.
inline constexpr double kJacobiOffThreshold = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

// Jacobi diagonalization of a symmetric matrix; returns eigenvalues
// descending.  Used by eigenvalues(); exposed for direct spectral work.
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> s);

// Number of (l)^g-isogeny kernels: prod_{k=1..g} (l^k + 1).
long long kernel_count(int g, long long ell);

// Explicit spectral-gap constant c_{g,l}; throws DimensionTooSmall for g < 2.
double kazhdan_bound(int g, long long ell);

struct SpectralReport {
    int g{0};
    long long ell{0};
    uint64_t p{0};
    std::vector<double> eigenvalues;  // descending, normalized (mu_1 = 1)
    double lambda2{0};                // 1 - mu_2
    double lambda_star{0};            // min(1 - mu_2, 1 + mu_min)
    double mean_abs_nontrivial{0};    // mean |mu_i|, i >= 2
    std::optional<double> kazhdan;    // c_{g,l}, g >= 2 only
    double ramanujan_normalized{0};   // 2^g l^{g(g+1)/4} / N_g(l)
    double spectral_radius_normalized{0};
    std::optional<double> conjecture_lower;  // g = 2 only
    std::optional<double> conjecture_upper;  // g = 2 only
    bool reversible{false};
    bool kazhdan_pass{false};     // lambda2 >= kazhdan (when applicable)
    bool ramanujan_pass{false};   // max_{i>=2} |mu_i| <= ramanujan_normalized + 1e-9
};

SpectralReport spectral_report(const WeightedMultiGraph& g, int genus, long long ell, uint64_t p);

}  // namespace sspectra
