#include "sspectra/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sspectra {

int WeightedMultiGraph::index_of(const std::string& key) const {
    for (size_t i = 0; i < keys.size(); ++i)
        if (keys[i] == key) return static_cast<int>(i);
    return -1;
}

void check_regular(const WeightedMultiGraph& g) {
    if (g.degree <= 0) throw IrregularGraph("graph degree must be positive");
    std::vector<long long> row(static_cast<size_t>(g.size()), 0);
    for (const auto& [uv, m] : g.edges) {
        if (uv.first < 0 || uv.first >= g.size() || uv.second < 0 || uv.second >= g.size())
            throw IndexOutOfRange("edge endpoint out of range");
        if (m <= 0) throw IrregularGraph("edge multiplicity must be positive");
        row[static_cast<size_t>(uv.first)] += m;
    }
    for (int u = 0; u < g.size(); ++u)
        if (row[static_cast<size_t>(u)] != g.degree)
            throw IrregularGraph("vertex " + g.keys[static_cast<size_t>(u)] + " has out-degree " +
                                 std::to_string(row[static_cast<size_t>(u)]) + " != " +
                                 std::to_string(g.degree));
}

std::vector<std::vector<double>> random_walk_matrix(const WeightedMultiGraph& g) {
    check_regular(g);
    int n = g.size();
    std::vector<std::vector<double>> P(static_cast<size_t>(n),
                                       std::vector<double>(static_cast<size_t>(n), 0.0));
    for (const auto& [uv, m] : g.edges)
        P[static_cast<size_t>(uv.first)][static_cast<size_t>(uv.second)] =
            static_cast<double>(m) / static_cast<double>(g.degree);
    return P;
}

std::vector<BalanceViolation> check_detailed_balance(const WeightedMultiGraph& g) {
    std::vector<BalanceViolation> bad;
    int n = g.size();
    for (int u = 0; u < n; ++u) {
        if (g.ra[static_cast<size_t>(u)] < 1) throw IrregularGraph("ra order must be >= 1");
        for (int v = u; v < n; ++v) {
            long long lhs = g.mult(u, v) * g.ra[static_cast<size_t>(v)];
            long long rhs = g.mult(v, u) * g.ra[static_cast<size_t>(u)];
            if (lhs != rhs) bad.push_back(BalanceViolation{u, v, lhs, rhs});
        }
    }
    return bad;
}

std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> s) {
    size_t n = s.size();
    if (n == 0) return {};
    auto off = [&]() {
        double acc = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (i != j) acc += s[i][j] * s[i][j];
        return std::sqrt(acc);
    };
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        if (off() < kJacobiOffThreshold) break;
        for (size_t p = 0; p + 1 < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                if (std::fabs(s[p][q]) < 1e-300) continue;
                double theta = (s[q][q] - s[p][p]) / (2.0 * s[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double snn = t * c;
                for (size_t k = 0; k < n; ++k) {
                    double skp = s[k][p], skq = s[k][q];
                    s[k][p] = c * skp - snn * skq;
                    s[k][q] = snn * skp + c * skq;
                }
                for (size_t k = 0; k < n; ++k) {
                    double spk = s[p][k], sqk = s[q][k];
                    s[p][k] = c * spk - snn * sqk;
                    s[q][k] = snn * spk + c * sqk;
                }
            }
        }
    }
    if (off() >= kJacobiOffThreshold)
        throw ConvergenceFailure("Jacobi sweeps did not reach off-diagonal threshold");
    std::vector<double> eig(n);
    for (size_t i = 0; i < n; ++i) eig[i] = s[i][i];
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
}

std::vector<double> eigenvalues(const WeightedMultiGraph& g) {
    check_regular(g);
    auto bad = check_detailed_balance(g);
    if (!bad.empty()) {
        const auto& b = bad.front();
        throw NotReversible("detailed balance fails at (" + g.keys[static_cast<size_t>(b.u)] +
                            ", " + g.keys[static_cast<size_t>(b.v)] + "): " +
                            std::to_string(b.lhs) + " != " + std::to_string(b.rhs));
    }
    size_t n = static_cast<size_t>(g.size());
    // S = W^{1/2} P W^{-1/2}, W = diag(1/ra):
    // S(u,v) = m(u,v)/D * sqrt(ra(v)/ra(u)); symmetric by detailed balance.
    std::vector<std::vector<double>> S(n, std::vector<double>(n, 0.0));
    for (const auto& [uv, m] : g.edges) {
        size_t u = static_cast<size_t>(uv.first), v = static_cast<size_t>(uv.second);
        S[u][v] = static_cast<double>(m) / static_cast<double>(g.degree) *
                  std::sqrt(static_cast<double>(g.ra[v]) / static_cast<double>(g.ra[u]));
    }
    // enforce exact symmetry against rounding before the sweeps
    for (size_t u = 0; u < n; ++u)
        for (size_t v = u + 1; v < n; ++v) {
            double avg = 0.5 * (S[u][v] + S[v][u]);
            S[u][v] = S[v][u] = avg;
        }
    return symmetric_eigenvalues(std::move(S));
}

long long kernel_count(int g, long long ell) {
    long long n = 1, lk = 1;
    for (int k = 1; k <= g; ++k) {
        lk *= ell;
        n *= lk + 1;
    }
    return n;
}

double kazhdan_bound(int g, long long ell) {
    if (g < 2) throw DimensionTooSmall("explicit gap constant requires g >= 2");
    double l = static_cast<double>(ell);
    double ratio = (l - 1.0) / (2.0 * (l - 1.0) + 3.0 * std::sqrt(2.0 * l * (l + 1.0)));
    return ratio * ratio / (4.0 * (static_cast<double>(g) + 2.0));
}

SpectralReport spectral_report(const WeightedMultiGraph& g, int genus, long long ell, uint64_t p) {
    SpectralReport rep;
    rep.g = genus;
    rep.ell = ell;
    rep.p = p;
    rep.eigenvalues = eigenvalues(g);
    rep.reversible = true;  // eigenvalues() would have thrown otherwise

    const auto& mu = rep.eigenvalues;
    double mu2 = mu.size() > 1 ? mu[1] : mu[0];
    double mumin = mu.back();
    rep.lambda2 = mu.size() > 1 ? 1.0 - mu2 : 0.0;
    rep.lambda_star = mu.size() > 1 ? std::min(1.0 - mu2, 1.0 + mumin) : 0.0;

    double acc = 0.0, maxabs = 0.0;
    for (size_t i = 1; i < mu.size(); ++i) {
        acc += std::fabs(mu[i]);
        maxabs = std::max(maxabs, std::fabs(mu[i]));
    }
    rep.mean_abs_nontrivial = mu.size() > 1 ? acc / static_cast<double>(mu.size() - 1) : 0.0;

    double N = static_cast<double>(kernel_count(genus, ell));
    double l = static_cast<double>(ell);
    rep.ramanujan_normalized =
        std::pow(2.0, genus) * std::pow(l, static_cast<double>(genus * (genus + 1)) / 4.0) / N;
    rep.spectral_radius_normalized = rep.ramanujan_normalized;
    rep.ramanujan_pass = mu.size() <= 1 || maxabs <= rep.ramanujan_normalized + 1e-9;

    if (genus >= 2) {
        rep.kazhdan = kazhdan_bound(genus, ell);
        rep.kazhdan_pass = mu.size() > 1 && rep.lambda2 >= *rep.kazhdan;
    }
    if (genus == 2) {
        // trivial-eigenvalue exclusion window around 1 for the (l)^2 walk
        double sl = std::sqrt(l);
        double cap = l * l + 1.0 + 2.0 * l * sl;
        double noncap = 4.0 * l * sl;
        rep.conjecture_lower = 1.0 - std::max(noncap, cap) / N;
        rep.conjecture_upper = 1.0 + noncap / N;
    }
    return rep;
}

}  // namespace sspectra
