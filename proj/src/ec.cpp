#include "sspectra/ec.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

#include "sspectra/errors.hpp"

namespace sspectra {

namespace {
constexpr Level kQuad = Level::Quad;
}

Fe j_invariant(const Fq& F, const EllCurve& e) {
    Fe a3 = F.mul(F.mul(e.a, e.a), e.a);
    Fe b2 = F.mul(e.b, e.b);
    Fe four_a3 = F.mul(F.from_int(4, kQuad), a3);
    Fe disc = F.add(four_a3, F.mul(F.from_int(27, kQuad), b2));
    if (F.is_zero(disc)) throw SingularCurve("curve x^3+ax+b has a repeated root");
    return F.div(F.mul(F.from_int(1728, kQuad), four_a3), disc);
}

EllCurve curve_from_j(const Fq& F, const Fe& j) {
    Fe j1728 = F.from_int(1728, kQuad);
    if (F.is_zero(j)) return EllCurve{F.zero(kQuad), F.one(kQuad)};
    if (j == j1728) return EllCurve{F.one(kQuad), F.zero(kQuad)};
    Fe d = F.sub(j1728, j);
    Fe a = F.mul(F.from_int(3, kQuad), F.mul(j, d));
    Fe b = F.mul(F.from_int(2, kQuad), F.mul(j, F.mul(d, d)));
    return EllCurve{a, b};
}

bool is_supersingular(const Fq& F, const EllCurve& e) {
    return is_supersingular_j(F, j_invariant(F, e));
}

bool is_supersingular_j(const Fq& F, const Fe& j) {
    // Need an F_p model; j must lie in the prime field.
    for (int i = 1; i < level_dim(j.level); ++i)
        if (j.c[i] != 0) throw ModelNotRational("j-invariant not in the prime field");
    uint64_t p = F.p();
    Fe jb = F.make(Level::Base, {j.c[0]});
    // Base-level model with the same j.
    uint64_t a, b;
    {
        Fe j1728 = F.from_int(1728, Level::Base);
        if (F.is_zero(jb)) {
            a = 0;
            b = 1;
        } else if (jb == j1728) {
            a = 1;
            b = 0;
        } else {
            Fe d = F.sub(j1728, jb);
            a = F.mul(F.from_int(3, Level::Base), F.mul(jb, d)).c[0];
            b = F.mul(F.from_int(2, Level::Base), F.mul(jb, F.mul(d, d))).c[0];
        }
    }
    // chi(u) = u^((p-1)/2) in {0, 1, p-1}; tabulate squares instead.
    std::vector<int8_t> chi(p, -1);
    chi[0] = 0;
    for (uint64_t u = 1; u < p; ++u) {
        uint64_t sq = (unsigned __int128)u * u % p;
        chi[sq] = 1;
    }
    // #E(F_p) = p + 1 + sum_x chi(x^3 + ax + b); supersingular iff sum = 0.
    long long s = 0;
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t x2 = (unsigned __int128)x * x % p;
        uint64_t x3 = (unsigned __int128)x2 * x % p;
        uint64_t v = (x3 + (unsigned __int128)a * x + b) % p;
        s += chi[v];
    }
    return s == 0;
}

int reduced_automorphism_order_j(const Fq& F, const Fe& j) {
    if (F.is_zero(j)) return 3;
    if (j == F.from_int(1728, kQuad)) return 2;
    return 1;
}

std::vector<Fe> two_torsion_roots(const Fq& F, const EllCurve& e) {
    Poly f = poly_make(F, kQuad, {e.b, e.a, F.zero(kQuad), F.one(kQuad)});
    auto rr = poly_roots(F, f);
    std::vector<Fe> xs;
    for (auto& [r, mult] : rr)
        for (int i = 0; i < mult; ++i) xs.push_back(r);
    if (xs.size() != 3)
        throw NotSupersingular("2-torsion not rational over F_p^2");
    std::sort(xs.begin(), xs.end(),
              [&](const Fe& u, const Fe& v) { return F.cmp(u, v) < 0; });
    return xs;
}

EllCurve velu_step2(const Fq& F, const EllCurve& e, const Fe& x0) {
    Fe t = F.add(F.mul(F.from_int(3, kQuad), F.mul(x0, x0)), e.a);
    Fe w = F.mul(x0, t);
    Fe a2 = F.sub(e.a, F.mul(F.from_int(5, kQuad), t));
    Fe b2 = F.sub(e.b, F.mul(F.from_int(7, kQuad), w));
    return EllCurve{a2, b2};
}

Fe velu_image_x(const Fq& F, const EllCurve& e, const Fe& x0, const Fe& xp) {
    Fe t = F.add(F.mul(F.from_int(3, kQuad), F.mul(x0, x0)), e.a);
    Fe d = F.sub(xp, x0);
    if (F.is_zero(d)) throw DivisionByZero("image of the kernel point");
    return F.add(xp, F.div(t, d));
}

namespace {

// Quotient by the order-3 subgroup whose x-coordinate is x3 (a root of the
// division polynomial); works at any field level.
Fe velu3_j(const Fq& F, Level lvl, const Fe& a, const Fe& b, const Fe& x3) {
    Fe v = F.add(F.mul(F.from_int(6, lvl), F.mul(x3, x3)), F.mul(F.from_int(2, lvl), a));
    Fe fx = F.add(F.mul(x3, F.add(F.mul(x3, x3), a)), b);
    Fe u = F.mul(F.from_int(4, lvl), fx);
    Fe w = F.add(u, F.mul(x3, v));
    Fe a2 = F.sub(a, F.mul(F.from_int(5, lvl), v));
    Fe b2 = F.sub(b, F.mul(F.from_int(7, lvl), w));
    Fe a3 = F.mul(F.mul(a2, a2), a2);
    Fe four_a3 = F.mul(F.from_int(4, lvl), a3);
    Fe disc = F.add(four_a3, F.mul(F.from_int(27, lvl), F.mul(b2, b2)));
    if (F.is_zero(disc)) throw SingularCurve("degenerate 3-isogeny codomain");
    return F.div(F.mul(F.from_int(1728, lvl), four_a3), disc);
}

}  // namespace

std::vector<Fe> isogeny_neighbors(const Fq& F, const EllCurve& e, int ell) {
    std::vector<Fe> out;
    if (ell == 2) {
        for (const Fe& x0 : two_torsion_roots(F, e))
            out.push_back(j_invariant(F, velu_step2(F, e, x0)));
    } else if (ell == 3) {
        // psi_3 = 3x^4 + 6ax^2 + 12bx - a^2.
        Poly psi = poly_make(
            F, kQuad, {F.neg(F.mul(e.a, e.a)), F.mul(F.from_int(12, kQuad), e.b),
                    F.mul(F.from_int(6, kQuad), e.a), F.zero(kQuad),
                    F.from_int(3, kQuad)});
        auto rr = poly_roots(F, psi);
        int found = 0;
        for (auto& [r, mult] : rr) {
            for (int i = 0; i < mult; ++i)
                out.push_back(velu3_j(F, kQuad, e.a, e.b, r));
            found += mult;
        }
        if (found < 4) {
            // The remaining kernel x-coordinates live in F_p^4 and come in
            // Frobenius^2 pairs; each pair gives one isogeny defined over
            // F_p^2 (the two members share a codomain j).
            Poly rem = psi;
            Fe lead = F.from_int(3, kQuad);
            for (auto& [r, mult] : rr)
                for (int i = 0; i < mult; ++i) {
                    Poly lin = poly_make(F, kQuad, {F.neg(r), F.one(kQuad)});
                    auto [q, s] = poly_divrem(F, rem, lin);
                    (void)s;
                    rem = q;
                }
            Poly rem4 = poly_lift(F, rem, Level::Quart);
            auto rr4 = poly_roots(F, rem4);
            Fe a4 = F.lift(e.a, Level::Quart);
            Fe b4 = F.lift(e.b, Level::Quart);
            std::vector<Fe> js;
            for (auto& [r4, mult] : rr4)
                for (int i = 0; i < mult; ++i)
                    js.push_back(velu3_j(F, Level::Quart, a4, b4, r4));
            // Each codomain appears twice (conjugate kernel points); its j
            // must drop to F_p^2.
            std::sort(js.begin(), js.end(),
                      [&](const Fe& u, const Fe& v) { return F.cmp(u, v) < 0; });
            if (js.size() % 2 != 0)
                throw NotSupersingular("unpaired cubic kernel over F_p^4");
            for (size_t i = 0; i < js.size(); i += 2) {
                if (!(js[i] == js[i + 1]))
                    throw NotSupersingular("cubic kernel pair with distinct codomains");
                auto jq = F.drop(js[i], kQuad);
                if (!jq) throw NotSupersingular("3-isogeny codomain j outside F_p^2");
                out.push_back(*jq);
            }
        }
    } else {
        throw IndexOutOfRange("isogeny degree must be 2 or 3");
    }
    if ((int)out.size() != ell + 1)
        throw NotSupersingular("wrong number of isogeny kernels");
    std::sort(out.begin(), out.end(),
              [&](const Fe& u, const Fe& v) { return F.cmp(u, v) < 0; });
    return out;
}

std::string j_key(const Fq& F, const Fe& j) { return "j=" + F.str(j); }

std::vector<JVertex> supersingular_vertices(const Fq& F) {
    // Scan F_p-rational j-invariants by point count...
    std::vector<Fe> pool;
    for (uint64_t j0 = 0; j0 < F.p(); ++j0) {
        Fe j = F.from_int(j0, kQuad);
        if (is_supersingular_j(F, j)) pool.push_back(j);
    }
    // ...then close under 2-isogeny to reach the conjugate pairs in
    // F_p^2 \ F_p (the 2-isogeny graph is connected).
    std::map<Fe, bool> seen;
    for (const Fe& j : pool) seen[j] = true;
    std::vector<Fe> frontier = pool;
    while (!frontier.empty()) {
        std::vector<Fe> next;
        for (const Fe& j : frontier) {
            EllCurve e = curve_from_j(F, j);
            for (const Fe& jn : isogeny_neighbors(F, e, 2)) {
                if (!seen.count(jn)) {
                    seen[jn] = true;
                    next.push_back(jn);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<JVertex> out;
    for (auto& [j, _] : seen)
        out.push_back(JVertex{j, reduced_automorphism_order_j(F, j)});
    std::sort(out.begin(), out.end(), [&](const JVertex& u, const JVertex& v) {
        return F.cmp(u.j, v.j) < 0;
    });
    return out;
}

WeightedMultiGraph build_gr1(const Fq& F, int ell, int threads) {
    if (ell != 2 && ell != 3) throw IndexOutOfRange("isogeny degree must be 2 or 3");
    if (threads < 1) throw IndexOutOfRange("thread count must be positive");

    // Start from the canonically smallest F_p-rational supersingular j.
    Fe start{};
    bool have_start = false;
    for (uint64_t j0 = 0; j0 < F.p() && !have_start; ++j0) {
        Fe j = F.from_int(j0, kQuad);
        if (is_supersingular_j(F, j)) {
            start = j;
            have_start = true;
        }
    }
    if (!have_start) throw NotSupersingular("no supersingular curve over F_p");

    WeightedMultiGraph g;
    g.degree = ell + 1;

    std::map<Fe, int> index;
    std::vector<Fe> order;
    index[start] = 0;
    order.push_back(start);

    // BFS layer by layer; neighbor lists are computed (possibly in
    // parallel) and merged in frontier order so indices are deterministic.
    std::vector<int> frontier{0};
    std::vector<std::vector<Fe>> adj;  // discovered neighbor multisets
    adj.resize(1);

    size_t done = 0;
    while (done < order.size()) {
        std::vector<int> layer;
        for (size_t i = done; i < order.size(); ++i) layer.push_back((int)i);
        done = order.size();

        std::vector<std::vector<Fe>> results(layer.size());
        if (threads == 1 || layer.size() <= 1) {
            for (size_t k = 0; k < layer.size(); ++k)
                results[k] =
                    isogeny_neighbors(F, curve_from_j(F, order[layer[k]]), ell);
        } else {
            std::vector<std::thread> pool;
            std::mutex err_mutex;
            std::exception_ptr first_err;
            size_t nthreads = std::min<size_t>(threads, layer.size());
            for (size_t t = 0; t < nthreads; ++t) {
                pool.emplace_back([&, t]() {
                    for (size_t k = t; k < layer.size(); k += nthreads) {
                        try {
                            results[k] = isogeny_neighbors(
                                F, curve_from_j(F, order[layer[k]]), ell);
                        } catch (...) {
                            std::lock_guard<std::mutex> lock(err_mutex);
                            if (!first_err) first_err = std::current_exception();
                        }
                    }
                });
            }
            for (auto& th : pool) th.join();
            if (first_err) std::rethrow_exception(first_err);
        }

        for (size_t k = 0; k < layer.size(); ++k) {
            adj.resize(std::max(adj.size(), (size_t)layer[k] + 1));
            adj[layer[k]] = results[k];
            for (const Fe& jn : results[k]) {
                if (!index.count(jn)) {
                    index[jn] = (int)order.size();
                    order.push_back(jn);
                }
            }
        }
        adj.resize(order.size());
    }

    int n = (int)order.size();
    for (int i = 0; i < n; ++i) {
        g.keys.push_back(j_key(F, order[i]));
        g.kinds.push_back("elliptic");
        g.ra.push_back(reduced_automorphism_order_j(F, order[i]));
    }
    for (int u = 0; u < n; ++u)
        for (const Fe& jn : adj[u]) g.edges[{u, index.at(jn)}] += 1;
    return g;
}

}  // namespace sspectra
