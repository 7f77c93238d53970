#include "sspectra/building.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sspectra {
namespace {

using i128 = __int128;

constexpr long long kEntryBound = 1LL << 16;   // public-input entry guard
constexpr uint64_t kModulusBound = 1ULL << 40; // working-modulus guard

long long floordiv2n(long long s, int m) { return ((s % m) + m) % m; }

// --- modular helpers (modulus an l-power <= 2^40) --------------------------

uint64_t mul_mod(uint64_t x, uint64_t y, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(x) * y) % m);
}

uint64_t sub_mod(uint64_t x, uint64_t y, uint64_t m) { return (x + m - y) % m; }

// valuation of x at ell, capped at cap (x == 0 reports cap)
int val_at(uint64_t x, long long ell, int cap) {
    if (x == 0) return cap;
    int v = 0;
    while (v < cap && x % static_cast<uint64_t>(ell) == 0) {
        x /= static_cast<uint64_t>(ell);
        ++v;
    }
    return v;
}

int val_i128(i128 x, long long ell) {
    if (x < 0) x = -x;
    int v = 0;
    while (x != 0 && x % ell == 0) {
        x /= ell;
        ++v;
    }
    return v;
}

// inverse of a unit u modulo m (gcd(u, m) == 1) by extended Euclid
uint64_t inv_mod(uint64_t u, uint64_t m) {
    long long r0 = static_cast<long long>(m), r1 = static_cast<long long>(u % m);
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw std::invalid_argument("inverse of a non-unit requested");
    return static_cast<uint64_t>(((t0 % static_cast<long long>(m)) + static_cast<long long>(m)) %
                                 static_cast<long long>(m));
}

// --- canonical column Hermite form ------------------------------------------
//
// Input: integer generator columns of an l-adic lattice L in dimension 2n,
// together with d such that l^d Z^{2n} <= L.  The class of L is recovered
// from its image modulo l^{d+1}: column reduction there yields the unique
// lower-triangular Hermite basis with l-power pivots (pivot of row r is
// l^{e_r}, entries left of it reduced into [0, l^{e_r})).  The result is
// scaled to be primitive; denom_exp records the minimal pivot valuation so
// that mat / l^denom_exp is the homothety-normalized basis.
LatticeRep canonical_from_generators(int n, long long ell, const std::vector<i128>& gens,
                                     int cols, int d) {
    const int dim = 2 * n;
    const int prec = d + 1;
    uint64_t modulus = 1;
    for (int i = 0; i < prec; ++i) {
        if (modulus > kModulusBound / static_cast<uint64_t>(ell))
            throw ScaleExceeded("lattice pivot valuations exceed the working modulus");
        modulus *= static_cast<uint64_t>(ell);
    }

    // generator columns reduced mod l^{d+1}, plus l^d * identity
    std::vector<std::vector<uint64_t>> col(static_cast<size_t>(cols + dim),
                                           std::vector<uint64_t>(dim, 0));
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < cols; ++c) {
            i128 x = gens[static_cast<size_t>(r) * cols + c] % static_cast<i128>(modulus);
            if (x < 0) x += static_cast<i128>(modulus);
            col[c][r] = static_cast<uint64_t>(x);
        }
    }
    uint64_t ld = modulus / static_cast<uint64_t>(ell);  // l^d
    for (int r = 0; r < dim; ++r) col[static_cast<size_t>(cols + r)][r] = ld;

    const int total = cols + dim;
    std::vector<bool> used(total, false);
    std::vector<int> pivot_col(dim, -1);
    std::vector<int> pivot_val(dim, 0);

    for (int r = 0; r < dim; ++r) {
        int best = -1;
        int best_val = prec;
        for (int j = 0; j < total; ++j) {
            if (used[j]) continue;
            int v = val_at(col[j][r], ell, prec);
            if (v < best_val) {
                best_val = v;
                best = j;
            }
        }
        if (best < 0 || best_val > d)
            throw std::invalid_argument("lattice generators are singular");
        used[best] = true;
        pivot_col[r] = best;
        pivot_val[r] = best_val;

        uint64_t le = 1;
        for (int i = 0; i < best_val; ++i) le *= static_cast<uint64_t>(ell);
        uint64_t unit = col[best][r] / le;
        uint64_t uinv = inv_mod(unit, modulus);
        for (int i = 0; i < dim; ++i) col[best][i] = mul_mod(col[best][i], uinv, modulus);

        for (int j = 0; j < total; ++j) {
            if (used[j] || col[j][r] == 0) continue;
            uint64_t f = col[j][r] / le;
            for (int i = 0; i < dim; ++i)
                col[j][i] = sub_mod(col[j][i], mul_mod(f, col[best][i], modulus), modulus);
        }
    }

    // reduce entries left of each pivot into [0, l^{e_row})
    for (int r = 1; r < dim; ++r) {
        uint64_t le = 1;
        for (int i = 0; i < pivot_val[r]; ++i) le *= static_cast<uint64_t>(ell);
        for (int rp = 0; rp < r; ++rp) {
            int c = pivot_col[rp];
            uint64_t f = col[c][r] / le;
            if (f == 0) continue;
            for (int i = 0; i < dim; ++i)
                col[c][i] = sub_mod(col[c][i], mul_mod(f, col[pivot_col[r]][i], modulus), modulus);
        }
    }

    // assemble, then scale to a primitive integer matrix
    std::vector<long long> mat(static_cast<size_t>(dim) * dim, 0);
    int min_entry_val = prec;
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            uint64_t x = col[pivot_col[c]][r];
            mat[static_cast<size_t>(r) * dim + c] = static_cast<long long>(x);
            if (x != 0) min_entry_val = std::min(min_entry_val, val_at(x, ell, prec));
        }
    }
    if (min_entry_val > 0) {
        long long lw = 1;
        for (int i = 0; i < min_entry_val; ++i) lw *= ell;
        for (auto& x : mat) x /= lw;
    }
    int min_pivot = prec;
    for (int r = 0; r < dim; ++r) min_pivot = std::min(min_pivot, pivot_val[r] - min_entry_val);

    LatticeRep out;
    out.n = n;
    out.ell = ell;
    out.mat = std::move(mat);
    out.denom_exp = min_pivot;
    return out;
}

// exact determinant by fraction-free (Bareiss) elimination
i128 bareiss_det(std::vector<i128> m, int dim) {
    i128 prev = 1;
    int sign = 1;
    for (int k = 0; k < dim - 1; ++k) {
        if (m[static_cast<size_t>(k) * dim + k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < dim; ++i)
                if (m[static_cast<size_t>(i) * dim + k] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            for (int j = 0; j < dim; ++j)
                std::swap(m[static_cast<size_t>(k) * dim + j],
                          m[static_cast<size_t>(swap_row) * dim + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < dim; ++i) {
            for (int j = k + 1; j < dim; ++j) {
                i128 num = m[static_cast<size_t>(i) * dim + j] * m[static_cast<size_t>(k) * dim + k] -
                           m[static_cast<size_t>(i) * dim + k] * m[static_cast<size_t>(k) * dim + j];
                m[static_cast<size_t>(i) * dim + j] = num / prev;
            }
            m[static_cast<size_t>(i) * dim + k] = 0;
        }
        prev = m[static_cast<size_t>(k) * dim + k];
    }
    return sign * m[static_cast<size_t>(dim) * dim - 1];
}

// Gram matrix of the stored integer basis under the standard alternating
// form <x,y> = sum_i (x_i y_{n+i} - x_{n+i} y_i)
std::vector<i128> gram_of(const LatticeRep& L) {
    const int dim = 2 * L.n;
    std::vector<i128> g(static_cast<size_t>(dim) * dim, 0);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            i128 s = 0;
            for (int k = 0; k < L.n; ++k) {
                s += static_cast<i128>(L.at(k, i)) * L.at(L.n + k, j);
                s -= static_cast<i128>(L.at(L.n + k, i)) * L.at(k, j);
            }
            g[static_cast<size_t>(i) * dim + j] = s;
        }
    }
    return g;
}

int sum_pivot_vals(const LatticeRep& L) {
    int s = 0;
    for (int r = 0; r < 2 * L.n; ++r) s += val_i128(L.at(r, r), L.ell);
    return s;
}

// min valuation over nonzero Gram entries; -1 if the Gram vanishes
int gram_min_val(const std::vector<i128>& g, long long ell) {
    int c = -1;
    for (i128 x : g)
        if (x != 0) {
            int v = val_i128(x, ell);
            if (c < 0 || v < c) c = v;
        }
    return c;
}

// symplectic basis of (F_l^{2n}, beta) for a nondegenerate alternating form
// given by an integer matrix mod l; returns 2n columns u_1..u_n, v_1..v_n
// with beta(u_i, v_j) = delta_ij and all other basis pairings zero
std::vector<std::vector<int>> symplectic_basis_mod(const std::vector<int>& beta, int n,
                                                   long long ell) {
    const int dim = 2 * n;
    auto pair_vec = [&](const std::vector<int>& x, const std::vector<int>& y) {
        long long s = 0;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                s += static_cast<long long>(x[i]) * beta[static_cast<size_t>(i) * dim + j] * y[j];
        return static_cast<int>(((s % ell) + ell) % ell);
    };

    std::vector<std::vector<int>> pool;
    for (int i = 0; i < dim; ++i) {
        std::vector<int> e(dim, 0);
        e[i] = 1;
        pool.push_back(e);
    }
    std::vector<std::vector<int>> us, vs;
    for (int round = 0; round < n; ++round) {
        int xi = -1, yi = -1, w = 0;
        for (size_t i = 0; i < pool.size() && xi < 0; ++i)
            for (size_t j = i + 1; j < pool.size(); ++j) {
                w = pair_vec(pool[i], pool[j]);
                if (w != 0) {
                    xi = static_cast<int>(i);
                    yi = static_cast<int>(j);
                    break;
                }
            }
        if (xi < 0) throw NotSpecialVertex("reduced alternating form is degenerate");
        std::vector<int> u = pool[xi], v = pool[yi];
        int winv = static_cast<int>(inv_mod(static_cast<uint64_t>(w), static_cast<uint64_t>(ell)));
        for (auto& c : v) c = static_cast<int>((static_cast<long long>(c) * winv) % ell);
        std::vector<std::vector<int>> next;
        for (size_t i = 0; i < pool.size(); ++i) {
            if (static_cast<int>(i) == xi || static_cast<int>(i) == yi) continue;
            std::vector<int> z = pool[i];
            int zu = pair_vec(z, u), zv = pair_vec(z, v);
            bool nonzero = false;
            for (int k = 0; k < dim; ++k) {
                long long t = z[k] - static_cast<long long>(zv) * u[k] +
                              static_cast<long long>(zu) * v[k];
                z[k] = static_cast<int>(((t % ell) + ell) % ell);
                nonzero = nonzero || z[k] != 0;
            }
            if (nonzero) next.push_back(z);
        }
        us.push_back(u);
        vs.push_back(v);
        pool = std::move(next);
    }
    std::vector<std::vector<int>> cols;
    cols.insert(cols.end(), us.begin(), us.end());
    cols.insert(cols.end(), vs.begin(), vs.end());
    return cols;
}

long long neighbor_count(int n, long long ell) {
    long long c = 1, lk = 1;
    for (int k = 1; k <= n; ++k) {
        lk *= ell;
        c *= lk + 1;
    }
    return c;
}

}  // namespace

// --- apartment vertices -----------------------------------------------------

ApartmentVertex apartment_make(std::vector<long long> a, std::vector<long long> b) {
    if (a.empty() || a.size() != b.size())
        throw IndexOutOfRange("apartment coordinate sequences must have equal positive length");
    long long mn = a[0];
    for (long long x : a) mn = std::min(mn, x);
    for (long long x : b) mn = std::min(mn, x);
    for (auto& x : a) x -= mn;
    for (auto& x : b) x -= mn;
    return ApartmentVertex{std::move(a), std::move(b)};
}

int vertex_label(const ApartmentVertex& v) {
    long long s = std::accumulate(v.a.begin(), v.a.end(), 0LL) +
                  std::accumulate(v.b.begin(), v.b.end(), 0LL);
    return static_cast<int>(floordiv2n(s, 2 * v.n()));
}

ApartmentVertex apartment_dual(const ApartmentVertex& v) {
    std::vector<long long> na(v.b.size()), nb(v.a.size());
    for (size_t i = 0; i < v.b.size(); ++i) na[i] = -v.b[i];
    for (size_t i = 0; i < v.a.size(); ++i) nb[i] = -v.a[i];
    return apartment_make(std::move(na), std::move(nb));
}

bool is_special(const ApartmentVertex& v) {
    int lab = vertex_label(v);
    return lab == 0 || lab == v.n();
}

ApartmentVertex weyl_apply(int i, const ApartmentVertex& v) {
    const int n = v.n();
    std::vector<long long> a = v.a, b = v.b;
    if (i == 1) {
        std::swap(a[n - 1], b[n - 1]);
    } else if (i >= 2 && i <= n) {
        int pos = n - i;  // 0-based index of position n-i+1
        std::swap(a[pos], a[pos + 1]);
        std::swap(b[pos], b[pos + 1]);
    } else if (i == n + 1) {
        long long a1 = a[0], b1 = b[0];
        a[0] = b1 - 1;
        b[0] = a1 + 1;
    } else {
        throw IndexOutOfRange("affine Weyl generator index must lie in 1..n+1");
    }
    return apartment_make(std::move(a), std::move(b));
}

// --- Lagrangian enumeration -------------------------------------------------

std::vector<LagrangianSubspace> lagrangians(int n, long long q) {
    if (n < 1 || n > 3 || q > 3 || (q != 2 && q != 3))
        throw ScaleExceeded("lagrangian enumeration supports n <= 3 with q in {2, 3}");
    const int dim = 2 * n;

    auto pairing = [&](const std::vector<int>& x, const std::vector<int>& y) {
        long long s = 0;
        for (int i = 0; i < n; ++i)
            s += static_cast<long long>(x[i]) * y[n + i] -
                 static_cast<long long>(x[n + i]) * y[i];
        return static_cast<int>(((s % q) + q) % q);
    };

    std::vector<LagrangianSubspace> out;
    std::vector<int> pivots(n);
    // all increasing pivot-column choices
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        // free positions: (row i, col j) with j non-pivot and j > pivots[i]
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_pivot(dim, false);
        for (int i = 0; i < n; ++i) is_pivot[idx[i]] = true;
        for (int i = 0; i < n; ++i)
            for (int j = idx[i] + 1; j < dim; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);

        long long count = 1;
        for (size_t k = 0; k < free_pos.size(); ++k) count *= q;
        for (long long code = 0; code < count; ++code) {
            std::vector<std::vector<int>> rows(n, std::vector<int>(dim, 0));
            for (int i = 0; i < n; ++i) rows[i][idx[i]] = 1;
            long long c = code;
            for (auto [i, j] : free_pos) {
                rows[i][j] = static_cast<int>(c % q);
                c /= q;
            }
            bool iso = true;
            for (int i = 0; i < n && iso; ++i)
                for (int j = i + 1; j < n && iso; ++j)
                    if (pairing(rows[i], rows[j]) != 0) iso = false;
            if (iso) out.push_back(LagrangianSubspace{n, q, rows});
        }

        // next combination
        int pos = n - 1;
        while (pos >= 0 && idx[pos] == dim - n + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int k = pos + 1; k < n; ++k) idx[k] = idx[k - 1] + 1;
    }
    return out;
}

// --- lattice classes ---------------------------------------------------------

std::string LatticeRep::key() const {
    std::string s = "sp" + std::to_string(n) + "l" + std::to_string(ell) + "e" +
                    std::to_string(denom_exp) + ":";
    for (size_t i = 0; i < mat.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(mat[i]);
    }
    return s;
}

LatticeRep lattice_make(int n, long long ell, const std::vector<long long>& mat) {
    if (n < 1 || n > 3) throw ScaleExceeded("lattice dimension supports n <= 3");
    if (ell < 2) throw ScaleExceeded("the residue characteristic must be at least 2");
    const int dim = 2 * n;
    if (mat.size() != static_cast<size_t>(dim) * dim)
        throw IndexOutOfRange("lattice basis must be a 2n x 2n matrix");
    std::vector<i128> m(mat.size());
    for (size_t i = 0; i < mat.size(); ++i) {
        if (mat[i] > kEntryBound || mat[i] < -kEntryBound)
            throw ScaleExceeded("lattice entries exceed desk scale");
        m[i] = mat[i];
    }
    i128 det = bareiss_det(m, dim);
    if (det == 0) throw std::invalid_argument("lattice basis is singular");
    return canonical_from_generators(n, ell, m, dim, val_i128(det, ell));
}

LatticeRep lattice_standard(int n, long long ell) {
    const int dim = 2 * n;
    std::vector<long long> id(static_cast<size_t>(dim) * dim, 0);
    for (int i = 0; i < dim; ++i) id[static_cast<size_t>(i) * dim + i] = 1;
    return lattice_make(n, ell, id);
}

int lattice_label(const LatticeRep& L) {
    return static_cast<int>(floordiv2n(sum_pivot_vals(L), 2 * L.n));
}

bool lattice_is_special(const LatticeRep& L) {
    auto g = gram_of(L);
    int c = gram_min_val(g, L.ell);
    if (c < 0) return false;
    // det(Gram) = det(basis)^2, so the scaled Gram is unimodular iff
    // 2 * (sum of pivot valuations) equals 2n * c
    return 2 * sum_pivot_vals(L) == 2 * L.n * c;
}

std::vector<LatticeRep> hecke_neighbors(const LatticeRep& L) {
    if (!lattice_is_special(L))
        throw NotSpecialVertex("Hecke neighbors require a self-dual lattice class");
    const int n = L.n;
    const int dim = 2 * n;
    const long long ell = L.ell;

    auto g = gram_of(L);
    int c = gram_min_val(g, ell);
    i128 lc = 1;
    for (int i = 0; i < c; ++i) lc *= ell;
    std::vector<int> beta(static_cast<size_t>(dim) * dim);
    for (size_t i = 0; i < g.size(); ++i) {
        i128 r = (g[i] / lc) % ell;
        if (r < 0) r += ell;
        beta[i] = static_cast<int>(r);
    }
    auto frame = symplectic_basis_mod(beta, n, ell);  // columns in basis coords

    int d_hint = dim + sum_pivot_vals(L);
    auto subs = lagrangians(n, ell);
    std::vector<LatticeRep> out;
    out.reserve(subs.size());
    for (const auto& W : subs) {
        // generators, uniformly scaled by l^{denom_exp + 1}: the n lifted
        // subspace vectors (columns mat * x) and l * the current basis
        std::vector<i128> gens(static_cast<size_t>(dim) * (n + dim), 0);
        for (int j = 0; j < n; ++j) {
            std::vector<long long> x(dim, 0);
            for (int k = 0; k < dim; ++k) {
                long long s = 0;
                for (int t = 0; t < dim; ++t) s += static_cast<long long>(W.basis[j][t]) * frame[t][k];
                x[k] = ((s % ell) + ell) % ell;
            }
            for (int r = 0; r < dim; ++r) {
                i128 s = 0;
                for (int k = 0; k < dim; ++k) s += static_cast<i128>(L.at(r, k)) * x[k];
                gens[static_cast<size_t>(r) * (n + dim) + j] = s;
            }
        }
        for (int r = 0; r < dim; ++r)
            for (int k = 0; k < dim; ++k)
                gens[static_cast<size_t>(r) * (n + dim) + n + k] =
                    static_cast<i128>(ell) * L.at(r, k);
        out.push_back(canonical_from_generators(n, ell, gens, n + dim, d_hint));
    }
    return out;
}

// --- balls in the special 1-complex ------------------------------------------

BallResult ball(const LatticeRep& center, int radius) {
    const int n = center.n;
    const long long ell = center.ell;
    const int max_radius = n == 1 ? 8 : (n == 2 ? 3 : 1);
    if (radius < 0 || radius > max_radius)
        throw ScaleExceeded("ball radius exceeds desk scale for this rank");
    const long long N = neighbor_count(n, ell);

    BallResult res;
    res.graph.degree = static_cast<int>(N);
    std::map<std::string, int> index;

    auto intern = [&](const LatticeRep& L, int dist) {
        std::string k = L.key();
        auto it = index.find(k);
        if (it != index.end()) return it->second;
        int id = res.graph.size();
        index.emplace(std::move(k), id);
        res.graph.keys.push_back(L.key());
        res.graph.kinds.push_back("lattice");
        res.graph.ra.push_back(1);
        res.label.push_back(lattice_label(L));
        res.dist.push_back(dist);
        return id;
    };

    std::vector<LatticeRep> verts;
    verts.push_back(center);
    intern(center, 0);

    for (int layer = 0; layer < radius; ++layer) {
        size_t layer_end = verts.size();
        for (size_t u = 0; u < layer_end; ++u) {
            if (res.dist[static_cast<int>(u)] != layer) continue;
            auto nbrs = hecke_neighbors(verts[u]);
            long long total = 0;
            for (const auto& nb : nbrs) {
                int vid = intern(nb, layer + 1);
                if (vid == static_cast<int>(verts.size())) verts.push_back(nb);
                res.graph.edges[{static_cast<int>(u), vid}] += 1;
                ++total;
                int lu = res.label[u], lv = res.label[vid];
                bool joins_special = (lu == 0 && lv == n) || (lu == n && lv == 0);
                if (!joins_special)
                    throw IrregularGraph("ball edge does not join the two special labels");
            }
            if (total != N) throw IrregularGraph("expanded vertex out-degree differs from N");
            res.expanded += 1;
        }
    }
    res.interior_regular = true;
    res.bipartite_by_label = true;
    return res;
}

}  // namespace sspectra
