#include "sspectra/g2.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

#include "sspectra/errors.hpp"

namespace sspectra {

namespace {

constexpr Level kQuad = Level::Quad;
constexpr Level kQuart = Level::Quart;

Poly sextic_poly(const Fq& F, const Sextic& f) {
    std::vector<Fe> cs(f.c.begin(), f.c.end());
    return poly_make(F, kQuad, cs);
}

// The 15 ways to pair up {0..5}: always pair the smallest free index first.
std::vector<std::array<std::pair<int, int>, 3>> six_point_pairings() {
    std::vector<std::array<std::pair<int, int>, 3>> out;
    std::array<std::pair<int, int>, 3> cur{};
    bool used[6] = {};
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == 3) {
            out.push_back(cur);
            return;
        }
        int a = 0;
        while (used[a]) ++a;
        used[a] = true;
        for (int b = a + 1; b < 6; ++b) {
            if (used[b]) continue;
            used[b] = true;
            cur[depth] = {a, b};
            self(self, depth + 1);
            used[b] = false;
        }
        used[a] = false;
    };
    rec(rec, 0);
    return out;
}

// Projective equality on P^1.
bool same_point(const Fq& F, const ProjRoot& a, const ProjRoot& b) {
    return F.is_zero(F.sub(F.mul(a.u, b.v), F.mul(b.u, a.v)));
}

// Monic factor of f covering one root pair, at quart level:
// {r, s} -> x^2 - (r+s)x + rs; {r, infinity} -> x - r.
Poly pair_factor_quart(const Fq& F, const ProjRoot& a, const ProjRoot& b) {
    if (a.infinite && b.infinite)
        throw SingularCurve("two roots at infinity");
    if (b.infinite)
        return poly_make(F, kQuart, {F.neg(a.u), F.one(kQuart)});
    if (a.infinite)
        return poly_make(F, kQuart, {F.neg(b.u), F.one(kQuart)});
    return poly_make(F, kQuart,
                     {F.mul(a.u, b.u), F.neg(F.add(a.u, b.u)), F.one(kQuart)});
}

// Wronskian-style bracket g' h - g h' of two factors of degree <= 2; the
// cubic terms cancel, so the result has degree <= 2.
Poly factor_bracket(const Fq& F, const Poly& g, const Poly& h) {
    return poly_sub(F, poly_mul(F, poly_derivative(F, g), h),
                    poly_mul(F, g, poly_derivative(F, h)));
}

Fe det3(const Fq& F, const std::array<std::array<Fe, 3>, 3>& m) {
    Fe t0 = F.mul(m[0][0], F.sub(F.mul(m[1][1], m[2][2]), F.mul(m[1][2], m[2][1])));
    Fe t1 = F.mul(m[0][1], F.sub(F.mul(m[1][0], m[2][2]), F.mul(m[1][2], m[2][0])));
    Fe t2 = F.mul(m[0][2], F.sub(F.mul(m[1][0], m[2][1]), F.mul(m[1][1], m[2][0])));
    return F.add(F.sub(t0, t1), t2);
}

// j-invariant of y^2 = cubic(T) at quart level (the leading coefficient is
// a quadratic twist, so it is scaled away).
Fe j_from_cubic(const Fq& F, const Poly& cubic) {
    if (poly_deg(cubic) != 3) throw SingularCurve("elliptic factor is not a cubic");
    Poly m = poly_monic(F, cubic);
    Fe e2 = poly_coeff(F, m, 2);
    Fe e1 = poly_coeff(F, m, 1);
    Fe e0 = poly_coeff(F, m, 0);
    Fe third = F.inv(F.from_int(3, kQuart));
    Fe e2o3 = F.mul(e2, third);
    Fe a = F.sub(e1, F.mul(e2, e2o3));
    Fe b = F.add(F.sub(F.mul(F.mul(e2o3, e2o3), F.mul(e2o3, F.from_int(2, kQuart))),
                       F.mul(e2o3, e1)),
                 e0);
    Fe a3 = F.mul(F.mul(a, a), a);
    Fe four_a3 = F.mul(F.from_int(4, kQuart), a3);
    Fe disc = F.add(four_a3, F.mul(F.from_int(27, kQuart), F.mul(b, b)));
    if (F.is_zero(disc)) throw SingularCurve("elliptic factor has a repeated root");
    return F.div(F.mul(F.from_int(1728, kQuart), four_a3), disc);
}

Fe drop_or_throw(const Fq& F, const Fe& a, const char* what) {
    auto d = F.drop(a, kQuad);
    if (!d) throw SplittingNotRational(what);
    return *d;
}

// Normalize an elliptic model so its p^2-power Frobenius acts as the scalar
// -p (trace -2p).  All two-division data of two such models glue to a model
// whose own two-division data stays rational, which the walk relies on.
// The sign is read off a three-division point (x0, y0): the scalar e acts on
// it as multiplication by e*p mod 3, so the point is rational (f(x0) square)
// iff e*p = 1 mod 3.  A quadratic twist flips the sign.
EllCurve normalize_trace(const Fq& F, EllCurve e) {
    Fe a = e.a, b = e.b;
    // x-coordinates of order-3 points: 3x^4 + 6ax^2 + 12bx - a^2
    Poly psi3 = poly_make(
        F, kQuad,
        {F.neg(F.mul(a, a)), F.mul(F.from_int(12, kQuad), b),
         F.mul(F.from_int(6, kQuad), a), F.zero(kQuad), F.from_int(3, kQuad)});
    auto rr = poly_roots(F, psi3);
    if (rr.empty()) throw NotSupersingular("order-3 locus is irrational");
    Fe x0 = rr[0].first;
    Fe fx0 = F.add(F.mul(x0, F.add(F.mul(x0, x0), a)), b);
    bool want_square = (F.p() % 3 == 2);
    if (F.is_square(fx0) != want_square) {
        Fe d = F.quad_nonsquare();
        Fe d2 = F.mul(d, d);
        e.a = F.mul(a, d2);
        e.b = F.mul(b, F.mul(d2, d));
    }
    return e;
}

int product_ra(const Fq& F, const Fe& j1, const Fe& j2) {
    int aut1 = 2 * reduced_automorphism_order_j(F, j1);
    int aut2 = 2 * reduced_automorphism_order_j(F, j2);
    int ra = aut1 * aut2 / 2;
    if (j1 == j2) ra *= 2;
    return ra;
}

// Canonical product model/vertex for an unordered pair of j-invariants.
StepResult product_step(const Fq& F, Fe j1, Fe j2) {
    if (F.cmp(j2, j1) < 0) std::swap(j1, j2);
    StepResult r;
    r.vertex = G2Vertex{"product", product_key(F, j1, j2), product_ra(F, j1, j2)};
    r.model = std::make_pair(normalize_trace(F, curve_from_j(F, j1)),
                             normalize_trace(F, curve_from_j(F, j2)));
    r.has_dual = false;
    return r;
}

// Kernel pairing of a Jacobian codomain: which codomain roots each monic
// factor (quart level) vanishes at.
std::array<std::pair<int, int>, 3> locate_dual_pairs(
    const Fq& F, const std::vector<ProjRoot>& roots,
    const std::array<Poly, 3>& factors_quart) {
    std::array<std::pair<int, int>, 3> out{};
    bool taken[6] = {};
    for (int i = 0; i < 3; ++i) {
        std::vector<int> hit;
        const Poly& h = factors_quart[i];
        for (int k = 0; k < 6; ++k) {
            if (taken[k]) continue;
            bool vanish = roots[k].infinite ? (poly_deg(h) < 2)
                                            : F.is_zero(poly_eval(F, h, roots[k].u));
            if (vanish) hit.push_back(k);
        }
        if (hit.size() != 2)
            throw SingularCurve("kernel factor does not split the codomain roots");
        taken[hit[0]] = taken[hit[1]] = true;
        out[i] = {hit[0], hit[1]};
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::array<Fe, 5> igusa_invariants_rooted(const Fq& F, const Sextic& f,
                                          const std::vector<ProjRoot>& roots);
std::string igusa_class_rooted(const Fq& F, const Sextic& f,
                               const std::vector<ProjRoot>& roots);
int ra_order_rooted(const Fq& F, const std::vector<ProjRoot>& roots);

StepResult jacobian_step(const Fq& F, const Sextic& fnew,
                         const std::array<Poly, 3>& dual_factors_quart) {
    auto roots = sextic_roots(F, fnew);
    StepResult r;
    r.vertex = G2Vertex{"jacobian", igusa_class_rooted(F, fnew, roots),
                        ra_order_rooted(F, roots)};
    r.model = fnew;
    r.dual_pairs = locate_dual_pairs(F, roots, dual_factors_quart);
    r.has_dual = true;
    return r;
}

}  // namespace

Sextic sextic_make(const Fq& F, const std::vector<Fe>& coeffs) {
    if (coeffs.size() > 7) throw IndexOutOfRange("more than 7 sextic coefficients");
    Sextic f;
    for (auto& e : f.c) e = F.zero(kQuad);
    for (size_t i = 0; i < coeffs.size(); ++i) f.c[i] = coeffs[i];
    (void)sextic_degree(F, f);
    return f;
}

int sextic_degree(const Fq& F, const Sextic& f) {
    if (!F.is_zero(f.c[6])) return 6;
    if (!F.is_zero(f.c[5])) return 5;
    throw SingularCurve("model degree below 5");
}

std::vector<ProjRoot> sextic_roots(const Fq& F, const Sextic& f) {
    int d = sextic_degree(F, f);
    Poly fq = poly_lift(F, sextic_poly(F, f), kQuart);
    auto rr = poly_roots(F, fq);
    std::vector<ProjRoot> out;
    int count = 0;
    for (auto& [r, mult] : rr) {
        if (mult > 1) throw SingularCurve("repeated root");
        out.push_back(ProjRoot{r, F.one(kQuart), false});
        ++count;
    }
    if (count != d) throw SingularCurve("roots left the quartic extension");
    if (d == 5) out.push_back(ProjRoot{F.one(kQuart), F.zero(kQuart), true});
    return out;
}

Sextic sextic_transform(const Fq& F, const Sextic& f, const Fe& a, const Fe& b,
                        const Fe& c, const Fe& d) {
    if (F.is_zero(F.sub(F.mul(a, d), F.mul(b, c))))
        throw DivisionByZero("frame change is singular");
    // F(x,z) = sum c_k x^k z^(6-k) evaluated at (ax+bz, cx+dz); build the
    // powers (ax+bz)^k (cx+dz)^(6-k) by convolution.
    std::vector<std::vector<Fe>> xp(7), zp(7);
    xp[0] = {F.one(kQuad)};
    zp[0] = {F.one(kQuad)};
    auto mul_lin = [&](const std::vector<Fe>& p, const Fe& hi, const Fe& lo) {
        std::vector<Fe> q(p.size() + 1, F.zero(kQuad));
        for (size_t i = 0; i < p.size(); ++i) {
            q[i + 1] = F.add(q[i + 1], F.mul(p[i], hi));
            q[i] = F.add(q[i], F.mul(p[i], lo));
        }
        return q;
    };
    for (int k = 1; k <= 6; ++k) {
        xp[k] = mul_lin(xp[k - 1], a, b);
        zp[k] = mul_lin(zp[k - 1], c, d);
    }
    Sextic out;
    for (auto& e : out.c) e = F.zero(kQuad);
    for (int k = 0; k <= 6; ++k) {
        if (F.is_zero(f.c[k])) continue;
        // xp[k] * zp[6-k], coefficient of x^i
        for (size_t i = 0; i < xp[k].size(); ++i)
            for (size_t j = 0; j < zp[6 - k].size(); ++j)
                out.c[i + j] = F.add(out.c[i + j],
                                     F.mul(f.c[k], F.mul(xp[k][i], zp[6 - k][j])));
    }
    (void)sextic_degree(F, out);
    return out;
}

std::vector<QuadSplitting> quadratic_splittings(const Fq& F, const Sextic& f) {
    auto roots = sextic_roots(F, f);
    std::vector<QuadSplitting> out;
    for (auto& pairing : six_point_pairings()) {
        QuadSplitting s;
        s.pairs = pairing;
        for (int i = 0; i < 3; ++i) {
            Poly gq = pair_factor_quart(F, roots[pairing[i].first],
                                        roots[pairing[i].second]);
            auto g2 = poly_drop(F, gq, kQuad);
            if (!g2) throw SplittingNotRational("factor outside F_p^2");
            s.g[i] = *g2;
        }
        std::array<std::array<Fe, 3>, 3> m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = poly_coeff(F, s.g[i], j);
        s.delta = det3(F, m);
        out.push_back(std::move(s));
    }
    return out;
}

std::array<Fe, 5> igusa_invariants(const Fq& F, const Sextic& f) {
    return igusa_invariants_rooted(F, f, sextic_roots(F, f));
}

namespace {

std::array<Fe, 5> igusa_invariants_rooted(const Fq& F, const Sextic& f,
                                          const std::vector<ProjRoot>& roots) {
    int d = sextic_degree(F, f);
    Fe c = F.lift(f.c[d], kQuart);

    // bracket (i j) = u_i v_j - u_j v_i over the projective roots
    std::array<std::array<Fe, 6>, 6> br;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            br[i][j] = F.sub(F.mul(roots[i].u, roots[j].v),
                             F.mul(roots[j].u, roots[i].v));
    auto br2 = [&](int i, int j) { return F.mul(br[i][j], br[i][j]); };
    auto tri2 = [&](int i, int j, int k) {
        return F.mul(br2(i, j), F.mul(br2(j, k), br2(k, i)));
    };

    Fe i2 = F.zero(kQuart);
    for (auto& pr : six_point_pairings()) {
        Fe t = F.mul(br2(pr[0].first, pr[0].second),
                     F.mul(br2(pr[1].first, pr[1].second),
                           br2(pr[2].first, pr[2].second)));
        i2 = F.add(i2, t);
    }

    Fe i4 = F.zero(kQuart);
    Fe i6 = F.zero(kQuart);
    for (int i = 1; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
            int t0 = 0, t1 = i, t2 = j;
            std::array<int, 3> comp{};
            int ci = 0;
            for (int k = 1; k < 6; ++k)
                if (k != i && k != j) comp[ci++] = k;
            Fe both = F.mul(tri2(t0, t1, t2), tri2(comp[0], comp[1], comp[2]));
            i4 = F.add(i4, both);
            std::array<int, 3> perm{0, 1, 2};
            do {
                Fe link = F.mul(br2(t0, comp[perm[0]]),
                                F.mul(br2(t1, comp[perm[1]]), br2(t2, comp[perm[2]])));
                i6 = F.add(i6, F.mul(both, link));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }

    Fe i10 = F.one(kQuart);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) i10 = F.mul(i10, br2(i, j));

    Fe c2 = F.mul(c, c);
    Fe c4 = F.mul(c2, c2);
    Fe c6 = F.mul(c4, c2);
    Fe c10 = F.mul(c6, c4);
    i2 = F.mul(i2, c2);
    i4 = F.mul(i4, c4);
    i6 = F.mul(i6, c6);
    i10 = F.mul(i10, c10);

    Fe I2 = drop_or_throw(F, i2, "invariant outside F_p^2");
    Fe I4 = drop_or_throw(F, i4, "invariant outside F_p^2");
    Fe I6 = drop_or_throw(F, i6, "invariant outside F_p^2");
    Fe I10 = drop_or_throw(F, i10, "invariant outside F_p^2");

    Fe j2 = F.div(I2, F.from_int(8, kQuad));
    Fe j4 = F.div(F.sub(F.mul(F.from_int(4, kQuad), F.mul(j2, j2)), I4),
                  F.from_int(96, kQuad));
    Fe j6 = F.div(
        F.sub(F.sub(F.mul(F.from_int(8, kQuad), F.mul(j2, F.mul(j2, j2))),
                    F.mul(F.from_int(160, kQuad), F.mul(j2, j4))),
              I6),
        F.from_int(576, kQuad));
    Fe j8 = F.div(F.sub(F.mul(j2, j6), F.mul(j4, j4)), F.from_int(4, kQuad));
    Fe j10 = F.div(I10, F.from_int(4096, kQuad));
    if (F.is_zero(j10)) throw SingularCurve("vanishing discriminant invariant");
    return {j2, j4, j6, j8, j10};
}

std::string igusa_class_rooted(const Fq& F, const Sextic& f,
                               const std::vector<ProjRoot>& roots) {
    auto J = igusa_invariants_rooted(F, f, roots);
    // halved weights of (J2, J4, J6, J8, J10)
    const int weight[5] = {1, 2, 3, 4, 5};
    std::vector<int> support;
    for (int i = 0; i < 5; ++i)
        if (!F.is_zero(J[i])) support.push_back(i);
    int m = (int)support.size();

    // Integer basis of { e : sum_k weight_k e_k = 0 } over the support,
    // by extended-gcd column operations tracked in U (deterministic).
    std::vector<long long> w(m);
    for (int i = 0; i < m; ++i) w[i] = weight[support[i]];
    std::vector<std::vector<long long>> u(m, std::vector<long long>(m, 0));
    for (int i = 0; i < m; ++i) u[i][i] = 1;
    for (int j = 1; j < m; ++j) {
        while (w[j] != 0) {
            long long q = w[0] / w[j];
            w[0] -= q * w[j];
            for (int r = 0; r < m; ++r) u[r][0] -= q * u[r][j];
            std::swap(w[0], w[j]);
            for (int r = 0; r < m; ++r) std::swap(u[r][0], u[r][j]);
        }
    }

    std::string key = "jac:";
    for (int i = 0; i < m; ++i) {
        if (i) key += ",";
        key += std::to_string(2 * weight[support[i]]);
    }
    key += ";";
    for (int col = 1; col < m; ++col) {
        Fe val = F.one(kQuad);
        for (int r = 0; r < m; ++r) {
            long long e = u[r][col];
            if (e == 0) continue;
            Fe base = (e > 0) ? J[support[r]] : F.inv(J[support[r]]);
            val = F.mul(val, F.pow(base, (uint64_t)(e > 0 ? e : -e)));
        }
        if (col > 1) key += "|";
        key += F.str(val);
    }
    return key;
}

}  // namespace

std::string igusa_class(const Fq& F, const Sextic& f) {
    return igusa_class_rooted(F, f, sextic_roots(F, f));
}

std::string product_key(const Fq& F, const Fe& j1, const Fe& j2) {
    const Fe* lo = &j1;
    const Fe* hi = &j2;
    if (F.cmp(*hi, *lo) < 0) std::swap(lo, hi);
    return "prod:" + F.str(*lo) + "," + F.str(*hi);
}

StepResult richelot_codomain(const Fq& F, const Sextic& f, const QuadSplitting& s) {
    if (!F.is_zero(s.delta)) {
        Fe dinv = F.inv(s.delta);
        std::array<Poly, 3> h;
        for (int i = 0; i < 3; ++i) {
            Poly b = factor_bracket(F, s.g[(i + 1) % 3], s.g[(i + 2) % 3]);
            h[i] = poly_scale(F, dinv, b);
        }
        Poly prod = poly_mul(F, h[0], poly_mul(F, h[1], h[2]));
        if (poly_deg(prod) < 5)
            throw SingularCurve("quotient model degenerates");
        std::vector<Fe> cs(7, F.zero(kQuad));
        for (int i = 0; i <= poly_deg(prod); ++i) cs[i] = poly_coeff(F, prod, i);
        Sextic fnew = sextic_make(F, cs);
        std::array<Poly, 3> hq;
        for (int i = 0; i < 3; ++i) hq[i] = poly_lift(F, poly_monic(F, h[i]), kQuart);
        return jacobian_step(F, fnew, hq);
    }

    // Dependent factors: the quotient splits as a product of the two
    // elliptic curves cut out by the pencil spanned by the factors.  Work
    // in the basis of the pencil's two degenerate members eta1, eta2 (the
    // roots of the discriminant form); with g_i = alpha_i eta1 + beta_i
    // eta2, the factors are y^2 = prod_i (alpha_i T + beta_i) and
    // y^2 = prod_i (beta_i T + alpha_i).
    Poly w1 = poly_lift(F, s.g[0], kQuart);
    Poly w2 = poly_lift(F, s.g[1], kQuart);
    auto cf = [&](const Poly& g, int i) { return poly_coeff(F, g, i); };
    Fe A = F.sub(F.mul(cf(w1, 1), cf(w1, 1)),
                 F.mul(F.from_int(4, kQuart), F.mul(cf(w1, 2), cf(w1, 0))));
    Fe B = F.sub(F.mul(F.from_int(2, kQuart), F.mul(cf(w1, 1), cf(w2, 1))),
                 F.mul(F.from_int(4, kQuart),
                       F.add(F.mul(cf(w1, 2), cf(w2, 0)), F.mul(cf(w1, 0), cf(w2, 2)))));
    Fe C = F.sub(F.mul(cf(w2, 1), cf(w2, 1)),
                 F.mul(F.from_int(4, kQuart), F.mul(cf(w2, 2), cf(w2, 0))));

    // roots (lambda : mu) of A l^2 + B l m + C m^2
    std::array<std::pair<Fe, Fe>, 2> lm;
    if (!F.is_zero(A)) {
        Fe disc = F.sub(F.mul(B, B), F.mul(F.from_int(4, kQuart), F.mul(A, C)));
        auto sq = F.sqrt(disc);
        if (!sq || F.is_zero(disc))
            throw SingularCurve("pencil has a repeated degenerate member");
        Fe twoA = F.mul(F.from_int(2, kQuart), A);
        lm[0] = {F.div(F.sub(*sq, B), twoA), F.one(kQuart)};
        lm[1] = {F.div(F.sub(F.neg(B), *sq), twoA), F.one(kQuart)};
    } else {
        if (F.is_zero(B))
            throw SingularCurve("pencil has a repeated degenerate member");
        lm[0] = {F.one(kQuart), F.zero(kQuart)};
        lm[1] = {F.neg(C), B};
    }
    Poly eta1 = poly_add(F, poly_scale(F, lm[0].first, w1), poly_scale(F, lm[0].second, w2));
    Poly eta2 = poly_add(F, poly_scale(F, lm[1].first, w1), poly_scale(F, lm[1].second, w2));

    // coordinates of each factor in the (eta1, eta2) basis
    int r1 = -1, r2 = -1;
    Fe det{};
    for (int a = 0; a < 3 && r1 < 0; ++a)
        for (int b = a + 1; b < 3; ++b) {
            Fe d = F.sub(F.mul(cf(eta1, a), cf(eta2, b)), F.mul(cf(eta1, b), cf(eta2, a)));
            if (!F.is_zero(d)) {
                r1 = a;
                r2 = b;
                det = d;
                break;
            }
        }
    if (r1 < 0) throw SingularCurve("degenerate pencil basis");
    std::array<Fe, 3> alpha, beta;
    for (int i = 0; i < 3; ++i) {
        Poly gi = poly_lift(F, s.g[i], kQuart);
        Fe x = F.div(F.sub(F.mul(cf(gi, r1), cf(eta2, r2)), F.mul(cf(gi, r2), cf(eta2, r1))), det);
        Fe y = F.div(F.sub(F.mul(cf(eta1, r1), cf(gi, r2)), F.mul(cf(eta1, r2), cf(gi, r1))), det);
        // consistency on the remaining coordinate
        int r3 = 3 - r1 - r2;
        Fe chk = F.add(F.mul(x, cf(eta1, r3)), F.mul(y, cf(eta2, r3)));
        if (!(chk == cf(gi, r3)))
            throw SingularCurve("factor leaves the pencil");
        if (F.is_zero(x) || F.is_zero(y))
            throw SingularCurve("factor proportional to a degenerate member");
        alpha[i] = x;
        beta[i] = y;
    }
    Poly cub1 = poly_const(F, F.one(kQuart));
    Poly cub2 = poly_const(F, F.one(kQuart));
    cub1.level = kQuart;
    cub2.level = kQuart;
    for (int i = 0; i < 3; ++i) {
        cub1 = poly_mul(F, cub1, poly_make(F, kQuart, {beta[i], alpha[i]}));
        cub2 = poly_mul(F, cub2, poly_make(F, kQuart, {alpha[i], beta[i]}));
    }
    Fe j1 = drop_or_throw(F, j_from_cubic(F, cub1), "elliptic factor j outside F_p^2");
    Fe j2 = drop_or_throw(F, j_from_cubic(F, cub2), "elliptic factor j outside F_p^2");
    return product_step(F, j1, j2);
}

StepResult glue_along_2torsion(const Fq& F, const EllCurve& e1,
                               const EllCurve& e2, const std::array<int, 3>& perm) {
    auto r = two_torsion_roots(F, e1);
    auto s0 = two_torsion_roots(F, e2);
    std::array<Fe, 3> s{s0[perm[0]], s0[perm[1]], s0[perm[2]]};

    Fe d11 = F.sub(r[0], r[1]);
    Fe d12 = F.sub(s[0], s[1]);
    Fe d21 = F.sub(r[0], r[2]);
    Fe d22 = F.sub(s[0], s[2]);
    Fe rhs1 = F.sub(F.mul(r[0], s[0]), F.mul(r[1], s[1]));
    Fe rhs2 = F.sub(F.mul(r[0], s[0]), F.mul(r[2], s[2]));
    Fe D = F.sub(F.mul(d11, d22), F.mul(d21, d12));
    if (F.is_zero(D)) {
        // the bijection extends to an isomorphism of the factors
        return product_step(F, j_invariant(F, e1), j_invariant(F, e2));
    }
    Fe z = F.div(F.sub(F.mul(rhs1, d22), F.mul(rhs2, d12)), D);
    Fe v = F.div(F.sub(F.mul(d11, rhs2), F.mul(d21, rhs1)), D);
    Fe kappa = F.mul(F.sub(r[0], v), F.sub(s[0], z));
    if (F.is_zero(kappa)) throw SingularCurve("gluing frame collapses");

    std::array<Fe, 3> T{F.sub(r[0], v), F.sub(r[1], v), F.sub(r[2], v)};
    // Normalize the twist so the glued model keeps rational two-division
    // behavior: the T_i are either all squares or all non-squares in any
    // model of the right class, and a non-square common scale fixes the
    // latter.
    int squares = 0;
    for (auto& t : T) squares += F.is_square(t) ? 1 : 0;
    Fe lead = F.one(kQuad);
    if (squares == 0) {
        Fe n = F.quad_nonsquare();
        for (auto& t : T) t = F.div(t, n);
        lead = F.mul(n, F.mul(n, n));
    } else if (squares != 3) {
        throw SplittingNotRational("glued model is not superspecial");
    }
    // y^2 = lead * (x^2 - T1)(x^2 - T2)(x^2 - T3)
    Fe q0 = F.neg(F.mul(T[0], F.mul(T[1], T[2])));
    Fe q2 = F.add(F.add(F.mul(T[0], T[1]), F.mul(T[0], T[2])), F.mul(T[1], T[2]));
    Fe q4 = F.neg(F.add(F.add(T[0], T[1]), T[2]));
    Sextic fnew = sextic_make(
        F, {F.mul(lead, q0), F.zero(kQuad), F.mul(lead, q2), F.zero(kQuad),
            F.mul(lead, q4), F.zero(kQuad), lead});
    std::array<Poly, 3> dual;
    for (int i = 0; i < 3; ++i)
        dual[i] = poly_make(F, kQuart,
                            {F.neg(F.lift(T[i], kQuart)), F.zero(kQuart), F.one(kQuart)});
    return jacobian_step(F, fnew, dual);
}

std::vector<StepResult> product_kernels(const Fq& F, const EllCurve& e1,
                                        const EllCurve& e2) {
    std::vector<StepResult> out;
    auto r1 = two_torsion_roots(F, e1);
    auto r2 = two_torsion_roots(F, e2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Fe j1 = j_invariant(F, velu_step2(F, e1, r1[i]));
            Fe j2 = j_invariant(F, velu_step2(F, e2, r2[j]));
            out.push_back(product_step(F, j1, j2));
        }
    std::array<int, 3> perm{0, 1, 2};
    do {
        out.push_back(glue_along_2torsion(F, e1, e2, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<StepResult> expand_vertex(const Fq& F, const G2Model& m) {
    if (std::holds_alternative<Sextic>(m)) {
        const Sextic& f = std::get<Sextic>(m);
        std::vector<StepResult> out;
        for (auto& s : quadratic_splittings(F, f))
            out.push_back(richelot_codomain(F, f, s));
        return out;
    }
    auto& [e1, e2] = std::get<std::pair<EllCurve, EllCurve>>(m);
    return product_kernels(F, e1, e2);
}

namespace {

int ra_order_rooted(const Fq& F, const std::vector<ProjRoot>& roots) {
    // 2x2 frame matrix sending three points to (0, infinity, 1)
    auto frame = [&](const ProjRoot& p1, const ProjRoot& p2, const ProjRoot& p3) {
        Fe c1 = F.sub(F.mul(p2.v, p3.u), F.mul(p2.u, p3.v));  // L2(p3)
        Fe c2 = F.sub(F.mul(p1.v, p3.u), F.mul(p1.u, p3.v));  // L1(p3)
        return std::array<Fe, 4>{F.mul(c1, p1.v), F.neg(F.mul(c1, p1.u)),
                                 F.mul(c2, p2.v), F.neg(F.mul(c2, p2.u))};
    };
    auto ms = frame(roots[0], roots[1], roots[2]);
    int count = 0;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            if (b == a) continue;
            for (int c = 0; c < 6; ++c) {
                if (c == a || c == b) continue;
                auto mt = frame(roots[a], roots[b], roots[c]);
                // n = adj(mt) * ms
                std::array<Fe, 4> n{
                    F.sub(F.mul(mt[3], ms[0]), F.mul(mt[1], ms[2])),
                    F.sub(F.mul(mt[3], ms[1]), F.mul(mt[1], ms[3])),
                    F.sub(F.mul(mt[0], ms[2]), F.mul(mt[2], ms[0])),
                    F.sub(F.mul(mt[0], ms[3]), F.mul(mt[2], ms[1]))};
                bool ok = !F.is_zero(F.sub(F.mul(n[0], n[3]), F.mul(n[1], n[2])));
                for (int k = 0; k < 6 && ok; ++k) {
                    ProjRoot img{
                        F.add(F.mul(n[0], roots[k].u), F.mul(n[1], roots[k].v)),
                        F.add(F.mul(n[2], roots[k].u), F.mul(n[3], roots[k].v)),
                        false};
                    bool found = false;
                    for (int t = 0; t < 6 && !found; ++t)
                        found = same_point(F, img, roots[t]);
                    ok = found;
                }
                if (ok) ++count;
            }
        }
    return count;
}

}  // namespace

int reduced_automorphism_order(const Fq& F, const Sextic& f) {
    return ra_order_rooted(F, sextic_roots(F, f));
}

int reduced_automorphism_order(const Fq& F, const EllCurve& e1, const EllCurve& e2) {
    return product_ra(F, j_invariant(F, e1), j_invariant(F, e2));
}

Gr2Build build_gr2(const Fq& F, int threads) {
    if (threads < 1) throw IndexOutOfRange("thread count must be positive");
    Fe j0{};
    bool have = false;
    for (uint64_t j = 0; j < F.p() && !have; ++j) {
        Fe cand = F.from_int(j, kQuad);
        if (is_supersingular_j(F, cand)) {
            j0 = cand;
            have = true;
        }
    }
    if (!have) throw NotSupersingular("no supersingular curve over F_p");

    Gr2Build b;
    b.graph.degree = 15;
    StepResult start = product_step(F, j0, j0);

    std::map<std::string, int> index;
    auto intern = [&](const StepResult& r) {
        auto it = index.find(r.vertex.key);
        if (it != index.end()) return it->second;
        int id = (int)b.graph.keys.size();
        index[r.vertex.key] = id;
        b.graph.keys.push_back(r.vertex.key);
        b.graph.kinds.push_back(r.vertex.kind);
        b.graph.ra.push_back(r.vertex.ra_order);
        b.models.push_back(r.model);
        return id;
    };
    intern(start);

    size_t done = 0;
    while (done < b.graph.keys.size()) {
        std::vector<int> layer;
        for (size_t i = done; i < b.graph.keys.size(); ++i) layer.push_back((int)i);
        done = b.graph.keys.size();

        std::vector<std::vector<StepResult>> results(layer.size());
        if (threads == 1 || layer.size() <= 1) {
            for (size_t k = 0; k < layer.size(); ++k)
                results[k] = expand_vertex(F, b.models[layer[k]]);
        } else {
            std::vector<std::thread> pool;
            std::mutex err_mutex;
            std::exception_ptr first_err;
            size_t nthreads = std::min<size_t>(threads, layer.size());
            for (size_t t = 0; t < nthreads; ++t) {
                pool.emplace_back([&, t]() {
                    for (size_t k = t; k < layer.size(); k += nthreads) {
                        try {
                            results[k] = expand_vertex(F, b.models[layer[k]]);
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

        for (size_t k = 0; k < layer.size(); ++k)
            for (auto& step : results[k])
                b.graph.edges[{layer[k], intern(step)}] += 1;
    }
    return b;
}

}  // namespace sspectra
