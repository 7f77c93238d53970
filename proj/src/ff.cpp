#include "sspectra/ff.hpp"

#include <algorithm>
#include <sstream>

namespace sspectra {

namespace {

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Fq::Fq(uint64_t p) : p_(p) {
    if (p < 5 || !is_prime_u64(p)) throw BadPrime("p must be a prime >= 5");
    if (p > 49999) throw ScaleExceeded("p too large for 64-bit tower arithmetic (max 49999)");

    // Least quadratic non-residue of F_p.
    n_ = 0;
    for (uint64_t x = 2; x < p_; ++x) {
        uint64_t e = 1, b = x % p_, k = (p_ - 1) / 2;
        while (k) {
            if (k & 1) e = mulm(e, b);
            b = mulm(b, b);
            k >>= 1;
        }
        if (e == p_ - 1) {
            n_ = x;
            break;
        }
    }

    ts_base_ = TsData{};
    ts_quad_ = TsData{};
    ts_quart_ = TsData{};

    // First non-square of F_p^2 in canonical coordinate order.  The Euler
    // test only needs mul/pow, which never consult m_.
    m_ = zero(Level::Quad);
    uint64_t q2 = p_ * p_;
    for (uint64_t idx = 1; idx < q2; ++idx) {
        Fe cand = element_at(Level::Quad, idx);
        Fe e = pow(cand, (q2 - 1) / 2);
        if (!(e == one(Level::Quad))) {
            m_ = cand;
            break;
        }
    }

    auto make_ts = [&](Level l, const Fe& z) {
        TsData d;
        uint64_t q = field_order(l);
        d.t = q - 1;
        d.s = 0;
        while ((d.t & 1) == 0) {
            d.t >>= 1;
            ++d.s;
        }
        d.z = z;
        return d;
    };
    ts_base_ = make_ts(Level::Base, from_int(n_));
    ts_quad_ = make_ts(Level::Quad, m_);
    // Quart non-residue: first element failing the Euler test.
    {
        uint64_t q4 = field_order(Level::Quart);
        Fe z = zero(Level::Quart);
        for (uint64_t idx = 1;; ++idx) {
            Fe cand = element_at(Level::Quart, idx);
            if (!(pow(cand, (q4 - 1) / 2) == one(Level::Quart))) {
                z = cand;
                break;
            }
        }
        ts_quart_ = make_ts(Level::Quart, z);
    }
}

uint64_t Fq::field_order(Level l) const {
    uint64_t q = 1;
    for (int i = 0; i < level_dim(l); ++i) q *= p_;
    return q;
}

Fe Fq::from_signed(long long v, Level l) const {
    long long m = static_cast<long long>(p_);
    long long r = v % m;
    if (r < 0) r += m;
    return from_int(static_cast<uint64_t>(r), l);
}

Fe Fq::make(Level l, const std::vector<uint64_t>& coords) const {
    if (coords.size() > static_cast<size_t>(level_dim(l)))
        throw IndexOutOfRange("too many coordinates for level");
    Fe r = zero(l);
    for (size_t i = 0; i < coords.size(); ++i) r.c[i] = coords[i] % p_;
    return r;
}

bool Fq::is_zero(const Fe& a) const {
    return a.c[0] == 0 && a.c[1] == 0 && a.c[2] == 0 && a.c[3] == 0;
}

Fe Fq::add(const Fe& a, const Fe& b) const {
    if (a.level != b.level) throw IndexOutOfRange("level mismatch in add");
    Fe r = a;
    for (int i = 0; i < level_dim(a.level); ++i) r.c[i] = addm(a.c[i], b.c[i]);
    return r;
}

Fe Fq::sub(const Fe& a, const Fe& b) const {
    if (a.level != b.level) throw IndexOutOfRange("level mismatch in sub");
    Fe r = a;
    for (int i = 0; i < level_dim(a.level); ++i) r.c[i] = subm(a.c[i], b.c[i]);
    return r;
}

Fe Fq::neg(const Fe& a) const {
    Fe r = a;
    for (int i = 0; i < level_dim(a.level); ++i) r.c[i] = subm(0, a.c[i]);
    return r;
}

Fq::Q Fq::qadd(const Q& a, const Q& b) const { return Q{addm(a[0], b[0]), addm(a[1], b[1])}; }
Fq::Q Fq::qsub(const Q& a, const Q& b) const { return Q{subm(a[0], b[0]), subm(a[1], b[1])}; }

Fq::Q Fq::qmul(const Q& a, const Q& b) const {
    // (a0 + a1 t)(b0 + b1 t) with t^2 = n
    uint64_t c0 = addm(mulm(a[0], b[0]), mulm(n_, mulm(a[1], b[1])));
    uint64_t c1 = addm(mulm(a[0], b[1]), mulm(a[1], b[0]));
    return Q{c0, c1};
}

Fq::Q Fq::qinv(const Q& a) const {
    // (a0 + a1 t)^-1 = (a0 - a1 t) / (a0^2 - n a1^2)
    uint64_t nrm = subm(mulm(a[0], a[0]), mulm(n_, mulm(a[1], a[1])));
    if (nrm == 0) throw DivisionByZero("inverse of zero in F_p^2");
    uint64_t d = invm(nrm);
    return Q{mulm(a[0], d), mulm(subm(0, a[1]), d)};
}

Fe Fq::mul(const Fe& a, const Fe& b) const {
    if (a.level != b.level) throw IndexOutOfRange("level mismatch in mul");
    switch (a.level) {
        case Level::Base:
            return Fe{Level::Base, {mulm(a.c[0], b.c[0]), 0, 0, 0}};
        case Level::Quad: {
            Q r = qmul(Q{a.c[0], a.c[1]}, Q{b.c[0], b.c[1]});
            return Fe{Level::Quad, {r[0], r[1], 0, 0}};
        }
        case Level::Quart: {
            // (A + B s)(C + D s) = (AC + m BD) + (AD + BC) s, s^2 = m
            Q A{a.c[0], a.c[1]}, B{a.c[2], a.c[3]}, C{b.c[0], b.c[1]}, D{b.c[2], b.c[3]};
            Q M{m_.c[0], m_.c[1]};
            Q lo = qadd(qmul(A, C), qmul(M, qmul(B, D)));
            Q hi = qadd(qmul(A, D), qmul(B, C));
            return Fe{Level::Quart, {lo[0], lo[1], hi[0], hi[1]}};
        }
    }
    throw IndexOutOfRange("bad level");
}

uint64_t Fq::invm(uint64_t a) const {
    a %= p_;
    if (a == 0) throw DivisionByZero("inverse of zero in F_p");
    long long t0 = 0, t1 = 1;
    long long r0 = static_cast<long long>(p_), r1 = static_cast<long long>(a);
    while (r1 != 0) {
        long long q = r0 / r1;
        t0 -= q * t1;
        std::swap(t0, t1);
        r0 -= q * r1;
        std::swap(r0, r1);
    }
    long long t = t0;
    if (t < 0) t += static_cast<long long>(p_);
    return static_cast<uint64_t>(t);
}

Fe Fq::inv(const Fe& a) const {
    if (is_zero(a)) throw DivisionByZero("inverse of zero");
    switch (a.level) {
        case Level::Base:
            return Fe{Level::Base, {invm(a.c[0]), 0, 0, 0}};
        case Level::Quad: {
            Q r = qinv(Q{a.c[0], a.c[1]});
            return Fe{Level::Quad, {r[0], r[1], 0, 0}};
        }
        case Level::Quart: {
            // (A + B s)^-1 = (A - B s) / (A^2 - m B^2)
            Q A{a.c[0], a.c[1]}, B{a.c[2], a.c[3]};
            Q M{m_.c[0], m_.c[1]};
            Q nrm = qsub(qmul(A, A), qmul(M, qmul(B, B)));
            if (qzero(nrm)) throw DivisionByZero("inverse of zero in F_p^4");
            Q d = qinv(nrm);
            Q lo = qmul(A, d);
            Q hi = qmul(qsub(Q{0, 0}, B), d);
            return Fe{Level::Quart, {lo[0], lo[1], hi[0], hi[1]}};
        }
    }
    throw IndexOutOfRange("bad level");
}

Fe Fq::pow(const Fe& a, uint64_t e) const {
    Fe r = one(a.level);
    Fe b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Fe Fq::pow_signed(const Fe& a, long long e) const {
    if (e >= 0) return pow(a, static_cast<uint64_t>(e));
    return pow(inv(a), static_cast<uint64_t>(-e));
}

Fe Fq::frobenius(const Fe& a) const { return pow(a, p_); }

const Fq::TsData& Fq::ts(Level l) const {
    switch (l) {
        case Level::Base:
            return ts_base_;
        case Level::Quad:
            return ts_quad_;
        case Level::Quart:
            return ts_quart_;
    }
    throw IndexOutOfRange("bad level");
}

bool Fq::is_square(const Fe& a) const {
    if (is_zero(a)) return true;
    uint64_t q = field_order(a.level);
    return pow(a, (q - 1) / 2) == one(a.level);
}

std::optional<Fe> Fq::sqrt(const Fe& a) const {
    if (is_zero(a)) return zero(a.level);
    if (!is_square(a)) return std::nullopt;

    // Tonelli-Shanks in the multiplicative group of order q-1 = 2^s * t.
    const TsData& d = ts(a.level);
    Fe cexp = pow(d.z, d.t);
    Fe tt = pow(a, d.t);
    Fe r = pow(a, (d.t + 1) / 2);
    uint64_t m = d.s;
    const Fe u = one(a.level);
    while (!(tt == u)) {
        uint64_t i = 0;
        Fe probe = tt;
        while (!(probe == u)) {
            probe = mul(probe, probe);
            ++i;
            if (i >= m) throw ConvergenceFailure("Tonelli-Shanks order error");
        }
        Fe b = cexp;
        for (uint64_t k = 0; k + i + 1 < m; ++k) b = mul(b, b);
        m = i;
        cexp = mul(b, b);
        tt = mul(tt, cexp);
        r = mul(r, b);
    }
    Fe other = neg(r);
    return cmp(r, other) <= 0 ? r : other;
}

Fe Fq::lift(const Fe& a, Level target) const {
    if (level_dim(target) < level_dim(a.level)) throw IndexOutOfRange("lift to lower level");
    Fe r = a;
    r.level = target;
    return r;
}

std::optional<Fe> Fq::drop(const Fe& a, Level target) const {
    for (int i = level_dim(target); i < level_dim(a.level); ++i)
        if (a.c[i] != 0) return std::nullopt;
    Fe r = a;
    r.level = target;
    for (int i = level_dim(target); i < 4; ++i) r.c[i] = 0;
    return r;
}

int Fq::cmp(const Fe& a, const Fe& b) const {
    if (a.level != b.level) throw IndexOutOfRange("level mismatch in cmp");
    for (int i = 0; i < level_dim(a.level); ++i) {
        if (a.c[i] < b.c[i]) return -1;
        if (a.c[i] > b.c[i]) return 1;
    }
    return 0;
}

Fe Fq::element_at(Level l, uint64_t idx) const {
    int d = level_dim(l);
    Fe r = zero(l);
    // c0 is the most significant digit of the canonical order.
    for (int i = d - 1; i >= 0; --i) {
        r.c[i] = idx % p_;
        idx /= p_;
    }
    if (idx != 0) throw IndexOutOfRange("element index out of range");
    return r;
}

std::string Fq::str(const Fe& a) const {
    std::ostringstream os;
    for (int i = 0; i < level_dim(a.level); ++i) {
        if (i) os << '.';
        os << a.c[i];
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// polynomials

namespace {

void strip(Poly& f, const Fq& F) {
    while (!f.c.empty() && F.is_zero(f.c.back())) f.c.pop_back();
}

}  // namespace

Poly poly_make(const Fq& F, Level l, const std::vector<Fe>& coeffs) {
    Poly f{l, coeffs};
    for (auto& x : f.c)
        if (x.level != l) throw IndexOutOfRange("coefficient level mismatch");
    strip(f, F);
    return f;
}

Poly poly_zero(Level l) { return Poly{l, {}}; }

Poly poly_x(const Fq& F, Level l) { return Poly{l, {F.zero(l), F.one(l)}}; }

Poly poly_const(const Fq& F, const Fe& a) {
    Poly f{a.level, {a}};
    strip(f, F);
    return f;
}

int poly_deg(const Poly& f) { return static_cast<int>(f.c.size()) - 1; }

bool poly_is_zero(const Poly& f) { return f.c.empty(); }

Fe poly_coeff(const Fq& F, const Poly& f, int i) {
    if (i < 0 || i >= static_cast<int>(f.c.size())) return F.zero(f.level);
    return f.c[static_cast<size_t>(i)];
}

Poly poly_add(const Fq& F, const Poly& a, const Poly& b) {
    if (a.level != b.level) throw IndexOutOfRange("level mismatch");
    Poly r{a.level, {}};
    size_t n = std::max(a.c.size(), b.c.size());
    r.c.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        Fe x = i < a.c.size() ? a.c[i] : F.zero(a.level);
        Fe y = i < b.c.size() ? b.c[i] : F.zero(a.level);
        r.c.push_back(F.add(x, y));
    }
    strip(r, F);
    return r;
}

Poly poly_sub(const Fq& F, const Poly& a, const Poly& b) {
    if (a.level != b.level) throw IndexOutOfRange("level mismatch");
    Poly r{a.level, {}};
    size_t n = std::max(a.c.size(), b.c.size());
    r.c.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        Fe x = i < a.c.size() ? a.c[i] : F.zero(a.level);
        Fe y = i < b.c.size() ? b.c[i] : F.zero(a.level);
        r.c.push_back(F.sub(x, y));
    }
    strip(r, F);
    return r;
}

Poly poly_scale(const Fq& F, const Fe& k, const Poly& a) {
    Poly r{a.level, {}};
    r.c.reserve(a.c.size());
    for (const auto& x : a.c) r.c.push_back(F.mul(k, x));
    strip(r, F);
    return r;
}

Poly poly_mul(const Fq& F, const Poly& a, const Poly& b) {
    if (a.level != b.level) throw IndexOutOfRange("level mismatch");
    if (poly_is_zero(a) || poly_is_zero(b)) return poly_zero(a.level);
    Poly r{a.level, std::vector<Fe>(a.c.size() + b.c.size() - 1, F.zero(a.level))};
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    strip(r, F);
    return r;
}

std::pair<Poly, Poly> poly_divrem(const Fq& F, const Poly& a, const Poly& b) {
    if (poly_is_zero(b)) throw DivisionByZero("polynomial division by zero");
    Poly rem = a;
    Poly quo{a.level, {}};
    int db = poly_deg(b);
    Fe lcinv = F.inv(b.c.back());
    if (poly_deg(rem) >= db) quo.c.assign(static_cast<size_t>(poly_deg(rem) - db + 1), F.zero(a.level));
    while (poly_deg(rem) >= db) {
        int k = poly_deg(rem) - db;
        Fe q = F.mul(rem.c.back(), lcinv);
        quo.c[static_cast<size_t>(k)] = q;
        for (int i = 0; i <= db; ++i) {
            size_t idx = static_cast<size_t>(i + k);
            rem.c[idx] = F.sub(rem.c[idx], F.mul(q, b.c[static_cast<size_t>(i)]));
        }
        strip(rem, F);
    }
    strip(quo, F);
    return {quo, rem};
}

Poly poly_mod(const Fq& F, const Poly& a, const Poly& b) { return poly_divrem(F, a, b).second; }

Poly poly_monic(const Fq& F, const Poly& a) {
    if (poly_is_zero(a)) return a;
    return poly_scale(F, F.inv(a.c.back()), a);
}

Poly poly_gcd(const Fq& F, const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!poly_is_zero(y)) {
        Poly r = poly_mod(F, x, y);
        x = y;
        y = r;
    }
    return poly_monic(F, x);
}

Poly poly_derivative(const Fq& F, const Poly& a) {
    Poly r{a.level, {}};
    for (size_t i = 1; i < a.c.size(); ++i)
        r.c.push_back(F.mul(F.from_int(static_cast<uint64_t>(i), a.level), a.c[i]));
    strip(r, F);
    return r;
}

Fe poly_eval(const Fq& F, const Poly& a, const Fe& x) {
    Fe r = F.zero(a.level);
    for (size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, x), a.c[i]);
    return r;
}

Poly poly_from_roots(const Fq& F, Level l, const std::vector<Fe>& roots) {
    Poly r{l, {F.one(l)}};
    for (const auto& rt : roots) {
        Poly lin{l, {F.neg(rt), F.one(l)}};
        r = poly_mul(F, r, lin);
    }
    return r;
}

Poly poly_powmod(const Fq& F, const Poly& base, uint64_t e, const Poly& m) {
    Poly r{base.level, {F.one(base.level)}};
    Poly b = poly_mod(F, base, m);
    while (e) {
        if (e & 1) r = poly_mod(F, poly_mul(F, r, b), m);
        b = poly_mod(F, poly_mul(F, b, b), m);
        e >>= 1;
    }
    return r;
}

Poly poly_lift(const Fq& F, const Poly& a, Level target) {
    Poly r{target, {}};
    r.c.reserve(a.c.size());
    for (const auto& x : a.c) r.c.push_back(F.lift(x, target));
    return r;
}

std::optional<Poly> poly_drop(const Fq& F, const Poly& a, Level target) {
    Poly r{target, {}};
    r.c.reserve(a.c.size());
    for (const auto& x : a.c) {
        auto d = F.drop(x, target);
        if (!d) return std::nullopt;
        r.c.push_back(*d);
    }
    return r;
}

namespace {

// Splits a monic product of distinct linear factors into roots.
void split_linear_product(const Fq& F, const Poly& g, std::vector<Fe>& out) {
    int d = poly_deg(g);
    if (d <= 0) return;
    if (d == 1) {
        out.push_back(F.neg(g.c[0]));
        return;
    }
    uint64_t q = F.field_order(g.level);
    Poly x = poly_x(F, g.level);
    // Probes are shifted by the all-ones element so every tower coordinate
    // is active from the very first delta: root pairs symmetric about zero
    // cannot be separated by any delta lying in a proper coordinate slice,
    // and the unshifted enumeration starts with p^2 such deltas.
    std::vector<uint64_t> ones_coords(level_dim(g.level), 1);
    Fe ones = F.make(g.level, ones_coords);
    for (uint64_t ctr = 0;; ++ctr) {
        // probe (x + delta)^((q-1)/2) - 1 with delta from the canonical
        // enumeration; some delta always separates two distinct roots.
        Fe delta = F.add(ones, F.element_at(g.level, ctr % q));
        Poly probe = poly_add(F, x, poly_const(F, delta));
        Poly w = poly_powmod(F, probe, (q - 1) / 2, g);
        w = poly_sub(F, w, poly_const(F, F.one(g.level)));
        Poly h = poly_gcd(F, w, g);
        int dh = poly_deg(h);
        if (dh > 0 && dh < d) {
            split_linear_product(F, h, out);
            split_linear_product(F, poly_divrem(F, g, h).first, out);
            return;
        }
        if (ctr > 4 * q) throw ConvergenceFailure("equal-degree splitting failed to separate roots");
    }
}

}  // namespace

std::vector<std::pair<Fe, int>> poly_roots(const Fq& F, const Poly& f) {
    if (poly_is_zero(f)) throw ZeroPolynomial("root finding on the zero polynomial");
    std::vector<std::pair<Fe, int>> result;
    if (poly_deg(f) == 0) return result;

    Poly fm = poly_monic(F, f);
    uint64_t q = F.field_order(f.level);
    // gcd(x^q - x, f) = product of the distinct linear factors of f.
    Poly xq = poly_powmod(F, poly_x(F, f.level), q, fm);
    Poly g = poly_gcd(F, poly_sub(F, xq, poly_x(F, f.level)), fm);

    std::vector<Fe> roots;
    split_linear_product(F, g, roots);

    for (const auto& r : roots) {
        Poly lin{f.level, {F.neg(r), F.one(f.level)}};
        int mult = 0;
        Poly rest = fm;
        while (true) {
            auto [quo, rem] = poly_divrem(F, rest, lin);
            if (!poly_is_zero(rem)) break;
            ++mult;
            rest = quo;
        }
        result.emplace_back(r, mult);
    }
    std::sort(result.begin(), result.end(),
              [&](const auto& a, const auto& b) { return F.cmp(a.first, b.first) < 0; });
    return result;
}

}  // namespace sspectra
