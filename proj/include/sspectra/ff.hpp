#pragma once

// Finite field tower F_p < F_p^2 < F_p^4 with a fixed deterministic
// construction, plus dense univariate polynomial arithmetic and root
// finding over any level of the tower.
//
//   F_p^2 = F_p[t]/(t^2 - n),   n = least quadratic non-residue of F_p
//   F_p^4 = F_p^2[s]/(s^2 - m), m = first non-square of F_p^2 in the
//                                   canonical coordinate order
//
// Elements carry their level; coordinates are little-endian in the tower
// basis: (c0 + c1*t) + (c2 + c3*t)*s.  The canonical order on a level is
// lexicographic on the coordinate vector with c0 most significant; it is
// used for square-root sign choices, deterministic factorization probes,
// and every tie-break that must be reproducible across runs.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sspectra/errors.hpp"

namespace sspectra {

enum class Level : int { Base = 1, Quad = 2, Quart = 4 };

inline int level_dim(Level l) { return static_cast<int>(l); }

struct Fe {
    Level level{Level::Base};
    std::array<uint64_t, 4> c{0, 0, 0, 0};

    friend bool operator==(const Fe&, const Fe&) = default;
    // Total order usable as a map key; coincides with the canonical
    // coordinate order when both elements share a level.
    friend bool operator<(const Fe& a, const Fe& b) {
        if (a.level != b.level) return static_cast<int>(a.level) < static_cast<int>(b.level);
        return a.c < b.c;
    }
};

class Fq {
  public:
    // Requires p an odd prime with 5 <= p <= 49999 (so p^4 fits in 63 bits).
    explicit Fq(uint64_t p);

    uint64_t p() const { return p_; }
    uint64_t nonresidue() const { return n_; }  // n with F_p^2 = F_p[t]/(t^2-n)
    Fe quad_nonsquare() const { return m_; }    // m with F_p^4 = F_p^2[s]/(s^2-m)

    uint64_t field_order(Level l) const;  // p^dim(l)

    Fe zero(Level l = Level::Base) const { return Fe{l, {0, 0, 0, 0}}; }
    Fe one(Level l = Level::Base) const { return Fe{l, {1 % p_, 0, 0, 0}}; }
    Fe from_int(uint64_t v, Level l = Level::Base) const { return Fe{l, {v % p_, 0, 0, 0}}; }
    // Signed convenience constructor: negative values are reduced mod p.
    Fe from_signed(long long v, Level l = Level::Base) const;
    Fe make(Level l, const std::vector<uint64_t>& coords) const;

    bool is_zero(const Fe& a) const;
    Fe add(const Fe& a, const Fe& b) const;
    Fe sub(const Fe& a, const Fe& b) const;
    Fe neg(const Fe& a) const;
    Fe mul(const Fe& a, const Fe& b) const;
    Fe inv(const Fe& a) const;  // throws DivisionByZero on 0
    Fe div(const Fe& a, const Fe& b) const { return mul(a, inv(b)); }
    Fe pow(const Fe& a, uint64_t e) const;
    // pow with a signed exponent (negative exponents invert first).
    Fe pow_signed(const Fe& a, long long e) const;

    // Arithmetic Frobenius x -> x^p of the element's level.
    Fe frobenius(const Fe& a) const;

    // Canonical square root: the smaller of the two roots in coordinate
    // order, or nullopt when `a` is not a square at its own level.
    std::optional<Fe> sqrt(const Fe& a) const;
    bool is_square(const Fe& a) const;

    // Embed into a higher level / project onto a lower one (nullopt when
    // the element does not lie in the subfield).
    Fe lift(const Fe& a, Level target) const;
    std::optional<Fe> drop(const Fe& a, Level target) const;

    // Canonical coordinate order (c0 major); levels must agree.
    int cmp(const Fe& a, const Fe& b) const;

    // idx-th element of the level in canonical order, 0 <= idx < p^dim.
    Fe element_at(Level l, uint64_t idx) const;

    // Compact display, e.g. "7", "0.1" (= t) at quad level.
    std::string str(const Fe& a) const;

  private:
    uint64_t p_;
    uint64_t n_;      // base-level quadratic non-residue
    Fe m_;            // quad-level non-square (quart defining constant)
    // Tonelli-Shanks data per level: q-1 = 2^s * t with t odd, and a fixed
    // non-residue z of that level.
    struct TsData {
        uint64_t s;
        uint64_t t;
        Fe z;
    };
    TsData ts_base_, ts_quad_, ts_quart_;

    const TsData& ts(Level l) const;

    uint64_t addm(uint64_t a, uint64_t b) const { return (a + b) % p_; }
    uint64_t subm(uint64_t a, uint64_t b) const { return (a + p_ - b % p_) % p_; }
    uint64_t mulm(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p_);
    }
    uint64_t invm(uint64_t a) const;

    // two-coordinate (quad) kernels used to build quart arithmetic
    using Q = std::array<uint64_t, 2>;
    Q qadd(const Q& a, const Q& b) const;
    Q qsub(const Q& a, const Q& b) const;
    Q qmul(const Q& a, const Q& b) const;
    Q qinv(const Q& a) const;
    bool qzero(const Q& a) const { return a[0] == 0 && a[1] == 0; }
};

// ---------------------------------------------------------------------------
// Dense univariate polynomials over one level of the tower.
// c[i] is the coefficient of x^i; trailing zeros are stripped, the zero
// polynomial has an empty coefficient vector.

struct Poly {
    Level level{Level::Base};
    std::vector<Fe> c;
};

Poly poly_make(const Fq& F, Level l, const std::vector<Fe>& coeffs);
Poly poly_zero(Level l);
Poly poly_x(const Fq& F, Level l);
Poly poly_const(const Fq& F, const Fe& a);
int poly_deg(const Poly& f);  // -1 for the zero polynomial
bool poly_is_zero(const Poly& f);
Fe poly_coeff(const Fq& F, const Poly& f, int i);

Poly poly_add(const Fq& F, const Poly& a, const Poly& b);
Poly poly_sub(const Fq& F, const Poly& a, const Poly& b);
Poly poly_scale(const Fq& F, const Fe& k, const Poly& a);
Poly poly_mul(const Fq& F, const Poly& a, const Poly& b);
// Quotient/remainder; divisor must be nonzero.
std::pair<Poly, Poly> poly_divrem(const Fq& F, const Poly& a, const Poly& b);
Poly poly_mod(const Fq& F, const Poly& a, const Poly& b);
Poly poly_monic(const Fq& F, const Poly& a);
Poly poly_gcd(const Fq& F, const Poly& a, const Poly& b);  // monic gcd
Poly poly_derivative(const Fq& F, const Poly& a);
Fe poly_eval(const Fq& F, const Poly& a, const Fe& x);
Poly poly_from_roots(const Fq& F, Level l, const std::vector<Fe>& roots);
// (base^e) mod m by binary exponentiation.
Poly poly_powmod(const Fq& F, const Poly& base, uint64_t e, const Poly& m);
Poly poly_lift(const Fq& F, const Poly& a, Level target);
std::optional<Poly> poly_drop(const Fq& F, const Poly& a, Level target);

// All roots of f in its own coefficient field, with multiplicities, sorted
// in the canonical coordinate order.  Distinct roots are isolated with a
// gcd against x^q - x, then split equal-degree style with deterministic
// probe elements taken from the canonical enumeration of the level
// (Cantor-Zassenhaus with a counter in place of random draws).
// Throws ZeroPolynomial on the zero polynomial.
std::vector<std::pair<Fe, int>> poly_roots(const Fq& F, const Poly& f);

}  // namespace sspectra
