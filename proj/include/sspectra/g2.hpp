#pragma once

// Genus-2 side of the (2,2)-isogeny graph over F_p^2: hyperelliptic models
// y^2 = f(x) with deg f in {5,6}, their quadratic splittings, Richelot
// quotients, elliptic-product vertices with product/gluing kernels, Igusa
// class keys, reduced automorphism orders, and the full graph builder.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sspectra/ec.hpp"
#include "sspectra/ff.hpp"
#include "sspectra/spectra.hpp"

namespace sspectra {

// y^2 = c[6] x^6 + ... + c[0]; degree 5 or 6, squarefree.
struct Sextic {
    std::array<Fe, 7> c;  // quad level
};

Sextic sextic_make(const Fq& F, const std::vector<Fe>& coeffs);
// 5 or 6; throws SingularCurve if the degree is below 5.
int sextic_degree(const Fq& F, const Sextic& f);

// Point of P^1 over F_p^4: (u : 1) finite or (1 : 0) at infinity.
struct ProjRoot {
    Fe u;  // quart level
    Fe v;
    bool infinite{false};
};

// The 6 projective roots of f over F_p^4 (one at infinity when deg f = 5),
// finite roots first in canonical order, infinity last.  Throws
// SingularCurve on a repeated root.
std::vector<ProjRoot> sextic_roots(const Fq& F, const Sextic& f);

// Substitute the invertible change of frame (x : z) -> (a x + b z, c x + d z)
// into the degree-6 homogenization of f.  Roots move by the inverse Moebius
// map; the isomorphism class of y^2 = f is preserved.
Sextic sextic_transform(const Fq& F, const Sextic& f, const Fe& a, const Fe& b,
                        const Fe& c, const Fe& d);

// One factorization f = lc * g1 g2 g3 into monic factors pairing up the six
// roots ({r, infinity} gives a monic linear factor).  delta is the
// determinant of the 3x3 matrix whose rows are the (constant, linear,
// quadratic) coefficients of g1, g2, g3.
struct QuadSplitting {
    std::array<Poly, 3> g;  // quad level, degree <= 2
    Fe delta;               // quad level
    std::array<std::pair<int, int>, 3> pairs;  // indices into sextic_roots(f)
};

// All 15 pairings of the six roots, in the deterministic order that always
// pairs the smallest unused root index first.  Throws SplittingNotRational
// if a factor fails to descend to F_p^2.
std::vector<QuadSplitting> quadratic_splittings(const Fq& F, const Sextic& f);

// (J2, J4, J6, J8, J10) with 4 J8 = J2 J6 - J4^2 and J10 != 0 iff f is
// squarefree (throws SingularCurve otherwise).
std::array<Fe, 5> igusa_invariants(const Fq& F, const Sextic& f);

// Canonical isomorphism-class key: the support of the nonzero J's together
// with the values of a fixed integer basis of weight-zero monomials in
// them.  Complete for the weighted scaling action, with no root extraction.
std::string igusa_class(const Fq& F, const Sextic& f);

std::string product_key(const Fq& F, const Fe& j1, const Fe& j2);

struct G2Vertex {
    std::string kind;  // "jacobian" | "product"
    std::string key;
    int ra_order{1};
};

// Model backing a vertex: a sextic for Jacobians, an (ordered canonically)
// pair of elliptic curves for products.
using G2Model = std::variant<Sextic, std::pair<EllCurve, EllCurve>>;

struct StepResult {
    G2Vertex vertex;
    G2Model model;
    // For Jacobian codomains: the image kernel as a pairing of the
    // codomain's canonical root indices (sorted pairs, sorted by first).
    std::array<std::pair<int, int>, 3> dual_pairs{};
    bool has_dual{false};
};

// Quotient by the kernel attached to one splitting: delta != 0 gives the
// Jacobian of y^2 = H1 H2 H3 with H_i = delta^{-1} (g_j' g_k - g_j g_k')
// for cyclic (i,j,k); delta = 0 degenerates to the elliptic product cut out
// by the pencil of the three dependent factors.
StepResult richelot_codomain(const Fq& F, const Sextic& f, const QuadSplitting& s);

// Codomain of the gluing kernel along the 2-torsion bijection
// roots(e1)[i] <-> roots(e2)[perm[i]].  Degenerates to a product exactly
// when the bijection is the restriction of an isomorphism.
StepResult glue_along_2torsion(const Fq& F, const EllCurve& e1,
                               const EllCurve& e2, const std::array<int, 3>& perm);

// The 15 kernels of a product vertex: 9 factor-wise quotient pairs followed
// by the 6 gluings, in deterministic order.
std::vector<StepResult> product_kernels(const Fq& F, const EllCurve& e1,
                                        const EllCurve& e2);

// The 15 outgoing steps of any vertex model, in deterministic order.
std::vector<StepResult> expand_vertex(const Fq& F, const G2Model& m);

// Order of Aut/{+-1}: for a sextic, the number of projective-line maps
// permuting its six roots; for a product, the factor-automorphism count
// (|Aut E1| |Aut E2| / 2, doubled when the factors are isomorphic).
int reduced_automorphism_order(const Fq& F, const Sextic& f);
int reduced_automorphism_order(const Fq& F, const EllCurve& e1, const EllCurve& e2);

struct Gr2Build {
    WeightedMultiGraph graph;
    std::vector<G2Model> models;  // one per vertex, in discovery order
};

// The (2,2)-isogeny multigraph over F_p^2, discovered from E0 x E0 where E0
// is the canonically smallest rational supersingular curve.
Gr2Build build_gr2(const Fq& F, int threads = 1);

}  // namespace sspectra
