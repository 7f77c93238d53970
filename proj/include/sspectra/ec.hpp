#pragma once

// Supersingular elliptic curves over F_p^2 in short Weierstrass form
// y^2 = x^3 + ax + b, their (l+1)-regular l-isogeny graphs for l in {2,3},
// and the quotient steps used by both the graph builder and the hash walk.

#include <cstdint>
#include <string>
#include <vector>

#include "sspectra/ff.hpp"
#include "sspectra/spectra.hpp"

namespace sspectra {

struct EllCurve {
    Fe a;  // quad level
    Fe b;
};

// j = 1728 * 4a^3 / (4a^3 + 27b^2); throws SingularCurve when disc = 0.
Fe j_invariant(const Fq& F, const EllCurve& e);

// Deterministic short Weierstrass model with the given j-invariant
// (a,b) = (0,1) for j=0, (1,0) for j=1728, else (3j(1728-j), 2j(1728-j)^2).
EllCurve curve_from_j(const Fq& F, const Fe& j);

// Supersingularity test by exhaustive point count of an F_p model: the
// count equals p+1 exactly iff the curve is supersingular (p >= 5).
// Requires j(E) in F_p; throws ModelNotRational otherwise.
bool is_supersingular(const Fq& F, const EllCurve& e);
bool is_supersingular_j(const Fq& F, const Fe& j);

struct JVertex {
    Fe j;          // quad level
    int ra_order;  // |Aut(E)/{±1}|: 3 for j=0, 2 for j=1728, else 1
};

int reduced_automorphism_order_j(const Fq& F, const Fe& j);

// All supersingular j-invariants over F_p^2: scan j in F_p with the point
// count, then close under 2-isogeny to pick up conjugate pairs outside F_p.
// Sorted canonically.
std::vector<JVertex> supersingular_vertices(const Fq& F);

// x-coordinates of the nontrivial 2-torsion: the 3 roots of x^3 + ax + b
// over F_p^2, sorted.  Throws NotSupersingular if the cubic does not split.
std::vector<Fe> two_torsion_roots(const Fq& F, const EllCurve& e);

// Quotient by the order-2 subgroup generated by (x0, 0).
EllCurve velu_step2(const Fq& F, const EllCurve& e, const Fe& x0);
// x-coordinate image of a point under that quotient.
Fe velu_image_x(const Fq& F, const EllCurve& e, const Fe& x0, const Fe& xp);

// Multiset of neighbor j-invariants under (l)-isogenies, l in {2,3}:
// l=2: one per 2-torsion point; l=3: one per root of the degree-4 division
// polynomial 3x^4 + 6ax^2 + 12bx - a^2 (roots pair up over F_p^4 when not
// rational over F_p^2).  Sorted canonically; size l+1.
std::vector<Fe> isogeny_neighbors(const Fq& F, const EllCurve& e, int ell);

std::string j_key(const Fq& F, const Fe& j);

// The supersingular l-isogeny multigraph over F_p^2 with reduced
// automorphism weights; vertices are discovered from the canonically
// smallest F_p-rational supersingular j.
WeightedMultiGraph build_gr1(const Fq& F, int ell, int threads = 1);

}  // namespace sspectra
