#pragma once

// Combinatorics of the Bruhat-Tits building attached to the projective
// symplectic similitude group over the l-adic numbers, at desk scale:
//
//   * apartment vertices [a_1..a_n; b_1..b_n] with homothety-canonical
//     coordinates, labels mod 2n, duals, and the affine Weyl generators;
//   * exhaustive enumeration of Lagrangian (maximal totally isotropic)
//     subspaces of F_q^{2n} under the standard alternating form;
//   * lattice classes represented by an l-adic column Hermite form with
//     l-power pivots, homothety-normalized, unique and hashable;
//   * Hecke neighbors of a special lattice class (the prod (l^k+1)
//     Lagrangian lifts L <= L1 <= (1/l)L) and breadth-first balls in the
//     special 1-complex.
//
// Everything is exact integer arithmetic; no floating point.

#include <cstdint>
#include <string>
#include <vector>

#include "sspectra/errors.hpp"
#include "sspectra/spectra.hpp"

namespace sspectra {

// ---------------------------------------------------------------------------
// Apartment vertices
// ---------------------------------------------------------------------------

// Homothety class [a_1..a_n; b_1..b_n] of a diagonal lattice chain vertex.
// Canonical form: the minimum of all 2n coordinates is zero.
struct ApartmentVertex {
    std::vector<long long> a;
    std::vector<long long> b;

    int n() const { return static_cast<int>(a.size()); }
    bool operator==(const ApartmentVertex& o) const = default;
};

// Builds the canonical representative; a and b must have equal positive
// length (throws IndexOutOfRange otherwise).
ApartmentVertex apartment_make(std::vector<long long> a, std::vector<long long> b);

// Residue of (sum a_i + sum b_i) mod 2n, in [0, 2n).  Homothety-invariant:
// a common shift of all 2n coordinates changes the sum by a multiple of 2n.
int vertex_label(const ApartmentVertex& v);

// Dual class (-b; -a), renormalized.  An involution.
ApartmentVertex apartment_dual(const ApartmentVertex& v);

// Special label test: vertex_label in {0, n}.  On lattice-chain classes
// (all coordinate sums a_i + b_i within one of each other — exactly the
// classes the building's vertices come from) this is equivalent to
// self-duality; on wider coordinate tuples only the implication
// self-dual => special survives, e.g. [0,1; 1,2] has label 0 but is not
// self-dual.
bool is_special(const ApartmentVertex& v);

// Affine Weyl generator s_i for i in 1..n+1 (IndexOutOfRange otherwise):
//   s_1      swaps a_n and b_n;
//   s_j      (2 <= j <= n) swaps positions n-j+1, n-j+2 in a and in b;
//   s_{n+1}  maps (a_1, b_1) to (b_1 - 1, a_1 + 1).
// The result is renormalized.  All generators preserve the label.
ApartmentVertex weyl_apply(int i, const ApartmentVertex& v);

// ---------------------------------------------------------------------------
// Lagrangian subspaces of F_q^{2n}
// ---------------------------------------------------------------------------

// n-dimensional totally isotropic subspace of F_q^{2n} for the standard
// alternating form <x,y> = sum_i (x_i y_{n+i} - x_{n+i} y_i).  The basis is
// the unique reduced row-echelon representative, entries in [0, q).
struct LagrangianSubspace {
    int n{0};
    long long q{0};
    std::vector<std::vector<int>> basis;  // n rows of length 2n

    bool operator==(const LagrangianSubspace& o) const = default;
};

// Exhaustive enumeration, deduplicated by the canonical echelon form.
// Desk-scale guard: q prime <= 3 and n <= 3 (ScaleExceeded otherwise).
// The count is always prod_{k=1..n} (q^k + 1).
std::vector<LagrangianSubspace> lagrangians(int n, long long q);

// ---------------------------------------------------------------------------
// Lattice classes
// ---------------------------------------------------------------------------

// Homothety class of an l-adic lattice in dimension 2n.  The stored basis is
// mat / l^denom_exp (row-major 2n x 2n), where mat is the unique l-adic
// column Hermite form of the class scaled to be integral and primitive:
// lower triangular with pivot (r,r) an exact l-power l^{e_r}, entries left
// of the pivot reduced into [0, l^{e_r}), and some entry an l-adic unit.
// denom_exp is the minimal pivot valuation of mat, so the rational basis has
// minimal pivot valuation zero.  Equal classes compare equal field-by-field.
struct LatticeRep {
    int n{0};
    long long ell{0};
    std::vector<long long> mat;  // row-major, size (2n)^2
    int denom_exp{0};

    long long at(int r, int c) const { return mat[static_cast<size_t>(r) * (2 * n) + c]; }
    bool operator==(const LatticeRep& o) const = default;
    std::string key() const;
};

// Canonicalizes the class spanned by the columns of a row-major 2n x 2n
// integer matrix (any integral scaling of the intended basis; the class is
// homothety-invariant).  Throws std::invalid_argument if the matrix is
// singular, ScaleExceeded if entries exceed desk scale (|entry| > 2^16) or
// the pivot valuations overflow the working modulus.
LatticeRep lattice_make(int n, long long ell, const std::vector<long long>& mat);

// The standard self-dual lattice: identity basis.
LatticeRep lattice_standard(int n, long long ell);

// Valuation of the basis determinant mod 2n, in [0, 2n).  Well defined on
// homothety classes; apartment vertices embedded diagonally agree.
int lattice_label(const LatticeRep& L);

// Special (self-dual up to scaling): the Gram matrix of the basis under the
// standard alternating form is an l-power times a unimodular matrix.
bool lattice_is_special(const LatticeRep& L);

// The prod_{k=1..n} (l^k + 1) Hecke neighbors of a special class: for each
// Lagrangian W of L/lL (transported through a symplectic basis of the
// reduced Gram form), the class of L + (1/l)W~.  Returned with multiplicity
// if classes coincide.  Throws NotSpecialVertex if L is not special.
std::vector<LatticeRep> hecke_neighbors(const LatticeRep& L);

// ---------------------------------------------------------------------------
// Balls in the special 1-complex
// ---------------------------------------------------------------------------

struct BallResult {
    WeightedMultiGraph graph;     // unit weights (ra = 1), kind "lattice"
    std::vector<int> label;       // vertex labels mod 2n
    std::vector<int> dist;        // BFS distance from the center
    int expanded{0};              // number of vertices whose edges are present
    bool interior_regular{false}; // every expanded vertex has out-degree N_n(l)
    bool bipartite_by_label{false};  // every edge joins label 0 to label n
};

// Breadth-first ball of the given radius around a special class.  Edges are
// recorded (with Hecke multiplicity) for every vertex at distance < radius.
// Construction asserts out-degree prod (l^k + 1) at each expanded vertex and
// that every edge joins the two special labels 0 and n.  Desk-scale guard on
// (n, radius): n=1 r<=8, n=2 r<=3, n=3 r<=1 (ScaleExceeded otherwise).
BallResult ball(const LatticeRep& center, int radius);

}  // namespace sspectra
