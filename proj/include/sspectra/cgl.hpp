#pragma once

// Hash walks on the supersingular isogeny graphs: message bits steer a
// non-backtracking walk and the digest is the endpoint.
//
//   * genus 1, l=2: each bit picks one of the two 2-torsion kernels that do
//     not undo the previous step; the digest is the first tower coordinate
//     of the final j-invariant.
//   * genus 2, l=2: each 3-bit chunk picks one of the 8 splittings sharing
//     no root pair with the incoming kernel; the digest is the canonical
//     class key of the final Jacobian.
//
// Both walks have fixed deterministic starts, so equal messages always
// produce equal digests and messages diverging at bit k produce walks that
// first diverge at step k.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sspectra/ec.hpp"
#include "sspectra/errors.hpp"
#include "sspectra/ff.hpp"
#include "sspectra/g2.hpp"

namespace sspectra {

// Hex string to bits, four bits per digit, most significant first.
// Throws std::invalid_argument on a non-hex character.
std::vector<int> hex_to_bits(const std::string& hex);

// --- genus 1 ----------------------------------------------------------------

struct Cgl1State {
    EllCurve e;
    Fe marker;  // x-coordinate of the kernel dual to the last step
    int steps{0};
};

// Fixed start: the canonically smallest supersingular j over F_p^2, with the
// largest 2-torsion x-coordinate as the incoming marker.  Requires
// p = 1 mod 12 (throws BadPrime).
Cgl1State cgl1_start(const Fq& F);

// One walk step: the two non-marker 2-torsion x-coordinates in canonical
// order, bit selects, quotient, mark the dual kernel.
Cgl1State cgl1_step(const Fq& F, const Cgl1State& s, int bit);

// Digest of the whole message: first tower coordinate of the final
// j-invariant as a residue mod p.  The empty message digests the start.
uint64_t cgl1_hash(const Fq& F, const std::vector<int>& bits);

// --- genus 2 ----------------------------------------------------------------

struct Cgl2State {
    Sextic model;
    std::array<std::pair<int, int>, 3> incoming{};  // dual kernel as root pairs
    int steps{0};
};

// Fixed start: the first Jacobian produced by the canonical expansion of
// E0 x E0 (the graph builder's starting product), with that discovery
// step's dual kernel as the incoming splitting.
Cgl2State cgl2_start(const Fq& F);

// The 8 splittings sharing no root pair with the incoming kernel, ordered
// by their root-pair matchings.  Throws WalkLeftJacobianLocus if the count
// is not exactly 8.
std::vector<QuadSplitting> cgl2_good_splittings(const Fq& F, const Cgl2State& s);

// One walk step selecting good splitting number chunk (0..7).  Throws
// WalkLeftJacobianLocus when the selected quotient is an elliptic product.
Cgl2State cgl2_step(const Fq& F, const Cgl2State& s, int chunk);

// Digest: canonical class key of the final Jacobian.  The bit count must be
// a multiple of 3 (throws std::invalid_argument; no padding).  Chunks read
// their 3 bits most significant first.
std::string cgl2_hash(const Fq& F, const std::vector<int>& bits);

}  // namespace sspectra
