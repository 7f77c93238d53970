#include "sspectra/cgl.hpp"

#include <algorithm>
#include <stdexcept>

namespace sspectra {
namespace {

// unordered pair-set intersection test on two sorted pair triples
bool shares_pair(const std::array<std::pair<int, int>, 3>& x,
                 const std::array<std::pair<int, int>, 3>& y) {
    for (const auto& a : x)
        for (const auto& b : y)
            if (a == b) return true;
    return false;
}

}  // namespace

std::vector<int> hex_to_bits(const std::string& hex) {
    std::vector<int> bits;
    bits.reserve(hex.size() * 4);
    for (char ch : hex) {
        int v;
        if (ch >= '0' && ch <= '9')
            v = ch - '0';
        else if (ch >= 'a' && ch <= 'f')
            v = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F')
            v = ch - 'A' + 10;
        else
            throw std::invalid_argument("message is not a hex string");
        for (int k = 3; k >= 0; --k) bits.push_back((v >> k) & 1);
    }
    return bits;
}

// --- genus 1 ----------------------------------------------------------------

Cgl1State cgl1_start(const Fq& F) {
    if (F.p() % 12 != 1)
        throw BadPrime("the genus-1 hash walk requires p = 1 mod 12");
    auto verts = supersingular_vertices(F);
    EllCurve e = curve_from_j(F, verts.front().j);
    auto roots = two_torsion_roots(F, e);
    return Cgl1State{e, roots[2], 0};
}

Cgl1State cgl1_step(const Fq& F, const Cgl1State& s, int bit) {
    if (bit != 0 && bit != 1) throw std::invalid_argument("walk bits must be 0 or 1");
    auto roots = two_torsion_roots(F, s.e);
    std::vector<Fe> candidates;
    for (const auto& r : roots)
        if (!(r == s.marker)) candidates.push_back(r);
    if (candidates.size() != 2)
        throw std::logic_error("walk marker left the 2-torsion of the current curve");
    const Fe& chosen = candidates[static_cast<size_t>(bit)];
    const Fe& other = candidates[static_cast<size_t>(1 - bit)];
    Cgl1State next;
    next.e = velu_step2(F, s.e, chosen);
    next.marker = velu_image_x(F, s.e, chosen, other);
    next.steps = s.steps + 1;
    return next;
}

uint64_t cgl1_hash(const Fq& F, const std::vector<int>& bits) {
    Cgl1State s = cgl1_start(F);
    for (int b : bits) s = cgl1_step(F, s, b);
    return j_invariant(F, s.e).c[0];
}

// --- genus 2 ----------------------------------------------------------------

Cgl2State cgl2_start(const Fq& F) {
    auto verts = supersingular_vertices(F);
    EllCurve e0 = curve_from_j(F, verts.front().j);
    for (const auto& step : product_kernels(F, e0, e0)) {
        if (step.vertex.kind == "jacobian" && step.has_dual) {
            return Cgl2State{std::get<Sextic>(step.model), step.dual_pairs, 0};
        }
    }
    throw WalkLeftJacobianLocus("no Jacobian kernel at the starting product vertex");
}

std::vector<QuadSplitting> cgl2_good_splittings(const Fq& F, const Cgl2State& s) {
    auto splits = quadratic_splittings(F, s.model);
    std::vector<QuadSplitting> good;
    good.reserve(8);
    for (auto& sp : splits)
        if (!shares_pair(sp.pairs, s.incoming)) good.push_back(std::move(sp));
    // the enumeration is already ordered by the root-pair matchings; keep
    // the order explicit under filtering
    std::sort(good.begin(), good.end(),
              [](const QuadSplitting& a, const QuadSplitting& b) { return a.pairs < b.pairs; });
    if (good.size() != 8)
        throw WalkLeftJacobianLocus("good-extension count differs from eight");
    return good;
}

Cgl2State cgl2_step(const Fq& F, const Cgl2State& s, int chunk) {
    if (chunk < 0 || chunk > 7) throw std::invalid_argument("chunk value must lie in 0..7");
    auto good = cgl2_good_splittings(F, s);
    StepResult step = richelot_codomain(F, s.model, good[static_cast<size_t>(chunk)]);
    if (step.vertex.kind != "jacobian" || !step.has_dual)
        throw WalkLeftJacobianLocus("a selected step landed on an elliptic product");
    Cgl2State next;
    next.model = std::get<Sextic>(step.model);
    next.incoming = step.dual_pairs;
    next.steps = s.steps + 1;
    return next;
}

std::string cgl2_hash(const Fq& F, const std::vector<int>& bits) {
    if (F.p() < 5) throw BadPrime("the genus-2 hash walk requires p >= 5");
    if (bits.size() % 3 != 0)
        throw std::invalid_argument("the genus-2 walk consumes 3 bits per step; no padding");
    Cgl2State s = cgl2_start(F);
    for (size_t i = 0; i < bits.size(); i += 3) {
        int chunk = 4 * bits[i] + 2 * bits[i + 1] + bits[i + 2];
        s = cgl2_step(F, s, chunk);
    }
    return igusa_class(F, s.model);
}

}  // namespace sspectra
