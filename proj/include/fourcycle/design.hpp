#pragma once

// Core value types for 4-cycle systems: blocks, systems, colourings and the
// derived parameters (s, h, k, v, q, r) shared by every construction.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fourcycle {

// Structurally bad input data (duplicate labels, odd part sizes, ...).
struct malformed_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parameters outside the range a construction is defined for.
struct not_applicable_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A search that is guaranteed to succeed did not; always a bug worth noise.
struct infeasible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The 4-cycle (a,b,c,d): edges {a,b},{b,c},{c,d},{d,a}. The diagonals
// {a,c},{b,d} are not edges.
struct Cycle4 {
    int a = 0;
    int b = 0;
    int c = 0;
    int d = 0;

    std::array<int, 4> labels() const { return {a, b, c, d}; }

    friend bool operator==(const Cycle4&, const Cycle4&) = default;
    friend auto operator<=>(const Cycle4&, const Cycle4&) = default;
};

using Edge = std::pair<int, int>;  // normalized: first < second

inline std::array<Edge, 4> block_edges(const Cycle4& blk) {
    auto e = [](int x, int y) { return x < y ? Edge{x, y} : Edge{y, x}; };
    return {e(blk.a, blk.b), e(blk.b, blk.c), e(blk.c, blk.d), e(blk.d, blk.a)};
}

// Unique representative of the dihedral orbit (4 rotations x reflection):
// starts at the smallest label, second entry is the smaller neighbour.
inline Cycle4 canonicalize(const Cycle4& blk) {
    const std::array<int, 4> v = blk.labels();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (v[i] == v[j])
                throw malformed_error("canonicalize: block has duplicate label " +
                                      std::to_string(v[i]));
    int m = 0;
    for (int i = 1; i < 4; ++i)
        if (v[i] < v[m]) m = i;
    const int next = v[(m + 1) % 4];
    const int prev = v[(m + 3) % 4];
    if (next < prev)
        return {v[m], v[(m + 1) % 4], v[(m + 2) % 4], v[(m + 3) % 4]};
    return {v[m], v[(m + 3) % 4], v[(m + 2) % 4], v[(m + 1) % 4]};
}

// Vertex set {0..order-1} plus the block list. Valid when the blocks
// partition the edge set of the complete graph (see verify_cycle_system).
struct CycleSystem {
    int order = 0;
    std::vector<Cycle4> blocks;
};

// One colour id per block, parallel to CycleSystem::blocks; ids are 1..num_colours.
struct Colouring {
    std::vector<int> colours;
    int num_colours = 0;
};

// Derived quantities for v = 1+8k with k = h*s. The Euclidean split
// 4k = q*s + r has r = 0 whenever s | k.
struct Params {
    int s = 0;
    int h = 0;
    int k = 0;
    int v = 0;
    int q = 0;
    int r = 0;
    long long blocks_total = 0;

    friend bool operator==(const Params&, const Params&) = default;
};

inline Params derive_params(int s, int h) {
    if (s < 1) throw std::invalid_argument("derive_params: s must be >= 1");
    if (h < 1) throw std::invalid_argument("derive_params: h must be >= 1 (v = 1 is excluded)");
    Params p;
    p.s = s;
    p.h = h;
    p.k = h * s;
    p.v = 1 + 8 * p.k;
    p.q = 4 * h;
    p.r = 0;
    p.blocks_total = static_cast<long long>(p.k) * p.v;
    return p;
}

enum class ConstructionCase { base, splus1, mid, high };

inline std::string to_string(ConstructionCase cc) {
    switch (cc) {
        case ConstructionCase::base: return "base";
        case ConstructionCase::splus1: return "splus1";
        case ConstructionCase::mid: return "mid";
        case ConstructionCase::high: return "high";
    }
    return "?";
}

// Where a block came from: a starter-block orbit, one of the sub-systems, or
// a bipartite family [A_p,A_q]. Carried as metadata, never encoded in labels.
struct BlockOrigin {
    enum class Kind { starter, subsystem, family };
    Kind kind = Kind::starter;
    int index = 0;   // starter index / sub-system index / family p
    int second = 0;  // family q (unused otherwise)

    friend bool operator==(const BlockOrigin&, const BlockOrigin&) = default;
};

struct ColouredSystem {
    Params params;
    CycleSystem system;
    Colouring colouring;
    ConstructionCase construction_case = ConstructionCase::base;
    std::vector<BlockOrigin> origins;  // parallel to system.blocks; may be empty
};

}  // namespace fourcycle
