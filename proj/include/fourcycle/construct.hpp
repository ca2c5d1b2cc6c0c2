#pragma once

// Uncoloured 4-cycle systems: cyclic systems from starter blocks, bipartite
// families [A,B], and the two composition schemes (s big parts around an
// infinity point, or 2s half-parts paired through shared sub-systems).

#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fourcycle/design.hpp"
#include "fourcycle/verify.hpp"

namespace fourcycle {

struct LabelRange {
    int lo = 0;
    int hi = 0;  // inclusive

    int size() const { return hi - lo + 1; }
    bool contains(int x) const { return lo <= x && x <= hi; }

    friend bool operator==(const LabelRange&, const LabelRange&) = default;
};

// Disjoint label intervals A_1..A_n plus the reserved infinity label; together
// they cover {0..v-1} exactly.
struct PartLayout {
    std::vector<LabelRange> parts;  // parts[i-1] holds A_i
    int infinity = 0;

    int num_parts() const { return static_cast<int>(parts.size()); }

    const LabelRange& part(int i) const { return parts.at(static_cast<size_t>(i) - 1); }

    std::vector<int> part_labels(int i) const {
        const LabelRange& range = part(i);
        std::vector<int> out;
        out.reserve(range.size());
        for (int x = range.lo; x <= range.hi; ++x) out.push_back(x);
        return out;
    }
};

// A composed system plus the metadata the colouring stage needs: the part
// layout, one origin tag per block, and the family index pairs in emission
// order.
struct Composition {
    CycleSystem system;
    PartLayout layout;
    std::vector<BlockOrigin> origins;
    std::vector<std::pair<int, int>> family_pairs;
};

using SubsystemFactory = std::function<CycleSystem()>;

// The k base blocks (0, i, 4k+1, k+i) on Z_{8k+1}; their edge differences
// run through 1..4k once each, so the translates tile K_v.
inline std::vector<Cycle4> starter_blocks(int k) {
    if (k < 1) throw std::invalid_argument("starter_blocks: k must be >= 1");
    std::vector<Cycle4> out;
    out.reserve(static_cast<size_t>(k));
    for (int i = 1; i <= k; ++i) out.push_back({0, i, 4 * k + 1, k + i});
    return out;
}

// All v translates of each starter block. Blocks are emitted starter-major,
// translate-minor: block (i-1)*v + t is starter i shifted by t.
inline CycleSystem cyclic_4cs(int k) {
    const int v = 8 * k + 1;
    CycleSystem sys;
    sys.order = v;
    sys.blocks.reserve(static_cast<size_t>(k) * v);
    for (const Cycle4& st : starter_blocks(k))
        for (int t = 0; t < v; ++t)
            sys.blocks.push_back(canonicalize(
                {(st.a + t) % v, (st.b + t) % v, (st.c + t) % v, (st.d + t) % v}));
    return sys;
}

// The pq blocks (a_i, b_j, a_{i+p}, b_{j+q}) with p = |A|/2, q = |B|/2; they
// cover every A-B cross edge exactly once and no edge inside A or B.
inline std::vector<Cycle4> bipartite_family(const std::vector<int>& a_part,
                                            const std::vector<int>& b_part) {
    if (a_part.size() < 2 || a_part.size() % 2 != 0)
        throw malformed_error("bipartite_family: |A| must be even and >= 2");
    if (b_part.size() < 2 || b_part.size() % 2 != 0)
        throw malformed_error("bipartite_family: |B| must be even and >= 2");
    std::set<int> seen(a_part.begin(), a_part.end());
    if (seen.size() != a_part.size())
        throw malformed_error("bipartite_family: A has repeated labels");
    for (int x : b_part)
        if (!seen.insert(x).second)
            throw malformed_error("bipartite_family: parts overlap or B repeats label " +
                                  std::to_string(x));
    const size_t p = a_part.size() / 2;
    const size_t q = b_part.size() / 2;
    std::vector<Cycle4> out;
    out.reserve(p * q);
    for (size_t i = 0; i < p; ++i)
        for (size_t j = 0; j < q; ++j)
            out.push_back(canonicalize(
                {a_part[i], b_part[j], a_part[i + p], b_part[j + q]}));
    return out;
}

namespace detail {

inline void check_subsystem(const CycleSystem& sub, int expected_order) {
    if (sub.order != expected_order)
        throw malformed_error("subsystem factory returned order " + std::to_string(sub.order) +
                              ", expected " + std::to_string(expected_order));
    VerificationReport rep = verify_cycle_system(sub);
    if (!rep.passed())
        throw malformed_error("subsystem factory returned an invalid system: " +
                              rep.failures.front().witness);
}

}  // namespace detail

// Parts A_1..A_s of size 8h around infinity = 0; a 4CS(1+8h) on each
// A_i u {oo} plus the family [A_p,A_q] for every p < q. Order v = 1+8hs.
inline Composition compose_star(int s, int h, SubsystemFactory subsystem_factory = nullptr) {
    if (s < 2) throw not_applicable_error("compose_star: needs s >= 2");
    if (h < 1) throw std::invalid_argument("compose_star: h must be >= 1");
    if (!subsystem_factory) subsystem_factory = [h] { return cyclic_4cs(h); };

    const int w = 8 * h;
    const int v = 1 + 8 * h * s;
    Composition comp;
    comp.system.order = v;
    comp.layout.infinity = 0;
    for (int i = 1; i <= s; ++i)
        comp.layout.parts.push_back({1 + (i - 1) * w, i * w});

    for (int i = 1; i <= s; ++i) {
        CycleSystem sub = subsystem_factory();
        detail::check_subsystem(sub, 1 + 8 * h);
        const int base = (i - 1) * w;
        auto relabel = [base](int l) { return l == 0 ? 0 : base + l; };
        for (const Cycle4& blk : sub.blocks) {
            comp.system.blocks.push_back(canonicalize(
                {relabel(blk.a), relabel(blk.b), relabel(blk.c), relabel(blk.d)}));
            comp.origins.push_back({BlockOrigin::Kind::subsystem, i, 0});
        }
    }
    for (int p = 1; p <= s; ++p)
        for (int q = p + 1; q <= s; ++q) {
            for (const Cycle4& blk :
                 bipartite_family(comp.layout.part_labels(p), comp.layout.part_labels(q))) {
                comp.system.blocks.push_back(blk);
                comp.origins.push_back({BlockOrigin::Kind::family, p, q});
            }
            comp.family_pairs.push_back({p, q});
        }
    return comp;
}

// Parts A_1..A_{2s} of size 4h; a 4CS(1+8h) on A_i u A_{i+1} u {oo} for each
// odd i, plus [A_p,A_q] for every pair except the siblings (1,2),(3,4),...
inline Composition compose_half(int s, int h, SubsystemFactory subsystem_factory = nullptr) {
    if (s < 3) throw not_applicable_error("compose_half: needs s >= 3");
    if (h < 1) throw std::invalid_argument("compose_half: h must be >= 1");
    if (!subsystem_factory) subsystem_factory = [h] { return cyclic_4cs(h); };

    const int w = 4 * h;
    const int v = 1 + 8 * h * s;
    Composition comp;
    comp.system.order = v;
    comp.layout.infinity = 0;
    for (int i = 1; i <= 2 * s; ++i)
        comp.layout.parts.push_back({1 + (i - 1) * w, i * w});

    for (int i = 1; i <= 2 * s - 1; i += 2) {
        CycleSystem sub = subsystem_factory();
        detail::check_subsystem(sub, 1 + 8 * h);
        // local 1..4h lands in A_i, local 4h+1..8h in A_{i+1}: the two ranges
        // are adjacent, so a single offset covers both.
        const int base = (i - 1) * w;
        auto relabel = [base](int l) { return l == 0 ? 0 : base + l; };
        for (const Cycle4& blk : sub.blocks) {
            comp.system.blocks.push_back(canonicalize(
                {relabel(blk.a), relabel(blk.b), relabel(blk.c), relabel(blk.d)}));
            comp.origins.push_back({BlockOrigin::Kind::subsystem, i, 0});
        }
    }
    for (int p = 1; p <= 2 * s; ++p)
        for (int q = p + 1; q <= 2 * s; ++q) {
            if (p % 2 == 1 && q == p + 1) continue;  // sibling pair, covered by its sub-system
            for (const Cycle4& blk :
                 bipartite_family(comp.layout.part_labels(p), comp.layout.part_labels(q))) {
                comp.system.blocks.push_back(blk);
                comp.origins.push_back({BlockOrigin::Kind::family, p, q});
            }
            comp.family_pairs.push_back({p, q});
        }
    return comp;
}

}  // namespace fourcycle
