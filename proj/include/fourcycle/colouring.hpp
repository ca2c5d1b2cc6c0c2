#pragma once

// Equitable c-colourings of type s for every c in [s, (2s^2+s)/3]: the base
// cyclic colouring at c = s, the residue colouring at c = s+1, family
// recolouring in the middle band, and decomposition classes at the top.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fourcycle/construct.hpp"
#include "fourcycle/decompose.hpp"
#include "fourcycle/design.hpp"

namespace fourcycle {

struct SpectrumRange {
    int lo = 0;
    int hi = 0;

    bool contains(int c) const { return lo <= c && c <= hi; }
    friend bool operator==(const SpectrumRange&, const SpectrumRange&) = default;
};

// The constructed colour counts: s through floor((2s^2+s)/3).
inline SpectrumRange spectrum_range(int s, int h) {
    if (s < 1 || h < 1) throw std::invalid_argument("spectrum_range: s, h must be >= 1");
    return {s, (2 * s * s + s) / 3};
}

// Which construction handles a given c; c must lie in spectrum_range(s, .).
inline ConstructionCase dispatch_case(int s, int c) {
    if (c == s) return ConstructionCase::base;
    if (c == s + 1) return ConstructionCase::splus1;
    if (2 * c <= s * s + s) return ConstructionCase::mid;
    return ConstructionCase::high;
}

namespace detail {

// residue of x mod m, represented in {1..m}
inline int residue_colour(int x, int m) { return (x - 1) % m + 1; }

}  // namespace detail

// c = s: cyclic system on Z_v; starter orbits i = (j-1)h+1 .. jh get colour j.
inline ColouredSystem colour_case_base(int s, int h) {
    ColouredSystem out;
    out.params = derive_params(s, h);
    out.system = cyclic_4cs(out.params.k);
    out.construction_case = ConstructionCase::base;
    out.colouring.num_colours = s;
    // cyclic_4cs emits blocks starter-major: index (i-1)*v + t comes from starter i
    for (int i = 1; i <= out.params.k; ++i) {
        const int colour = (i + h - 1) / h;
        for (int t = 0; t < out.params.v; ++t) {
            out.colouring.colours.push_back(colour);
            out.origins.push_back({BlockOrigin::Kind::starter, i, 0});
        }
    }
    return out;
}

// c = s+1: star composition; sub-system i keeps colour i, family [A_p,A_q]
// gets the representative of p+q mod s+1 in {1..s+1}.
inline ColouredSystem colour_case_splus1(int s, int h) {
    if (s < 2)
        throw not_applicable_error("colour_case_splus1: needs s >= 2 (no part pairs at s = 1)");
    Composition comp = compose_star(s, h);
    ColouredSystem out;
    out.params = derive_params(s, h);
    out.system = std::move(comp.system);
    out.construction_case = ConstructionCase::splus1;
    out.colouring.num_colours = s + 1;
    out.origins = std::move(comp.origins);
    out.colouring.colours.reserve(out.origins.size());
    for (const BlockOrigin& o : out.origins)
        out.colouring.colours.push_back(o.kind == BlockOrigin::Kind::subsystem
                                            ? o.index
                                            : detail::residue_colour(o.index + o.second, s + 1));
    return out;
}

// s+2 <= c <= (s^2+s)/2: recolour c-s-1 whole families with fresh colours.
// Pairs are taken in lexicographic order, but the selection never exhausts
// the pairs with p+q = 0 mod s+1: recolouring all of them would kill colour
// s+1 and leave only c-1 colours.
inline ColouredSystem colour_case_mid(int s, int h, int c) {
    if (s < 3)
        throw not_applicable_error("colour_case_mid: range s+2..(s^2+s)/2 is empty for s < 3");
    if (c < s + 2 || 2 * c > s * s + s)
        throw not_applicable_error("colour_case_mid: c = " + std::to_string(c) +
                                   " outside s+2..(s^2+s)/2");
    ColouredSystem out = colour_case_splus1(s, h);
    out.construction_case = ConstructionCase::mid;
    out.colouring.num_colours = c;

    const int need = c - s - 1;
    int residue_zero_left = 0;
    for (int p = 1; p <= s; ++p)
        for (int q = p + 1; q <= s; ++q)
            if ((p + q) % (s + 1) == 0) ++residue_zero_left;

    std::map<std::pair<int, int>, int> fresh;  // pair -> new colour
    int next = s + 2;
    for (int p = 1; p <= s && static_cast<int>(fresh.size()) < need; ++p)
        for (int q = p + 1; q <= s && static_cast<int>(fresh.size()) < need; ++q) {
            const bool residue_zero = (p + q) % (s + 1) == 0;
            if (residue_zero && residue_zero_left == 1) continue;  // keep colour s+1 alive
            if (residue_zero) --residue_zero_left;
            fresh[{p, q}] = next++;
        }
    if (static_cast<int>(fresh.size()) < need)
        throw infeasible_error("colour_case_mid: pair selection exhausted (bug)");

    for (size_t bi = 0; bi < out.origins.size(); ++bi) {
        const BlockOrigin& o = out.origins[bi];
        if (o.kind != BlockOrigin::Kind::family) continue;
        auto it = fresh.find({o.index, o.second});
        if (it != fresh.end()) out.colouring.colours[bi] = it->second;
    }
    return out;
}

// (s^2+s)/2+1 <= c <= (2s^2+s)/3: half composition; family [A_p,A_q] gets
// colour s+m where (p,q) sits in cycle m of the K_{2s}-I decomposition.
inline ColouredSystem colour_case_high(int s, int h, int c) {
    if (s < 3)
        throw not_applicable_error("colour_case_high: range is empty for s < 3");
    const int t = c - (s * s + s) / 2;
    if (t < 1 || 6 * t > s * s - s)
        throw not_applicable_error("colour_case_high: c = " + std::to_string(c) +
                                   " outside (s^2+s)/2+1..(2s^2+s)/3");
    Composition comp = compose_half(s, h);
    Decomposition dec = decompose(s, t);

    std::map<Edge, int> cycle_of;  // part-index edge -> cycle number (triangles first)
    int m = 0;
    auto note = [&cycle_of, &m](int x, int y) {
        cycle_of[{std::min(x, y), std::max(x, y)}] = m;
    };
    for (const auto& tri : dec.triangles) {
        ++m;
        note(tri[0], tri[1]);
        note(tri[1], tri[2]);
        note(tri[0], tri[2]);
    }
    for (const auto& qd : dec.quads) {
        ++m;
        note(qd[0], qd[1]);
        note(qd[1], qd[2]);
        note(qd[2], qd[3]);
        note(qd[3], qd[0]);
    }

    ColouredSystem out;
    out.params = derive_params(s, h);
    out.system = std::move(comp.system);
    out.construction_case = ConstructionCase::high;
    out.colouring.num_colours = c;
    out.origins = std::move(comp.origins);
    out.colouring.colours.reserve(out.origins.size());
    for (const BlockOrigin& o : out.origins) {
        if (o.kind == BlockOrigin::Kind::subsystem) {
            out.colouring.colours.push_back((o.index + 1) / 2);
        } else {
            auto it = cycle_of.find({o.index, o.second});
            if (it == cycle_of.end())
                throw infeasible_error("colour_case_high: family pair not covered by the "
                                       "decomposition (bug)");
            out.colouring.colours.push_back(s + it->second);
        }
    }
    return out;
}

// Dispatch over the four cases; rejects c outside the constructed spectrum.
inline ColouredSystem build(int s, int h, int c) {
    const SpectrumRange range = spectrum_range(s, h);
    if (!range.contains(c))
        throw not_applicable_error("build: c = " + std::to_string(c) +
                                   " outside the constructed spectrum " +
                                   std::to_string(range.lo) + ".." + std::to_string(range.hi));
    switch (dispatch_case(s, c)) {
        case ConstructionCase::base: return colour_case_base(s, h);
        case ConstructionCase::splus1: return colour_case_splus1(s, h);
        case ConstructionCase::mid: return colour_case_mid(s, h, c);
        case ConstructionCase::high: return colour_case_high(s, h, c);
    }
    throw infeasible_error("build: unreachable");
}

}  // namespace fourcycle
