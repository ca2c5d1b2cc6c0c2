#pragma once

// Partition of K_{2s} minus the 1-factor I = {(1,2),(3,4),...,(2s-1,2s)} into
// 4t triangles and (s^2-s)/2 - 3t quadrilaterals. decompose() is a
// deterministic backtracking search; enumerate_decompositions() is a separate
// exhaustive exact-cover oracle for cross-checking it at small s.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fourcycle/design.hpp"

namespace fourcycle {

// 3- and 4-cycles on labels {1..2s} covering each non-matching edge once.
// Class numbering is triangles first: cycle m is triangles[m-1] for
// m <= |triangles|, then quads[m-|triangles|-1].
struct Decomposition {
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 4>> quads;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Edge balance: 2s^2 - 2s = 3*(4t) + 4*((s^2-s)/2 - 3t) fixes the cycle mix.
inline std::pair<int, int> triangle_quad_counts(int s, int t) {
    if (s < 3) throw not_applicable_error("triangle_quad_counts: needs s >= 3");
    if (t < 1 || 6 * t > s * s - s)
        throw not_applicable_error("triangle_quad_counts: t = " + std::to_string(t) +
                                   " outside 1 <= t <= (s^2-s)/6");
    return {4 * t, (s * s - s) / 2 - 3 * t};
}

inline Decomposition decompose(int s, int t) {
    const auto [n3, n4] = triangle_quad_counts(s, t);
    const int n = 2 * s;

    // used[u][v]: edge already consumed; the matching edges start out used so
    // the search never touches them.
    std::vector<std::vector<char>> used(n + 1, std::vector<char>(n + 1, 0));
    for (int i = 1; i < n; i += 2) used[i][i + 1] = used[i + 1][i] = 1;

    Decomposition out;
    auto take = [&used](int x, int y) { used[x][y] = used[y][x] = 1; };
    auto give = [&used](int x, int y) { used[x][y] = used[y][x] = 0; };

    // Branch on the lexicographically smallest uncovered edge (u,v). Any
    // cycle of a completed partition that covers (u,v) has all its edges
    // uncovered here, so (u,v) is that cycle's smallest edge; enumerating
    // only cycles with (u,v) as smallest edge visits each candidate once.
    std::function<bool(int, int)> search = [&](int rem3, int rem4) -> bool {
        int u = 0, v = 0;
        for (int x = 1; x <= n && u == 0; ++x)
            for (int y = x + 1; y <= n; ++y)
                if (!used[x][y]) {
                    u = x;
                    v = y;
                    break;
                }
        if (u == 0) return rem3 == 0 && rem4 == 0;

        if (rem3 > 0) {
            for (int w = v + 1; w <= n; ++w) {
                if (used[u][w] || used[v][w]) continue;
                take(u, v); take(u, w); take(v, w);
                out.triangles.push_back({u, v, w});
                if (search(rem3 - 1, rem4)) return true;
                out.triangles.pop_back();
                give(u, v); give(u, w); give(v, w);
            }
        }
        if (rem4 > 0) {
            // quad u-v-w-x-u with u the smallest vertex and v < x
            for (int w = u + 1; w <= n; ++w) {
                if (w == v || used[v][w]) continue;
                for (int x = v + 1; x <= n; ++x) {
                    if (x == w || used[w][x] || used[u][x]) continue;
                    take(u, v); take(v, w); take(w, x); take(x, u);
                    out.quads.push_back({u, v, w, x});
                    if (search(rem3, rem4 - 1)) return true;
                    out.quads.pop_back();
                    give(u, v); give(v, w); give(w, x); give(x, u);
                }
            }
        }
        return false;
    };

    if (!search(n3, n4))
        throw infeasible_error("decompose: no partition found for s = " + std::to_string(s) +
                               ", t = " + std::to_string(t) +
                               " (one must exist; this is a bug)");
    return out;
}

// Exhaustive oracle: materializes every triangle and quadrilateral of
// K_{2s} - I as an edge bitmask, then runs exact cover over the candidate
// list. Shares nothing with decompose() beyond the result type.
inline std::vector<Decomposition> enumerate_decompositions(int s, int t, int limit) {
    if (limit < 1) throw std::invalid_argument("enumerate_decompositions: limit must be >= 1");
    const auto [n3, n4] = triangle_quad_counts(s, t);
    if (s > 4)
        throw not_applicable_error("enumerate_decompositions: oracle limited to s <= 4");
    const int n = 2 * s;

    // edge ids for the non-matching pairs; at s <= 4 there are at most 24,
    // so one 64-bit mask holds a whole candidate cycle
    std::vector<std::vector<int>> edge_id(n + 1, std::vector<int>(n + 1, -1));
    int num_edges = 0;
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y) {
            if (x % 2 == 1 && y == x + 1) continue;
            edge_id[x][y] = edge_id[y][x] = num_edges++;
        }
    auto present = [&edge_id](int x, int y) { return edge_id[x][y] >= 0; };

    struct Candidate {
        std::uint64_t mask;
        bool is_triangle;
        std::array<int, 4> vs;
    };
    std::vector<Candidate> cands;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            if (!present(u, v)) continue;
            for (int w = v + 1; w <= n; ++w) {
                if (!present(u, w) || !present(v, w)) continue;
                const std::uint64_t m = (std::uint64_t{1} << edge_id[u][v]) |
                                        (std::uint64_t{1} << edge_id[u][w]) |
                                        (std::uint64_t{1} << edge_id[v][w]);
                cands.push_back({m, true, {u, v, w, 0}});
            }
        }
    // quads (u,v,w,x): u minimal, v and x the neighbours of u with v < x
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            if (!present(u, v)) continue;
            for (int x = v + 1; x <= n; ++x) {
                if (!present(u, x)) continue;
                for (int w = u + 1; w <= n; ++w) {
                    if (w == v || w == x || !present(v, w) || !present(w, x)) continue;
                    const std::uint64_t m = (std::uint64_t{1} << edge_id[u][v]) |
                                            (std::uint64_t{1} << edge_id[v][w]) |
                                            (std::uint64_t{1} << edge_id[w][x]) |
                                            (std::uint64_t{1} << edge_id[x][u]);
                    cands.push_back({m, false, {u, v, w, x}});
                }
            }
        }

    const std::uint64_t full = num_edges == 64 ? ~std::uint64_t{0}
                                               : (std::uint64_t{1} << num_edges) - 1;
    std::vector<Decomposition> found;
    std::vector<const Candidate*> chosen;
    std::function<void(std::uint64_t, int, int)> cover = [&](std::uint64_t covered, int rem3,
                                                             int rem4) {
        if (static_cast<int>(found.size()) >= limit) return;
        if (covered == full) {
            if (rem3 != 0 || rem4 != 0) return;
            Decomposition d;
            for (const Candidate* c : chosen) {
                if (c->is_triangle) d.triangles.push_back({c->vs[0], c->vs[1], c->vs[2]});
                else d.quads.push_back(c->vs);
            }
            found.push_back(std::move(d));
            return;
        }
        int pivot = 0;
        while (covered & (std::uint64_t{1} << pivot)) ++pivot;
        for (const Candidate& c : cands) {
            if (!(c.mask & (std::uint64_t{1} << pivot))) continue;
            if (c.mask & covered) continue;
            if (c.is_triangle ? rem3 == 0 : rem4 == 0) continue;
            chosen.push_back(&c);
            cover(covered | c.mask, rem3 - (c.is_triangle ? 1 : 0),
                  rem4 - (c.is_triangle ? 0 : 1));
            chosen.pop_back();
            if (static_cast<int>(found.size()) >= limit) return;
        }
    };
    cover(0, n3, n4);
    return found;
}

}  // namespace fourcycle
