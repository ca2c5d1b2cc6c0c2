#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "fourcycle/construct.hpp"
#include "fourcycle/verify.hpp"

using namespace fourcycle;

namespace {

int blocks_through(const CycleSystem& sys, int vertex) {
    int n = 0;
    for (const Cycle4& blk : sys.blocks)
        for (int x : blk.labels())
            if (x == vertex) ++n;
    return n;
}

// cross-edge census of a family over parts A and B
std::map<Edge, int> cross_census(const std::vector<Cycle4>& blocks) {
    std::map<Edge, int> census;
    for (const Cycle4& blk : blocks)
        for (const Edge& e : block_edges(blk)) census[e] += 1;
    return census;
}

}  // namespace

TEST_CASE("starter_blocks substitutes (0, i, 4k+1, k+i)") {
    CHECK(starter_blocks(1) == std::vector<Cycle4>{{0, 1, 5, 2}});
    CHECK(starter_blocks(2) == std::vector<Cycle4>{{0, 1, 9, 3}, {0, 2, 9, 4}});
    CHECK_THROWS_AS(starter_blocks(0), std::invalid_argument);
}

TEST_CASE("starter edge differences run through 1..4k exactly once") {
    // independent oracle: the +- difference of each starter edge in Z_{8k+1}
    for (int k : {1, 2, 5}) {
        const int v = 8 * k + 1;
        std::multiset<int> diffs;
        for (const Cycle4& st : starter_blocks(k))
            for (const auto& [x, y] : block_edges(st))
                diffs.insert(std::min((x - y + v) % v, (y - x + v) % v));
        std::multiset<int> expected;
        for (int d = 1; d <= 4 * k; ++d) expected.insert(d);
        CHECK(diffs == expected);
    }
}

TEST_CASE("cyclic_4cs tiles the complete graph by translation") {
    const CycleSystem k1 = cyclic_4cs(1);
    CHECK(k1.order == 9);
    CHECK(k1.blocks.size() == 9);
    CHECK(verify_cycle_system(k1).passed());
    CHECK(blocks_through(k1, 0) == 4);  // (v-1)/2 with k = 1

    const CycleSystem k2 = cyclic_4cs(2);
    CHECK(k2.order == 17);
    CHECK(k2.blocks.size() == 34);
    CHECK(verify_cycle_system(k2).passed());

    for (int k = 3; k <= 8; ++k)
        CHECK(verify_cycle_system(cyclic_4cs(k)).passed());
}

TEST_CASE("bipartite_family covers each cross edge exactly once") {
    SECTION("single cycle at p = q = 1") {
        CHECK(bipartite_family({10, 11}, {20, 21}) ==
              std::vector<Cycle4>{canonicalize({10, 20, 11, 21})});
    }
    SECTION("|[A,B]| = pq") {
        CHECK(bipartite_family({0, 1, 2, 3}, {4, 5}).size() == 2);
        CHECK(bipartite_family({0, 1, 2, 3, 4, 5, 6, 7}, {8, 9, 10, 11, 12, 13, 14, 15}).size() ==
              16);
    }
    SECTION("every vertex of A lies in |B|/2 blocks") {
        std::vector<int> a(8), b(8);
        std::iota(a.begin(), a.end(), 0);
        std::iota(b.begin(), b.end(), 8);
        const auto fam = bipartite_family(a, b);
        CycleSystem probe{16, fam};
        for (int x : a) CHECK(blocks_through(probe, x) == 4);
        for (int x : b) CHECK(blocks_through(probe, x) == 4);
    }
    SECTION("cross-edge census for all even sizes up to 16") {
        for (size_t na = 2; na <= 16; na += 2)
            for (size_t nb = 2; nb <= 16; nb += 2) {
                std::vector<int> a(na), b(nb);
                std::iota(a.begin(), a.end(), 0);
                std::iota(b.begin(), b.end(), static_cast<int>(na));
                const auto census = cross_census(bipartite_family(a, b));
                CHECK(census.size() == na * nb);
                for (const auto& [edge, count] : census) {
                    CHECK(count == 1);
                    const bool in_a = edge.first < static_cast<int>(na);
                    const bool in_b = edge.second >= static_cast<int>(na);
                    CHECK((in_a && in_b));  // no A-A or B-B edge
                }
            }
    }
    SECTION("malformed parts") {
        CHECK_THROWS_AS(bipartite_family({0, 1, 2}, {3, 4}), malformed_error);
        CHECK_THROWS_AS(bipartite_family({0, 1}, {1, 2}), malformed_error);
        CHECK_THROWS_AS(bipartite_family({0, 0}, {1, 2}), malformed_error);
        CHECK_THROWS_AS(bipartite_family({}, {1, 2}), malformed_error);
    }
}

TEST_CASE("compose_star glues s sub-systems around infinity") {
    const Composition c21 = compose_star(2, 1);
    CHECK(c21.system.order == 17);
    CHECK(c21.system.blocks.size() == 34);  // 2*9 sub-system blocks + 16 family blocks
    CHECK(verify_cycle_system(c21.system).passed());
    CHECK(c21.layout.parts == std::vector<LabelRange>{{1, 8}, {9, 16}});
    CHECK(c21.family_pairs == std::vector<std::pair<int, int>>{{1, 2}});

    const Composition c31 = compose_star(3, 1);
    CHECK(c31.system.order == 25);
    CHECK(c31.system.blocks.size() == 75);  // 3*9 + 3*16 = 25*24/8
    CHECK(verify_cycle_system(c31.system).passed());

    SECTION("infinity lies in 4k blocks") {
        for (int s : {2, 3})
            for (int h : {1, 2}) {
                const Composition comp = compose_star(s, h);
                CHECK(blocks_through(comp.system, comp.layout.infinity) == 4 * h * s);
            }
    }
    SECTION("provenance partitions the block list") {
        CHECK(c31.origins.size() == c31.system.blocks.size());
        std::map<int, int> sigma_blocks;
        int family_blocks = 0;
        for (const BlockOrigin& o : c31.origins) {
            if (o.kind == BlockOrigin::Kind::subsystem) sigma_blocks[o.index] += 1;
            else family_blocks += 1;
        }
        CHECK(sigma_blocks == std::map<int, int>{{1, 9}, {2, 9}, {3, 9}});
        CHECK(family_blocks == 3 * 16);
    }
    SECTION("verifies across the supported grid") {
        for (int s = 2; s <= 5; ++s)
            for (int h = 1; h <= 2; ++h)
                CHECK(verify_cycle_system(compose_star(s, h).system).passed());
    }
    SECTION("invalid factory output is rejected") {
        CHECK_THROWS_AS(compose_star(2, 1, [] { return cyclic_4cs(2); }), malformed_error);
        CHECK_THROWS_AS(compose_star(2, 1,
                                     [] {
                                         CycleSystem broken = cyclic_4cs(1);
                                         broken.blocks.pop_back();
                                         return broken;
                                     }),
                        malformed_error);
    }
    CHECK_THROWS_AS(compose_star(1, 1), not_applicable_error);
}

TEST_CASE("compose_half glues sub-systems on sibling part pairs") {
    const Composition c31 = compose_half(3, 1);
    CHECK(c31.system.order == 25);
    CHECK(c31.system.blocks.size() == 75);  // 3*9 + 12*4
    CHECK(verify_cycle_system(c31.system).passed());
    CHECK(c31.layout.parts.size() == 6);
    CHECK(c31.family_pairs.size() == 12);  // C(6,2) - 3 sibling pairs

    SECTION("sibling pairs are excluded from the family set") {
        const auto& fp = c31.family_pairs;
        auto has = [&fp](int p, int q) {
            return std::find(fp.begin(), fp.end(), std::make_pair(p, q)) != fp.end();
        };
        CHECK_FALSE(has(1, 2));
        CHECK_FALSE(has(3, 4));
        CHECK_FALSE(has(5, 6));
        CHECK(has(1, 3));
        CHECK(has(2, 3));
    }
    SECTION("each part vertex lies in 2h blocks of each incident family") {
        for (const auto& [p, q] : c31.family_pairs) {
            CycleSystem fam{25, {}};
            for (size_t bi = 0; bi < c31.origins.size(); ++bi)
                if (c31.origins[bi] == BlockOrigin{BlockOrigin::Kind::family, p, q})
                    fam.blocks.push_back(c31.system.blocks[bi]);
            for (int x : c31.layout.part_labels(p)) CHECK(blocks_through(fam, x) == 2);
            for (int x : c31.layout.part_labels(q)) CHECK(blocks_through(fam, x) == 2);
        }
    }
    SECTION("verifies across the supported grid") {
        for (int s = 3; s <= 5; ++s)
            for (int h = 1; h <= 2; ++h)
                CHECK(verify_cycle_system(compose_half(s, h).system).passed());
    }
    CHECK_THROWS_AS(compose_half(2, 1), not_applicable_error);
}
