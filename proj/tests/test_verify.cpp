#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "fourcycle/colouring.hpp"
#include "fourcycle/construct.hpp"
#include "fourcycle/verify.hpp"

using namespace fourcycle;

namespace {

int count_witnesses(const VerificationReport& rep, const std::string& needle) {
    int n = 0;
    for (const auto& f : rep.failures)
        if (f.witness.find(needle) != std::string::npos) ++n;
    return n;
}

bool has_check(const VerificationReport& rep, const std::string& check) {
    return std::any_of(rep.failures.begin(), rep.failures.end(),
                       [&check](const Failure& f) { return f.check == check; });
}

// two blocks through a common vertex carrying different colours
std::pair<size_t, size_t> swappable_pair(const ColouredSystem& cs) {
    for (size_t i = 0; i < cs.system.blocks.size(); ++i)
        for (size_t j = i + 1; j < cs.system.blocks.size(); ++j) {
            if (cs.colouring.colours[i] == cs.colouring.colours[j]) continue;
            const auto a = cs.system.blocks[i].labels();
            const auto b = cs.system.blocks[j].labels();
            for (int x : a)
                if (std::find(b.begin(), b.end(), x) != b.end()) return {i, j};
        }
    FAIL("no swappable pair found");
    return {0, 0};
}

}  // namespace

TEST_CASE("verify_cycle_system performs an exact edge census") {
    const CycleSystem good = cyclic_4cs(1);
    CHECK(verify_cycle_system(good).passed());

    SECTION("a deleted block leaves 4 uncovered edges") {
        CycleSystem broken = good;
        broken.blocks.erase(broken.blocks.begin());
        const auto rep = verify_cycle_system(broken);
        CHECK_FALSE(rep.passed());
        CHECK(count_witnesses(rep, "covered 0 times") == 4);
    }
    SECTION("a duplicated block doubles 4 edges") {
        CycleSystem broken = good;
        broken.blocks.push_back(broken.blocks.front());
        const auto rep = verify_cycle_system(broken);
        CHECK_FALSE(rep.passed());
        CHECK(count_witnesses(rep, "covered 2 times") == 4);
    }
    SECTION("orientation does not matter") {
        CycleSystem reversed = good;
        for (Cycle4& blk : reversed.blocks) std::swap(blk.b, blk.d);
        CHECK(verify_cycle_system(reversed).passed());
    }
    SECTION("out-of-range and repeated labels are witnessed") {
        CycleSystem broken = good;
        broken.blocks[0] = {0, 1, 99, 2};
        CHECK(count_witnesses(verify_cycle_system(broken), "outside") == 1);
        broken.blocks[0] = {0, 1, 0, 2};
        CHECK(count_witnesses(verify_cycle_system(broken), "repeats") == 1);
    }
}

TEST_CASE("verify_type counts distinct colours per vertex") {
    const ColouredSystem cs = build(2, 1, 2);
    CHECK(verify_type(cs, 2).passed());

    const auto wrong = verify_type(cs, 3);
    CHECK(wrong.failures.size() == 17);  // fails at every vertex

    SECTION("an all-one-colour system has type 1") {
        ColouredSystem mono;
        mono.params = derive_params(1, 2);
        mono.system = cyclic_4cs(2);
        mono.colouring = {std::vector<int>(mono.system.blocks.size(), 1), 1};
        CHECK(verify_type(mono, 1).passed());
        CHECK(verify_equitable(mono, 1).passed());  // one class of size 4k
    }
}

TEST_CASE("verify_equitable checks the q/q+1 split at every vertex") {
    CHECK(verify_equitable(build(3, 1, 7), 3).passed());

    SECTION("swapping colours across two blocks breaks the split") {
        ColouredSystem cs = build(2, 1, 2);
        const auto [i, j] = swappable_pair(cs);
        std::swap(cs.colouring.colours[i], cs.colouring.colours[j]);
        const auto rep = verify_equitable(cs, 2);
        CHECK_FALSE(rep.passed());
        CHECK(has_check(rep, "equitable"));
        CHECK(count_witnesses(rep, "vertex") >= 1);
        CHECK(count_witnesses(rep, "3") >= 1);  // a 3/5 split shows up verbatim
        CHECK(count_witnesses(rep, "5") >= 1);
    }
}

TEST_CASE("verify_colour_count checks ids and coverage") {
    const ColouredSystem cs = build(3, 1, 5);
    CHECK(verify_colour_count(cs, 5).passed());
    CHECK_FALSE(verify_colour_count(cs, 6).passed());
    CHECK(count_witnesses(verify_colour_count(cs, 6), "colour 6 unused") == 1);

    SECTION("an emptied colour class is witnessed by id") {
        ColouredSystem drained = cs;
        for (int& colour : drained.colouring.colours)
            if (colour == 5) colour = 4;
        const auto rep = verify_colour_count(drained, 5);
        CHECK_FALSE(rep.passed());
        CHECK(count_witnesses(rep, "colour 5 unused") == 1);
    }
}

TEST_CASE("upper_bound is exact rational arithmetic") {
    CHECK(upper_bound(17, 2) == Rational(34, 9));
    CHECK(upper_bound(17, 2).floor() == 3);
    CHECK(upper_bound(25, 3) == Rational(25, 3));
    CHECK(upper_bound(25, 3).floor() == 8);
    CHECK(upper_bound(9, 1) == Rational(1, 1));
    CHECK(upper_bound(9, 1).str() == "1");
    CHECK(upper_bound(17, 2).str() == "34/9");
    CHECK_THROWS_AS(upper_bound(10, 2), std::invalid_argument);
}

TEST_CASE("the constructed spectrum never exceeds the proved bound") {
    for (int s = 1; s <= 12; ++s)
        for (int h = 1; h <= 3; ++h) {
            const int v = 1 + 8 * h * s;
            const long long spectrum_top = (2LL * s * s + s) / 3;
            CHECK(spectrum_top <= upper_bound(v, s).floor());
        }
}

TEST_CASE("verify_all aggregates every check") {
    const ColouredSystem cs = build(3, 1, 7);
    CHECK(verify_all(cs).passed());
    CHECK(upper_bound(25, 3).floor() == 8);  // 7 <= 8, bound check passes

    SECTION("bound violations are reported") {
        ColouredSystem stretched = cs;
        stretched.colouring.num_colours = 9;  // above s^2 v/(v+s-1) = 25/3
        const auto rep = verify_all(stretched);
        CHECK(has_check(rep, "bound"));
        CHECK(has_check(rep, "colour-count"));  // 9 colours claimed, 7 used
    }
    SECTION("a hand-built invalid system fails with a witness") {
        ColouredSystem junk;
        junk.params = derive_params(1, 1);
        junk.system.order = 9;
        junk.system.blocks = {{0, 1, 2, 3}};
        junk.colouring = {{1}, 1};
        const auto rep = verify_all(junk);
        CHECK_FALSE(rep.passed());
        CHECK(has_check(rep, "cycle-system"));
    }
}
