#pragma once

// Construction-agnostic checking of every property a coloured system claims:
// edge partition, type, equitability, colour count and the chromatic bound.
// Everything here recomputes edge censuses and incidence counts from the raw
// blocks; the only shared code is the core types and canonicalize.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fourcycle/design.hpp"

namespace fourcycle {

struct Failure {
    std::string check;    // which verification failed
    std::string witness;  // concrete vertex / edge / colour to recheck by hand
};

struct VerificationReport {
    std::vector<Failure> failures;

    bool passed() const { return failures.empty(); }

    void add(std::string check, std::string witness) {
        failures.push_back({std::move(check), std::move(witness)});
    }

    void merge(VerificationReport other) {
        for (auto& f : other.failures) failures.push_back(std::move(f));
    }
};

// Passes iff every block has 4 distinct in-range vertices, the block count is
// v(v-1)/8, and the edge census hits every unordered pair exactly once.
inline VerificationReport verify_cycle_system(const CycleSystem& sys) {
    VerificationReport rep;
    const int v = sys.order;
    if (v < 1) {
        rep.add("cycle-system", "order " + std::to_string(v) + " is not positive");
        return rep;
    }
    const long long pairs = static_cast<long long>(v) * (v - 1) / 2;
    if (static_cast<long long>(sys.blocks.size()) * 4 != pairs) {
        std::ostringstream w;
        w << "block count " << sys.blocks.size() << " != v(v-1)/8 = " << pairs / 4.0
          << " for v = " << v;
        rep.add("cycle-system", w.str());
    }

    std::vector<int> census(static_cast<size_t>(v) * v, 0);
    for (size_t bi = 0; bi < sys.blocks.size(); ++bi) {
        const Cycle4& blk = sys.blocks[bi];
        const auto ls = blk.labels();
        bool well_formed = true;
        for (int x : ls)
            if (x < 0 || x >= v) {
                std::ostringstream w;
                w << "block #" << bi << " label " << x << " outside 0.." << v - 1;
                rep.add("cycle-system", w.str());
                well_formed = false;
            }
        for (int i = 0; i < 4 && well_formed; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (ls[i] == ls[j]) {
                    std::ostringstream w;
                    w << "block #" << bi << " repeats label " << ls[i];
                    rep.add("cycle-system", w.str());
                    well_formed = false;
                    break;
                }
        if (!well_formed) continue;
        for (const auto& [x, y] : block_edges(blk)) census[static_cast<size_t>(x) * v + y] += 1;
    }
    for (int x = 0; x < v; ++x)
        for (int y = x + 1; y < v; ++y) {
            const int n = census[static_cast<size_t>(x) * v + y];
            if (n != 1) {
                std::ostringstream w;
                w << "edge (" << x << "," << y << ") covered " << n << " times (expected 1)";
                rep.add("cycle-system", w.str());
            }
        }
    return rep;
}

namespace detail {

// colour -> number of incident blocks, per vertex; the raw material for the
// type and equitability checks.
inline std::vector<std::map<int, int>> incidence_by_colour(const ColouredSystem& cs) {
    std::vector<std::map<int, int>> per_vertex(std::max(cs.system.order, 0));
    const size_t n = std::min(cs.system.blocks.size(), cs.colouring.colours.size());
    for (size_t bi = 0; bi < n; ++bi) {
        for (int x : cs.system.blocks[bi].labels())
            if (x >= 0 && x < cs.system.order) per_vertex[x][cs.colouring.colours[bi]] += 1;
    }
    return per_vertex;
}

inline bool parallel_ok(const ColouredSystem& cs, VerificationReport& rep,
                        const std::string& check) {
    if (cs.colouring.colours.size() != cs.system.blocks.size()) {
        std::ostringstream w;
        w << "colour list length " << cs.colouring.colours.size() << " != block count "
          << cs.system.blocks.size();
        rep.add(check, w.str());
        return false;
    }
    return true;
}

}  // namespace detail

// Type s: the blocks through each vertex carry exactly s distinct colours.
inline VerificationReport verify_type(const ColouredSystem& cs, int s) {
    VerificationReport rep;
    if (!detail::parallel_ok(cs, rep, "type")) return rep;
    const auto per_vertex = detail::incidence_by_colour(cs);
    for (int x = 0; x < cs.system.order; ++x) {
        const int seen = static_cast<int>(per_vertex[x].size());
        if (seen != s) {
            std::ostringstream w;
            w << "vertex " << x << " sees " << seen << " colours (expected " << s << ")";
            rep.add("type", w.str());
        }
    }
    return rep;
}

// Equitable: with 4k = qs + r, each vertex's 4k blocks split into r colour
// classes of size q+1 and s-r classes of size q.
inline VerificationReport verify_equitable(const ColouredSystem& cs, int s) {
    VerificationReport rep;
    if (s < 1) {
        rep.add("equitable", "s = " + std::to_string(s) + " is not positive");
        return rep;
    }
    if (!detail::parallel_ok(cs, rep, "equitable")) return rep;
    const int v = cs.system.order;
    if ((v - 1) % 8 != 0) {
        rep.add("equitable", "order " + std::to_string(v) + " is not 1 (mod 8)");
        return rep;
    }
    const int k = (v - 1) / 8;
    const int q = (4 * k) / s;
    const int r = (4 * k) % s;
    const auto per_vertex = detail::incidence_by_colour(cs);
    for (int x = 0; x < v; ++x) {
        int big = 0, small = 0;
        bool off = false;
        for (const auto& [colour, count] : per_vertex[x]) {
            if (count == q + 1) ++big;
            else if (count == q) ++small;
            else off = true;
        }
        if (off || big != r || small != s - r) {
            std::ostringstream w;
            w << "vertex " << x << ": class sizes {";
            bool first = true;
            for (const auto& [colour, count] : per_vertex[x]) {
                w << (first ? "" : ",") << count;
                first = false;
            }
            w << "} (expected " << r << " of size " << q + 1 << " and " << s - r
              << " of size " << q << ")";
            rep.add("equitable", w.str());
        }
    }
    return rep;
}

// Exactly c colours used, all of them inside {1..c}.
inline VerificationReport verify_colour_count(const ColouredSystem& cs, int c) {
    VerificationReport rep;
    std::set<int> used(cs.colouring.colours.begin(), cs.colouring.colours.end());
    for (int id : used)
        if (id < 1 || id > c)
            rep.add("colour-count",
                    "colour " + std::to_string(id) + " outside 1.." + std::to_string(c));
    for (int id = 1; id <= c; ++id)
        if (!used.count(id)) rep.add("colour-count", "colour " + std::to_string(id) + " unused");
    return rep;
}

// Exact rational; verdicts at integer boundaries must never go through floats.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    long long floor() const {
        if (num >= 0) return num / den;
        return -(((-num) + den - 1) / den);
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Rational&, const Rational&) = default;
};

// The most colours any equitable type-s colouring of a 4CS(v) can use:
// s^2 v / (v+s-1), returned exactly.
inline Rational upper_bound(int v, int s) {
    if (v < 1 || (v - 1) % 8 != 0)
        throw std::invalid_argument("upper_bound: v must be 1 (mod 8)");
    if (s < 1) throw std::invalid_argument("upper_bound: s must be >= 1");
    return Rational(static_cast<long long>(s) * s * v, static_cast<long long>(v) + s - 1);
}

// Conjunction of all checks, with s and c taken from the system itself, plus
// the sanity bound c <= s^2 v / (v+s-1).
inline VerificationReport verify_all(const ColouredSystem& cs) {
    VerificationReport rep = verify_cycle_system(cs.system);
    rep.merge(verify_type(cs, cs.params.s));
    rep.merge(verify_equitable(cs, cs.params.s));
    rep.merge(verify_colour_count(cs, cs.colouring.num_colours));
    const long long lhs = static_cast<long long>(cs.colouring.num_colours) *
                          (static_cast<long long>(cs.system.order) + cs.params.s - 1);
    const long long rhs = static_cast<long long>(cs.params.s) * cs.params.s * cs.system.order;
    if (lhs > rhs) {
        std::ostringstream w;
        w << "c = " << cs.colouring.num_colours << " exceeds s^2 v/(v+s-1) = "
          << upper_bound(cs.system.order, cs.params.s).str();
        rep.add("bound", w.str());
    }
    return rep;
}

}  // namespace fourcycle
