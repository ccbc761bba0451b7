#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include "hilab/cube_search.hpp"
#include "hilab/ramsey.hpp"

using namespace hilab;

namespace {

// Full-enumeration oracle for small exact numbers over interval colorings.
template <typename HasStructure>
int64_t oracle_exact_number(int c, int64_t max_len, HasStructure&& has) {
    for (int64_t L = 1; L <= max_len; ++L) {
        bool avoider_exists = false;
        uint64_t total = 1;
        for (int64_t i = 0; i < L; ++i) total *= static_cast<uint64_t>(c);
        for (uint64_t code = 0; code < total && !avoider_exists; ++code) {
            uint64_t v = code;
            std::vector<int> colors(static_cast<size_t>(L));
            for (int64_t i = 0; i < L; ++i) {
                colors[static_cast<size_t>(i)] = static_cast<int>(v % static_cast<uint64_t>(c)) + 1;
                v /= static_cast<uint64_t>(c);
            }
            if (!has(Coloring(1, c, colors))) avoider_exists = true;
        }
        if (!avoider_exists) return L;
    }
    return -1;
}

}  // namespace

TEST_CASE("schur_triple pinned examples") {
    Coloring two(1, 1, {1, 1});
    auto hit = schur_triple(two);
    REQUIRE(hit.has_value());
    CHECK(hit->first.x == 1);
    CHECK(hit->first.y == 1);
    CHECK(hit->first.z == 2);

    Coloring col(1, 2, {1, 2, 2, 1});
    auto maybe = schur_triple(col);
    // cross-check against a direct pair enumeration
    bool brute = false;
    for (int64_t x = 1; x <= 4; ++x)
        for (int64_t y = x; x + y <= 4; ++y)
            if (col.at(x) == col.at(y) && col.at(y) == col.at(x + y)) brute = true;
    CHECK(maybe.has_value() == brute);

    Coloring shifted(2, 1, {1, 1});
    CHECK_THROWS_AS(schur_triple(shifted), precondition_error);
}

TEST_CASE("schur_number_exact small values vs oracle") {
    auto s1 = schur_number_exact(1);
    CHECK(s1.exact);
    CHECK(s1.value == 2);

    auto s2 = schur_number_exact(2);
    CHECK(s2.exact);
    int64_t oracle = oracle_exact_number(2, 10, [](const Coloring& col) {
        return scan_for_mono_schur(col).has_value();
    });
    CHECK(s2.value == oracle);
    CHECK(s2.value == 5);
    REQUIRE(s2.avoiding.has_value());
    CHECK(verify_certificate(*s2.avoiding, {}));
}

TEST_CASE("schur numbers under the strict-distinct convention differ") {
    auto strict = schur_number_exact(2, {}, true);
    CHECK(strict.exact);
    int64_t oracle = oracle_exact_number(2, 12, [](const Coloring& col) {
        return scan_for_mono_schur(col, true).has_value();
    });
    CHECK(strict.value == oracle);
}

TEST_CASE("schur exact numbers are color-permutation invariant") {
    // rerunning with permuted colors means nothing here because the search
    // fixes color 1 at position 1; instead verify the value is reproduced
    // when colors are relabeled in the oracle
    int64_t o12 = oracle_exact_number(2, 8, [](const Coloring& col) {
        return scan_for_mono_schur(col).has_value();
    });
    int64_t o21 = oracle_exact_number(2, 8, [](const Coloring& col) {
        std::vector<int> swapped(col.colors);
        for (auto& g : swapped) g = 3 - g;
        return scan_for_mono_schur(Coloring(1, 2, swapped)).has_value();
    });
    CHECK(o12 == o21);
}

TEST_CASE("schur_mod_p: n=1 gives 1+1=2") {
    auto res = schur_mod_p(1, 7);
    REQUIRE(res.found);
    CHECK(res.cosets == 1);
    CHECK((res.x + res.y) % 7 == res.z % 7);
}

TEST_CASE("schur_mod_p: n=2, p=7 has a verified witness") {
    auto res = schur_mod_p(2, 7);
    REQUIRE(res.found);
    CHECK(res.cosets == 2);  // gcd(2, 6)
    auto pw = [&](int64_t v) {
        int64_t acc = 1;
        for (int i = 0; i < 2; ++i) acc = acc * v % 7;
        return acc;
    };
    CHECK((pw(res.x) + pw(res.y)) % 7 == pw(res.z));
    // brute force: solutions exist mod 7, e.g. 1^2 + 1^2 = 2 = 3^2 mod 7
    CHECK(pw(3) == (pw(1) + pw(1)) % 7);
}

TEST_CASE("schur_mod_p coset coloring uses gcd(n, p-1) equal classes") {
    for (int64_t n : {2, 3, 4}) {
        for (int64_t p : {11, 13, 31, 37}) {
            auto res = schur_mod_p(n, p);
            int64_t g = std::gcd(n, p - 1);
            CHECK(res.cosets == g);
            std::vector<int64_t> class_size(static_cast<size_t>(res.cosets) + 1, 0);
            for (int col : res.coset_coloring.colors) ++class_size[static_cast<size_t>(col)];
            for (int i = 1; i <= res.cosets; ++i)
                CHECK(class_size[static_cast<size_t>(i)] == (p - 1) / g);
        }
    }
}

TEST_CASE("schur_mod_p: n=3, p=31 witness exists and verifies") {
    auto res = schur_mod_p(3, 31);
    REQUIRE(res.found);
    auto pw = [&](int64_t v) {
        int64_t acc = 1;
        for (int i = 0; i < 3; ++i) acc = acc * v % 31;
        return acc;
    };
    CHECK((pw(res.x) + pw(res.y)) % 31 == pw(res.z));
}

TEST_CASE("schur_mod_p parameter errors") {
    CHECK_THROWS_AS(schur_mod_p(2, 8), parameter_error);
    CHECK_THROWS_AS(schur_mod_p(0, 7), parameter_error);
}

TEST_CASE("vdw_ap pinned examples") {
    Coloring constant(1, 1, {1, 1, 1});
    auto hit = vdw_ap(constant, 3);
    REQUIRE(hit.has_value());
    CHECK(hit->first.start == 1);
    CHECK(hit->first.step == 1);

    Coloring blocks(1, 2, {1, 1, 2, 2, 1, 1, 2, 2});
    CHECK_FALSE(vdw_ap(blocks, 3).has_value());
}

TEST_CASE("vdw_number_exact(3,2) matches the oracle and W(2,c) = c+1") {
    auto w32 = vdw_number_exact(3, 2);
    CHECK(w32.exact);
    int64_t oracle = oracle_exact_number(2, 10, [](const Coloring& col) {
        return scan_for_mono_ap(col, 3).has_value();
    });
    CHECK(w32.value == oracle);
    CHECK(w32.value == 9);
    REQUIRE(w32.avoiding.has_value());
    CHECK(verify_certificate(*w32.avoiding, {}));

    for (int c = 1; c <= 4; ++c) {
        auto w2c = vdw_number_exact(2, c);
        auto h1c = hilbert_number_exact(1, c);
        CHECK(w2c.exact);
        CHECK(w2c.value == c + 1);
        CHECK(w2c.value == h1c.value);
    }
}

TEST_CASE("ramsey_clique pinned examples") {
    EdgeColoring blue(4, 2);
    for (int v = 2; v <= 4; ++v)
        for (int u = 1; u < v; ++u) blue.set_color(u, v, 1);
    auto hit = ramsey_clique(blue, 3);
    REQUIRE(hit.has_value());
    CHECK(hit->second == 1);
    CHECK(hit->first.vertices.size() == 3);

    // pentagon in blue, five-pointed star in green: K_5 with no mono triangle
    EdgeColoring penta(5, 2);
    for (int i = 0; i < 5; ++i) {
        penta.set_color(i + 1, (i + 1) % 5 + 1, 1);          // cycle edges
        penta.set_color(i + 1, (i + 2) % 5 + 1, 2);          // diagonals
    }
    REQUIRE(penta.complete());
    CHECK_FALSE(ramsey_clique(penta, 3).has_value());
}

TEST_CASE("every 2-coloring of K_6 has a mono triangle (spot checks)") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        EdgeColoring ec(6, 2);
        for (int v = 2; v <= 6; ++v)
            for (int u = 1; u < v; ++u) ec.set_color(u, v, 1 + static_cast<int>(rng() % 2));
        CHECK(ramsey_clique(ec, 3).has_value());
    }
}

TEST_CASE("ramsey_number_exact(3,2) = 6 and (2,2) = 2") {
    auto r32 = ramsey_number_exact(3, 2);
    CHECK(r32.exact);
    CHECK(r32.value == 6);
    REQUIRE(r32.avoiding.has_value());
    CHECK(verify_certificate(*r32.avoiding, {}));
    REQUIRE(r32.binomial_upper.has_value());
    CHECK(*r32.binomial_upper == 6);  // binom(4, 2)

    auto r22 = ramsey_number_exact(2, 2);
    CHECK(r22.exact);
    CHECK(r22.value == 2);
}
