#include "doctest.h"

#include <map>
#include <random>

#include "rtheta/bounds.hpp"
#include "rtheta/gau_map.hpp"
#include "rtheta/linear_code.hpp"
#include "rtheta/reed_muller.hpp"

using namespace rtheta;

TEST_CASE("circle counts on one coordinate") {
    CHECK(circle_count(1, 0) == 1);
    CHECK(circle_count(1, 1) == 6);
    CHECK(circle_count(1, 2) == 9);
    CHECK(circle_count(3, 0) == 1);
    CHECK_THROWS_AS(circle_count(1, 3), RadiusOutOfRange);
    CHECK_THROWS_AS(circle_count(2, -1), RadiusOutOfRange);
}

TEST_CASE("circle counts sum to the space size") {
    for (long long n = 1; n <= 6; ++n) {
        BigInt total = 0;
        for (long long r = 0; r <= 2 * n; ++r) total += circle_count(n, r);
        CHECK(total == pow16(n));
    }
}

TEST_CASE("circle counts match direct enumeration around any center") {
    std::mt19937_64 rng(83);
    std::uniform_int_distribution<int> pick(0, 15);
    const auto maps = enumerate_gau_maps(kTwoPlusTwoW);
    for (std::size_t mi = 0; mi < maps.size(); mi += 683) {
        const GauMap& map = maps[mi];
        for (int n = 1; n <= 3; ++n) {
            for (int center_trial = 0; center_trial < 3; ++center_trial) {
                Word center(n);
                for (auto& e : center) e = Elem::from_index(pick(rng));
                std::map<long, long> histogram;
                std::vector<int> digits(n, 0);
                while (true) {
                    Word x(n);
                    for (int i = 0; i < n; ++i) x[i] = Elem::from_index(digits[i]);
                    histogram[gau_distance(map, center, x)]++;
                    int i = 0;
                    while (i < n && digits[i] == 15) digits[i++] = 0;
                    if (i == n) break;
                    ++digits[i];
                }
                for (long long r = 0; r <= 2 * n; ++r)
                    CHECK(BigInt(histogram[r]) == circle_count(n, r));
            }
        }
    }
}

TEST_CASE("sphere sizes") {
    CHECK(sphere_size(1, 0) == 1);
    CHECK(sphere_size(1, 1) == 7);
    CHECK(sphere_size(2, 4) == 256);
    for (long long n = 1; n <= 4; ++n) {
        BigInt prev = 0;
        for (long long r = 0; r <= 2 * n; ++r) {
            const BigInt s = sphere_size(n, r);
            CHECK(s >= prev);
            prev = s;
        }
        CHECK(prev == pow16(n));
    }
}

TEST_CASE("sphere packing bound") {
    CHECK(sphere_packing(1, 16, 1).verdict == Verdict::MetWithEquality);
    const BoundReport ok = sphere_packing(2, 4, 4);
    CHECK(ok.lhs == 52);
    CHECK(ok.rhs == 256);
    CHECK(ok.verdict == Verdict::Satisfied);
    const BoundReport no = sphere_packing(1, 16, 3);
    CHECK(no.lhs == 112);
    CHECK(no.verdict == Verdict::Violated);
}

TEST_CASE("gilbert-varshamov lower bound") {
    for (long long n = 1; n <= 4; ++n) CHECK(gv_lower_bound(n, 1) == pow16(n));
    CHECK(gv_lower_bound(1, 2) == 3);
    CHECK(gv_lower_bound(1, 3) == 1);
}

TEST_CASE("singleton bound and mgds") {
    for (long long n = 1; n <= 3; ++n) {
        const BoundReport rep = singleton(n, pow16(n), 1);
        CHECK(rep.verdict == Verdict::MetWithEquality);
        CHECK(is_mgds(n, pow16(n), 1));
    }
    CHECK(singleton(2, 257, 3).verdict == Verdict::Violated);
    // the (n, 4, 2n) family satisfies singleton strictly: 4 < 16
    for (long long n = 1; n <= 8; ++n) {
        const BoundReport rep = singleton(n, 4, 2 * n);
        CHECK(rep.rhs == 16);
        CHECK(rep.verdict == Verdict::Satisfied);
        CHECK_FALSE(is_mgds(n, 4, 2 * n));
    }
    CHECK_THROWS_AS(singleton(1, 4, 6), RadiusOutOfRange);
}

TEST_CASE("plotkin bound") {
    for (long long n = 1; n <= 8; ++n)
        CHECK(plotkin(n, 4, 2 * n).verdict == Verdict::MetWithEquality);
    CHECK(plotkin(2, 5, 3).verdict == Verdict::Inapplicable);
    CHECK(plotkin(1, 4, 2).verdict == Verdict::MetWithEquality);
    CHECK(plotkin(1, 5, 2).verdict == Verdict::Violated);
}

TEST_CASE("type corollaries") {
    const auto full = type_corollaries({2, 0, 0, 0}, 2, 1);
    CHECK(full[1].kind == BoundKind::Singleton);
    CHECK(full[1].verdict == Verdict::MetWithEquality);

    // <a> family over the 5-ideal rings: profile {0,0,1,0}, exponent 1/2
    const auto family = type_corollaries({0, 0, 1, 0}, 3, 6);
    CHECK(family[2].kind == BoundKind::Plotkin);
    CHECK(family[2].verdict == Verdict::MetWithEquality);
    CHECK(family[0].verdict != Verdict::Violated);
    CHECK(family[1].verdict != Verdict::Violated);

    const auto broken = type_corollaries({2, 0, 0, 0}, 2, 3);
    CHECK(broken[1].verdict == Verdict::Violated);

    const auto inapplicable = type_corollaries({0, 0, 1, 0}, 2, 3);
    CHECK(inapplicable[2].verdict == Verdict::Inapplicable);

    const auto two_block = type_corollaries({1, 0}, 1, 1);
    CHECK(two_block[1].verdict == Verdict::MetWithEquality);

    CHECK_THROWS_AS(type_corollaries({1, 2, 3}, 2, 2), NotStandardForm);
}

TEST_CASE("constructed codes never violate sphere-packing or singleton") {
    const GauMap& map = GauMap::canonical();
    for (Elem theta : kAllElements) {
        if (!Ring::of(theta).is_chain()) continue;
        for (Elem z : Ring::of(theta).zero_divisors()) {
            if (z == kZero) continue;
            for (int m = 0; m <= 2; ++m)
                for (int r = 0; r <= m; ++r) {
                    const LinearCode code = make_code(rm_generator({theta, z, r, m}));
                    const long long n = static_cast<long long>(code.words.length());
                    const BigInt M = code.words.size();
                    const long long d = min_gau_distance(code, map, 1u << 20);
                    CHECK(sphere_packing(n, M, d).verdict != Verdict::Violated);
                    CHECK(singleton(n, M, d).verdict != Verdict::Violated);
                    const BoundReport pl = plotkin(n, M, d);
                    CHECK(pl.verdict != Verdict::Violated);
                }
        }
    }
}

TEST_CASE("spheres of packing radius around distinct codewords are disjoint") {
    const GauMap& map = GauMap::canonical();
    const GeneratorMatrix g{kTwo, 2, {{kTwo, kTwoPlusTwoW}}, std::nullopt};
    const LinearCode code = make_code(g);
    const int d = min_gau_distance(code, map);
    CHECK(d == 4);
    const int radius = (d - 1) / 2;

    std::vector<int> digits(2, 0);
    while (true) {
        Word x{Elem::from_index(digits[0]), Elem::from_index(digits[1])};
        int owners = 0;
        for (std::size_t i = 0; i < code.words.size(); ++i)
            if (gau_distance(map, code.words.word(i), x) <= radius) ++owners;
        CHECK(owners <= 1);
        int i = 0;
        while (i < 2 && digits[i] == 15) digits[i++] = 0;
        if (i == 2) break;
        ++digits[i];
    }
}
