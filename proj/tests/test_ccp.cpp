#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "dyckmap/ccp.hpp"
#include "dyckmap/partitions.hpp"

using namespace dyckmap;

TEST_CASE("is_ccp recognizes the worked examples") {
    CHECK(is_ccp(Perm::parse("213645")));
    CHECK_FALSE(is_ccp(Perm::parse("236145")));
    CHECK(is_ccp(Perm::identity(8)));
    CHECK(is_ccp(Perm::parse("345612")));  // rotation
}

TEST_CASE("count_ccps") {
    CHECK(count_ccps(1) == 2);
    CHECK(count_ccps(3) == 96);
    CHECK(count_ccps(5) == 2560);
}

TEST_CASE("enumerate_ccps") {
    const auto c1 = enumerate_ccps(1);
    REQUIRE(c1.size() == 2);
    CHECK(c1[0].to_string() == "1,2");
    CHECK(c1[1].to_string() == "2,1");

    for (int n = 1; n <= 4; ++n) {
        std::set<Perm> seen;
        for_each_ccp(n, [&](const Perm& s) {
            CHECK(is_ccp(s));
            seen.insert(s);
        });
        CHECK(BigInt(seen.size()) == count_ccps(static_cast<unsigned>(n)));
    }
}

TEST_CASE("enumerate_ccps equals the brute-force filter for n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        std::set<Perm> filtered;
        std::vector<int> v(static_cast<size_t>(2 * n));
        std::iota(v.begin(), v.end(), 1);
        do {
            const Perm sigma(v);
            if (is_ccp(sigma)) filtered.insert(sigma);
        } while (std::next_permutation(v.begin(), v.end()));
        std::set<Perm> enumerated;
        for_each_ccp(n, [&](const Perm& s) { enumerated.insert(s); });
        CHECK(filtered == enumerated);
    }
}

TEST_CASE("invert worked examples") {
    CHECK(invert(Perm::parse("162354"), parse_word("uududd")).word() == "ududud");
    CHECK(invert(Perm::parse("234561"), parse_word("uududd")).word() == "ududud");
    const DyckPath p = parse_word("uduudd");
    CHECK(invert(Perm::identity(6), p) == p);
    CHECK_THROWS_AS(invert(Perm::parse("236145"), parse_word("ududud")), error);
    CHECK_THROWS_AS(invert(Perm::parse("2143"), parse_word("ududud")), error);
}

TEST_CASE("inverse contract holds for every CCP and path, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for_each_ccp(n, [&](const Perm& sigma) {
            for_each_path(n, [&](const DyckPath& p) {
                CHECK(sigma_path(sigma, invert(sigma, p)) == p);
                CHECK(invert(sigma, sigma_path(sigma, p)) == p);
            });
        });
    }
}

TEST_CASE("characterization: bijective iff CCP, exhaustive S_6 and S_8") {
    for (int n = 3; n <= 4; ++n) {
        std::vector<int> v(static_cast<size_t>(2 * n));
        std::iota(v.begin(), v.end(), 1);
        do {
            const Perm sigma(v);
            CHECK(is_injective_on_paths(sigma, n) == is_ccp(sigma));
        } while (std::next_permutation(v.begin(), v.end()));
    }
}

TEST_CASE("is_injective_on_paths spot checks") {
    CHECK(is_injective_on_paths(Perm::parse("213645"), 3));
    CHECK_FALSE(is_injective_on_paths(Perm::parse("236145"), 3));
    for (int n = 1; n <= 6; ++n) CHECK(is_injective_on_paths(Perm::identity(2 * n), n));
}

TEST_CASE("every CCP with n >= 3 has parity (1,1) and class size 4") {
    for (int n = 3; n <= 4; ++n) {
        BigInt classes = 0;
        for_each_ccp(n, [&](const Perm& sigma) {
            CHECK(parity(sigma) == ParityPair{1, 1});
            CHECK(class_size(sigma) == 4);
        });
        // n * 2^(2n-3) distinct bijections
        CHECK(count_ccps(static_cast<unsigned>(n)) / 4 ==
              BigInt(n) * pow2(static_cast<unsigned>(2 * n - 3)));
    }
}
