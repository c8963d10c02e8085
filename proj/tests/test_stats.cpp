#include "doctest.h"

#include <array>

#include "dyckmap/ccp.hpp"
#include "dyckmap/stats.hpp"

using namespace dyckmap;

TEST_CASE("unpaired_count worked examples") {
    const DyckPath p = parse_word("uuuduudddudd");
    CHECK(unpaired_count(p, 2, 5) == 3);
    CHECK(unpaired_count(p, 9, 7) == 1);
    CHECK_THROWS_AS(unpaired_count(p, 0, 3), error);
    CHECK_THROWS_AS(unpaired_count(p, 13, 3), error);
}

TEST_CASE("u_{1,k} equals the height statistic") {
    for (int n = 1; n <= 5; ++n)
        for_each_path(n, [&](const DyckPath& p) {
            for (int k = 1; k <= 2 * n; ++k) CHECK(unpaired_count(p, 1, k) == p.height(k));
        });
}

TEST_CASE("window complement and parity invariants") {
    for (int n = 2; n <= 5; ++n)
        for_each_path(n, [&](const DyckPath& p) {
            const int m = 2 * n;
            for (int a = 1; a <= m; ++a)
                for (int k = 1; k < m; ++k) {
                    const int u = unpaired_count(p, a, k);
                    CHECK(u == unpaired_count(p, (a + k - 1) % m + 1, m - k));
                    CHECK(u % 2 == k % 2);
                }
        });
}

TEST_CASE("tunnel pairs inside the window") {
    const DyckPath p = parse_word("uuuduudddudd");
    int t = -1;
    const int u = unpaired_count(p, 2, 5, &t);
    CHECK(u + 2 * t == 5);
    CHECK(t == 1);
}

TEST_CASE("stat_sigma is the rotation CCP") {
    CHECK(stat_sigma(1, 4) == Perm::identity(8));
    CHECK(stat_sigma(3, 3).to_string() == "3,4,5,6,1,2");
    for (int n = 1; n <= 6; ++n)
        for (int a = 1; a <= 2 * n; ++a) CHECK(is_ccp(stat_sigma(a, n)));
}

TEST_CASE("equidistribution of u_{a,k} and h_k") {
    CHECK(equidistribution_check(3, 3, 2));
    for (int k = 1; k <= 6; ++k) CHECK(equidistribution_check(3, 1, k));
    for (int a = 1; a <= 10; ++a)
        for (int k = 1; k <= 10; ++k) CHECK(equidistribution_check(5, a, k));
}

TEST_CASE("height_level_count closed form versus brute force") {
    CHECK(height_level_count(3, 2, 2) == 3);
    CHECK(height_level_count(3, 2, 1) == 0);
    CHECK(height_level_count(3, 6, 0) == 5);
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= 2 * n; ++k) {
            const StatHistogram hist = height_histogram(n, k);
            for (int l = 0; l <= n; ++l) {
                BigInt direct = 0;
                if (auto it = hist.find(l); it != hist.end()) direct = it->second;
                CHECK(height_level_count(n, k, l) == direct);
            }
        }
}

TEST_CASE("u_max and peak height worked examples") {
    CHECK(u_max(parse_word("uuddud"), 3) == 3);
    CHECK(u_max(parse_word("ududud"), 1) == 1);
    CHECK(u_max(parse_word("uuuddd"), 4) == 3);
    CHECK(peak_height(parse_word("uuuddd")) == 3);
    CHECK(peak_height(parse_word("ududud")) == 1);
    CHECK(peak_height(parse_word("ud")) == 1);
}

TEST_CASE("table of u_max values for n = 3") {
    // rows: path; columns: h, then u_max^(1..6)
    const std::array<std::pair<const char*, std::array<int, 7>>, 5> table{{
        {"uuuddd", {3, 3, 2, 2, 3, 2, 2}},
        {"uududd", {2, 2, 1, 2, 1, 2, 1}},
        {"uuddud", {2, 2, 2, 3, 2, 2, 3}},
        {"uduudd", {2, 2, 3, 2, 2, 3, 2}},
        {"ududud", {1, 1, 2, 1, 2, 1, 2}},
    }};
    for (const auto& [word, row] : table) {
        const DyckPath p = parse_word(word);
        CHECK(peak_height(p) == row[0]);
        for (int a = 1; a <= 6; ++a) CHECK(u_max(p, a) == row[static_cast<size_t>(a)]);
    }
}

TEST_CASE("u_max equidistributed with peak height") {
    CHECK(umax_equidistribution_check(3, 2));
    for (int n = 1; n <= 5; ++n)
        for (int a = 1; a <= 2 * n; ++a) CHECK(umax_equidistribution_check(n, a));
}

TEST_CASE("pointwise transport through the rotation") {
    for (int n = 1; n <= 5; ++n)
        for (int a = 1; a <= 2 * n; ++a) {
            const Perm sigma = stat_sigma(a, n);
            for_each_path(n, [&](const DyckPath& p) {
                const DyckPath image = sigma_path(sigma, p);
                for (int k = 1; k <= 2 * n; ++k)
                    CHECK(unpaired_count(p, a, k) == image.height(k));
            });
        }
}
