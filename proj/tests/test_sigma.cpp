#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "dyckmap/ccp.hpp"
#include "dyckmap/sigma.hpp"

using namespace dyckmap;

TEST_CASE("sigma_path worked examples") {
    CHECK(sigma_path(Perm::parse("14285763"), parse_word("uuddudud")).word() == "uduuuddd");
    CHECK(sigma_path(Perm::parse("162354"), parse_word("ududud")).word() == "uududd");
    for_each_path(4, [](const DyckPath& p) {
        CHECK(sigma_path(Perm::identity(8), p) == p);
    });
    CHECK_THROWS_AS(sigma_path(Perm::identity(6), parse_word("uudd")), error);
}

TEST_CASE("prefix_set") {
    const Perm s = Perm::parse("14285763");
    CHECK(prefix_set(s, 2) == std::set<int>{1, 4});
    CHECK(prefix_set(s, 8) == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(prefix_set(Perm::parse("162354"), 4) == std::set<int>{1, 6, 2, 3});
    CHECK_THROWS_AS(prefix_set(s, 0), error);
    CHECK_THROWS_AS(prefix_set(s, 9), error);
}

TEST_CASE("permuted_rep") {
    CHECK(permuted_rep(parse_word("uududd"), Perm::parse("362154")).to_string() ==
          "5,6,4,3,1,2");
    CHECK(permuted_rep(parse_word("ududud"), Perm::parse("234561")).to_string() ==
          "6,3,2,5,4,1");
    for_each_path(3, [](const DyckPath& p) {
        CHECK(permuted_rep(p, Perm::identity(6)) == tunneling(p));
    });
}

TEST_CASE("permuted_rep is the conjugation sigma tau sigma^{-1}") {
    // elementwise against the composed permutations, all sigma in S_4
    std::vector<int> v{1, 2, 3, 4};
    do {
        const Perm sigma(v);
        for_each_path(2, [&](const DyckPath& d) {
            const Pairing lhs = permuted_rep(d, sigma);
            const Pairing tau = tunneling(d);
            for (int i = 1; i <= 4; ++i)
                CHECK(lhs.partner(i) ==
                      sigma.apply(tau.partner(sigma.inverse().apply(i))));
        });
    } while (std::next_permutation(v.begin(), v.end()));
}

TEST_CASE("rep_as_path") {
    CHECK_FALSE(rep_as_path(parse_word("uududd"), Perm::parse("362154")).has_value());
    auto r = rep_as_path(parse_word("ududud"), Perm::parse("234561"));
    REQUIRE(r.has_value());
    CHECK(r->word() == "uududd");
    const DyckPath p = parse_word("uuddud");
    CHECK(rep_as_path(p, Perm::identity(6)) == p);
}

TEST_CASE("theorem 2: a path-shaped rep is the inverse sigma-path") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<int> v(static_cast<size_t>(2 * n));
        std::iota(v.begin(), v.end(), 1);
        do {
            const Perm sigma(v);
            for_each_path(n, [&](const DyckPath& d) {
                const auto rep = rep_as_path(d, sigma);
                if (rep) CHECK(*rep == sigma_path(sigma.inverse(), d));
            });
        } while (std::next_permutation(v.begin(), v.end()));
        if (n == 4) break;  // S_8 is the largest exhaustive sweep here
    }
}

TEST_CASE("sigma-paths are Dyck paths, exhaustively for n <= 4") {
    // DyckPath's constructor enforces every invariant, so surviving
    // construction is the check; also count the up steps explicitly.
    for (int n = 2; n <= 4; ++n) {
        std::vector<int> v(static_cast<size_t>(2 * n));
        std::iota(v.begin(), v.end(), 1);
        do {
            const Perm sigma(v);
            for_each_path(n, [&](const DyckPath& d) {
                const DyckPath image = sigma_path(sigma, d);
                CHECK(static_cast<int>(image.up_positions().size()) == n);
            });
        } while (std::next_permutation(v.begin(), v.end()));
    }
}

TEST_CASE("compose_action_check") {
    CHECK(compose_action_check(parse_word("ududud"), Perm::parse("452361"),
                               Perm::identity(6)));
    CHECK(compose_action_check(parse_word("ududud"), Perm::parse("234561"),
                               Perm::parse("234561")));
    // rotations by 2 and by 1
    CHECK(compose_action_check(parse_word("uuuddd"), Perm::parse("345612"),
                               Perm::parse("234561")));
    CHECK_THROWS_AS(
        compose_action_check(parse_word("uududd"), Perm::identity(6), Perm::parse("362154")),
        error);
}
