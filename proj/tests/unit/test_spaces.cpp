#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "whmf/error.hpp"
#include "whmf/spaces.hpp"

using namespace whmf;

TEST_SUITE("spaces") {

TEST_CASE("level invariants") {
    const LevelInvariants i = invariants_of(27);
    CHECK(i.mu == 36);
    CHECK(i.eps2 == 0);
    CHECK(i.eps3 == 0);
    CHECK(i.eps_inf == 6);
    CHECK(i.genus == 1);
    CHECK(invariants_of(13).eps2 == 2);
    CHECK(invariants_of(13).eps3 == 2);
    CHECK(invariants_of(1).genus == 0);
    for (std::int64_t N : {11, 14, 15, 17, 19, 20, 21, 24, 27, 32, 36, 49}) CHECK(invariants_of(N).genus == 1);
    CHECK(invariants_of(37).genus == 2);
    CHECK(invariants_of(389).genus == 32);
}

TEST_CASE("genus against brute-force counts") {
    for (std::int64_t N = 1; N <= 150; ++N) {
        CAPTURE(N);
        CHECK(invariants_of(N).genus == oracle::genus_bruteforce(N));
    }
}

TEST_CASE("dimensions") {
    CHECK(dim_cusp(12, 1) == 1);
    CHECK(dim_cusp(24, 1) == 2);
    CHECK(dim_cusp(2, 1) == 0);
    CHECK(dim_cusp(4, 9) == 1);
    CHECK(dim_cusp(4, 8) == 1);
    CHECK(dim_cusp(6, 4) == 1);
    CHECK(dim_cusp(4, 11) == 2);
    CHECK_THROWS_AS(dim_cusp(3, 11), DomainError);
    for (std::int64_t N = 1; N <= 200; ++N) CHECK(dim_cusp(2, N) == invariants_of(N).genus);
}

TEST_CASE("scan") {
    const auto rows = scan(kDefaultScanLevel, kDefaultScanWeight);
    for (Space s : cm_spaces())
        CHECK(std::any_of(rows.begin(), rows.end(), [&](const SpaceData& r) { return r.space == s; }));
    for (const auto& r : rows) CHECK(r.dim_cusp == 1);
    CHECK(std::is_sorted(rows.begin(), rows.end(), [](const SpaceData& a, const SpaceData& b) {
        return std::pair(a.space.N, a.space.k) < std::pair(b.space.N, b.space.k);
    }));
    CHECK(std::any_of(rows.begin(), rows.end(), [](const SpaceData& r) { return r.space == Space{12, 1}; }));
}

TEST_CASE("space labels and CM data") {
    CHECK(Space::parse("4,9") == Space{4, 9});
    CHECK(Space::parse("2,27").label() == "2,27");
    CHECK_THROWS_AS(Space::parse("2,27x"), ParseError);
    CHECK_THROWS_AS(Space::parse("2;27"), ParseError);
    CHECK_THROWS_AS(Space::parse("2,"), ParseError);
    CHECK(cm_spaces().size() == 5);
    CHECK(cm_discriminant({2, 32}).value() == -4);
    CHECK(cm_discriminant({2, 49}).value() == -7);
    CHECK(cm_discriminant({4, 9}).value() == -3);
    CHECK_THROWS_AS(cm_discriminant({2, 11}), DomainError);
    CHECK_THROWS_AS(require_cm_space({3, 11}), DomainError);
    CHECK_FALSE(is_cm_space({2, 11}));
}

}
