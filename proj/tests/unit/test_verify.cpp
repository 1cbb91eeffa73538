#include "doctest.h"

#include "whmf/error.hpp"
#include "whmf/verify.hpp"

using namespace whmf;

TEST_SUITE("verify") {

TEST_CASE("verified reports") {
    Families fam({2, 32});
    const auto r = verify_thm1a(fam, 3, 1);
    CHECK(r.verified());
    CHECK(r.witnesses.front() == std::pair<std::int64_t, std::string>{27, "1"});
    const auto j = to_json(r);
    CHECK(j["schema"] == 1);
    CHECK(j["status"] == "verified");
    CHECK(j["space"] == "2,32");
    CHECK(verify_thm1b(fam, 3, 1).verified());
    CHECK(verify_cong1(fam, 7, 0).verified());
    CHECK(verify_hecke_theta(fam, 11).verified());
    CHECK(verify_prop1c(fam, 5, 2).verified());
    CHECK(verify_even_power_zero(fam, 3, 3).verified());
    CHECK(verify_telescoping(fam, 3, 1).verified());
    CHECK(verify_constant_term(fam, {{1, 2}, {3, 4}, {5, 5}, {-1, 7}}).verified());
    CHECK(verify_duality(fam, 15, 15).verified());
    CHECK(verify_cong2(fam, 100).verified());
}

TEST_CASE("a genuine violation outside the hypotheses") {
    // p = 2 is excluded from the claims; at (4,9) it divides C(2).
    Families fam({4, 9});
    VerifyOptions opt;
    opt.allow_p2 = true;
    const auto r = verify_cong2(fam, 2, opt);
    CHECK(r.status == Status::Violated);
    REQUIRE_FALSE(r.witnesses.empty());
    CHECK(r.witnesses.front().first == 2);
    const auto t = verify_thm1a(fam, 2, 1, opt);
    CHECK(t.status == Status::Violated);
    CHECK(to_json(t)["witnesses"][0][1] == "4");
}

TEST_CASE("insufficient precision is not a failure") {
    Families fam({2, 27});
    VerifyOptions opt;
    opt.max_precision = 100;
    const auto r = verify_thm1b(fam, 5, 1, opt);
    CHECK(r.status == Status::InsufficientPrecision);
    REQUIRE(r.shortfall);
    CHECK(r.shortfall->first == 1250);
    CHECK(r.shortfall->second == 100);
    CHECK(to_json(r)["status"] == "insufficient_precision");
}

TEST_CASE("preconditions on p") {
    Families fam({2, 27});
    CHECK_THROWS_AS(verify_thm1a(fam, 7, 0), DomainError);   // splits
    CHECK_THROWS_AS(verify_thm1a(fam, 3, 0), DomainError);   // divides N
    CHECK_THROWS_AS(verify_thm1a(fam, 9, 0), DomainError);   // not prime
    CHECK_THROWS_AS(verify_thm1a(fam, 2, 0), DomainError);   // needs the opt-in
    CHECK_THROWS_AS(verify_prop1c(fam, 3, 1), DomainError);
    CHECK(verify_prop1c(fam, 7, 1).verified());                // split primes are fine here
    VerifyOptions opt;
    opt.allow_p2 = true;
    CHECK(verify_hecke_theta(fam, 2, opt).verified());
}

}
