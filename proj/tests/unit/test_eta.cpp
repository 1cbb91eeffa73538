#include "doctest.h"

#include "oracles.hpp"
#include "whmf/error.hpp"
#include "whmf/eta.hpp"

using namespace whmf;

TEST_SUITE("eta") {

TEST_CASE("parse and print") {
    const EtaQuotient e = EtaQuotient::parse("eta(3)^2*eta(9)^-6");
    CHECK(e.factors() == std::vector<EtaQuotient::Factor>{{3, 2}, {9, -6}});
    CHECK(e.twice_weight() == -4);
    CHECK(e.order_numerator() == -48);
    CHECK(EtaQuotient::parse(" eta(1) * eta(49)^-1 ").to_string() == "eta(1)*eta(49)^-1");
    CHECK(EtaQuotient::parse("eta(4)*eta(4)*eta(8)^2") == EtaQuotient::parse("eta(4)^2*eta(8)^2"));
    CHECK(EtaQuotient::parse("eta(2)^3*eta(2)^-3").factors().empty());
    CHECK_THROWS_AS(EtaQuotient::parse("eta(0)"), ParseError);
    CHECK_THROWS_AS(EtaQuotient({{0, 1}}), DomainError);
    CHECK_THROWS_AS(EtaQuotient::parse("eta(3)^"), ParseError);
    CHECK_THROWS_AS(EtaQuotient::parse("theta(3)"), ParseError);
    CHECK_THROWS_AS(EtaQuotient::parse("eta(3)^2 eta(9)"), ParseError);
}

TEST_CASE("euler product is the pentagonal series") {
    const QSeries e = euler_product(30);
    CHECK(to_string(e) == "1 - q - q^2 + q^5 + q^7 - q^12 - q^15 + q^22 + q^26 + O(q^30)");
    const oracle::Dense ref = oracle::eta_product({{24, 1}}, 25 * 24);
    for (Exponent n = 0; n < 25; ++n) CHECK(e.coeff(n) == Rational(ref.at(24 * n + 1)));
}

TEST_CASE("expansions agree with the naive product") {
    const std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> cases = {
        {{3, 2}, {9, 2}}, {{4, 2}, {8, 2}}, {{6, 4}}, {{3, 8}}, {{3, 2}, {9, -6}},
        {{9, 4}, {3, -1}, {27, -3}}, {{1, 1}, {49, -1}}, {{1, 3}, {9, -3}}, {{12, 1}, {18, 3}, {6, -1}, {36, -3}},
    };
    for (const auto& c : cases) {
        std::vector<EtaQuotient::Factor> f;
        for (auto [d, r] : c) f.push_back({d, r});
        const EtaQuotient eq(f);
        const QSeries s = expand(eq, 200);
        const oracle::Dense ref = oracle::eta_product(c, 200);
        CAPTURE(eq.to_string());
        CHECK(s.order() == ref.order);
        CHECK(s.precision() == 200);
        for (Exponent n = ref.order; n < 200; ++n) CHECK(s.coeff(n) == Rational(ref.at(n)));
    }
}

TEST_CASE("rejected quotients") {
    CHECK_THROWS_AS(expand(EtaQuotient::parse("eta(1)"), 10), DomainError);           // q^(1/24)
    CHECK_THROWS_AS(expand(EtaQuotient::parse("eta(1)^24*eta(2)^-1"), 10), DomainError);  // odd twice-weight
    CHECK(q_order(EtaQuotient::parse("eta(1)^24")) == 1);
}

}
