#include "doctest.h"

#include "whmf/error.hpp"
#include "whmf/fixtures.hpp"

using namespace whmf;

TEST_SUITE("fixtures") {

TEST_CASE("embedded set") {
    const auto& all = golden_fixtures();
    CHECK(all.size() == 36);
    std::size_t coeffs = 0;
    for (const auto& f : all) {
        coeffs += f.series.terms().size();
        CHECK_FALSE(f.provenance.empty());
        CHECK(is_cm_space(f.space));
    }
    CHECK(coeffs == 160);
}

TEST_CASE("checker detects an altered coefficient") {
    const auto& all = golden_fixtures();
    std::vector<GoldenExpansion> one{all.front()};
    CHECK(golden_check(one).ok());
    auto terms = one[0].series.terms();
    terms.back().second += 1;
    one[0].series = QSeries::make(terms, one[0].series.precision());
    const GoldenReport r = golden_check(one);
    CHECK(r.mismatches.size() == 1);
}

TEST_CASE("checker treats absent exponents as printed zeros") {
    // q - 2q^4 - q^7 printed to O(q^8) means a(2) = a(3) = a(5) = a(6) = 0.
    std::vector<GoldenExpansion> one{{{2, 27}, "g", QSeries::make({{1, 1}, {4, -2}, {7, -1}}, 8), "test"}};
    CHECK(golden_check(one).ok());
    one[0].series = QSeries::make({{1, 1}, {7, -1}}, 8);
    CHECK_FALSE(golden_check(one).ok());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_golden(nlohmann::json{{"schema", 2}, {"fixtures", nlohmann::json::array()}}), ParseError);
    CHECK_THROWS_AS(parse_golden(nlohmann::json{{"schema", 1}}), ParseError);
    nlohmann::json bad = {{"schema", 1},
                          {"fixtures", {{{"space", "2,27"}, {"form", "g"}, {"provenance", "x"}, {"order", 1},
                                         {"precision", 3}, {"coeffs", {{1, "1"}, {5, "1"}}}}}}};
    CHECK_THROWS(parse_golden(bad));
}

}
