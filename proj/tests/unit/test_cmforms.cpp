#include "doctest.h"

#include <thread>

#include "oracles.hpp"
#include "whmf/cmforms.hpp"
#include "whmf/error.hpp"
#include "whmf/operators.hpp"

using namespace whmf;

TEST_SUITE("cmforms") {

TEST_CASE("level-49 traces of Frobenius") {
    for (std::int64_t p : primes_up_to(400)) {
        CAPTURE(p);
        CHECK(curve_ap(p) == oracle::curve_ap_bruteforce(p));
    }
    CHECK(curve_ap(2) == 1);
    CHECK(curve_ap(7) == 0);
    CHECK(curve_ap(11) == 4);
    CHECK(curve_ap(37) == -6);
}

TEST_CASE("normalized forms") {
    for (Space s : cm_spaces()) {
        const QSeries g = CMForm(s).expansion(300);
        CAPTURE(s.label());
        CHECK(g.order() == 1);
        CHECK(g.coeff(1) == 1);
        CHECK(assert_integral(g));
        CHECK(cm_support_check(g, cm_discriminant(s), 299).empty());
    }
    CHECK(to_string(CMForm({2, 49}).expansion(12)) == "q + q^2 - q^4 - 3q^8 - 3q^9 + 4q^11 + O(q^12)");
    CHECK(to_string(CMForm({2, 27}).expansion(14)) == "q - 2q^4 - q^7 + 5q^13 + O(q^14)");
}

TEST_CASE("eigenform property for p <= 30") {
    for (Space s : cm_spaces()) {
        const QSeries g = CMForm(s).expansion(30 * 40 + 1);
        for (std::int64_t p : primes_up_to(30)) {
            if (s.N % p == 0) continue;
            const QSeries t = hecke_prime_power(g, s.k, p, 1);
            CAPTURE(s.label());
            CAPTURE(p);
            CHECK(t == scale(g.coeff(p), g).truncate(t.precision()));
        }
    }
}

TEST_CASE("level-49 form is the eta-free construction") {
    // Multiplicative rebuild from a_p at primes, compared with the cached expansion.
    std::map<std::int64_t, Integer> ap;
    for (std::int64_t p : primes_up_to(300)) ap[p] = curve_ap(p);
    CHECK(hecke_extend(ap, 2, 49, 301) == CMForm({2, 49}).expansion(301));
    CHECK_THROWS_AS(hecke_extend(ap, 2, 49, 400), DomainError);
}

TEST_CASE("CM support check reports violations") {
    const QSeries bad = QSeries::make({{1, 1}, {2, 3}}, 5);
    CHECK(cm_support_check(bad, Discriminant(-3), 4) == std::vector<std::int64_t>{2});
}

TEST_CASE("concurrent expansion requests agree") {
    CMForm g({2, 36});
    std::vector<QSeries> out(8);
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < out.size(); ++i)
        pool.emplace_back([&, i] { out[i] = g.expansion(100 + 50 * static_cast<Exponent>(i)); });
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == g_expansion({2, 36}, out[i].precision()));
    CHECK_THROWS_AS(CMForm({2, 11}), DomainError);
}

}
