#include "doctest.h"

#include "oracles.hpp"
#include "whmf/cmforms.hpp"
#include "whmf/error.hpp"
#include "whmf/eta.hpp"
#include "whmf/operators.hpp"

using namespace whmf;

namespace {

QSeries S(std::vector<QSeries::Term> t, Exponent p) { return QSeries::make(std::move(t), p); }

oracle::Dense dense(const QSeries& f) {
    oracle::Dense d;
    d.order = f.order();
    for (Exponent n = f.order(); n < f.precision(); ++n) d.coeffs.emplace_back(f.coeff(n).get_num());
    return d;
}

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("U and V") {
    const QSeries f = S({{-2, 1}, {1, 2}, {4, 3}, {6, 5}}, 10);
    const QSeries u = U(f, 2);
    CHECK(u.precision() == 5);
    CHECK(u.coeff(-1) == 1);
    CHECK(u.coeff(2) == 3);
    CHECK(u.coeff(3) == 5);
    const QSeries v = V(f, 3);
    CHECK(v.precision() == 28);
    CHECK(v.coeff(-6) == 1);
    CHECK(v.coeff(3) == 2);
    CHECK(v.coeff(4) == 0);
    CHECK(U(V(f, 3), 3) == f);
    CHECK_THROWS_AS(U(f, 0), DomainError);
}

TEST_CASE("theta") {
    const QSeries f = S({{-2, 1}, {0, 7}, {3, 2}}, 6);
    const QSeries t = theta_pow(f, 2);
    CHECK(t.coeff(-2) == 4);
    CHECK(t.coeff(0) == 0);
    CHECK(t.coeff(3) == 18);
    CHECK(theta_pow(f, 0) == f);
}

TEST_CASE("Hecke operators on eigenforms") {
    // g at (2,27) and (4,9) are eigenforms: g | T(p) = a(p) g.
    for (auto [k, q] : {std::pair<std::int64_t, const char*>{2, "eta(3)^2*eta(9)^2"}, {4, "eta(3)^8"}}) {
        const QSeries g = expand(EtaQuotient::parse(q), 400);
        for (std::int64_t p : {2, 5, 7, 11, 13}) {
            const QSeries t = hecke_prime_power(g, k, p, 1);
            const QSeries rhs = scale(g.coeff(p), g).truncate(t.precision());
            CHECK(t == rhs);
            CHECK(hecke_general(g, k, p) == t);
        }
    }
}

TEST_CASE("Hecke operators against the coefficient formula") {
    const QSeries f = S({{-1, -1}, {2, 1}, {3, 4}, {5, -7}, {9, 2}, {11, 1}, {15, 3}, {20, 1}}, 60);
    for (std::int64_t k : {2, 4}) {
        for (std::int64_t m : {2, 3, 4, 6, 9, 12}) {
            const QSeries h = hecke_general(f, k, m);
            const oracle::Dense ref = oracle::hecke(dense(f), k, m, 1);
            CAPTURE(k);
            CAPTURE(m);
            CHECK(h.precision() == ref.precision());
            for (Exponent n = std::min(h.order(), ref.order); n < ref.precision(); ++n)
                CHECK(h.coeff(n) == Rational(ref.at(n)));
        }
        // multiplicativity on coprime indices
        CHECK(hecke_general(f, k, 6) == hecke_general(hecke_general(f, k, 2), k, 3).truncate(hecke_general(f, k, 6).precision()));
    }
}

TEST_CASE("prime power recursion") {
    const QSeries g = expand(EtaQuotient::parse("eta(4)^2*eta(8)^2"), 500);
    for (std::int64_t p : {3, 5}) {
        for (std::int64_t n = 1; n <= 3; ++n) {
            const QSeries t = hecke_prime_power(g, 2, p, n);
            CHECK(t == scale(g.coeff(ipow(p, n).get_si()), g).truncate(t.precision()));
        }
    }
    const QSeries z = hecke_prime_power(S({{1, 1}}, 50), 0, 2, 1);
    CHECK(z.coeff(2) == make_rational(1, 2));
    CHECK_THROWS_AS(hecke_prime_power(g, 2, 4, 1), DomainError);
}

}
