#include "whmf/operators.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "whmf/error.hpp"

namespace whmf {

namespace {

void require_positive(std::int64_t m, const char* op) {
    if (m < 1) throw DomainError(std::string(op) + ": index must be positive, got " + std::to_string(m));
}

}  // namespace

QSeries U(const QSeries& f, std::int64_t m) {
    require_positive(m, "U");
    if (m == 1) return f;
    std::vector<QSeries::Term> out;
    for (const auto& [e, c] : f.terms())
        if (e % m == 0) out.emplace_back(e / m, c);
    return QSeries::make(std::move(out), ceil_div(f.precision(), m));
}

QSeries V(const QSeries& f, std::int64_t m) {
    require_positive(m, "V");
    if (m == 1) return f;
    std::vector<QSeries::Term> out;
    out.reserve(f.terms().size());
    for (const auto& [e, c] : f.terms()) out.emplace_back(e * m, c);
    return QSeries::make(std::move(out), m * (f.precision() - 1) + 1);
}

QSeries theta_pow(const QSeries& f, std::int64_t j) {
    if (j < 0) throw DomainError("theta_pow: negative power");
    if (j == 0) return f;
    std::vector<QSeries::Term> out;
    for (const auto& [e, c] : f.terms()) {
        Integer factor;
        mpz_pow_ui(factor.get_mpz_t(), Integer(static_cast<long>(e)).get_mpz_t(), static_cast<unsigned long>(j));
        out.emplace_back(e, Rational(c * factor));
    }
    return QSeries::make(std::move(out), f.precision());
}

QSeries hecke_prime_power(const QSeries& f, std::int64_t k, std::int64_t p, std::int64_t n) {
    if (!is_prime(p)) throw DomainError("hecke_prime_power: " + std::to_string(p) + " is not prime");
    if (n < 0) throw DomainError("hecke_prime_power: negative exponent");
    if (n == 0) return f;
    QSeries total;
    bool first = true;
    for (std::int64_t j = 0; j <= n; ++j) {
        const std::int64_t down = static_cast<std::int64_t>(ipow(p, n - j).get_si());
        const std::int64_t up = static_cast<std::int64_t>(ipow(p, j).get_si());
        QSeries term = scale(rpow(p, (k - 1) * j), V(U(f, down), up));
        total = first ? term : add(total, term);
        first = false;
    }
    return total;
}

QSeries hecke_general(const QSeries& f, std::int64_t k, std::int64_t m) {
    require_positive(m, "hecke_general");
    if (m == 1) return f;
    const Exponent prec = ceil_div(f.precision(), m);
    if (f.is_zero()) return QSeries::zero(prec);

    const auto divs = divisors(m);
    // The d = m term reaches down to exponent v*m.
    const Exponent lo = std::min<Exponent>(f.order() * m, ceil_div(f.order(), m));
    std::vector<QSeries::Term> out;
    for (Exponent n = lo; n < prec; ++n) {
        const std::int64_t g = gcd(m, n < 0 ? -n : n);  // gcd(m, 0) = m
        Rational acc = 0;
        for (std::int64_t d : divs) {
            if (g % d != 0) continue;
            const Exponent idx = m * n / (d * d);
            if (idx < f.order()) continue;
            const Rational c = f.coeff(idx);
            if (c != 0) acc += rpow(d, k - 1) * c;
        }
        if (acc != 0) out.emplace_back(n, std::move(acc));
    }
    return QSeries::make(std::move(out), prec);
}

}  // namespace whmf
