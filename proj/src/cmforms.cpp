#include "whmf/cmforms.hpp"

#include <mutex>

#include "whmf/error.hpp"

namespace whmf {

namespace {

std::variant<EtaQuotient, WeierstrassCurve> construction_for(Space s) {
    require_cm_space(s);
    switch (s.N) {
        case 27: return EtaQuotient({{3, 2}, {9, 2}});
        case 32: return EtaQuotient({{4, 2}, {8, 2}});
        case 36: return EtaQuotient({{6, 4}});
        case 9: return EtaQuotient({{3, 8}});
        default: return kLevel49Curve;
    }
}

std::int64_t count_points_by_enumeration(const WeierstrassCurve& c, std::int64_t p) {
    const auto [a1, a2, a3, a4, a6] = c.a;
    std::int64_t count = 1;  // point at infinity
    for (std::int64_t x = 0; x < p; ++x)
        for (std::int64_t y = 0; y < p; ++y) {
            const std::int64_t lhs = y * y + a1 * x * y + a3 * y;
            const std::int64_t rhs = x * x * x + a2 * x * x + a4 * x + a6;
            if (((lhs - rhs) % p + p) % p == 0) ++count;
        }
    return count;
}

QSeries build_g(Space s, const std::variant<EtaQuotient, WeierstrassCurve>& how, Exponent precision) {
    if (precision < 2) throw PrecisionError("cusp form expansion needs precision >= 2");
    if (const auto* eq = std::get_if<EtaQuotient>(&how)) return expand(*eq, precision);
    std::map<std::int64_t, Integer> ap;
    for (std::int64_t p : primes_up_to(precision - 1)) ap[p] = static_cast<long>(curve_ap(p));
    return hecke_extend(ap, s.k, s.N, precision);
}

}  // namespace

CMForm::CMForm(Space space)
    : space_(space), disc_(cm_discriminant(space)), construction_(construction_for(space)) {}

QSeries CMForm::expansion(Exponent precision) const {
    {
        std::shared_lock lock(mutex_);
        if (cached_ && cache_.precision() >= precision) return cache_.truncate(precision);
    }
    std::unique_lock lock(mutex_);
    if (!(cached_ && cache_.precision() >= precision)) {
        const Exponent target = cached_ ? std::max(precision, 2 * cache_.precision()) : precision;
        cache_ = build_g(space_, construction_, target);
        cached_ = true;
    }
    return cache_.truncate(precision);
}

QSeries g_expansion(Space space, Exponent precision) {
    return build_g(space, construction_for(space), precision);
}

std::int64_t curve_ap(std::int64_t p) {
    if (!is_prime(p)) throw DomainError("curve_ap: " + std::to_string(p) + " is not prime");
    if (p == 7) return 0;
    const auto& c = kLevel49Curve;
    if (p == 2) return p + 1 - count_points_by_enumeration(c, p);

    // With u = 2y + a1 x + a3 the curve becomes u^2 = h(x),
    // h = 4(x^3 + a2 x^2 + a4 x + a6) + (a1 x + a3)^2.
    const auto [a1, a2, a3, a4, a6] = c.a;
    std::vector<int> chi(static_cast<std::size_t>(p), -1);
    chi[0] = 0;
    for (std::int64_t u = 1; u < p; ++u) chi[u * u % p] = 1;
    auto mod = [p](std::int64_t v) { return ((v % p) + p) % p; };
    std::int64_t sum = 0;
    for (std::int64_t x = 0; x < p; ++x) {
        const std::int64_t cubic = mod(mod(mod(x * x) * x) + mod(a2 * mod(x * x)) + mod(a4 * x) + a6);
        const std::int64_t lin = mod(a1 * x + a3);
        sum += chi[mod(4 * cubic + lin * lin)];
    }
    return -sum;  // #E = p + 1 + sum
}

QSeries hecke_extend(const std::map<std::int64_t, Integer>& ap, std::int64_t k, std::int64_t level,
                     Exponent precision) {
    if (precision < 2) throw PrecisionError("hecke_extend: precision must be >= 2");
    // a(p^r) for each prime, computed lazily.
    std::map<std::int64_t, std::vector<Integer>> prime_powers;
    auto a_pp = [&](std::int64_t p, int r) -> const Integer& {
        auto& seq = prime_powers[p];
        if (seq.empty()) {
            auto it = ap.find(p);
            if (it == ap.end()) throw DomainError("hecke_extend: missing a_p for p = " + std::to_string(p));
            seq = {Integer(1), it->second};
        }
        const bool bad = level % p == 0;
        const Integer pk = ipow(p, k - 1);
        while (static_cast<int>(seq.size()) <= r) {
            const std::size_t s = seq.size();
            seq.push_back(bad ? Integer(seq[1] * seq[s - 1]) : Integer(seq[1] * seq[s - 1] - pk * seq[s - 2]));
        }
        return seq[r];
    };
    std::vector<QSeries::Term> terms;
    for (std::int64_t n = 1; n < precision; ++n) {
        Integer a = 1;
        for (auto [p, e] : factor(n)) a *= a_pp(p, e);
        if (a != 0) terms.emplace_back(n, Rational(a));
    }
    return QSeries::make(std::move(terms), precision);
}

std::vector<std::int64_t> cm_support_check(const QSeries& g, Discriminant d, std::int64_t bound) {
    std::vector<std::int64_t> violations;
    for (std::int64_t n = 1; n <= bound; ++n)
        if (kronecker(d.value(), n) == -1 && g.coeff(n) != 0) violations.push_back(n);
    return violations;
}

}  // namespace whmf
