#include "whmf/verify.hpp"

#include <algorithm>

#include "whmf/error.hpp"
#include "whmf/operators.hpp"

namespace whmf {

namespace {

struct Check {
    VerificationReport report;

    Check(std::string claim, const Families& fam, nlohmann::json params) {
        report.claim = std::move(claim);
        report.space = fam.space();
        report.params = std::move(params);
    }

    // True when `required` fits the limit; otherwise marks the report.
    bool budget(Exponent required, const VerifyOptions& opt) {
        report.precision_used = std::max(report.precision_used, required);
        if (required <= opt.max_precision) return true;
        report.status = Status::InsufficientPrecision;
        report.shortfall = {required, opt.max_precision};
        report.detail = "needs O(q^" + std::to_string(required) + "), limit is O(q^" +
                        std::to_string(opt.max_precision) + ")";
        return false;
    }

    void witness(std::int64_t at, std::string value) { report.witnesses.emplace_back(at, std::move(value)); }

    void fail(std::string detail) {
        report.status = Status::Violated;
        if (report.detail.empty()) report.detail = std::move(detail);
    }
};

std::int64_t checked_pow(std::int64_t p, std::int64_t e) {
    const Integer v = ipow(p, e);
    if (!v.fits_slong_p() || v > 1'000'000'000) throw DomainError("prime power too large");
    return v.get_si();
}

void require_good_prime(const Families& fam, std::int64_t p) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (fam.space().N % p == 0)
        throw DomainError("p = " + std::to_string(p) + " divides the level " + std::to_string(fam.space().N));
}

void require_inert_prime(const Families& fam, std::int64_t p, const VerifyOptions& opt) {
    require_good_prime(fam, p);
    if (!is_inert(fam.g().discriminant(), p))
        throw DomainError("p = " + std::to_string(p) + " is not inert in the CM field");
    if (p == 2 && !opt.allow_p2) throw DomainError("p = 2 requires the explicit p = 2 opt-in");
}

// Compares two series on their shared precision; mismatching exponents
// become witnesses.
void compare_series(Check& chk, const QSeries& lhs, const QSeries& rhs) {
    const Exponent prec = std::min(lhs.precision(), rhs.precision());
    const QSeries diff = sub(lhs.truncate(prec), rhs.truncate(prec));
    for (const auto& [e, c] : diff.terms()) {
        chk.witness(e, rational_to_string(lhs.coeff(e)) + " != " + rational_to_string(rhs.coeff(e)));
        if (chk.report.witnesses.size() >= 20) break;
    }
    if (!diff.is_zero()) chk.fail("series differ on the shared window O(q^" + std::to_string(prec) + ")");
    else chk.report.detail = "agree to O(q^" + std::to_string(prec) + ")";
}

}  // namespace

std::string to_string(Status s) {
    switch (s) {
        case Status::Verified: return "verified";
        case Status::Violated: return "violated";
        case Status::InsufficientPrecision: return "insufficient_precision";
    }
    return "unknown";
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& [at, value] : r.witnesses) w.push_back({at, value});
    nlohmann::json j = {{"schema", 1},
                        {"claim", r.claim},
                        {"space", r.space.label()},
                        {"params", r.params},
                        {"status", to_string(r.status)},
                        {"witnesses", std::move(w)},
                        {"precision_used", r.precision_used},
                        {"detail", r.detail}};
    if (r.shortfall) j["shortfall"] = {{"required", r.shortfall->first}, {"limit", r.shortfall->second}};
    return j;
}

VerificationReport verify_thm1a(Families& fam, std::int64_t p, std::int64_t m, const VerifyOptions& opt) {
    require_inert_prime(fam, p, opt);
    Check chk("thm1a", fam, {{"p", p}, {"m", m}});
    const std::int64_t e = checked_pow(p, 2 * m + 1);
    if (!chk.budget(e + 1, opt)) return chk.report;
    const Integer c = fam.C(1, e);
    if (c == 0) {
        chk.witness(e, "0");
        chk.fail("C(p^(2m+1)) vanishes");
        return chk.report;
    }
    const std::int64_t v = vp(c, p);
    const std::int64_t expected = (fam.space().k - 1) * m;
    chk.witness(e, std::to_string(v));
    chk.report.detail = "v_p(C(" + std::to_string(e) + ")) = " + std::to_string(v) + ", expected " + std::to_string(expected);
    if (v != expected) chk.fail(chk.report.detail);
    return chk.report;
}

VerificationReport verify_thm1b(Families& fam, std::int64_t p, std::int64_t m, const VerifyOptions& opt) {
    require_inert_prime(fam, p, opt);
    const Exponent W = opt.window;
    Check chk("thm1b", fam, {{"p", p}, {"m", m}, {"window", W}});
    const std::int64_t e = checked_pow(p, 2 * m + 1);
    if (!chk.budget(e * W, opt)) return chk.report;
    const QSeries F = fam.F(1, e * W).series;
    const Rational c = F.coeff(e);
    if (c == 0) {
        chk.witness(e, "0");
        chk.fail("C(p^(2m+1)) vanishes");
        return chk.report;
    }
    const QSeries G = sub(scale(1 / c, U(F, e)), fam.g().expansion(W));
    const Valuation val = min_valuation(G, p, std::min<Exponent>(G.order(), 0), W);
    const std::int64_t bound = (fam.space().k - 1) * (m + 1);
    if (!val.value) {
        chk.report.detail = "difference vanishes to O(q^" + std::to_string(W) + ")";
        return chk.report;
    }
    chk.witness(*val.witness, std::to_string(*val.value));
    chk.report.detail = "min valuation " + std::to_string(*val.value) + " on O(q^" + std::to_string(W) +
                        "), bound " + std::to_string(bound);
    if (*val.value < bound) chk.fail(chk.report.detail);
    return chk.report;
}

VerificationReport verify_cong1(Families& fam, std::int64_t p, std::int64_t m, const VerifyOptions& opt) {
    require_inert_prime(fam, p, opt);
    Check chk("cong1", fam, {{"p", p}, {"m", m}});
    const std::int64_t e = checked_pow(p, 2 * m + 1);
    if (!chk.budget(e + 1, opt)) return chk.report;
    const std::int64_t k = fam.space().k;
    const Integer lhs = fam.C(1, e);
    const Integer rhs = (m % 2 == 0 ? 1 : -1) * ipow(p, (k - 1) * m) * fam.C(1, p);
    const Integer modulus = ipow(p, (k - 1) * (m + 1));
    Integer residue;
    mpz_mod(residue.get_mpz_t(), Integer(lhs - rhs).get_mpz_t(), modulus.get_mpz_t());
    chk.witness(e, residue.get_str());
    chk.report.detail = "C(" + std::to_string(e) + ") - (" + rhs.get_str() + ") = " + residue.get_str() + " mod " +
                        modulus.get_str();
    if (residue != 0) chk.fail(chk.report.detail);
    return chk.report;
}

VerificationReport verify_cong2(Families& fam, std::int64_t pmax, const VerifyOptions& opt) {
    Check chk("cong2", fam, {{"pmax", pmax}, {"allow_p2", opt.allow_p2}});
    if (!chk.budget(pmax + 1, opt)) return chk.report;
    const Discriminant d = fam.g().discriminant();
    std::vector<std::int64_t> failing;
    for (std::int64_t p : primes_up_to(pmax)) {
        if (fam.space().N % p == 0 || !is_inert(d, p)) continue;
        if (p == 2 && !opt.allow_p2) continue;
        Integer r;
        mpz_mod_ui(r.get_mpz_t(), fam.C(1, p).get_mpz_t(), static_cast<unsigned long>(p));
        chk.witness(p, r.get_str());
        if (r == 0) failing.push_back(p);
    }
    if (!failing.empty()) chk.fail("p | C(p) for p = " + std::to_string(failing.front()));
    else chk.report.detail = std::to_string(chk.report.witnesses.size()) + " inert primes checked";
    return chk.report;
}

VerificationReport verify_hecke_theta(Families& fam, std::int64_t p, const VerifyOptions& opt) {
    require_inert_prime(fam, p, opt);
    const Exponent W = opt.window;
    Check chk("hecke_theta", fam, {{"p", p}, {"window", W}});
    if (!chk.budget(p * W, opt)) return chk.report;
    const std::int64_t k = fam.space().k;
    const QSeries lhs = hecke_prime_power(fam.F(1, p * W).series, k, p, 1);
    const QSeries rhs = theta_pow(fam.phi(p, W).series, k - 1);
    compare_series(chk, lhs, rhs);
    return chk.report;
}

VerificationReport verify_prop1c(Families& fam, std::int64_t p, std::int64_t n, const VerifyOptions& opt) {
    require_good_prime(fam, p);
    if (n < 0) throw DomainError("prop1c: n must be >= 0");
    const Exponent W = opt.window;
    Check chk("prop1c", fam, {{"p", p}, {"n", n}, {"window", W}});
    const std::int64_t q = checked_pow(p, n);
    if (!chk.budget(q * W, opt)) return chk.report;
    const std::int64_t k = fam.space().k;
    const QSeries F = fam.F(1, q * W).series;
    const QSeries lhs = hecke_prime_power(F, k, p, n);
    const Rational cq = F.coeff(q);
    const QSeries rhs = add(scale(rpow(p, (k - 1) * n), fam.F(q, W).series), scale(cq, fam.g().expansion(W)));
    compare_series(chk, lhs, rhs);
    return chk.report;
}

VerificationReport verify_even_power_zero(Families& fam, std::int64_t p, std::int64_t mmax, const VerifyOptions& opt) {
    require_inert_prime(fam, p, opt);
    Check chk("even_power_zero", fam, {{"p", p}, {"mmax", mmax}});
    if (mmax < 1) return chk.report;
    const std::int64_t top = checked_pow(p, 2 * mmax);
    if (!chk.budget(top + 1, opt)) return chk.report;
    for (std::int64_t m = 1; m <= mmax; ++m) {
        const std::int64_t e = checked_pow(p, 2 * m);
        const Integer c = fam.C(1, e);
        chk.witness(e, c.get_str());
        if (c != 0) chk.fail("C(" + std::to_string(e) + ") = " + c.get_str());
    }
    return chk.report;
}

VerificationReport verify_telescoping(Families& fam, std::int64_t p, std::int64_t m, const VerifyOptions& opt) {
    require_inert_prime(fam, p, opt);
    const Exponent W = opt.window;
    Check chk("telescoping", fam, {{"p", p}, {"m", m}, {"window", W}});
    const std::int64_t e = checked_pow(p, 2 * m + 1);
    const std::int64_t even = checked_pow(p, 2 * m);
    if (!chk.budget(e * W, opt)) return chk.report;
    const std::int64_t k = fam.space().k;
    const QSeries F = fam.F(1, e * W).series;
    const Rational c = F.coeff(e);
    if (c == 0) {
        chk.witness(e, "0");
        chk.fail("C(p^(2m+1)) vanishes");
        return chk.report;
    }
    const QSeries lhs = sub(scale(1 / c, U(F, e)), fam.g().expansion(W));
    const QSeries inner = sub(fam.F(e, W).series, V(fam.F(even, ceil_div(W, p) + 1).series, p));
    const QSeries rhs = scale(rpow(p, (k - 1) * (2 * m + 1)) / c, inner);
    compare_series(chk, lhs, rhs);
    return chk.report;
}

VerificationReport verify_constant_term(Families& fam, const std::vector<std::pair<std::int64_t, std::int64_t>>& samples,
                                        const VerifyOptions& opt) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [m, n] : samples) pairs.push_back({m, n});
    Check chk("constant_term", fam, {{"samples", pairs}});
    for (const auto& [m, n] : samples) {
        if (!valid_F_index(fam.space(), m) || !valid_phi_index(fam.space(), n))
            throw DomainError("constant_term: invalid index pair (" + std::to_string(m) + ", " + std::to_string(n) + ")");
        if (!chk.budget(std::max(n, m) + 2, opt)) return chk.report;
        const QSeries prod = mul(fam.F(m, n + 2).series, fam.phi(n, m + 2).series);
        const Rational c0 = prod.coeff(0);
        chk.witness(m, "n=" + std::to_string(n) + ": " + rational_to_string(c0));
        if (c0 != 0) chk.fail("constant term of F_" + std::to_string(m) + "*phi_" + std::to_string(n) + " is nonzero");
    }
    return chk.report;
}

VerificationReport verify_duality(Families& fam, std::int64_t max_n, std::int64_t max_m, const VerifyOptions& opt) {
    Check chk("duality", fam, {{"max_n", max_n}, {"max_m", max_m}});
    if (!chk.budget(std::max(max_n, max_m) + 1, opt)) return chk.report;
    std::size_t compared = 0;
    for (std::int64_t m = -1; m <= max_m; ++m) {
        if (!valid_F_index(fam.space(), m)) continue;
        const QSeries Fm = fam.F(m, max_n + 1).series;
        for (std::int64_t n = 2; n <= max_n; ++n) {
            const Rational c = Fm.coeff(n);
            const Rational a = fam.phi(n, max_m + 1).series.coeff(m);
            ++compared;
            if (c != a) {
                chk.witness(m, "n=" + std::to_string(n) + ": C=" + rational_to_string(c) + " A=" + rational_to_string(a));
                chk.fail("C_m(n) != A_n(m)");
            }
        }
    }
    if (chk.report.status == Status::Verified) chk.report.detail = std::to_string(compared) + " pairs agree";
    return chk.report;
}

}  // namespace whmf
