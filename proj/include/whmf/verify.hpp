#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "whmf/families.hpp"
#include "whmf/spaces.hpp"

namespace whmf {

enum class Status { Verified, Violated, InsufficientPrecision };

std::string to_string(Status s);

/// Outcome of one finite-precision check. "verified" means verified up to
/// the precision or window recorded in the report, nothing more.
struct VerificationReport {
    std::string claim;
    Space space;
    nlohmann::json params = nlohmann::json::object();
    Status status = Status::Verified;
    /// (exponent or prime, value or valuation); at least one when violated.
    std::vector<std::pair<std::int64_t, std::string>> witnesses;
    Exponent precision_used = 0;
    /// Set when status is InsufficientPrecision: (required, limit).
    std::optional<std::pair<Exponent, Exponent>> shortfall;
    std::string detail;

    bool verified() const { return status == Status::Verified; }
};

nlohmann::json to_json(const VerificationReport& r);

struct VerifyOptions {
    /// Largest precision any single expansion may be asked for.
    Exponent max_precision = 5000;
    /// Window W for series identities and valuation checks: O(q^W).
    Exponent window = 10;
    /// Admit p = 2 where the claim is stated for odd primes.
    bool allow_p2 = false;
};

// Each check throws DomainError when its preconditions on p fail (p not
// prime, p | N, p not inert, p = 2 without allow_p2).

/// v_p(C(p^{2m+1})) == (k-1) m.
VerificationReport verify_thm1a(Families& fam, std::int64_t p, std::int64_t m, const VerifyOptions& opt = {});
/// v_p(F|U(p^{2m+1}) / C(p^{2m+1}) - g) >= (k-1)(m+1) on [order, W).
VerificationReport verify_thm1b(Families& fam, std::int64_t p, std::int64_t m, const VerifyOptions& opt = {});
/// C(p^{2m+1}) == (-1)^m p^{(k-1)m} C(p) mod p^{(k-1)(m+1)}.
VerificationReport verify_cong1(Families& fam, std::int64_t p, std::int64_t m, const VerifyOptions& opt = {});
/// p does not divide C(p) for every odd inert p <= pmax with p not dividing N.
VerificationReport verify_cong2(Families& fam, std::int64_t pmax, const VerifyOptions& opt = {});
/// F | T_k(p) == Theta^{k-1}(phi_p).
VerificationReport verify_hecke_theta(Families& fam, std::int64_t p, const VerifyOptions& opt = {});
/// F | T_k(p^n) == p^{(k-1)n} F_{p^n} + C(p^n) g. p need not be inert.
VerificationReport verify_prop1c(Families& fam, std::int64_t p, std::int64_t n, const VerifyOptions& opt = {});
/// C(p^{2m}) == 0 for 1 <= m <= mmax.
VerificationReport verify_even_power_zero(Families& fam, std::int64_t p, std::int64_t mmax,
                                          const VerifyOptions& opt = {});
/// F|U(p^{2m+1})/C - g == (p^{(k-1)(2m+1)} / C) (F_{p^{2m+1}} - F_{p^{2m}} | V(p)).
VerificationReport verify_telescoping(Families& fam, std::int64_t p, std::int64_t m, const VerifyOptions& opt = {});
/// The constant term of F_m phi_n vanishes for each sampled (m, n).
VerificationReport verify_constant_term(Families& fam, const std::vector<std::pair<std::int64_t, std::int64_t>>& samples,
                                        const VerifyOptions& opt = {});
/// C_m(n) == A_n(m) for valid m <= max_m and 2 <= n <= max_n.
VerificationReport verify_duality(Families& fam, std::int64_t max_n, std::int64_t max_m, const VerifyOptions& opt = {});

}  // namespace whmf
