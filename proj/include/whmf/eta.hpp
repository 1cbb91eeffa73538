#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "whmf/qseries.hpp"

namespace whmf {

/// A formal product prod_delta eta(delta z)^{r_delta}.
class EtaQuotient {
public:
    struct Factor {
        std::int64_t delta;
        std::int64_t r;
        friend bool operator==(const Factor&, const Factor&) = default;
    };

    EtaQuotient() = default;
    /// Merges repeated deltas and drops zero exponents. Throws DomainError
    /// for delta < 1.
    explicit EtaQuotient(std::vector<Factor> factors);

    /// Parses "eta(3)^2*eta(9)^-6"; the exponent may be omitted.
    static EtaQuotient parse(std::string_view text);

    const std::vector<Factor>& factors() const { return factors_; }
    /// sum of r_delta; the weight is half of it.
    std::int64_t twice_weight() const;
    /// sum of delta * r_delta; the q-order is this over 24.
    std::int64_t order_numerator() const;

    /// Product of two quotients (exponents add).
    EtaQuotient operator*(const EtaQuotient& other) const;

    std::string to_string() const;
    friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

private:
    std::vector<Factor> factors_;  // sorted by delta, r != 0
};

/// prod_{n>=1} (1 - q^n) to O(q^P) via the pentagonal number theorem.
QSeries euler_product(Exponent precision);

/// (1/24) sum delta r_delta. Throws DomainError("fractional order") unless
/// 24 divides the sum.
std::int64_t q_order(const EtaQuotient& eq);

/// Exact expansion to O(q^P). Throws DomainError for a fractional order or
/// half-integral weight, and PrecisionError if P <= q_order.
QSeries expand(const EtaQuotient& eq, Exponent precision);

}  // namespace whmf
