#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace whmf {

using Integer = mpz_class;

// GMP rationals are kept canonical by every arithmetic operation: lowest
// terms, positive denominator, zero stored as 0/1.
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

/// Fundamental discriminant of an imaginary quadratic field.
class Discriminant {
public:
    explicit Discriminant(std::int64_t d);
    std::int64_t value() const { return d_; }
    friend bool operator==(Discriminant, Discriminant) = default;

private:
    std::int64_t d_;
};

/// Kronecker symbol (D/n) with the full 2-adic rules; defined for all n.
int kronecker(std::int64_t d, std::int64_t n);

/// p-adic valuation of a nonzero rational. Throws DomainError for x == 0.
std::int64_t vp(const Rational& x, std::int64_t p);
std::int64_t vp(const Integer& x, std::int64_t p);

bool is_prime(std::int64_t n);
bool is_inert(Discriminant d, std::int64_t p);
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

/// Prime factorization by trial division, as (p, e) pairs with p ascending.
std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
std::int64_t gcd(std::int64_t a, std::int64_t b);

Integer ipow(std::int64_t base, std::int64_t e);
/// base^e for any integer e (negative exponents give 1/base^|e|).
Rational rpow(std::int64_t base, std::int64_t e);

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

}  // namespace whmf
