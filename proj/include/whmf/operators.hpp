#pragma once

#include <cstdint>

#include "whmf/qseries.hpp"

namespace whmf {

// Formal coefficient operators. None of them checks modularity.

/// sum a(n) q^n  ->  sum a(mn) q^n
QSeries U(const QSeries& f, std::int64_t m);
/// sum a(n) q^n  ->  sum a(n) q^{mn}
QSeries V(const QSeries& f, std::int64_t m);
/// Theta^j = (q d/dq)^j: a(n) -> n^j a(n).
QSeries theta_pow(const QSeries& f, std::int64_t j);

/// f | T_k(p^n) = sum_{j=0}^{n} p^{(k-1)j} f | U(p^{n-j}) | V(p^j).
/// Weight k may be <= 0, in which case the scalars are rational.
QSeries hecke_prime_power(const QSeries& f, std::int64_t k, std::int64_t p, std::int64_t n);

/// f | T_k(m) with coefficients sum_{d | (m, n)} d^{k-1} a(mn/d^2), where
/// (m, n) means gcd(m, |n|) so that negative exponents are covered.
QSeries hecke_general(const QSeries& f, std::int64_t k, std::int64_t m);

}  // namespace whmf
