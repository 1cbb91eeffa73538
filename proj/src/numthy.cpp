#include "whmf/numthy.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "whmf/error.hpp"

namespace whmf {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Discriminant::Discriminant(std::int64_t d) : d_(d) {
    const std::int64_t r = ((d % 4) + 4) % 4;
    if (d >= 0 || (r != 0 && r != 1))
        throw DomainError("not a negative discriminant: " + std::to_string(d));
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

int kronecker(std::int64_t a, std::int64_t b) {
    // Cohen, A Course in Computational Algebraic Number Theory, Alg. 1.4.10.
    static constexpr int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
    if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && b % 2 == 0) return 0;
    int v = 0;
    while (b % 2 == 0) {
        ++v;
        b /= 2;
    }
    int k = (v % 2 == 0) ? 1 : tab2[((a % 8) + 8) % 8];
    if (b < 0) {
        b = -b;
        if (a < 0) k = -k;
    }
    // b odd and positive from here on
    while (true) {
        if (a == 0) return b > 1 ? 0 : k;
        v = 0;
        while (a % 2 == 0) {
            ++v;
            a /= 2;
        }
        if (v % 2 == 1) k *= tab2[b % 8];
        // reciprocity: sign flips when both are 3 mod 4 (a may be negative)
        if ((a & b & 2) != 0) k = -k;
        const std::int64_t r = std::llabs(a);
        a = b % r;
        b = r;
    }
}

std::int64_t vp(const Integer& x, std::int64_t p) {
    if (x == 0) throw DomainError("valuation of zero is infinite");
    if (p < 2) throw DomainError("vp: p must be prime");
    Integer rest;
    const Integer prime(static_cast<long>(p));
    return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

std::int64_t vp(const Rational& x, std::int64_t p) {
    if (x == 0) throw DomainError("valuation of zero is infinite");
    return vp(Integer(x.get_num()), p) - vp(Integer(x.get_den()), p);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_inert(Discriminant d, std::int64_t p) {
    if (!is_prime(p)) throw DomainError("is_inert: " + std::to_string(p) + " is not prime");
    return kronecker(d.value(), p) == -1;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
    std::vector<std::int64_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (std::int64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n) {
    if (n < 1) throw DomainError("factor: n must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t r = n;
    for (auto [p, e] : factor(n)) r = r / p * (p - 1);
    return r;
}

Integer ipow(std::int64_t base, std::int64_t e) {
    if (e < 0) throw DomainError("ipow: negative exponent");
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), Integer(static_cast<long>(base)).get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Rational rpow(std::int64_t base, std::int64_t e) {
    if (e >= 0) return Rational(ipow(base, e));
    return make_rational(1, ipow(base, -e));
}

}  // namespace whmf
