#include "oracles.hpp"

#include <numeric>
#include <stdexcept>

namespace oracle {

mpz_class Dense::at(std::int64_t n) const {
    if (n < order) return 0;
    if (n >= precision()) throw std::out_of_range("oracle: coefficient beyond precision");
    return coeffs[static_cast<std::size_t>(n - order)];
}

Dense eta_product(const std::vector<std::pair<std::int64_t, std::int64_t>>& factors, std::int64_t precision) {
    std::int64_t num = 0;
    for (auto [d, r] : factors) num += d * r;
    if (num % 24 != 0) throw std::invalid_argument("oracle: fractional q-order");
    Dense out;
    out.order = num / 24;
    const std::int64_t len = precision - out.order;
    if (len <= 0) throw std::invalid_argument("oracle: precision below order");
    out.coeffs.assign(static_cast<std::size_t>(len), 0);
    out.coeffs[0] = 1;
    auto& c = out.coeffs;
    for (auto [d, r] : factors) {
        for (std::int64_t n = 1; d * n < len; ++n) {
            const std::size_t s = static_cast<std::size_t>(d * n);
            for (std::int64_t t = 0; t < (r > 0 ? r : -r); ++t) {
                if (r > 0) {
                    for (std::size_t i = c.size(); i-- > s;) c[i] -= c[i - s];
                } else {
                    for (std::size_t i = s; i < c.size(); ++i) c[i] += c[i - s];
                }
            }
        }
    }
    return out;
}

Dense multiply(const Dense& f, const Dense& g) {
    Dense out;
    out.order = f.order + g.order;
    const std::int64_t prec = std::min(f.precision() + g.order, g.precision() + f.order);
    out.coeffs.assign(static_cast<std::size_t>(prec - out.order), 0);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (f.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < g.coeffs.size() && i + j < out.coeffs.size(); ++j)
            out.coeffs[i + j] += f.coeffs[i] * g.coeffs[j];
    }
    return out;
}

Dense negate(Dense f) {
    for (auto& c : f.coeffs) c = -c;
    return f;
}

std::int64_t curve_ap_bruteforce(std::int64_t p) {
    auto mod = [p](std::int64_t x) { return ((x % p) + p) % p; };
    std::int64_t count = 1;  // point at infinity
    for (std::int64_t x = 0; x < p; ++x) {
        const std::int64_t rhs = mod(mod(x * x % p * x) - mod(x * x) - 2 * x - 1);
        for (std::int64_t y = 0; y < p; ++y)
            if (mod(y * y + x * y) == rhs) ++count;
    }
    return p + 1 - count;
}

std::int64_t genus_bruteforce(std::int64_t N) {
    std::int64_t e2 = 0, e3 = 0;
    for (std::int64_t x = 0; x < N; ++x) {
        if ((x * x + 1) % N == 0) ++e2;
        if ((x * x + x + 1) % N == 0) ++e3;
    }
    // index of Gamma_0(N): points of P^1(Z/N), i.e. pairs (c, d) with
    // gcd(c, d, N) = 1 modulo units.
    std::int64_t pairs = 0, units = 0;
    for (std::int64_t c = 0; c < N; ++c) {
        if (std::gcd(c, N) == 1) ++units;
        for (std::int64_t d = 0; d < N; ++d)
            if (std::gcd(std::gcd(c, d), N) == 1) ++pairs;
    }
    if (N == 1) pairs = units = 1;
    const std::int64_t mu = pairs / units;
    // cusps: for each d | N, the units of Z/gcd(d, N/d)
    std::int64_t cusps = 0;
    for (std::int64_t d = 1; d <= N; ++d) {
        if (N % d) continue;
        const std::int64_t g = std::gcd(d, N / d);
        for (std::int64_t u = 1; u <= g; ++u)
            if (std::gcd(u, g) == 1) ++cusps;
    }
    const std::int64_t twelve_g = 12 + mu - 3 * e2 - 4 * e3 - 6 * cusps;
    if (twelve_g % 12 != 0) throw std::logic_error("oracle: non-integral genus");
    return twelve_g / 12;
}

Dense hecke(const Dense& f, std::int64_t k, std::int64_t m, std::int64_t N) {
    Dense out;
    out.order = f.order < 0 ? f.order * m : (f.order + m - 1) / m;
    // a(mn) known for mn < prec(f)
    const std::int64_t prec = (f.precision() + m - 1) / m;
    for (std::int64_t n = out.order; n < prec; ++n) {
        mpz_class s = 0;
        const std::int64_t g = std::gcd(m, n < 0 ? -n : n);
        for (std::int64_t d = 1; d <= (n == 0 ? m : g); ++d) {
            if (m % d || n % d || std::gcd(d, N) != 1) continue;
            const std::int64_t e = m * n / (d * d);
            mpz_class w;
            mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k - 1));
            s += w * f.at(e);
        }
        out.coeffs.push_back(s);
    }
    return out;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace oracle
