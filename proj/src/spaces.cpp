#include "whmf/spaces.hpp"

#include <algorithm>

#include "whmf/error.hpp"

namespace whmf {

std::string Space::label() const { return std::to_string(k) + "," + std::to_string(N); }

Space Space::parse(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("space must be written k,N: '" + text + "'");
    try {
        std::size_t used_k = 0, used_n = 0;
        const std::string ks = text.substr(0, comma), ns = text.substr(comma + 1);
        Space s{std::stoll(ks, &used_k), std::stoll(ns, &used_n)};
        if (used_k != ks.size() || used_n != ns.size()) throw ParseError("trailing characters");
        if (s.N < 1) throw ParseError("level must be positive");
        return s;
    } catch (const std::logic_error&) {
        throw ParseError("space must be written k,N: '" + text + "'");
    }
}

LevelInvariants invariants_of(std::int64_t N) {
    if (N < 1) throw DomainError("level must be positive");
    const auto fac = factor(N);
    LevelInvariants inv;

    // mu = N prod (1 + 1/p)
    inv.mu = N;
    for (auto [p, e] : fac) inv.mu = inv.mu / p * (p + 1);

    if (N % 4 == 0) {
        inv.eps2 = 0;
    } else {
        inv.eps2 = 1;
        for (auto [p, e] : fac) inv.eps2 *= 1 + (p == 2 ? 0 : kronecker(-1, p));
    }
    if (N % 9 == 0) {
        inv.eps3 = 0;
    } else {
        inv.eps3 = 1;
        for (auto [p, e] : fac) inv.eps3 *= 1 + (p == 3 ? 0 : kronecker(p, 3));
    }
    inv.eps_inf = 0;
    for (std::int64_t d : divisors(N)) inv.eps_inf += euler_phi(gcd(d, N / d));

    // 12 g = 12 + mu - 3 eps2 - 4 eps3 - 6 eps_inf
    const std::int64_t twelve_g = 12 + inv.mu - 3 * inv.eps2 - 4 * inv.eps3 - 6 * inv.eps_inf;
    if (twelve_g % 12 != 0 || twelve_g < 0)
        throw Error("genus formula gave a non-integral or negative value at N = " + std::to_string(N));
    inv.genus = twelve_g / 12;
    return inv;
}

std::int64_t dim_cusp(std::int64_t k, std::int64_t N) {
    if (k % 2 != 0) throw DomainError("dim_cusp: weight must be even, got " + std::to_string(k));
    if (k <= 0) return 0;
    const LevelInvariants inv = invariants_of(N);
    if (k == 2) return inv.genus;
    return (k - 1) * (inv.genus - 1) + (k / 4) * inv.eps2 + (k / 3) * inv.eps3 + (k / 2 - 1) * inv.eps_inf;
}

SpaceData space_data(Space s) { return {s, invariants_of(s.N), dim_cusp(s.k, s.N)}; }

std::vector<SpaceData> scan(std::int64_t nmax, std::int64_t kmax) {
    std::vector<SpaceData> out;
    for (std::int64_t N = 1; N <= nmax; ++N) {
        const LevelInvariants inv = invariants_of(N);
        for (std::int64_t k = 2; k <= kmax; k += 2) {
            const std::int64_t d = dim_cusp(k, N);
            if (d == 1) out.push_back({{k, N}, inv, d});
        }
    }
    return out;
}

const std::vector<Space>& cm_spaces() {
    static const std::vector<Space> spaces = {{2, 27}, {2, 32}, {2, 36}, {2, 49}, {4, 9}};
    return spaces;
}

bool is_cm_space(Space s) {
    const auto& all = cm_spaces();
    return std::find(all.begin(), all.end(), s) != all.end();
}

void require_cm_space(Space s) {
    if (!is_cm_space(s))
        throw DomainError("unsupported space " + s.label() + "; expected one of 2,27 2,32 2,36 2,49 4,9");
}

Discriminant cm_discriminant(Space s) {
    require_cm_space(s);
    switch (s.N) {
        case 32: return Discriminant(-4);
        case 49: return Discriminant(-7);
        default: return Discriminant(-3);
    }
}

}  // namespace whmf
