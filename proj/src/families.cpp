#include "whmf/families.hpp"

#include <mutex>

#include "whmf/error.hpp"
#include "whmf/eta.hpp"
#include "whmf/operators.hpp"

namespace whmf {

namespace {

QSeries eta_plus(const char* quotient, std::int64_t constant, Exponent precision) {
    return add(expand(EtaQuotient::parse(quotient), precision), QSeries::monomial(constant, 0, precision));
}

QSeries compute_base(Space s, const std::string& name, Exponent precision) {
    require_cm_space(s);
    if (name == "phi2") {
        switch (s.N) {
            case 27: return expand(EtaQuotient::parse("eta(9)^4*eta(3)^-1*eta(27)^-3"), precision);
            case 32: return expand(EtaQuotient::parse("eta(16)^6*eta(8)^-2*eta(32)^-4"), precision);
            case 36: return expand(EtaQuotient::parse("eta(12)*eta(18)^3*eta(6)^-1*eta(36)^-3"), precision);
            case 49: return eta_plus("eta(1)*eta(49)^-1", 1, precision);
            case 9: return expand(EtaQuotient::parse("eta(3)^2*eta(9)^-6"), precision);
        }
    } else if (name == "phi3") {
        switch (s.N) {
            case 27: return eta_plus("eta(3)^3*eta(27)^-3", 3, precision);
            case 32: return expand(EtaQuotient::parse("eta(8)^4*eta(16)^2*eta(4)^-2*eta(32)^-4"), precision);
            case 36: return eta_plus("eta(9)^3*eta(12)*eta(3)^-1*eta(36)^-3", -1, precision);
            case 49: {
                // phi_2 | T_0(2) - phi_2^2 / 2 + phi_2; T_0(2) halves the precision.
                const QSeries phi2 = compute_base(s, "phi2", 2 * precision + 2);
                const QSeries t = hecke_prime_power(phi2, 0, 2, 1);
                return add(sub(t, scale(Rational(1, 2), mul(phi2, phi2))), phi2).truncate(precision);
            }
        }
    } else if (name == "L" && s.N == 9) {
        return eta_plus("eta(1)^3*eta(9)^-3", 3, precision);
    }
    throw DomainError("no base form '" + name + "' for space " + s.label());
}

std::string term_label(FormKind kind, std::int64_t index) {
    return (kind == FormKind::Phi ? "phi_" : "F_") + std::to_string(index);
}

void check_phi_shape(const FamilyForm& f) {
    const QSeries& s = f.series;
    const std::int64_t n = f.index;
    auto bad = [&](const std::string& what) {
        return Error("phi_" + std::to_string(n) + " at " + f.space.label() + ": " + what);
    };
    if (s.order() != -n || s.leading() != 1) throw bad("principal part does not start with q^-n");
    for (std::int64_t j = 2; j < n; ++j)
        if (s.coeff(-j) != 0) throw bad("nonzero coefficient at q^-" + std::to_string(j));
    if (f.space.k == 2 && s.coeff(0) != 0) throw bad("nonzero constant term");
    if (!assert_integral(s)) throw bad("non-integral coefficients");
}

void check_F_shape(const FamilyForm& f) {
    const QSeries& s = f.series;
    const std::int64_t m = f.index;
    auto bad = [&](const std::string& what) {
        return Error("F_" + std::to_string(m) + " at " + f.space.label() + ": " + what);
    };
    if (s.order() != -m || s.leading() != -1) throw bad("principal part does not start with -q^-m");
    for (std::int64_t e = -m + 1; e <= 1; ++e)
        if (s.coeff(e) != 0) throw bad("nonzero coefficient at q^" + std::to_string(e));
    if (!assert_integral(s)) throw bad("non-integral coefficients");
}

}  // namespace

std::string Witness::to_string() const {
    std::string out = seed;
    for (const auto& [c, label] : terms) {
        out += c < 0 ? " - " : " + ";
        const Rational mag = abs(c);
        if (label == "1") {
            out += rational_to_string(mag);
        } else {
            if (mag != 1) out += rational_to_string(mag) + "*";
            out += label;
        }
    }
    return out;
}

BaseForms base_forms(Space space, Exponent precision) {
    require_cm_space(space);
    BaseForms b;
    b.phi2 = compute_base(space, "phi2", precision);
    if (space.k == 2)
        b.phi3 = compute_base(space, "phi3", precision);
    else
        b.L = compute_base(space, "L", precision);
    b.f_minus1 = negate(g_expansion(space, std::max<Exponent>(precision, 2)));
    return b;
}

bool valid_phi_index(Space, std::int64_t n) { return n >= 2; }

bool valid_F_index(Space space, std::int64_t m) {
    return m == -1 || m >= 1 || (m == 0 && space.k == 4);
}

Families::Families(Space space) : space_(space), g_(space) {}

QSeries Families::base_locked(const std::string& name, Exponent precision) {
    auto it = bases_.find(name);
    if (it != bases_.end() && it->second.precision() >= precision) return it->second;
    const Exponent target = it == bases_.end() ? precision : std::max(precision, 2 * it->second.precision());
    QSeries s = compute_base(space_, name, target);
    bases_[name] = s;
    return s;
}

QSeries Families::power_locked(const std::string& name, std::int64_t e, Exponent precision) {
    Ladder& lad = ladders_[name];
    const auto shortfall = [&](const Ladder& l) {
        if (l.powers.empty()) return true;
        const Exponent v = l.powers.front().order();
        return l.base_precision + (e - 1) * v < precision;
    };
    if (shortfall(lad)) {
        // Headroom so that nearby larger exponents reuse the same ladder.
        const QSeries probe = base_locked(name, std::max<Exponent>(precision, 1));
        const Exponent depth = -probe.order();
        lad.base_precision = precision + depth * (2 * e + 16);
        lad.powers = {base_locked(name, lad.base_precision).truncate(lad.base_precision)};
    }
    while (static_cast<std::int64_t>(lad.powers.size()) < e) lad.powers.push_back(mul(lad.powers.back(), lad.powers.front()));
    return lad.powers[e - 1];
}

const FamilyForm& Families::phi_locked(std::int64_t n, Exponent precision) {
    if (!valid_phi_index(space_, n)) throw DomainError("phi_n needs n >= 2, got " + std::to_string(n));
    const Exponent P = std::max<Exponent>(precision, 1);
    if (auto it = phis_.find(n); it != phis_.end() && it->second.series.precision() >= P) return it->second;

    FamilyForm f{FormKind::Phi, n, space_, {}, {}};
    QSeries seed;
    if (space_.k == 2) {
        const std::int64_t b = n % 2;
        const std::int64_t a = (n - 3 * b) / 2;
        if (b == 0) {
            seed = power_locked("phi2", a, P);
            f.witness.seed = a == 1 ? "phi_2" : "phi_2^" + std::to_string(a);
        } else if (a == 0) {
            seed = base_locked("phi3", P);
            f.witness.seed = "phi_3";
        } else {
            seed = mul(power_locked("phi2", a, P + 3), base_locked("phi3", P + 2 * a));
            f.witness.seed = (a == 1 ? "phi_2" : "phi_2^" + std::to_string(a)) + "*phi_3";
        }
    } else if (n == 2) {
        seed = base_locked("phi2", P);
        f.witness.seed = "phi_2";
    } else {
        seed = mul(base_locked("phi2", P + n - 2), power_locked("L", n - 2, P + 2));
        f.witness.seed = "phi_2*L" + (n == 3 ? std::string() : "^" + std::to_string(n - 2));
    }
    if (seed.precision() < P)
        throw PrecisionError("insufficient precision building phi_" + std::to_string(n) + " at " + space_.label());
    seed = seed.truncate(P);

    for (std::int64_t j = n - 1; j >= 2; --j) {
        const Rational c = seed.coeff(-j);
        if (c == 0) continue;
        seed = sub(seed, scale(c, phi_locked(j, P).series));
        f.witness.terms.emplace_back(-c, term_label(FormKind::Phi, j));
    }
    if (space_.k == 2) {
        const Rational c = seed.coeff(0);
        if (c != 0) {
            seed = sub(seed, QSeries::monomial(c, 0, P));
            f.witness.terms.emplace_back(-c, "1");
        }
    }
    f.series = std::move(seed);
    check_phi_shape(f);
    return phis_[n] = std::move(f);
}

const FamilyForm& Families::F_locked(std::int64_t m, Exponent precision) {
    if (!valid_F_index(space_, m)) {
        if (m == 0) throw DomainError("F_0 does not exist in weight 2: a form -1 + O(q^2) would have nonzero constant term");
        throw DomainError("invalid F index " + std::to_string(m));
    }
    const Exponent P = std::max<Exponent>(precision, 2);
    if (auto it = Fs_.find(m); it != Fs_.end() && it->second.series.precision() >= P) return it->second;

    FamilyForm f{FormKind::F, m, space_, {}, {}};
    if (m == -1) {
        f.series = negate(g_.expansion(P));
        f.witness.seed = "-g";
        return Fs_[m] = std::move(f);
    }

    const QSeries f_minus1 = negate(g_.expansion(P + m + 1));
    QSeries seed;
    if (space_.k == 2) {
        seed = mul(f_minus1, phi_locked(m + 1, P - 1).series);
        f.witness.seed = "F_-1*phi_" + std::to_string(m + 1);
    } else {
        seed = mul(f_minus1, power_locked("L", m + 1, P - 1));
        f.witness.seed = "F_-1*L" + (m == 0 ? std::string() : "^" + std::to_string(m + 1));
    }
    if (seed.precision() < P)
        throw PrecisionError("insufficient precision building F_" + std::to_string(m) + " at " + space_.label());
    seed = seed.truncate(P);

    const std::int64_t lowest = space_.k == 4 ? 0 : 1;
    for (std::int64_t r = m - 1; r >= lowest; --r) {
        const Rational c = seed.coeff(-r);
        if (c == 0) continue;
        seed = add(seed, scale(c, F_locked(r, P).series));
        f.witness.terms.emplace_back(c, term_label(FormKind::F, r));
    }
    if (const Rational c = seed.coeff(1); c != 0) {
        seed = add(seed, scale(c, F_locked(-1, P).series));
        f.witness.terms.emplace_back(c, "F_-1");
    }
    if (space_.k == 2 && seed.coeff(0) != 0)
        throw Error("constant term nonzero in F_" + std::to_string(m) + " at " + space_.label());
    f.series = std::move(seed);
    check_F_shape(f);
    return Fs_[m] = std::move(f);
}

FamilyForm Families::phi(std::int64_t n, Exponent precision) {
    {
        std::shared_lock lock(mutex_);
        if (auto it = phis_.find(n); it != phis_.end() && it->second.series.precision() >= precision) {
            FamilyForm out = it->second;
            out.series = out.series.truncate(precision);
            return out;
        }
    }
    std::unique_lock lock(mutex_);
    FamilyForm out = phi_locked(n, precision);
    out.series = out.series.truncate(precision);
    return out;
}

FamilyForm Families::F(std::int64_t m, Exponent precision) {
    {
        std::shared_lock lock(mutex_);
        if (auto it = Fs_.find(m); it != Fs_.end() && it->second.series.precision() >= precision) {
            FamilyForm out = it->second;
            out.series = out.series.truncate(precision);
            return out;
        }
    }
    std::unique_lock lock(mutex_);
    FamilyForm out = F_locked(m, precision);
    out.series = out.series.truncate(precision);
    return out;
}

Integer Families::A(std::int64_t n, std::int64_t m) {
    return Integer(phi(n, m + 1).series.coeff(m).get_num());
}

Integer Families::C(std::int64_t m, std::int64_t n) {
    return Integer(F(m, n + 1).series.coeff(n).get_num());
}

}  // namespace whmf

namespace whmf {

QSeries base_form(Space space, const std::string& name, Exponent precision) {
    return compute_base(space, name, precision);
}

QSeries form_series(Families& fam, const std::string& form, Exponent precision) {
    if (form == "g") return fam.g().expansion(precision);
    const auto colon = form.find(':');
    if (colon == std::string::npos) throw ParseError("unknown form '" + form + "'; expected g, phi:n, F:m or base:name");
    const std::string kind = form.substr(0, colon), arg = form.substr(colon + 1);
    if (kind == "base") return base_form(fam.space(), arg, precision).truncate(precision);
    std::int64_t index = 0;
    try {
        std::size_t used = 0;
        index = std::stoll(arg, &used);
        if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::logic_error&) {
        throw ParseError("bad index in form '" + form + "'");
    }
    if (kind == "phi") return fam.phi(index, precision).series;
    if (kind == "F") return fam.F(index, precision).series;
    throw ParseError("unknown form kind '" + kind + "'");
}

}  // namespace whmf
