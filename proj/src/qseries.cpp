#include "whmf/qseries.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "whmf/error.hpp"

namespace whmf {

namespace {

std::string prec_msg(Exponent n, Exponent p) {
    return "coefficient of q^" + std::to_string(n) + " is beyond precision O(q^" + std::to_string(p) + ")";
}

// Scales f by the lcm of its denominators: f = ints / den.
std::pair<std::vector<std::pair<Exponent, Integer>>, Integer> clear_denominators(const QSeries& f) {
    Integer den = 1;
    for (const auto& [e, c] : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<std::pair<Exponent, Integer>> ints;
    ints.reserve(f.terms().size());
    for (const auto& [e, c] : f.terms()) ints.emplace_back(e, Integer(c.get_num() * (den / c.get_den())));
    return {std::move(ints), den};
}

}  // namespace

QSeries::QSeries(std::vector<Term> sorted_terms, Exponent precision)
    : terms_(std::move(sorted_terms)), precision_(precision) {
    order_ = terms_.empty() ? precision_ - 1 : terms_.front().first;
}

QSeries QSeries::make(std::vector<Term> entries, Exponent precision) {
    std::map<Exponent, Rational> acc;
    for (auto& [e, c] : entries) {
        if (e >= precision) throw PrecisionError(prec_msg(e, precision));
        acc[e] += c;
    }
    std::vector<Term> terms;
    for (auto& [e, c] : acc)
        if (c != 0) terms.emplace_back(e, std::move(c));
    return QSeries(std::move(terms), precision);
}

QSeries QSeries::zero(Exponent precision) { return QSeries({}, precision); }

QSeries QSeries::one(Exponent precision) { return monomial(1, 0, precision); }

QSeries QSeries::monomial(const Rational& c, Exponent e, Exponent precision) {
    if (e >= precision) return zero(precision);
    if (c == 0) return zero(precision);
    return QSeries({{e, c}}, precision);
}

Rational QSeries::coeff(Exponent n) const {
    if (n >= precision_) throw PrecisionError(prec_msg(n, precision_));
    auto it = std::lower_bound(terms_.begin(), terms_.end(), n,
                               [](const Term& t, Exponent x) { return t.first < x; });
    if (it != terms_.end() && it->first == n) return it->second;
    return 0;
}

const Rational& QSeries::leading() const {
    if (terms_.empty()) throw DomainError("zero series has no leading coefficient");
    return terms_.front().second;
}

QSeries QSeries::truncate(Exponent p) const {
    if (p >= precision_) return *this;
    std::vector<Term> kept;
    for (const auto& t : terms_) {
        if (t.first >= p) break;
        kept.push_back(t);
    }
    return QSeries(std::move(kept), p);
}

namespace {

template <class Combine>
QSeries merge(const QSeries& f, const QSeries& g, Combine op) {
    const Exponent prec = std::min(f.precision(), g.precision());
    std::vector<QSeries::Term> out;
    auto a = f.terms().begin(), ae = f.terms().end();
    auto b = g.terms().begin(), be = g.terms().end();
    while (a != ae || b != be) {
        Exponent e;
        Rational c;
        if (b == be || (a != ae && a->first < b->first)) {
            e = a->first;
            c = op(a->second, Rational(0));
            ++a;
        } else if (a == ae || b->first < a->first) {
            e = b->first;
            c = op(Rational(0), b->second);
            ++b;
        } else {
            e = a->first;
            c = op(a->second, b->second);
            ++a;
            ++b;
        }
        if (e >= prec) continue;
        if (c != 0) out.emplace_back(e, std::move(c));
    }
    return QSeries::make(std::move(out), prec);
}

}  // namespace

QSeries add(const QSeries& f, const QSeries& g) {
    return merge(f, g, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}

QSeries sub(const QSeries& f, const QSeries& g) {
    return merge(f, g, [](const Rational& x, const Rational& y) { return Rational(x - y); });
}

QSeries scale(const Rational& c, const QSeries& f) {
    std::vector<QSeries::Term> out;
    if (c != 0) {
        out.reserve(f.terms().size());
        for (const auto& [e, x] : f.terms()) out.emplace_back(e, Rational(c * x));
    }
    return QSeries::make(std::move(out), f.precision());
}

QSeries negate(const QSeries& f) { return scale(-1, f); }

QSeries shift(const QSeries& f, Exponent s) {
    std::vector<QSeries::Term> out;
    out.reserve(f.terms().size());
    for (const auto& [e, x] : f.terms()) out.emplace_back(e + s, x);
    return QSeries::make(std::move(out), f.precision() + s);
}

QSeries mul(const QSeries& f, const QSeries& g) {
    const Exponent prec = std::min(f.precision() + g.order(), g.precision() + f.order());
    if (f.is_zero() || g.is_zero()) return QSeries::zero(prec);
    const Exponent base = f.order() + g.order();
    if (prec <= base) return QSeries::zero(prec);

    auto [fi, fd] = clear_denominators(f);
    auto [gi, gd] = clear_denominators(g);
    std::vector<Integer> acc(static_cast<std::size_t>(prec - base));
    for (const auto& [e1, c1] : fi) {
        for (const auto& [e2, c2] : gi) {
            const Exponent e = e1 + e2;
            if (e >= prec) break;
            mpz_addmul(acc[e - base].get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
        }
    }
    const Integer den = fd * gd;
    std::vector<QSeries::Term> out;
    for (std::size_t i = 0; i < acc.size(); ++i) {
        if (acc[i] == 0) continue;
        out.emplace_back(base + static_cast<Exponent>(i), make_rational(acc[i], den));
    }
    return QSeries::make(std::move(out), prec);
}

QSeries pow(const QSeries& f, std::int64_t e) {
    if (e < 0) throw DomainError("pow: negative exponent; use invert");
    QSeries result = QSeries::one(f.precision());
    if (e == 0) return result;
    QSeries base = f;
    bool first = true;
    while (true) {
        if (e & 1) {
            result = first ? base : mul(result, base);
            first = false;
        }
        e >>= 1;
        if (e == 0) break;
        base = mul(base, base);
    }
    return result;
}

QSeries invert(const QSeries& f) {
    if (f.is_zero()) throw DomainError("invert: zero series");
    const Exponent v = f.order();
    const Exponent len = f.precision() - v;  // unit part known to O(q^len)
    const Rational lead_inv = 1 / f.leading();

    // u = f / q^v = lead * (1 + rest); b = 1/u via b_n = -(1/lead) sum_{i>=1} u_i b_{n-i}
    std::vector<std::pair<Exponent, Rational>> u;
    for (const auto& [e, c] : f.terms())
        if (e > v) u.emplace_back(e - v, c);

    const bool integral = assert_integral(f) && (f.leading() == 1 || f.leading() == -1);
    std::vector<QSeries::Term> out;
    if (integral) {
        const Integer s = lead_inv.get_num();  // +-1
        std::vector<std::pair<Exponent, Integer>> ui;
        for (const auto& [i, c] : u) ui.emplace_back(i, Integer(c.get_num()));
        std::vector<Integer> b(static_cast<std::size_t>(len));
        b[0] = s;
        for (Exponent n = 1; n < len; ++n) {
            Integer acc = 0;
            for (const auto& [i, c] : ui) {
                if (i > n) break;
                mpz_addmul(acc.get_mpz_t(), c.get_mpz_t(), b[n - i].get_mpz_t());
            }
            b[n] = -s * acc;
        }
        for (Exponent n = 0; n < len; ++n)
            if (b[n] != 0) out.emplace_back(n - v, Rational(b[n]));
    } else {
        std::vector<Rational> b(static_cast<std::size_t>(len));
        b[0] = lead_inv;
        for (Exponent n = 1; n < len; ++n) {
            Rational acc = 0;
            for (const auto& [i, c] : u) {
                if (i > n) break;
                acc += c * b[n - i];
            }
            b[n] = -lead_inv * acc;
        }
        for (Exponent n = 0; n < len; ++n)
            if (b[n] != 0) out.emplace_back(n - v, b[n]);
    }
    return QSeries::make(std::move(out), len - v);
}

bool assert_integral(const QSeries& f) {
    return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& t) { return is_integral(t.second); });
}

Valuation min_valuation(const QSeries& f, std::int64_t p, Exponent lo, Exponent hi) {
    if (hi > f.precision())
        throw PrecisionError("valuation window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                             ") exceeds precision O(q^" + std::to_string(f.precision()) + ")");
    Valuation best;
    for (const auto& [e, c] : f.terms()) {
        if (e < lo) continue;
        if (e >= hi) break;
        const std::int64_t v = vp(c, p);
        if (!best.value || v < *best.value) {
            best.value = v;
            best.witness = e;
        }
    }
    return best;
}

std::string rational_to_string(const Rational& x) { return x.get_str(); }

Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw ParseError("not an exact rational: '" + s + "'");
        return Rational(Integer(s));
    }
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw ParseError("not an exact rational: '" + s + "'");
    if (Integer(den) == 0) throw ParseError("zero denominator in '" + s + "'");
    return make_rational(Integer(num), Integer(den));
}

std::string to_string(const QSeries& f) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        const bool neg = c < 0;
        const Rational mag = abs(c);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        const bool unit = mag == 1;
        if (!unit || e == 0) os << rational_to_string(mag);
        if (e != 0) {
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    os << (first ? "" : " + ") << "O(q^" << f.precision() << ")";
    return os.str();
}

nlohmann::json to_json(const QSeries& f) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [e, c] : f.terms()) coeffs.push_back({e, rational_to_string(c)});
    return {{"order", f.order()}, {"precision", f.precision()}, {"coeffs", std::move(coeffs)}};
}

QSeries from_json(const nlohmann::json& j) {
    try {
        const Exponent precision = j.at("precision").get<Exponent>();
        std::vector<QSeries::Term> entries;
        Exponent last = 0;
        bool have_last = false;
        for (const auto& item : j.at("coeffs")) {
            if (!item.is_array() || item.size() != 2) throw ParseError("coefficient entry must be [exponent, \"value\"]");
            const Exponent e = item[0].get<Exponent>();
            if (have_last && e <= last) throw ParseError("coefficient exponents must be strictly ascending");
            last = e;
            have_last = true;
            entries.emplace_back(e, rational_from_string(item[1].get<std::string>()));
        }
        QSeries f = QSeries::make(std::move(entries), precision);
        if (j.contains("order") && j.at("order").get<Exponent>() != f.order())
            throw ParseError("stored order does not match coefficients");
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed series JSON: ") + e.what());
    }
}

}  // namespace whmf
