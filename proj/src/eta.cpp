#include "whmf/eta.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "whmf/error.hpp"
#include "whmf/operators.hpp"

namespace whmf {

EtaQuotient::EtaQuotient(std::vector<Factor> factors) {
    std::map<std::int64_t, std::int64_t> merged;
    for (const auto& f : factors) {
        if (f.delta < 1) throw DomainError("eta quotient: delta must be positive");
        merged[f.delta] += f.r;
    }
    for (const auto& [d, r] : merged)
        if (r != 0) factors_.push_back({d, r});
}

EtaQuotient EtaQuotient::parse(std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& what) -> ParseError {
        return ParseError("eta quotient '" + std::string(text) + "': " + what + " at offset " + std::to_string(i));
    };
    auto read_int = [&](bool allow_sign) {
        skip_ws();
        std::size_t start = i;
        bool neg = false;
        if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
            neg = text[i] == '-';
            ++i;
        }
        const std::size_t digits = i;
        std::int64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000'000) throw fail("integer too large");
            ++i;
        }
        if (i == digits) {
            i = start;
            throw fail("expected integer");
        }
        return neg ? -v : v;
    };
    auto expect = [&](std::string_view tok) {
        skip_ws();
        if (text.substr(i, tok.size()) != tok) throw fail("expected '" + std::string(tok) + "'");
        i += tok.size();
    };

    std::vector<Factor> factors;
    skip_ws();
    if (i == text.size()) throw fail("empty quotient");
    while (true) {
        expect("eta");
        expect("(");
        const std::int64_t delta = read_int(false);
        expect(")");
        std::int64_t r = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            ++i;
            r = read_int(true);
        }
        if (delta < 1) throw fail("delta must be positive");
        factors.push_back({delta, r});
        skip_ws();
        if (i == text.size()) break;
        expect("*");
    }
    return EtaQuotient(std::move(factors));
}

std::int64_t EtaQuotient::twice_weight() const {
    std::int64_t s = 0;
    for (const auto& f : factors_) s += f.r;
    return s;
}

std::int64_t EtaQuotient::order_numerator() const {
    std::int64_t s = 0;
    for (const auto& f : factors_) s += f.delta * f.r;
    return s;
}

EtaQuotient EtaQuotient::operator*(const EtaQuotient& other) const {
    std::vector<Factor> all = factors_;
    all.insert(all.end(), other.factors_.begin(), other.factors_.end());
    return EtaQuotient(std::move(all));
}

std::string EtaQuotient::to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& f : factors_) {
        if (!out.empty()) out += "*";
        out += "eta(" + std::to_string(f.delta) + ")";
        if (f.r != 1) out += "^" + std::to_string(f.r);
    }
    return out;
}

QSeries euler_product(Exponent precision) {
    if (precision < 1) throw DomainError("euler_product: precision must be >= 1");
    std::vector<QSeries::Term> terms;
    // exponents k(3k-1)/2 for k = 0, 1, -1, 2, -2, ... with sign (-1)^k
    for (std::int64_t k = 0;; ++k) {
        const std::int64_t e1 = k * (3 * k - 1) / 2;
        if (e1 >= precision) break;
        const int sign = (k % 2 == 0) ? 1 : -1;
        terms.emplace_back(e1, sign);
        if (k > 0) {
            const std::int64_t e2 = k * (3 * k + 1) / 2;
            if (e2 < precision) terms.emplace_back(e2, sign);
        }
    }
    return QSeries::make(std::move(terms), precision);
}

std::int64_t q_order(const EtaQuotient& eq) {
    const std::int64_t s = eq.order_numerator();
    if (s % 24 != 0)
        throw DomainError("fractional order: " + eq.to_string() + " has q-order " + std::to_string(s) + "/24");
    return s / 24;
}

QSeries expand(const EtaQuotient& eq, Exponent precision) {
    const std::int64_t order = q_order(eq);
    if (eq.twice_weight() % 2 != 0) throw DomainError("half-integral weight: " + eq.to_string());
    if (precision <= order)
        throw PrecisionError("expand: precision " + std::to_string(precision) + " must exceed the q-order " +
                             std::to_string(order));
    const Exponent len = precision - order;  // unit part to O(q^len)
    QSeries product = QSeries::one(len);
    for (const auto& [delta, r] : eq.factors()) {
        const Exponent inner = ceil_div(len - 1, delta) + 1;
        QSeries e = V(euler_product(inner), delta).truncate(len);
        if (r < 0) e = invert(e);
        product = mul(product, pow(e, r < 0 ? -r : r));
    }
    return shift(product, order).truncate(precision);
}

}  // namespace whmf
