#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "whmf/numthy.hpp"

namespace whmf {

using Exponent = std::int64_t;

/// A truncated Laurent series in q with exact rational coefficients:
///
///     sum_{v <= e < P} c_e q^e + O(q^P)
///
/// Coefficients are exactly known below the precision P and unknown from P
/// on; reading at or past P throws PrecisionError instead of returning zero.
/// Storage is sparse: only nonzero coefficients are kept, sorted by exponent.
/// The order v is the smallest stored exponent, or P - 1 for the zero series.
class QSeries {
public:
    using Term = std::pair<Exponent, Rational>;

    /// Zero series to O(q^0).
    QSeries() = default;

    /// Entries may repeat exponents (summed) or be zero (dropped). Throws
    /// PrecisionError if an exponent is >= precision.
    static QSeries make(std::vector<Term> entries, Exponent precision);
    static QSeries zero(Exponent precision);
    static QSeries one(Exponent precision);
    static QSeries monomial(const Rational& c, Exponent e, Exponent precision);

    Exponent order() const { return order_; }
    Exponent precision() const { return precision_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    Rational coeff(Exponent n) const;
    /// Leading coefficient (at order). Throws DomainError on the zero series.
    const Rational& leading() const;

    /// Drops everything at or above min(precision, p).
    QSeries truncate(Exponent p) const;

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    // Takes sorted, nonzero, in-range terms.
    QSeries(std::vector<Term> sorted_terms, Exponent precision);

    std::vector<Term> terms_;
    Exponent order_ = -1;
    Exponent precision_ = 0;
};

QSeries add(const QSeries& f, const QSeries& g);
QSeries sub(const QSeries& f, const QSeries& g);
QSeries scale(const Rational& c, const QSeries& f);
QSeries negate(const QSeries& f);

/// Cauchy product. Precision is min(P_f + v_g, P_g + v_f).
QSeries mul(const QSeries& f, const QSeries& g);
/// f^e by repeated squaring; f^0 is 1 + O(q^{P_f}).
QSeries pow(const QSeries& f, std::int64_t e);
/// Multiplicative inverse; order -v, precision P - 2v.
QSeries invert(const QSeries& f);
/// Multiplies by q^s.
QSeries shift(const QSeries& f, Exponent s);

inline QSeries operator+(const QSeries& f, const QSeries& g) { return add(f, g); }
inline QSeries operator-(const QSeries& f, const QSeries& g) { return sub(f, g); }
inline QSeries operator-(const QSeries& f) { return negate(f); }
inline QSeries operator*(const QSeries& f, const QSeries& g) { return mul(f, g); }
inline QSeries operator*(const Rational& c, const QSeries& f) { return scale(c, f); }

/// True iff every known coefficient is an integer.
bool assert_integral(const QSeries& f);

struct Valuation {
    std::optional<std::int64_t> value;     // nullopt: all coefficients zero
    std::optional<Exponent> witness;
};

/// Minimum p-adic valuation over the nonzero coefficients with exponent in
/// [lo, hi). Throws PrecisionError if hi exceeds the precision.
Valuation min_valuation(const QSeries& f, std::int64_t p, Exponent lo, Exponent hi);

/// Human-readable form, e.g. "q^-1 + 2q^3 + q^7 + O(q^10)".
std::string to_string(const QSeries& f);

/// {"order": v, "precision": P, "coeffs": [[e, "num/den"], ...]}
nlohmann::json to_json(const QSeries& f);
QSeries from_json(const nlohmann::json& j);

std::string rational_to_string(const Rational& x);
/// Parses "n" or "n/d" exactly; throws ParseError on anything else.
Rational rational_from_string(const std::string& s);

}  // namespace whmf
