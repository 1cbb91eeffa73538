#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "whmf/cmforms.hpp"
#include "whmf/qseries.hpp"
#include "whmf/spaces.hpp"

namespace whmf {

enum class FormKind { Phi, F };

/// The combination that produced a family member: a seed monomial plus
/// scalar multiples of earlier members (label "1" is the constant form).
struct Witness {
    std::string seed;
    std::vector<std::pair<Rational, std::string>> terms;

    /// e.g. "F_-1*phi_4 - F_2 - F_-1"
    std::string to_string() const;
};

/// phi_n = q^-n + sum A_n(m) q^m  (weight 2 - k), or
/// F_m   = -q^-m + sum C_m(n) q^n (weight k).
struct FamilyForm {
    FormKind kind = FormKind::Phi;
    std::int64_t index = 0;
    Space space;
    QSeries series;
    Witness witness;
};

/// phi_2 and phi_3 for the weight-2 spaces; phi_2 and L for (4,9); F_-1 = -g.
struct BaseForms {
    QSeries phi2;
    std::optional<QSeries> phi3;
    std::optional<QSeries> L;
    QSeries f_minus1;
};

/// Base forms, each known to at least O(q^P).
BaseForms base_forms(Space space, Exponent precision);

bool valid_phi_index(Space space, std::int64_t n);
/// m = -1, m >= 1, and additionally m = 0 when k = 4.
bool valid_F_index(Space space, std::int64_t m);

/// Builds and caches the phi_n and F_m of one space.
///
/// phi_n (k = 2) is seeded by phi_2^a phi_3^b with n = 2a + 3b, b = n mod 2;
/// for (4,9) by phi_2 L^{n-2}. The q^-j terms for j = n-1, ..., 2 are then
/// removed with earlier phi_j, and for k = 2 the constant is subtracted.
/// F_m is seeded by F_-1 phi_{m+1} (F_-1 L^{m+1} for k = 4) and reduced with
/// earlier F_r down to r = -1, which clears the q^1 term. For k = 2 the
/// constant term must already vanish; a nonzero constant is reported as an
/// Error since it can only come from a construction bug.
///
/// Every member is requested at a precision P and cached at P; a later
/// request above the cached precision rebuilds it and whatever it depends on.
/// Readers share the cache, builds take an exclusive lock.
class Families {
public:
    explicit Families(Space space);

    Space space() const { return space_; }
    const CMForm& g() const { return g_; }

    FamilyForm phi(std::int64_t n, Exponent precision);
    FamilyForm F(std::int64_t m, Exponent precision);

    /// Coefficient of q^m in phi_n.
    Integer A(std::int64_t n, std::int64_t m);
    /// Coefficient of q^n in F_m; C(-1, n) = -a(n) since F_-1 = -g.
    Integer C(std::int64_t m, std::int64_t n);

private:
    struct Ladder {
        Exponent base_precision = 0;
        std::vector<QSeries> powers;  // powers[i] = base^(i+1)
    };

    QSeries base_locked(const std::string& name, Exponent precision);
    QSeries power_locked(const std::string& name, std::int64_t e, Exponent precision);
    const FamilyForm& phi_locked(std::int64_t n, Exponent precision);
    const FamilyForm& F_locked(std::int64_t m, Exponent precision);

    Space space_;
    CMForm g_;
    std::shared_mutex mutex_;
    std::map<std::string, QSeries> bases_;
    std::map<std::string, Ladder> ladders_;
    std::map<std::int64_t, FamilyForm> phis_;
    std::map<std::int64_t, FamilyForm> Fs_;
};

}  // namespace whmf

namespace whmf {

/// A named base form: "phi2", "phi3" (weight 2) or "phi2", "L" (4,9).
QSeries base_form(Space space, const std::string& name, Exponent precision);

/// Resolves "g", "phi:n", "F:m" or "base:<name>" to its series at O(q^P).
QSeries form_series(Families& fam, const std::string& form, Exponent precision);

}  // namespace whmf
