#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <shared_mutex>
#include <variant>
#include <vector>

#include "whmf/eta.hpp"
#include "whmf/numthy.hpp"
#include "whmf/qseries.hpp"
#include "whmf/spaces.hpp"

namespace whmf {

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct WeierstrassCurve {
    std::array<std::int64_t, 5> a;  // a1, a2, a3, a4, a6
};

/// Curve whose modular form spans S_2(Gamma_0(49)); conductor 49, CM by Q(sqrt -7).
inline constexpr WeierstrassCurve kLevel49Curve{{1, -1, 0, -2, -1}};

/// The normalized CM eigenform spanning one of the five spaces. The series
/// is cached; concurrent readers share the cache and an expansion request
/// beyond it rebuilds under an exclusive lock.
class CMForm {
public:
    explicit CMForm(Space space);

    Space space() const { return space_; }
    Discriminant discriminant() const { return disc_; }
    const std::variant<EtaQuotient, WeierstrassCurve>& construction() const { return construction_; }

    /// g to O(q^P), P >= 2.
    QSeries expansion(Exponent precision) const;

private:
    Space space_;
    Discriminant disc_;
    std::variant<EtaQuotient, WeierstrassCurve> construction_;
    mutable std::shared_mutex mutex_;
    mutable QSeries cache_;
    mutable bool cached_ = false;
};

/// Uncached expansion of the normalized form spanning `space`.
QSeries g_expansion(Space space, Exponent precision);

/// a_p of the level-49 curve: p + 1 - #E(F_p), and 0 at the additive prime 7.
std::int64_t curve_ap(std::int64_t p);

/// Builds sum a(n) q^n to O(q^P) from prime eigenvalues: multiplicative,
/// with a(p^{r+1}) = a(p) a(p^r) - p^{k-1} a(p^{r-1}) for p not dividing the
/// level and a(p^r) = a(p)^r for p dividing it. Needs ap for every prime < P.
QSeries hecke_extend(const std::map<std::int64_t, Integer>& ap, std::int64_t k, std::int64_t level,
                     Exponent precision);

/// Every n in [1, bound] with (D/n) = -1 and a(n) != 0.
std::vector<std::int64_t> cm_support_check(const QSeries& g, Discriminant d, std::int64_t bound);

}  // namespace whmf
