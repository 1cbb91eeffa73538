#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "whmf/numthy.hpp"

namespace whmf {

/// A pair (k, N) naming S_k(Gamma_0(N)).
struct Space {
    std::int64_t k = 2;
    std::int64_t N = 1;

    /// "k,N"
    std::string label() const;
    static Space parse(const std::string& text);
    friend auto operator<=>(const Space&, const Space&) = default;
};

/// Index, elliptic point counts, cusp count and genus of X_0(N).
struct LevelInvariants {
    std::int64_t mu = 0;
    std::int64_t eps2 = 0;
    std::int64_t eps3 = 0;
    std::int64_t eps_inf = 0;
    std::int64_t genus = 0;
};

struct SpaceData {
    Space space;
    LevelInvariants inv;
    std::int64_t dim_cusp = 0;
};

/// Throws Error if the genus formula fails to produce a nonnegative integer.
LevelInvariants invariants_of(std::int64_t N);

/// dim S_k(Gamma_0(N)); DomainError for odd k.
std::int64_t dim_cusp(std::int64_t k, std::int64_t N);

SpaceData space_data(Space s);

/// All (k, N) with 1 <= N <= nmax, 2 <= k <= kmax even and dim S_k = 1,
/// ordered by (N, k).
std::vector<SpaceData> scan(std::int64_t nmax, std::int64_t kmax);

// Level bound for genus <= 1 (241.5 rounded up) and the default weight cap.
inline constexpr std::int64_t kDefaultScanLevel = 242;
inline constexpr std::int64_t kDefaultScanWeight = 50;

/// The five one-dimensional spaces spanned by a CM form.
const std::vector<Space>& cm_spaces();
bool is_cm_space(Space s);
/// CM discriminant of one of the five spaces; DomainError otherwise.
Discriminant cm_discriminant(Space s);
/// DomainError unless s is one of the five.
void require_cm_space(Space s);

}  // namespace whmf
