#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "whmf/qseries.hpp"
#include "whmf/spaces.hpp"

namespace whmf {

/// A published q-expansion, transcribed as-is. Exponents below the
/// precision that are absent from the series are displayed zeros.
struct GoldenExpansion {
    Space space;
    std::string form;  // "g", "phi:n", "F:m", "base:<name>"
    QSeries series;
    std::string provenance;
};

/// Fixture file: {"schema": 1, "fixtures": [QSeries JSON + space, form, provenance]}.
std::vector<GoldenExpansion> parse_golden(const nlohmann::json& j);
/// The fixture set compiled into the library.
const std::vector<GoldenExpansion>& golden_fixtures();

struct GoldenReport {
    std::size_t fixtures = 0;
    std::size_t coefficients = 0;  // transcribed nonzero coefficients compared
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

GoldenReport golden_check(const std::vector<GoldenExpansion>& fixtures);
GoldenReport golden_check_all();

}  // namespace whmf
