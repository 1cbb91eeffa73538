#include "whmf/fixtures.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "whmf/error.hpp"
#include "whmf/families.hpp"

namespace whmf {

extern const char* const kEmbeddedGoldenJson;

std::vector<GoldenExpansion> parse_golden(const nlohmann::json& j) {
    if (j.value("schema", 0) != 1) throw ParseError("fixture file: unsupported schema");
    std::vector<GoldenExpansion> out;
    try {
        for (const auto& item : j.at("fixtures")) {
            GoldenExpansion g;
            g.space = Space::parse(item.at("space").get<std::string>());
            g.form = item.at("form").get<std::string>();
            g.series = from_json(item);
            g.provenance = item.at("provenance").get<std::string>();
            out.push_back(std::move(g));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("fixture file: ") + e.what());
    }
    return out;
}

const std::vector<GoldenExpansion>& golden_fixtures() {
    static const std::vector<GoldenExpansion> fixtures = parse_golden(nlohmann::json::parse(kEmbeddedGoldenJson));
    return fixtures;
}

GoldenReport golden_check(const std::vector<GoldenExpansion>& fixtures) {
    GoldenReport report;
    std::map<Space, std::unique_ptr<Families>> families;
    for (const auto& fx : fixtures) {
        ++report.fixtures;
        report.coefficients += fx.series.terms().size();
        auto& fam = families[fx.space];
        if (!fam) fam = std::make_unique<Families>(fx.space);
        const Exponent P = fx.series.precision();
        const std::string where = fx.space.label() + " " + fx.form;
        QSeries built;
        try {
            built = form_series(*fam, fx.form, P);
        } catch (const Error& e) {
            report.mismatches.push_back(where + ": " + e.what());
            continue;
        }
        if (built.precision() < P) {
            report.mismatches.push_back(where + ": built only to O(q^" + std::to_string(built.precision()) + ")");
            continue;
        }
        const Exponent lo = std::min(fx.series.order(), built.order());
        for (Exponent e = lo; e < P; ++e) {
            const Rational want = fx.series.coeff(e), got = built.coeff(e);
            if (want != got)
                report.mismatches.push_back(where + " q^" + std::to_string(e) + ": expected " + rational_to_string(want) +
                                            ", got " + rational_to_string(got));
        }
    }
    return report;
}

GoldenReport golden_check_all() { return golden_check(golden_fixtures()); }

}  // namespace whmf
