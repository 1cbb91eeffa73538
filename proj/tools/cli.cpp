#include "cli.hpp"

#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "whmf/error.hpp"
#include "whmf/eta.hpp"
#include "whmf/families.hpp"
#include "whmf/spaces.hpp"
#include "whmf/verify.hpp"

namespace whmf::cli {

namespace {

struct UsageError : Error {
    using Error::Error;
};

Space cm_space_arg(const std::string& text) {
    const Space s = Space::parse(text);
    if (!is_cm_space(s)) throw UsageError("unsupported space " + s.label() + "; expected one of 2,27 2,32 2,36 2,49 4,9");
    return s;
}

void check_format(const std::string& f) {
    if (f != "table" && f != "json") throw UsageError("--format must be table or json");
}

int expand_cmd(const std::string& space_arg, const std::string& form, const std::string& eta, Exponent prec,
               const std::string& format, std::ostream& out) {
    check_format(format);
    nlohmann::json j = {{"schema", 1}};
    QSeries s;
    std::string label;
    if (!eta.empty()) {
        const EtaQuotient eq = EtaQuotient::parse(eta);
        s = expand(eq, prec);
        label = eq.to_string();
        j["eta"] = label;
    } else {
        if (space_arg.empty()) throw UsageError("expand needs --space or --eta");
        const Space sp = cm_space_arg(space_arg);
        Families fam(sp);
        s = form_series(fam, form, prec);
        label = form + " [" + sp.label() + "]";
        j["space"] = sp.label();
        j["form"] = form;
        if (form.rfind("phi:", 0) == 0) j["witness"] = fam.phi(std::stoll(form.substr(4)), prec).witness.to_string();
        if (form.rfind("F:", 0) == 0) j["witness"] = fam.F(std::stoll(form.substr(2)), prec).witness.to_string();
    }
    if (format == "json") {
        j["series"] = to_json(s);
        out << j.dump() << "\n";
    } else {
        out << label << " = " << to_string(s) << "\n";
    }
    return kOk;
}

int duality_cmd(const std::string& space_arg, std::int64_t max_n, std::int64_t max_m, const std::string& format,
                std::ostream& out) {
    check_format(format);
    if (max_n < 2) throw UsageError("--max-n must be at least 2");
    const Space sp = cm_space_arg(space_arg);
    Families fam(sp);
    std::vector<std::int64_t> ms;
    for (std::int64_t m = -1; m <= max_m; ++m)
        if (valid_F_index(sp, m)) ms.push_back(m);

    nlohmann::json mismatches = nlohmann::json::array();
    std::ostringstream table;
    table << "C_m(n) = A_n(m) at " << sp.label() << "  ('.' agree, 'X' differ)\n";
    table << std::setw(5) << "m\\n";
    for (std::int64_t n = 2; n <= max_n; ++n) table << std::setw(3) << n;
    table << "\n";
    for (std::int64_t m : ms) {
        const QSeries Fm = fam.F(m, max_n + 1).series;
        table << std::setw(5) << m;
        for (std::int64_t n = 2; n <= max_n; ++n) {
            const Rational c = Fm.coeff(n), a = fam.phi(n, max_m + 1).series.coeff(m);
            const bool ok = c == a;
            if (!ok) mismatches.push_back({{"m", m}, {"n", n}, {"C", c.get_str()}, {"A", a.get_str()}});
            table << std::setw(3) << (ok ? "." : "X");
        }
        table << "\n";
    }
    const bool pass = mismatches.empty();
    if (format == "json") {
        out << nlohmann::json{{"schema", 1},      {"space", sp.label()}, {"max_n", max_n},
                              {"max_m", max_m},   {"pass", pass},        {"mismatches", mismatches}}
                   .dump()
            << "\n";
    } else {
        out << table.str() << (pass ? "all pairs agree" : std::to_string(mismatches.size()) + " mismatches") << "\n";
    }
    return pass ? kOk : kCheckFailed;
}

int scan_cmd(std::int64_t nmax, std::int64_t kmax, const std::string& format, std::ostream& out) {
    check_format(format);
    if (nmax < 1 || kmax < 2) throw UsageError("--nmax must be >= 1 and --kmax >= 2");
    const auto rows = scan(nmax, kmax);
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json cm = is_cm_space(r.space) ? nlohmann::json(true) : nlohmann::json("unknown");
            arr.push_back({{"k", r.space.k}, {"N", r.space.N}, {"genus", r.inv.genus}, {"dim", r.dim_cusp}, {"cm", cm}});
        }
        out << nlohmann::json{{"schema", 1}, {"nmax", nmax}, {"kmax", kmax}, {"rows", arr}}.dump() << "\n";
    } else {
        out << std::setw(4) << "k" << std::setw(6) << "N" << std::setw(7) << "genus" << std::setw(5) << "dim"
            << "  cm\n";
        for (const auto& r : rows)
            out << std::setw(4) << r.space.k << std::setw(6) << r.space.N << std::setw(7) << r.inv.genus << std::setw(5)
                << r.dim_cusp << "  " << (is_cm_space(r.space) ? "yes" : "unknown") << "\n";
    }
    return kOk;
}

struct VerifyArgs {
    std::string claim;
    std::string space;
    std::int64_t p = 0;
    std::int64_t m = 0;
    std::int64_t n = 1;
    std::int64_t pmax = 300;
    std::int64_t mmax = 1;
    std::int64_t max_n = 40;
    std::int64_t max_m = 40;
    std::string samples = "1:2";
    VerifyOptions opt;
};

std::vector<std::pair<std::int64_t, std::int64_t>> parse_samples(const std::string& text) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw UsageError("--samples expects m:n pairs separated by commas");
        try {
            out.emplace_back(std::stoll(item.substr(0, colon)), std::stoll(item.substr(colon + 1)));
        } catch (const std::logic_error&) {
            throw UsageError("--samples expects integer m:n pairs");
        }
    }
    return out;
}

int verify_cmd(const VerifyArgs& a, std::ostream& out) {
    Families fam(cm_space_arg(a.space));
    auto need_p = [&] {
        if (a.p == 0) throw UsageError("claim '" + a.claim + "' needs --p");
    };
    VerificationReport r;
    if (a.claim == "thm1a") need_p(), r = verify_thm1a(fam, a.p, a.m, a.opt);
    else if (a.claim == "thm1b") need_p(), r = verify_thm1b(fam, a.p, a.m, a.opt);
    else if (a.claim == "cong1") need_p(), r = verify_cong1(fam, a.p, a.m, a.opt);
    else if (a.claim == "cong2") r = verify_cong2(fam, a.pmax, a.opt);
    else if (a.claim == "hecke_theta") need_p(), r = verify_hecke_theta(fam, a.p, a.opt);
    else if (a.claim == "prop1c") need_p(), r = verify_prop1c(fam, a.p, a.n, a.opt);
    else if (a.claim == "even_power_zero") need_p(), r = verify_even_power_zero(fam, a.p, a.mmax, a.opt);
    else if (a.claim == "telescoping") need_p(), r = verify_telescoping(fam, a.p, a.m, a.opt);
    else if (a.claim == "constant_term") r = verify_constant_term(fam, parse_samples(a.samples), a.opt);
    else if (a.claim == "duality") r = verify_duality(fam, a.max_n, a.max_m, a.opt);
    else throw UsageError("unknown claim '" + a.claim + "'");
    out << to_json(r).dump() << "\n";
    switch (r.status) {
        case Status::Verified: return kOk;
        case Status::Violated: return kCheckFailed;
        case Status::InsufficientPrecision: return kInsufficientPrecision;
    }
    return kInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const SelfTest& selftest) {
    CLI::App app{"Exact q-expansion workbench for the five one-dimensional CM cusp form spaces", "whmf"};
    app.require_subcommand(1);

    std::string space, form = "g", eta, format = "table";
    Exponent prec = 15;
    auto* expand_sc = app.add_subcommand("expand", "Print a q-expansion");
    expand_sc->add_option("--space", space, "Space as k,N");
    expand_sc->add_option("--form", form, "g, phi:n, F:m or base:<phi2|phi3|L>")->capture_default_str();
    expand_sc->add_option("--eta", eta, "Expand an eta quotient instead, e.g. eta(3)^2*eta(9)^2");
    expand_sc->add_option("--prec", prec, "Precision P: print to O(q^P)")->capture_default_str();
    expand_sc->add_option("--format", format, "table or json")->capture_default_str();

    std::int64_t max_n = 40, max_m = 40;
    auto* duality_sc = app.add_subcommand("duality", "Check C_m(n) = A_n(m) and print the agreement matrix");
    duality_sc->add_option("--space", space, "Space as k,N")->required();
    duality_sc->add_option("--max-n", max_n, "Largest n")->capture_default_str();
    duality_sc->add_option("--max-m", max_m, "Largest m")->capture_default_str();
    duality_sc->add_option("--format", format, "table or json")->capture_default_str();

    std::int64_t nmax = kDefaultScanLevel, kmax = kDefaultScanWeight;
    auto* scan_sc = app.add_subcommand("scan", "List (k, N) with dim S_k(Gamma_0(N)) = 1");
    scan_sc->add_option("--nmax", nmax, "Largest level (genus <= 1 levels lie below 241.5)")->capture_default_str();
    scan_sc->add_option("--kmax", kmax,
                        "Largest even weight; for N > 1 the cusp term pushes the dimension past 1 long before 50")
        ->capture_default_str();
    scan_sc->add_option("--format", format, "table or json")->capture_default_str();

    VerifyArgs va;
    auto* verify_sc = app.add_subcommand("verify", "Check one claim and print a JSON report");
    verify_sc->add_option("claim", va.claim,
                          "thm1a | thm1b | cong1 | cong2 | hecke_theta | prop1c | even_power_zero | telescoping | "
                          "constant_term | duality")
        ->required();
    verify_sc->add_option("--space", va.space, "Space as k,N")->required();
    verify_sc->add_option("--p", va.p, "Prime p");
    verify_sc->add_option("--m", va.m, "Exponent m")->capture_default_str();
    verify_sc->add_option("--n", va.n, "Exponent n (prop1c)")->capture_default_str();
    verify_sc->add_option("--pmax", va.pmax, "Prime bound (cong2)")->capture_default_str();
    verify_sc->add_option("--mmax", va.mmax, "Largest m (even_power_zero)")->capture_default_str();
    verify_sc->add_option("--max-n", va.max_n, "Largest n (duality)")->capture_default_str();
    verify_sc->add_option("--max-m", va.max_m, "Largest m (duality)")->capture_default_str();
    verify_sc->add_option("--samples", va.samples, "m:n pairs for constant_term, e.g. 1:2,3:4")->capture_default_str();
    verify_sc->add_option("--window", va.opt.window, "Window W: compare to O(q^W)")->capture_default_str();
    verify_sc->add_option("--max-prec", va.opt.max_precision, "Largest precision any expansion may use")
        ->capture_default_str();
    verify_sc->add_flag("--allow-p2", va.opt.allow_p2, "Admit p = 2 for claims stated for odd primes");

    std::string only;
    auto* selftest_sc = app.add_subcommand("selftest", "Run the acceptance suite");
    selftest_sc->add_option("--only", only, "Comma-separated criterion numbers");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*expand_sc) return expand_cmd(space, form, eta, prec, format, out);
        if (*duality_sc) return duality_cmd(space, max_n, max_m, format, out);
        if (*scan_sc) return scan_cmd(nmax, kmax, format, out);
        if (*verify_sc) return verify_cmd(va, out);
        if (*selftest_sc) {
            if (!selftest) throw UsageError("selftest is not available in this build");
            std::set<int> ids;
            std::stringstream ss(only);
            std::string item;
            while (std::getline(ss, item, ',')) {
                try {
                    ids.insert(std::stoi(item));
                } catch (const std::logic_error&) {
                    throw UsageError("--only expects criterion numbers");
                }
            }
            return selftest(out, ids) ? kOk : kCheckFailed;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const PrecisionError& e) {
        err << "error: " << e.what() << "\n";
        return kInsufficientPrecision;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}

}  // namespace whmf::cli
