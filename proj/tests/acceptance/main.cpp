#include <iostream>
#include <set>

#include "CLI11.hpp"

#include "acceptance.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Acceptance suite: one PASS/FAIL line per criterion"};
    std::set<int> only;
    app.add_option("--only", only, "Criterion numbers to run (default: all)")->check(CLI::Range(1, whmf::acceptance::kCriteria));
    CLI11_PARSE(app, argc, argv);
    const auto results = whmf::acceptance::run(std::cout, only);
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.pass;
    std::cout << passed << "/" << results.size() << " criteria passed\n";
    return whmf::acceptance::all_passed(results) ? 0 : 1;
}
