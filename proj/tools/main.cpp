#include <iostream>
#include <string>
#include <vector>

#include "acceptance.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return whmf::cli::run(args, std::cout, std::cerr, [](std::ostream& out, const std::set<int>& only) {
        return whmf::acceptance::all_passed(whmf::acceptance::run(out, only));
    });
}
