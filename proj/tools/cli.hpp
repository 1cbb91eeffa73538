#pragma once

#include <functional>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace whmf::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInsufficientPrecision = 3;
inline constexpr int kInternal = 4;

/// Runs the acceptance suite restricted to `only` (empty: all) and returns
/// true when every selected criterion passed.
using SelfTest = std::function<bool(std::ostream&, const std::set<int>&)>;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const SelfTest& selftest = {});

}  // namespace whmf::cli
