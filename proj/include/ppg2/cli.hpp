#pragma once

// Single-binary command line: construct / classify / dominate / minor /
// enumerate / clique-search / verify.  Exit codes: 0 success or verified,
// 1 negative answer (non-member, no witness, anomalies), 2 usage error,
// 3 size or budget error.

#include <iosfwd>
#include <string>
#include <vector>

namespace ppg2::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBound = 3;

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

int main(int argc, char** argv);

}  // namespace ppg2::cli
