#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tamecft {

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
};

struct SelftestSummary {
    std::uint64_t seed = 0;
    std::vector<SuiteResult> suites;
    std::string transcript;

    bool ok() const;
};

inline constexpr std::uint64_t default_selftest_seed = 20261016;

/// Randomised property suites (symbol axioms, Weil reciprocity, pairing
/// non-degeneracy, E^t/m = J^t/m, surjectivity, the Hilbert square, principal
/// unit divisibility). Fully determined by (seed, size, precision).
SelftestSummary run_selftest(std::uint64_t seed, std::size_t size, int precision = 12);

}  // namespace tamecft
