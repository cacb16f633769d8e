#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "redei/rational.hpp"

namespace redei::cli {

enum ExitCode : int {
    kOk = 0,
    kValidation = 2,
    kInternal = 3,
};

/// One timed method at one exponent of the Newton benchmark.
struct BenchResult {
    std::string method;         // "direct" or "sequential"
    unsigned exponent = 0;      // n = 2^exponent
    double median_ns = 0;
    std::vector<double> samples_ns;
    std::size_t numerator_bits = 0;
    std::size_t denominator_bits = 0;
    std::uint64_t checksum = 0;  // FNV-1a of the reduced rational's decimal form
};

/// FNV-1a 64 over "num/den".
std::uint64_t checksum(const Rational& r);

/// Times sequential Newton (e steps) against newton_direct for each exponent.
/// Rows are sorted by method, then exponent. ConsistencyError on a checksum
/// mismatch.
std::vector<BenchResult> run_bench(const Integer& d, const Integer& z,
                                   const std::vector<unsigned>& exponents, unsigned repetitions);

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace redei::cli
