#pragma once

#include <cstdint>
#include <string>

#include "mcq/quotient.hpp"

namespace mcq {

/// Agreement harness: generated quotient and non-quotient pairs through the
/// full characterization suite, counting verdicts per method. Output is
/// canonical JSON; two runs with the same seed are byte-identical.
std::string run_selftest(std::uint64_t seed, int quotient_pairs, int non_quotient_pairs,
                         int n, Int scale, const Caps& caps);

}  // namespace mcq
