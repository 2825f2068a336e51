#pragma once

#include <span>
#include <vector>

#include "cuspforge/arith.hpp"

namespace cuspforge {

/// Weierstrass gap sequence a_1 < ... < a_g at a point, with weight
/// Σ (a_i - i).
struct GapSequence {
  Int genus;
  std::vector<Int> gaps;
  Int weight;

  bool weierstrass() const noexcept { return weight > 0; }
};

/// Closes the certified pole orders under addition, keeps 1..2g-1 and takes
/// the complement. Throws InconsistentGapCount unless exactly g gaps remain,
/// which means the supplied non-gaps do not pin the sequence down.
GapSequence gap_sequence_from_nongaps(std::span<const Int> nongaps, Int genus);

}  // namespace cuspforge
