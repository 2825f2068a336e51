#include "cuspforge/gaps.hpp"

#include "cuspforge/error.hpp"

namespace cuspforge {

GapSequence gap_sequence_from_nongaps(std::span<const Int> nongaps, Int genus) {
  if (genus < 1) fail(ErrorKind::BadGenus, "gap sequences need genus >= 1");
  const Int top = 2 * genus - 1;
  std::vector<bool> reachable(static_cast<std::size_t>(top + 1), false);
  reachable[0] = true;
  for (Int m : nongaps) {
    if (m < 1) fail(ErrorKind::InvalidArgument, "pole orders must be positive");
  }
  for (Int k = 1; k <= top; ++k) {
    for (Int m : nongaps) {
      if (m <= k && reachable[static_cast<std::size_t>(k - m)]) {
        reachable[static_cast<std::size_t>(k)] = true;
        break;
      }
    }
  }
  GapSequence out{genus, {}, 0};
  for (Int k = 1; k <= top; ++k)
    if (!reachable[static_cast<std::size_t>(k)]) out.gaps.push_back(k);
  if (static_cast<Int>(out.gaps.size()) != genus) {
    fail(ErrorKind::InconsistentGapCount,
         "closure leaves " + std::to_string(out.gaps.size()) + " gaps in 1.." +
             std::to_string(top) + " but genus is " + std::to_string(genus));
  }
  for (std::size_t i = 0; i < out.gaps.size(); ++i)
    out.weight += out.gaps[i] - static_cast<Int>(i + 1);
  return out;
}

}  // namespace cuspforge
