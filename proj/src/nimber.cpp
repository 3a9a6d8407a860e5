#include "auxnim/nimber.hpp"

#include <vector>

namespace auxnim {

Nimber mex(std::span<const Nimber> values) {
  // The mex of n values is at most n, so a bitmap of n+1 slots suffices.
  std::vector<bool> seen(values.size() + 1, false);
  for (Nimber v : values) {
    if (v < seen.size()) seen[v] = true;
  }
  Nimber i = 0;
  while (seen[i]) ++i;
  return i;
}

Nimber nim_sum(std::span<const Nimber> values) {
  Nimber acc = 0;
  for (Nimber v : values) acc ^= v;
  return acc;
}

}  // namespace auxnim
