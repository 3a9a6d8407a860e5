#include "auxnim/gaps.hpp"

#include <bit>
#include <stdexcept>

namespace auxnim {

std::uint64_t bitlen(std::uint64_t x) { return std::bit_width(x); }

std::uint64_t complement(std::uint64_t x) {
  if (x == 0) return 0;
  const std::uint64_t len = bitlen(x);
  const std::uint64_t mask =
      (len >= 64) ? ~0ull : ((1ull << len) - 1);
  return mask ^ x;
}

bool is_gap(std::uint64_t n, std::uint64_t b, std::uint64_t c) {
  const std::uint64_t x = b ^ c;
  if (n == x) return true;
  const std::uint64_t i = bitlen(n ^ x) - 1;  // leftmost differing bit
  const std::uint64_t bit = 1ull << i;
  return (n & bit) && !(b & bit) && !(c & bit);
}

std::uint64_t nth_gap(std::uint64_t j, std::uint64_t b, std::uint64_t c) {
  if (j < 1) throw std::invalid_argument("gap index is 1-based");
  for (std::uint64_t n = 0;; ++n) {
    if (is_gap(n, b, c) && --j == 0) return n;
  }
}

std::uint64_t count_gaps_below(std::uint64_t limit, std::uint64_t b,
                               std::uint64_t c) {
  std::uint64_t count = 0;
  for (std::uint64_t n = 0; n < limit; ++n) {
    if (is_gap(n, b, c)) ++count;
  }
  return count;
}

std::uint64_t or_mask(std::uint64_t b, std::uint64_t c) {
  if (b == 0) throw std::invalid_argument("or_mask requires b >= 1");
  return c | (b + complement(b));
}

}  // namespace auxnim
