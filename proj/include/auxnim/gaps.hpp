#pragma once

#include <cstdint>

namespace auxnim {

/// Number of binary digits; bitlen(0) == 0, bitlen(x) == floor(log2 x) + 1.
std::uint64_t bitlen(std::uint64_t x);

/// Bitwise complement of x within its own bit-length:
/// (2^bitlen(x) - 1) - x, with complement(0) == 0.
std::uint64_t complement(std::uint64_t x);

/// Whether n is a gap in b^c: n equals b^c, or at the leftmost bit index
/// where n differs from b^c, n has a 1 while b and c both have 0. Gaps are
/// exactly the values unreachable from (0,[b,c]) by reducing one pile.
bool is_gap(std::uint64_t n, std::uint64_t b, std::uint64_t c);

/// The j-th smallest gap, 1-based; the first gap is always b^c. Every n
/// whose top bit lies beyond bitlen(max(b,c)) is a gap, so all j are
/// realized. Plain linear scan.
std::uint64_t nth_gap(std::uint64_t j, std::uint64_t b, std::uint64_t c);

std::uint64_t count_gaps_below(std::uint64_t limit, std::uint64_t b,
                               std::uint64_t c);

/// c | (b + complement(b)); note b + complement(b) == 2^bitlen(b) - 1.
/// Requires b >= 1.
std::uint64_t or_mask(std::uint64_t b, std::uint64_t c);

}  // namespace auxnim
