#pragma once

#include <cstdint>
#include <span>

namespace auxnim {

using Nimber = std::uint64_t;

/// Minimum excluded value: the least natural number absent from `values`.
/// The empty set yields 0.
Nimber mex(std::span<const Nimber> values);

/// Bitwise xor fold; the empty list yields 0.
Nimber nim_sum(std::span<const Nimber> values);

}  // namespace auxnim
