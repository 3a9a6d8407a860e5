#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "auxnim/nimber.hpp"

namespace auxnim {

/// A finite fixed subtraction set: the legal removal amounts of G_n.
struct SubtractionSet {
  std::vector<std::uint64_t> amounts;  // sorted, unique, all >= 1

  std::uint64_t max_amount() const { return amounts.back(); }

  /// Validates non-empty and all amounts >= 1.
  static SubtractionSet make(std::vector<std::uint64_t> amounts);
};

/// Heap-game removal rules encoded as octal digits: digit d_t (t >= 1) has
/// bit 0 set when removing exactly t tokens may empty the heap, bit 1 when
/// it may leave one non-empty heap, and bit 2 when it may split the
/// remainder into two non-empty heaps.
struct OctalCode {
  std::vector<std::uint8_t> digits;  // d_1..; last digit non-zero

  std::uint64_t bound() const { return digits.size(); }  // largest removal

  /// Parses "0.77" / ".137"; digits must be 0..7 and the last non-zero.
  static OctalCode parse(std::string_view text);
  std::string to_string() const;
};

/// Result of a periodicity search. `certified` is true only when a matching
/// window proven sufficient for eventual periodicity was found; empirical
/// detections always report certified=false. `window` is the range of n on
/// which value[n] == value[n+p] was explicitly verified; `period` == 0 means
/// no candidate was found at all.
struct PeriodReport {
  std::uint64_t preperiod = 0;  // n0
  std::uint64_t period = 0;     // p
  bool certified = false;
  std::uint64_t window_lo = 0;
  std::uint64_t window_hi = 0;
  std::uint64_t max_n = 0;
};

/// V[n][y] = SG value of G_n compounded selectively with a Nim heap of size
/// y, for n <= max_n and y <= k. A move plays in G_n, reduces the heap, or
/// does both; V[n][0] is the plain subtraction-game value.
using AuxTable = std::vector<std::vector<Nimber>>;
AuxTable subtraction_aux_table(const SubtractionSet& s, std::uint64_t k,
                               std::uint64_t max_n);

/// Finds the least (n0, p), minimizing n0 first, such that the m consecutive
/// full columns starting at n0 equal those starting at n0 + p. Each column
/// is a function of the previous m columns, so a match certifies eventual
/// periodicity of every row. Falls back to an uncertified empirical
/// candidate when no match fits in the table.
PeriodReport detect_period_columns(const AuxTable& table, std::uint64_t m);

/// Single-heap Grundy sequence of the octal game, G(0..max_n).
std::vector<Nimber> octal_sg(const OctalCode& code, std::uint64_t max_n);

/// Searches the least (n0, p), minimizing n0 first, whose certification
/// window [n0, 2*n0 + p + k] fits in the computed prefix and matches; k is
/// the code's largest removal amount. Matching on that window proves the
/// sequence periodic from n0 onward.
PeriodReport certify_octal_period(const OctalCode& code,
                                  std::span<const Nimber> values);

/// Uncertified longest-suffix detection: the least (n0, p), minimizing n0
/// first, with values[n] == values[n+p] for all n0 <= n <= max_n - p and a
/// matched span of at least 3p + slack. Tool policy, not a theorem.
PeriodReport empirical_period(std::span<const Nimber> values,
                              std::uint64_t slack);

/// `game=<desc> n0=<v> p=<v> certified=<bool> window=[lo,hi] max_n=<v>`.
std::string render_period_line(std::string_view game_desc,
                               const PeriodReport& report);

}  // namespace auxnim
