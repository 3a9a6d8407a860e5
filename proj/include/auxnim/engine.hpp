#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "auxnim/errors.hpp"
#include "auxnim/nimber.hpp"
#include "auxnim/position.hpp"

namespace auxnim {

inline constexpr std::uint64_t kDefaultPileCap = 1ull << 20;

/// Insert-once map from canonical positions to Sprague-Grundy values. SG
/// values are deterministic, so a key is never rebound to a different value;
/// an attempt to do so is a logic error.
class MemoTable {
 public:
  std::optional<Nimber> lookup(const AuxPosition& p) const;
  std::optional<Nimber> lookup(std::uint64_t aux,
                               std::span<const std::uint64_t> piles) const;
  void insert(const AuxPosition& p, Nimber value);
  std::size_t size() const { return packed_.size() + general_.size(); }

  /// Line-oriented text format, one entry per line: `aux|p1,...,pk|nimber`
  /// (empty middle field for a position with no component piles). Entries are
  /// written in position order so saves are deterministic.
  void save(std::ostream& out) const;
  /// Throws CacheFormatError naming the offending line on malformed input.
  void load(std::istream& in);

 private:
  static std::optional<std::uint64_t> packed_key(
      std::uint64_t aux, std::span<const std::uint64_t> piles);

  // Positions with at most three piles and small values pack into one word;
  // everything else lands in the ordered fallback map.
  std::unordered_map<std::uint64_t, Nimber> packed_;
  std::map<AuxPosition, Nimber> general_;
};

/// Ground-truth Sprague-Grundy evaluation for Auxiliary Nim: memoized mex
/// recursion over the selective-compound move set, with the proven
/// lower/upper bounds used to size the mex bitset and to stop enumeration
/// early. Not thread-safe; confine each instance to one thread of control.
class Engine {
 public:
  explicit Engine(std::uint64_t pile_cap = kDefaultPileCap);

  /// p must be canonical.
  Nimber sg(const AuxPosition& p);
  Nimber sg(std::uint64_t aux, std::vector<std::uint64_t> piles);

  std::uint64_t pile_cap() const { return cap_; }
  const MemoTable& memo() const { return memo_; }

  /// Missing file is tolerated; malformed content raises CacheFormatError.
  void load_cache(const std::string& path);
  void save_cache(const std::string& path) const;

 private:
  Nimber evaluate(AuxPosition root);
  void check_cap(const AuxPosition& p) const;

  std::uint64_t cap_;
  MemoTable memo_;
  std::vector<std::uint64_t> scratch_;
};

}  // namespace auxnim
