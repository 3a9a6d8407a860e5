#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <string>
#include <vector>

#include "auxnim/nimber.hpp"
#include "auxnim/periodicity.hpp"

namespace auxnim {

/// A star with a tail: a hub carrying `pendants` leaf edges and a path of
/// `tail` edges leaving the hub. The edge-removal game move is: pick a
/// vertex, remove a positive number of edges incident on it.
struct StarPath {
  std::uint64_t pendants = 0;
  std::uint64_t tail = 0;

  auto operator<=>(const StarPath&) const = default;
};

/// One connected component of a game state. A star with no tail is a Nim
/// heap (its edges are interchangeable); a star with at most one pendant is
/// a path. Irreducible stars have pendants >= 2 and tail >= 2.
struct Component {
  enum class Kind : std::uint8_t { NimHeap, Path, Star };
  Kind kind = Kind::NimHeap;
  std::uint64_t a = 0;  // heap size / path edge-length / star pendants
  std::uint64_t b = 0;  // star tail

  auto operator<=>(const Component&) const = default;

  static Component nim_heap(std::uint64_t size) {
    return {Kind::NimHeap, size, 0};
  }
  static Component path(std::uint64_t len) { return {Kind::Path, len, 0}; }
  static Component star(std::uint64_t pendants, std::uint64_t tail) {
    return {Kind::Star, pendants, tail};
  }
};

/// Canonical component, or nothing when the component is empty.
std::optional<Component> canonical_component(Component c);

/// A disjoint union of components, optionally compounded selectively with a
/// Nim heap of size aux. Canonical: components canonical and sorted, empty
/// ones removed.
struct GraphState {
  std::vector<Component> components;
  std::uint64_t aux = 0;

  auto operator<=>(const GraphState&) const = default;
};

GraphState make_graph_state(std::vector<Component> components,
                            std::uint64_t aux = 0);

/// All states reachable by one edge-removal move from a star-with-tail
/// component, canonicalized, deduplicated, sorted. Works for any (pendants,
/// tail), including reducible shapes.
std::vector<GraphState> starpath_moves(const StarPath& sp);

/// Shared value tables for paths and stars-with-tails. Disjoint unions
/// combine by xor.
class GraphCalculator {
 public:
  Nimber path_value(std::uint64_t len);
  Nimber star_value(std::uint64_t pendants, std::uint64_t tail);
  /// Xor of component values; the state's aux must be 0.
  Nimber state_value(const GraphState& g);

 private:
  std::vector<Nimber> path_;  // grown on demand
  std::map<std::pair<std::uint64_t, std::uint64_t>, Nimber> star_;
};

/// n -> value of a star with `pendants` leaf edges and a tail of n edges.
std::vector<Nimber> star_path_sequence(std::uint64_t pendants,
                                       std::uint64_t max_n);

/// The k-vertex star family: star_path_sequence(k-1, max_n). k = 1 is the
/// plain path (Kayles) sequence. Requires k >= 1.
std::vector<Nimber> starkayles_sequence(std::uint64_t k, std::uint64_t max_n);

/// Empirical period of the k-vertex star family sequence; never certified.
PeriodReport starkayles_period(std::uint64_t k, std::uint64_t max_n);
PeriodReport star_path_period(std::uint64_t pendants, std::uint64_t max_n);

/// Sprague-Grundy values of the selective compound (*k) with a path of n
/// edges under graph moves: a move reduces the heap, plays one edge-removal
/// move in one component, or does both. States are multisets of path
/// lengths; the state space is the partitions of n, so max_n is capped.
class KaylesAuxSolver {
 public:
  static constexpr std::uint64_t kDefaultMaxN = 30;

  explicit KaylesAuxSolver(std::uint64_t max_n_cap = kDefaultMaxN);

  std::vector<Nimber> sequence(std::uint64_t k, std::uint64_t max_n);
  Nimber value(std::uint64_t aux, std::vector<std::uint64_t> path_lengths);

  std::uint64_t max_n_cap() const { return cap_; }

 private:
  Nimber eval(std::uint64_t aux, std::vector<std::uint64_t>& parts);

  std::uint64_t cap_;
  std::unordered_map<std::string, Nimber> memo_;
};

PeriodReport kayles_aux_period(std::uint64_t k, std::uint64_t max_n,
                               std::uint64_t max_n_cap = KaylesAuxSolver::kDefaultMaxN);

}  // namespace auxnim
