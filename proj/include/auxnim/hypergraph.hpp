#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>
#include <vector>

#include "auxnim/engine.hpp"
#include "auxnim/nimber.hpp"

namespace auxnim {

/// A hypergraph move set over heaps: a move selects an edge containing at
/// least one non-empty heap and reduces every non-empty heap in that edge
/// independently by at least one. An edge whose heaps are all empty admits
/// no move.
struct Hypergraph {
  std::uint32_t vertex_count = 0;
  std::vector<std::vector<std::uint32_t>> edges;  // 1-based vertex indices

  /// Validates: no empty edge, no duplicate edge, all indices in range.
  static Hypergraph make(std::uint32_t vertex_count,
                         std::vector<std::vector<std::uint32_t>> edges);
};

/// The edge set {{1},...,{n},{1,2},...,{1,n}} whose heap game coincides with
/// Auxiliary Nim on n piles (heap 1 playing the auxiliary role).
Hypergraph auxiliary_hypergraph(std::uint32_t n);

class HypergraphEngine {
 public:
  explicit HypergraphEngine(Hypergraph h,
                            std::uint64_t heap_cap = kDefaultPileCap);

  /// heaps.size() must equal the vertex count.
  Nimber sg(std::span<const std::uint64_t> heaps);

  const Hypergraph& hypergraph() const { return h_; }

 private:
  Nimber eval(std::vector<std::uint64_t>& heaps);

  Hypergraph h_;
  std::uint64_t cap_;
  std::unordered_map<std::uint64_t, Nimber> packed_memo_;
  std::map<std::vector<std::uint64_t>, Nimber> general_memo_;
};

}  // namespace auxnim
