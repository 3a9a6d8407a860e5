#include "auxnim/hypergraph.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>
#include <string>

namespace auxnim {
namespace {

std::optional<std::uint64_t> pack_heaps(std::span<const std::uint64_t> heaps) {
  if (heaps.size() > 8) return std::nullopt;
  std::uint64_t key = 0;
  int shift = 0;
  for (std::uint64_t h : heaps) {
    if (h >= 256) return std::nullopt;
    key |= h << shift;
    shift += 8;
  }
  return key;
}

}  // namespace

Hypergraph Hypergraph::make(std::uint32_t vertex_count,
                            std::vector<std::vector<std::uint32_t>> edges) {
  std::set<std::vector<std::uint32_t>> seen;
  for (auto& edge : edges) {
    if (edge.empty()) throw std::invalid_argument("empty hyperedge");
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    for (std::uint32_t v : edge) {
      if (v < 1 || v > vertex_count) {
        throw std::invalid_argument("hyperedge vertex " + std::to_string(v) +
                                    " out of range");
      }
    }
    if (!seen.insert(edge).second) {
      throw std::invalid_argument("duplicate hyperedge");
    }
  }
  return Hypergraph{vertex_count, std::move(edges)};
}

Hypergraph auxiliary_hypergraph(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("need at least one pile");
  std::vector<std::vector<std::uint32_t>> edges;
  for (std::uint32_t i = 1; i <= n; ++i) edges.push_back({i});
  for (std::uint32_t i = 2; i <= n; ++i) edges.push_back({1, i});
  return Hypergraph::make(n, std::move(edges));
}

HypergraphEngine::HypergraphEngine(Hypergraph h, std::uint64_t heap_cap)
    : h_(std::move(h)), cap_(heap_cap) {}

Nimber HypergraphEngine::sg(std::span<const std::uint64_t> heaps) {
  if (heaps.size() != h_.vertex_count) {
    throw std::invalid_argument("expected " + std::to_string(h_.vertex_count) +
                                " heaps, got " + std::to_string(heaps.size()));
  }
  for (std::uint64_t h : heaps) {
    if (h > cap_) {
      throw CapExceededError("heap " + std::to_string(h) +
                             " exceeds engine cap " + std::to_string(cap_));
    }
  }
  std::vector<std::uint64_t> state(heaps.begin(), heaps.end());
  return eval(state);
}

Nimber HypergraphEngine::eval(std::vector<std::uint64_t>& heaps) {
  const auto packed = pack_heaps(heaps);
  if (packed) {
    auto it = packed_memo_.find(*packed);
    if (it != packed_memo_.end()) return it->second;
  } else {
    auto it = general_memo_.find(heaps);
    if (it != general_memo_.end()) return it->second;
  }

  std::uint64_t depth = 0;
  for (std::uint64_t h : heaps) depth += h;

  // Successor values are below their own total, hence below `depth`.
  std::vector<bool> seen(depth + 1, false);
  std::vector<std::uint32_t> active;
  std::vector<std::uint64_t> saved;

  for (const auto& edge : h_.edges) {
    active.clear();
    for (std::uint32_t v : edge) {
      if (heaps[v - 1] > 0) active.push_back(v - 1);
    }
    if (active.empty()) continue;  // no-op moves are never legal

    saved.clear();
    for (std::uint32_t idx : active) saved.push_back(heaps[idx]);

    // Odometer over independent reductions of every active heap.
    for (std::uint32_t idx : active) heaps[idx] = 0;
    for (;;) {
      const Nimber v = eval(heaps);
      assert(v < depth);
      seen[v] = true;

      std::size_t pos = 0;
      while (pos < active.size() &&
             heaps[active[pos]] + 1 >= saved[pos]) {
        heaps[active[pos]] = 0;
        ++pos;
      }
      if (pos == active.size()) break;
      ++heaps[active[pos]];
    }
    for (std::size_t i = 0; i < active.size(); ++i) {
      heaps[active[i]] = saved[i];
    }
  }

  Nimber value = 0;
  while (value <= depth && seen[value]) ++value;

  if (packed) {
    packed_memo_.emplace(*packed, value);
  } else {
    general_memo_.emplace(heaps, value);
  }
  return value;
}

}  // namespace auxnim
