#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace auxnim {

/// An Auxiliary Nim state: the auxiliary pile plus the component piles of the
/// disjunctive side. Canonical form keeps the piles sorted non-increasing with
/// zero entries removed; zero piles admit no moves and do not affect the xor.
struct AuxPosition {
  std::uint64_t aux = 0;
  std::vector<std::uint64_t> piles;

  std::uint64_t pile_sum() const;
  std::uint64_t pile_xor() const;
  /// Total number of moves needed to exhaust the position.
  std::uint64_t depth() const { return aux + pile_sum(); }

  auto operator<=>(const AuxPosition&) const = default;
};

/// Builds the canonical form of (aux, piles).
AuxPosition make_position(std::uint64_t aux, std::vector<std::uint64_t> piles);

bool is_canonical(const AuxPosition& p);

/// All positions reachable in one move, canonicalized, deduplicated and
/// sorted. A move reduces the auxiliary pile, reduces exactly one component
/// pile, or does both at once; reducing two component piles in one move is
/// not legal.
std::vector<AuxPosition> aux_successors(const AuxPosition& p);

}  // namespace auxnim
