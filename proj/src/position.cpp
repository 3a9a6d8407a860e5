#include "auxnim/position.hpp"

#include <algorithm>
#include <functional>

namespace auxnim {

std::uint64_t AuxPosition::pile_sum() const {
  std::uint64_t s = 0;
  for (std::uint64_t p : piles) s += p;
  return s;
}

std::uint64_t AuxPosition::pile_xor() const {
  std::uint64_t x = 0;
  for (std::uint64_t p : piles) x ^= p;
  return x;
}

AuxPosition make_position(std::uint64_t aux, std::vector<std::uint64_t> piles) {
  std::erase(piles, std::uint64_t{0});
  std::sort(piles.begin(), piles.end(), std::greater<>{});
  return AuxPosition{aux, std::move(piles)};
}

bool is_canonical(const AuxPosition& p) {
  for (std::size_t i = 0; i < p.piles.size(); ++i) {
    if (p.piles[i] == 0) return false;
    if (i > 0 && p.piles[i] > p.piles[i - 1]) return false;
  }
  return true;
}

std::vector<AuxPosition> aux_successors(const AuxPosition& p) {
  std::vector<AuxPosition> out;
  auto add = [&out](std::uint64_t aux, std::vector<std::uint64_t> piles) {
    out.push_back(make_position(aux, std::move(piles)));
  };

  for (std::uint64_t a = 0; a < p.aux; ++a) add(a, p.piles);
  for (std::size_t i = 0; i < p.piles.size(); ++i) {
    // Equal piles produce the same successor multisets.
    if (i > 0 && p.piles[i] == p.piles[i - 1]) continue;
    for (std::uint64_t v = 0; v < p.piles[i]; ++v) {
      auto reduced = p.piles;
      reduced[i] = v;
      add(p.aux, reduced);
      for (std::uint64_t a = 0; a < p.aux; ++a) add(a, reduced);
    }
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace auxnim
