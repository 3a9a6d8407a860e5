#include "auxnim/graph_kayles.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "auxnim/errors.hpp"

namespace auxnim {

std::optional<Component> canonical_component(Component c) {
  switch (c.kind) {
    case Component::Kind::Star:
      // A star whose tail has at most one edge is a plain star: the tail edge
      // is just another pendant. A star with at most one pendant is a path.
      if (c.a <= 1) return canonical_component(Component::path(c.a + c.b));
      if (c.b <= 1) {
        return canonical_component(Component::nim_heap(c.a + c.b));
      }
      return c;
    case Component::Kind::Path:
      if (c.a == 0) return std::nullopt;
      if (c.a == 1) return Component::nim_heap(1);  // a single edge
      return c;
    case Component::Kind::NimHeap:
      if (c.a == 0) return std::nullopt;
      return c;
  }
  return std::nullopt;
}

GraphState make_graph_state(std::vector<Component> components,
                            std::uint64_t aux) {
  GraphState g;
  g.aux = aux;
  for (Component c : components) {
    if (auto canon = canonical_component(c)) g.components.push_back(*canon);
  }
  std::sort(g.components.begin(), g.components.end());
  return g;
}

std::vector<GraphState> starpath_moves(const StarPath& sp) {
  const std::uint64_t s = sp.pendants;
  const std::uint64_t n = sp.tail;
  std::vector<GraphState> out;
  auto add = [&out](std::vector<Component> comps) {
    out.push_back(make_graph_state(std::move(comps), 0));
  };

  if (s >= 1) add({Component::star(s - 1, n)});  // pendant leaf
  if (n >= 1) add({Component::star(s, n - 1)});  // tail end
  // Hub: remove j pendants and optionally the first tail edge.
  for (std::uint64_t j = 1; j <= s; ++j) add({Component::star(s - j, n)});
  if (n >= 1) {
    for (std::uint64_t j = 0; j <= s; ++j) {
      add({Component::nim_heap(s - j), Component::path(n - 1)});
    }
  }
  // Internal tail vertex i: drop its left edge, right edge, or both.
  for (std::uint64_t i = 1; i + 1 <= n; ++i) {
    add({Component::star(s, i - 1), Component::path(n - i)});
    add({Component::star(s, i), Component::path(n - i - 1)});
    add({Component::star(s, i - 1), Component::path(n - i - 1)});
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Nimber GraphCalculator::path_value(std::uint64_t len) {
  if (path_.empty()) path_.push_back(0);
  std::vector<Nimber> succ;
  while (path_.size() <= len) {
    const std::uint64_t t = path_.size();
    succ.clear();
    // Removing one edge splits into a+b = t-1; removing the two edges at an
    // internal vertex splits into a+b = t-2.
    for (std::uint64_t a = 0; a <= (t - 1) / 2; ++a) {
      succ.push_back(path_[a] ^ path_[t - 1 - a]);
    }
    if (t >= 2) {
      for (std::uint64_t a = 0; a <= (t - 2) / 2; ++a) {
        succ.push_back(path_[a] ^ path_[t - 2 - a]);
      }
    }
    path_.push_back(mex(succ));
  }
  return path_[len];
}

Nimber GraphCalculator::star_value(std::uint64_t pendants, std::uint64_t tail) {
  if (pendants <= 1) return path_value(pendants + tail);
  if (tail <= 1) return pendants + tail;  // a star is a Nim heap
  const auto key = std::make_pair(pendants, tail);
  if (auto it = star_.find(key); it != star_.end()) return it->second;

  const std::uint64_t s = pendants;
  const std::uint64_t n = tail;
  std::vector<Nimber> succ;
  succ.push_back(star_value(s - 1, n));
  succ.push_back(star_value(s, n - 1));
  for (std::uint64_t j = 1; j <= s; ++j) succ.push_back(star_value(s - j, n));
  for (std::uint64_t j = 0; j <= s; ++j) {
    succ.push_back((s - j) ^ path_value(n - 1));
  }
  for (std::uint64_t i = 1; i + 1 <= n; ++i) {
    succ.push_back(star_value(s, i - 1) ^ path_value(n - i));
    succ.push_back(star_value(s, i) ^ path_value(n - i - 1));
    succ.push_back(star_value(s, i - 1) ^ path_value(n - i - 1));
  }
  const Nimber value = mex(succ);
  star_.emplace(key, value);
  return value;
}

Nimber GraphCalculator::state_value(const GraphState& g) {
  if (g.aux != 0) {
    throw std::invalid_argument(
        "disjunctive evaluation requires aux == 0; use the selective solver");
  }
  Nimber acc = 0;
  for (const Component& c : g.components) {
    switch (c.kind) {
      case Component::Kind::NimHeap:
        acc ^= c.a;
        break;
      case Component::Kind::Path:
        acc ^= path_value(c.a);
        break;
      case Component::Kind::Star:
        acc ^= star_value(c.a, c.b);
        break;
    }
  }
  return acc;
}

std::vector<Nimber> star_path_sequence(std::uint64_t pendants,
                                       std::uint64_t max_n) {
  GraphCalculator calc;
  std::vector<Nimber> out;
  out.reserve(max_n + 1);
  for (std::uint64_t n = 0; n <= max_n; ++n) {
    out.push_back(calc.star_value(pendants, n));
  }
  return out;
}

std::vector<Nimber> starkayles_sequence(std::uint64_t k, std::uint64_t max_n) {
  if (k < 1) throw std::invalid_argument("the star needs at least one vertex");
  return star_path_sequence(k - 1, max_n);
}

PeriodReport star_path_period(std::uint64_t pendants, std::uint64_t max_n) {
  const auto values = star_path_sequence(pendants, max_n);
  return empirical_period(values, pendants + 1);
}

PeriodReport starkayles_period(std::uint64_t k, std::uint64_t max_n) {
  const auto values = starkayles_sequence(k, max_n);
  return empirical_period(values, k);
}

KaylesAuxSolver::KaylesAuxSolver(std::uint64_t max_n_cap) : cap_(max_n_cap) {
  if (cap_ > 200) {
    throw std::invalid_argument("state cap too large to be practical");
  }
}

Nimber KaylesAuxSolver::value(std::uint64_t aux,
                              std::vector<std::uint64_t> path_lengths) {
  std::uint64_t total = 0;
  for (std::uint64_t len : path_lengths) total += len;
  if (total > cap_ || aux > cap_) {
    throw CapExceededError("position size " + std::to_string(total) +
                           " exceeds the solver cap " + std::to_string(cap_));
  }
  std::erase(path_lengths, std::uint64_t{0});
  std::sort(path_lengths.begin(), path_lengths.end(),
            std::greater<>{});
  return eval(aux, path_lengths);
}

std::vector<Nimber> KaylesAuxSolver::sequence(std::uint64_t k,
                                              std::uint64_t max_n) {
  if (max_n > cap_) {
    throw CapExceededError("max_n " + std::to_string(max_n) +
                           " exceeds the solver cap " + std::to_string(cap_));
  }
  std::vector<Nimber> out;
  out.reserve(max_n + 1);
  for (std::uint64_t n = 0; n <= max_n; ++n) {
    out.push_back(value(k, n ? std::vector<std::uint64_t>{n}
                             : std::vector<std::uint64_t>{}));
  }
  return out;
}

Nimber KaylesAuxSolver::eval(std::uint64_t aux,
                             std::vector<std::uint64_t>& parts) {
  std::string key;
  key.reserve(parts.size() + 1);
  key.push_back(static_cast<char>(aux));
  for (std::uint64_t len : parts) key.push_back(static_cast<char>(len));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  std::vector<Nimber> succ;
  // Heap-only reductions.
  std::vector<std::uint64_t> scratch;
  for (std::uint64_t a = 0; a < aux; ++a) succ.push_back(eval(a, parts));

  // One graph move in one component, alone or combined with a heap move.
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0 && parts[i] == parts[i - 1]) continue;
    const std::uint64_t len = parts[i];
    auto apply = [&](std::uint64_t left, std::uint64_t right) {
      scratch.clear();
      for (std::size_t j = 0; j < parts.size(); ++j) {
        if (j == i) continue;
        scratch.push_back(parts[j]);
      }
      if (left) scratch.push_back(left);
      if (right) scratch.push_back(right);
      std::sort(scratch.begin(), scratch.end(), std::greater<>{});
      succ.push_back(eval(aux, scratch));
      for (std::uint64_t a = 0; a < aux; ++a) {
        succ.push_back(eval(a, scratch));
      }
    };
    for (std::uint64_t a = 0; a <= (len - 1) / 2; ++a) {
      apply(a, len - 1 - a);
    }
    if (len >= 2) {
      for (std::uint64_t a = 0; a <= (len - 2) / 2; ++a) {
        apply(a, len - 2 - a);
      }
    }
  }

  const Nimber value = mex(succ);
  memo_.emplace(std::move(key), value);
  return value;
}

PeriodReport kayles_aux_period(std::uint64_t k, std::uint64_t max_n,
                               std::uint64_t max_n_cap) {
  KaylesAuxSolver solver(max_n_cap);
  const auto values = solver.sequence(k, max_n);
  return empirical_period(values, k);
}

}  // namespace auxnim
