#include "auxnim/engine.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <charconv>
#include <fstream>
#include <functional>

namespace auxnim {
namespace {

constexpr std::uint64_t kPackLimit = 1ull << 16;

std::uint64_t sum_of(std::span<const std::uint64_t> piles) {
  std::uint64_t s = 0;
  for (std::uint64_t p : piles) s += p;
  return s;
}

std::uint64_t parse_u64(std::string_view field, std::size_t line_no,
                        const char* what) {
  std::uint64_t value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || field.empty()) {
    throw CacheFormatError(std::string("bad ") + what + " field '" +
                               std::string(field) + "'",
                           line_no);
  }
  return value;
}

// One in-flight evaluation. The cursor enumerates successors lazily: phase 0
// reduces only the auxiliary pile (targets ascending), phase 1 reduces one
// component pile, phase 2 reduces both. Ascending targets keep the explicit
// stack shallow because the first unmemoized successor of a frame always
// zeroes something.
struct Frame {
  std::uint64_t aux = 0;
  std::vector<std::uint64_t> piles;
  std::uint64_t depth = 0;
  std::vector<std::uint64_t> seen;  // bit per successor value in [0, depth)
  std::uint64_t seen_count = 0;

  int phase = 0;
  std::uint64_t next_aux = 0;
  std::size_t pile_idx = 0;
  std::uint64_t next_val = 0;
};

Frame make_frame(std::uint64_t aux, std::vector<std::uint64_t> piles) {
  Frame f;
  f.aux = aux;
  f.piles = std::move(piles);
  f.depth = f.aux + sum_of(f.piles);
  f.seen.assign((f.depth + 63) / 64, 0);
  return f;
}

void mark(Frame& f, Nimber v) {
  // Successor values are below their own depth, hence below ours.
  assert(v < f.depth);
  std::uint64_t& word = f.seen[v >> 6];
  const std::uint64_t bit = 1ull << (v & 63);
  if (!(word & bit)) {
    word |= bit;
    ++f.seen_count;
  }
}

Nimber mex_of(const Frame& f) {
  for (std::size_t i = 0; i < f.seen.size(); ++i) {
    if (f.seen[i] != ~0ull) {
      return i * 64 + std::countr_one(f.seen[i]);
    }
  }
  return f.depth;
}

void advance_pile(Frame& f) {
  ++f.pile_idx;
  while (f.pile_idx < f.piles.size() &&
         f.piles[f.pile_idx] == f.piles[f.pile_idx - 1]) {
    ++f.pile_idx;  // equal piles yield identical successors
  }
  f.next_val = 0;
}

// Produces the next successor as (succ_aux, *succ_piles) in canonical form,
// or returns false when exhausted. `scratch` backs pile-modifying moves.
bool next_successor(Frame& f, std::vector<std::uint64_t>& scratch,
                    std::uint64_t& succ_aux,
                    const std::vector<std::uint64_t>** succ_piles) {
  for (;;) {
    switch (f.phase) {
      case 0:
        if (f.next_aux < f.aux) {
          succ_aux = f.next_aux++;
          *succ_piles = &f.piles;
          return true;
        }
        f.phase = 1;
        f.pile_idx = 0;
        f.next_val = 0;
        break;
      case 1:
      case 2:
        if (f.phase == 2 && (f.aux == 0 || f.next_aux >= f.aux)) {
          f.phase = 3;
          break;
        }
        if (f.pile_idx >= f.piles.size()) {
          if (f.phase == 1) {
            f.phase = 2;
            f.next_aux = 0;
          } else {
            ++f.next_aux;
          }
          f.pile_idx = 0;
          f.next_val = 0;
          break;
        }
        if (f.next_val >= f.piles[f.pile_idx]) {
          advance_pile(f);
          break;
        }
        scratch.clear();
        for (std::size_t j = 0; j < f.piles.size(); ++j) {
          const std::uint64_t v =
              (j == f.pile_idx) ? f.next_val : f.piles[j];
          if (v) scratch.push_back(v);
        }
        std::sort(scratch.begin(), scratch.end(), std::greater<>{});
        ++f.next_val;
        succ_aux = (f.phase == 1) ? f.aux : f.next_aux;
        *succ_piles = &scratch;
        return true;
      default:
        return false;
    }
  }
}

}  // namespace

std::optional<std::uint64_t> MemoTable::packed_key(
    std::uint64_t aux, std::span<const std::uint64_t> piles) {
  if (aux >= kPackLimit || piles.size() > 3) return std::nullopt;
  std::uint64_t key = aux;
  int shift = 16;
  for (std::uint64_t p : piles) {
    if (p >= kPackLimit) return std::nullopt;
    key |= p << shift;
    shift += 16;
  }
  return key;
}

std::optional<Nimber> MemoTable::lookup(
    std::uint64_t aux, std::span<const std::uint64_t> piles) const {
  if (auto key = packed_key(aux, piles)) {
    auto it = packed_.find(*key);
    if (it == packed_.end()) return std::nullopt;
    return it->second;
  }
  AuxPosition p{aux, {piles.begin(), piles.end()}};
  auto it = general_.find(p);
  if (it == general_.end()) return std::nullopt;
  return it->second;
}

std::optional<Nimber> MemoTable::lookup(const AuxPosition& p) const {
  return lookup(p.aux, p.piles);
}

void MemoTable::insert(const AuxPosition& p, Nimber value) {
  if (auto key = packed_key(p.aux, p.piles)) {
    auto [it, inserted] = packed_.try_emplace(*key, value);
    if (!inserted && it->second != value) {
      throw std::logic_error("memo rebind: position already holds " +
                             std::to_string(it->second));
    }
    return;
  }
  auto [it, inserted] = general_.try_emplace(p, value);
  if (!inserted && it->second != value) {
    throw std::logic_error("memo rebind: position already holds " +
                           std::to_string(it->second));
  }
}

void MemoTable::save(std::ostream& out) const {
  std::map<AuxPosition, Nimber> all(general_);
  for (const auto& [key, value] : packed_) {
    AuxPosition p;
    p.aux = key & 0xffff;
    for (int shift = 16; shift < 64; shift += 16) {
      const std::uint64_t pile = (key >> shift) & 0xffff;
      if (pile) p.piles.push_back(pile);
    }
    all.emplace(std::move(p), value);
  }
  for (const auto& [p, value] : all) {
    out << p.aux << '|';
    for (std::size_t i = 0; i < p.piles.size(); ++i) {
      if (i) out << ',';
      out << p.piles[i];
    }
    out << '|' << value << '\n';
  }
}

void MemoTable::load(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first_sep = line.find('|');
    const auto last_sep = line.rfind('|');
    if (first_sep == std::string::npos || last_sep == first_sep) {
      throw CacheFormatError("expected aux|piles|nimber", line_no);
    }
    const std::string_view view(line);
    const std::uint64_t aux =
        parse_u64(view.substr(0, first_sep), line_no, "aux");
    const std::uint64_t value =
        parse_u64(view.substr(last_sep + 1), line_no, "nimber");

    std::vector<std::uint64_t> piles;
    std::string_view middle =
        view.substr(first_sep + 1, last_sep - first_sep - 1);
    while (!middle.empty()) {
      const auto comma = middle.find(',');
      const auto field =
          comma == std::string_view::npos ? middle : middle.substr(0, comma);
      piles.push_back(parse_u64(field, line_no, "pile"));
      if (comma == std::string_view::npos) break;
      middle.remove_prefix(comma + 1);
      if (middle.empty()) {
        throw CacheFormatError("trailing comma in pile list", line_no);
      }
    }
    insert(make_position(aux, std::move(piles)), value);
  }
}

Engine::Engine(std::uint64_t pile_cap) : cap_(pile_cap) {}

void Engine::check_cap(const AuxPosition& p) const {
  if (p.aux > cap_) {
    throw CapExceededError("auxiliary pile " + std::to_string(p.aux) +
                           " exceeds engine cap " + std::to_string(cap_));
  }
  for (std::uint64_t pile : p.piles) {
    if (pile > cap_) {
      throw CapExceededError("pile " + std::to_string(pile) +
                             " exceeds engine cap " + std::to_string(cap_));
    }
  }
}

Nimber Engine::sg(const AuxPosition& p) {
  if (!is_canonical(p)) {
    throw std::invalid_argument("position is not canonical");
  }
  check_cap(p);
  if (auto v = memo_.lookup(p)) return *v;
  return evaluate(p);
}

Nimber Engine::sg(std::uint64_t aux, std::vector<std::uint64_t> piles) {
  return sg(make_position(aux, std::move(piles)));
}

Nimber Engine::evaluate(AuxPosition root) {
  std::vector<Frame> stack;
  stack.push_back(make_frame(root.aux, std::move(root.piles)));

  for (;;) {
    Frame& f = stack.back();
    bool descended = false;
    std::uint64_t succ_aux = 0;
    const std::vector<std::uint64_t>* succ_piles = nullptr;

    // Once every value in [0, depth) is covered the mex is pinned at the
    // depth upper bound and the remaining moves cannot change it.
    while (f.seen_count < f.depth &&
           next_successor(f, scratch_, succ_aux, &succ_piles)) {
      if (auto v = memo_.lookup(succ_aux, *succ_piles)) {
        mark(f, *v);
        continue;
      }
      std::vector<std::uint64_t> piles_copy = *succ_piles;
      stack.push_back(make_frame(succ_aux, std::move(piles_copy)));
      descended = true;
      break;
    }
    if (descended) continue;

    const Nimber value = (f.seen_count == f.depth) ? f.depth : mex_of(f);
    AuxPosition pos{f.aux, std::move(f.piles)};
    assert(value >= pos.aux + pos.pile_xor() && value <= pos.depth());
#ifndef NDEBUG
    if (pos.aux > 0) {
      const auto below = memo_.lookup(pos.aux - 1, pos.piles);
      assert(below && value > *below);
    }
#endif
    memo_.insert(pos, value);
    stack.pop_back();
    if (stack.empty()) return value;
    mark(stack.back(), value);
  }
}

void Engine::load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;  // missing cache is fine
  memo_.load(in);
}

void Engine::save_cache(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open cache file for writing: " + path);
  memo_.save(out);
  out.flush();
  if (!out) throw IoError("failed writing cache file: " + path);
}

}  // namespace auxnim
