#include "auxnim/grid.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "auxnim/errors.hpp"

namespace auxnim {

std::vector<std::vector<Nimber>> compute_grid(Engine& engine,
                                              std::uint64_t aux,
                                              std::uint64_t max_coord) {
  if (max_coord < 1) throw std::invalid_argument("grid needs max_coord >= 1");
  std::vector<std::vector<Nimber>> values(max_coord,
                                          std::vector<Nimber>(max_coord, 0));
  for (std::uint64_t y = 0; y < max_coord; ++y) {
    for (std::uint64_t x = 0; x < max_coord; ++x) {
      values[y][x] = engine.sg(aux, {x, y});
    }
  }
  return values;
}

void write_grid(Engine& engine, const GridSpec& spec) {
  const auto values = compute_grid(engine, spec.aux, spec.max_coord);

  std::ofstream out(spec.path);
  if (!out) throw IoError("cannot open grid output: " + spec.path);

  if (spec.format == GridSpec::Format::Csv) {
    out << "x,y,nimber\n";
    for (std::uint64_t y = 0; y < spec.max_coord; ++y) {
      for (std::uint64_t x = 0; x < spec.max_coord; ++x) {
        out << x << ',' << y << ',' << values[y][x] << '\n';
      }
    }
  } else {
    Nimber maxval = 0;
    for (const auto& row : values) {
      for (Nimber v : row) maxval = std::max(maxval, v);
    }
    // A valid PGM needs maxval >= 1; an all-zero grid still rescales fine.
    maxval = std::max<Nimber>(maxval, 1);
    out << "P2\n" << spec.max_coord << ' ' << spec.max_coord << '\n'
        << maxval << '\n';
    for (std::uint64_t y = 0; y < spec.max_coord; ++y) {
      for (std::uint64_t x = 0; x < spec.max_coord; ++x) {
        if (x) out << ' ';
        out << values[y][x];
      }
      out << '\n';
    }
  }

  out.flush();
  if (!out) throw IoError("failed writing grid output: " + spec.path);
}

}  // namespace auxnim
