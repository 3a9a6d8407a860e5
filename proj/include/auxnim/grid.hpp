#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "auxnim/engine.hpp"
#include "auxnim/nimber.hpp"

namespace auxnim {

/// Parameters for a nimber heat-map export: cell (x, y) of the grid
/// [0, max_coord)^2 holds the value of (aux, [x, y]).
struct GridSpec {
  enum class Format { Csv, Pgm };

  std::uint64_t aux = 0;
  std::uint64_t max_coord = 0;  // must be >= 1
  Format format = Format::Csv;
  std::string path;
};

/// values[y][x] = sg(aux, [x, y]).
std::vector<std::vector<Nimber>> compute_grid(Engine& engine,
                                              std::uint64_t aux,
                                              std::uint64_t max_coord);

/// Writes the grid. CSV: header `x,y,nimber`, rows in row-major (y outer)
/// order. PGM: plain P2, maxval = the grid's maximum nimber (floored at 1 so
/// the file stays a valid PGM), pixels are raw nimbers with no rescaling,
/// one grid row per line. Throws IoError when the output cannot be written.
void write_grid(Engine& engine, const GridSpec& spec);

}  // namespace auxnim
