#include "auxnim.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "auxnim/engine.hpp"
#include "auxnim/errors.hpp"
#include "auxnim/graph_kayles.hpp"
#include "auxnim/grid.hpp"
#include "auxnim/hypergraph.hpp"
#include "auxnim/oracles.hpp"
#include "auxnim/periodicity.hpp"

struct auxnim_engine {
  auxnim::Engine impl;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : ""; }

template <typename Fn>
auxnim_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return AUXNIM_OK;
  } catch (const auxnim::CapExceededError& e) {
    set_error(e.what());
    return AUXNIM_ERR_CAP_EXCEEDED;
  } catch (const auxnim::IoError& e) {
    set_error(e.what());
    return AUXNIM_ERR_IO;
  } catch (const auxnim::CacheFormatError& e) {
    set_error(e.what());
    return AUXNIM_ERR_IO;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return AUXNIM_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return AUXNIM_ERR_INTERNAL;
  }
}

auxnim_status require(bool ok, const char* message) {
  if (ok) return AUXNIM_OK;
  set_error(message);
  return AUXNIM_ERR_INVALID_ARGUMENT;
}

void fill_report(const auxnim::PeriodReport& in, auxnim_period_report* out) {
  out->preperiod = in.preperiod;
  out->period = in.period;
  out->certified = in.certified ? 1 : 0;
  out->window_lo = in.window_lo;
  out->window_hi = in.window_hi;
  out->max_n = in.max_n;
}

std::vector<std::uint64_t> to_vector(const uint64_t* data, size_t count) {
  return count ? std::vector<std::uint64_t>(data, data + count)
               : std::vector<std::uint64_t>{};
}

}  // namespace

extern "C" {

const char* auxnim_status_name(auxnim_status status) {
  switch (status) {
    case AUXNIM_OK: return "ok";
    case AUXNIM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case AUXNIM_ERR_CAP_EXCEEDED: return "cap exceeded";
    case AUXNIM_ERR_IO: return "io error";
    case AUXNIM_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* auxnim_last_error(void) { return g_last_error.c_str(); }

auxnim_engine* auxnim_engine_new(uint64_t pile_cap) {
  try {
    return new auxnim_engine{
        auxnim::Engine(pile_cap ? pile_cap : auxnim::kDefaultPileCap)};
  } catch (const std::bad_alloc&) {
    return nullptr;
  }
}

void auxnim_engine_free(auxnim_engine* engine) { delete engine; }

uint64_t auxnim_engine_pile_cap(const auxnim_engine* engine) {
  return engine ? engine->impl.pile_cap() : 0;
}

size_t auxnim_engine_memo_size(const auxnim_engine* engine) {
  return engine ? engine->impl.memo().size() : 0;
}

auxnim_status auxnim_sg(auxnim_engine* engine, uint64_t aux,
                        const uint64_t* piles, size_t pile_count,
                        uint64_t* out_nimber) {
  if (auto rc = require(engine && out_nimber && (piles || !pile_count),
                        "null argument"))
    return rc;
  return guarded([&] {
    *out_nimber = engine->impl.sg(aux, to_vector(piles, pile_count));
  });
}

auxnim_status auxnim_sg_bounds(uint64_t aux, const uint64_t* piles,
                               size_t pile_count, uint64_t* out_lower,
                               uint64_t* out_upper) {
  if (auto rc = require(out_lower && out_upper && (piles || !pile_count),
                        "null argument"))
    return rc;
  uint64_t sum = 0;
  uint64_t acc = 0;
  for (size_t i = 0; i < pile_count; ++i) {
    sum += piles[i];
    acc ^= piles[i];
  }
  *out_lower = aux + acc;
  *out_upper = aux + sum;
  g_last_error.clear();
  return AUXNIM_OK;
}

auxnim_status auxnim_nimh_sg(auxnim_engine* engine, uint32_t vertex_count,
                             const uint32_t* edge_vertices,
                             const size_t* edge_sizes, size_t edge_count,
                             const uint64_t* heaps, uint64_t* out_nimber) {
  if (auto rc = require(engine && out_nimber && heaps &&
                            (edge_count == 0 || (edge_vertices && edge_sizes)),
                        "null argument"))
    return rc;
  return guarded([&] {
    std::vector<std::vector<std::uint32_t>> edges;
    size_t offset = 0;
    for (size_t e = 0; e < edge_count; ++e) {
      edges.emplace_back(edge_vertices + offset,
                         edge_vertices + offset + edge_sizes[e]);
      offset += edge_sizes[e];
    }
    auxnim::HypergraphEngine nimh(
        auxnim::Hypergraph::make(vertex_count, std::move(edges)),
        engine->impl.pile_cap());
    *out_nimber = nimh.sg(std::span(heaps, vertex_count));
  });
}

auxnim_status auxnim_afunction(auxnim_engine* engine, const uint64_t* piles,
                               size_t pile_count, uint64_t* out_a,
                               uint64_t* out_bound) {
  if (auto rc = require(engine && out_a && out_bound && (piles || !pile_count),
                        "null argument"))
    return rc;
  return guarded([&] {
    auxnim::AFunctionRecord record =
        pile_count == 2
            ? auxnim::compute_a2(engine->impl, piles[0], piles[1])
            : auxnim::compute_an(engine->impl, to_vector(piles, pile_count));
    *out_a = record.a_value;
    *out_bound = record.certified_bound;
  });
}

auxnim_status auxnim_cache_load(auxnim_engine* engine, const char* path) {
  if (auto rc = require(engine && path, "null argument")) return rc;
  return guarded([&] { engine->impl.load_cache(path); });
}

auxnim_status auxnim_cache_save(const auxnim_engine* engine,
                                const char* path) {
  if (auto rc = require(engine && path, "null argument")) return rc;
  return guarded([&] { engine->impl.save_cache(path); });
}

auxnim_status auxnim_verify_suite(auxnim_engine* engine, const char* suite,
                                  uint64_t max_value, auxnim_line_fn line_fn,
                                  void* user, int* out_passed,
                                  uint64_t* out_checked) {
  if (auto rc = require(engine && suite, "null argument")) return rc;
  return guarded([&] {
    auxnim::VerifyOptions options;
    options.max_value = max_value;
    const auxnim::VerificationReport report =
        auxnim::verify_suite(engine->impl, suite, options);
    if (line_fn) {
      const std::string text = auxnim::render_report(report);
      size_t start = 0;
      while (start < text.size()) {
        const size_t end = text.find('\n', start);
        const std::string line = text.substr(start, end - start);
        line_fn(line.c_str(), user);
        if (end == std::string::npos) break;
        start = end + 1;
      }
    }
    if (out_passed) *out_passed = report.pass() ? 1 : 0;
    if (out_checked) *out_checked = report.checked;
  });
}

const char* auxnim_suite_names(void) {
  static const std::string names = [] {
    std::string joined;
    for (const auto& name : auxnim::suite_names()) {
      if (!joined.empty()) joined += ',';
      joined += name;
    }
    return joined;
  }();
  return names.c_str();
}

auxnim_status auxnim_grid_write(auxnim_engine* engine, uint64_t aux,
                                uint64_t max_coord, const char* format,
                                const char* path) {
  if (auto rc = require(engine && format && path, "null argument")) return rc;
  return guarded([&] {
    auxnim::GridSpec spec;
    spec.aux = aux;
    spec.max_coord = max_coord;
    spec.path = path;
    if (std::strcmp(format, "csv") == 0) {
      spec.format = auxnim::GridSpec::Format::Csv;
    } else if (std::strcmp(format, "pgm") == 0) {
      spec.format = auxnim::GridSpec::Format::Pgm;
    } else {
      throw std::invalid_argument("grid format must be csv or pgm");
    }
    auxnim::write_grid(engine->impl, spec);
  });
}

auxnim_status auxnim_subtraction_period(const uint64_t* amounts,
                                        size_t amount_count, uint64_t k,
                                        uint64_t max_n,
                                        auxnim_period_report* out) {
  if (auto rc = require(amounts && amount_count && out, "null argument"))
    return rc;
  return guarded([&] {
    const auto set =
        auxnim::SubtractionSet::make(to_vector(amounts, amount_count));
    const auto table = auxnim::subtraction_aux_table(set, k, max_n);
    fill_report(auxnim::detect_period_columns(table, set.max_amount()), out);
  });
}

auxnim_status auxnim_subtraction_sequence(const uint64_t* amounts,
                                          size_t amount_count, uint64_t k,
                                          uint64_t max_n,
                                          uint64_t* out_values) {
  if (auto rc = require(amounts && amount_count && out_values,
                        "null argument"))
    return rc;
  return guarded([&] {
    const auto set =
        auxnim::SubtractionSet::make(to_vector(amounts, amount_count));
    const auto table = auxnim::subtraction_aux_table(set, k, max_n);
    for (uint64_t n = 0; n <= max_n; ++n) out_values[n] = table[n][k];
  });
}

auxnim_status auxnim_octal_period(const char* code, uint64_t max_n,
                                  auxnim_period_report* out) {
  if (auto rc = require(code && out, "null argument")) return rc;
  return guarded([&] {
    const auto parsed = auxnim::OctalCode::parse(code);
    const auto values = auxnim::octal_sg(parsed, max_n);
    fill_report(auxnim::certify_octal_period(parsed, values), out);
  });
}

auxnim_status auxnim_octal_sequence(const char* code, uint64_t max_n,
                                    uint64_t* out_values) {
  if (auto rc = require(code && out_values, "null argument")) return rc;
  return guarded([&] {
    const auto values = auxnim::octal_sg(auxnim::OctalCode::parse(code), max_n);
    for (uint64_t n = 0; n <= max_n; ++n) out_values[n] = values[n];
  });
}

auxnim_status auxnim_starkayles_period(uint64_t pendants, uint64_t max_n,
                                       auxnim_period_report* out) {
  if (auto rc = require(out != nullptr, "null argument")) return rc;
  return guarded(
      [&] { fill_report(auxnim::star_path_period(pendants, max_n), out); });
}

auxnim_status auxnim_starkayles_sequence(uint64_t pendants, uint64_t max_n,
                                         uint64_t* out_values) {
  if (auto rc = require(out_values != nullptr, "null argument")) return rc;
  return guarded([&] {
    const auto values = auxnim::star_path_sequence(pendants, max_n);
    for (uint64_t n = 0; n <= max_n; ++n) out_values[n] = values[n];
  });
}

auxnim_status auxnim_kayles_aux_period(uint64_t k, uint64_t max_n,
                                       uint64_t max_n_cap,
                                       auxnim_period_report* out) {
  if (auto rc = require(out != nullptr, "null argument")) return rc;
  return guarded([&] {
    fill_report(
        auxnim::kayles_aux_period(
            k, max_n,
            max_n_cap ? max_n_cap : auxnim::KaylesAuxSolver::kDefaultMaxN),
        out);
  });
}

auxnim_status auxnim_kayles_aux_sequence(uint64_t k, uint64_t max_n,
                                         uint64_t max_n_cap,
                                         uint64_t* out_values) {
  if (auto rc = require(out_values != nullptr, "null argument")) return rc;
  return guarded([&] {
    auxnim::KaylesAuxSolver solver(
        max_n_cap ? max_n_cap : auxnim::KaylesAuxSolver::kDefaultMaxN);
    const auto values = solver.sequence(k, max_n);
    for (uint64_t n = 0; n <= max_n; ++n) out_values[n] = values[n];
  });
}

}  // extern "C"
