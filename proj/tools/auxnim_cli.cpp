// Command-line front end for the auxnim shared library: nimber queries,
// heat-map grid exports, A-function queries, verification suites and
// periodicity experiments. Exit codes: 0 success/pass, 1 failure, 2 usage
// error, 3 engine cap exceeded, 4 unwritable output.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "auxnim.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitIo = 4;

int exit_code_for(auxnim_status status) {
  switch (status) {
    case AUXNIM_OK: return 0;
    case AUXNIM_ERR_INVALID_ARGUMENT: return kExitUsage;
    case AUXNIM_ERR_CAP_EXCEEDED: return kExitCap;
    case AUXNIM_ERR_IO: return kExitIo;
    case AUXNIM_ERR_INTERNAL: return kExitFailure;
  }
  return kExitFailure;
}

int report_error(auxnim_status status) {
  std::fprintf(stderr, "error: %s (%s)\n", auxnim_last_error(),
               auxnim_status_name(status));
  return exit_code_for(status);
}

std::vector<std::uint64_t> parse_csv(const std::string& text) {
  std::vector<std::uint64_t> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view field(text.data() + start,
                                 (comma == std::string::npos ? text.size()
                                                             : comma) -
                                     start);
    std::uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() ||
        field.empty()) {
      throw CLI::ValidationError("expected a comma-separated list of naturals");
    }
    values.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

struct EngineHandle {
  auxnim_engine* ptr = nullptr;
  ~EngineHandle() { auxnim_engine_free(ptr); }
};

// Engine commands honor AUXNIM_CACHE: the file is loaded up front (missing is
// fine) and saved back after a successful run.
const char* cache_path() { return std::getenv("AUXNIM_CACHE"); }

int with_engine(std::uint64_t cap, int (*body)(auxnim_engine*, void*),
                void* ctx) {
  EngineHandle engine;
  engine.ptr = auxnim_engine_new(cap);
  if (!engine.ptr) {
    std::fprintf(stderr, "error: out of memory\n");
    return kExitFailure;
  }
  if (const char* path = cache_path()) {
    if (auto rc = auxnim_cache_load(engine.ptr, path)) return report_error(rc);
  }
  const int code = body(engine.ptr, ctx);
  if (code == 0) {
    if (const char* path = cache_path()) {
      if (auto rc = auxnim_cache_save(engine.ptr, path)) {
        return report_error(rc);
      }
    }
  }
  return code;
}

void print_sequence(const std::vector<std::uint64_t>& values) {
  std::printf("# n=0..%zu\n", values.size() - 1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::printf("%s%llu", i ? "," : "",
                static_cast<unsigned long long>(values[i]));
  }
  std::printf("\n");
}

void print_period_line(const std::string& desc,
                       const auxnim_period_report& report,
                       bool with_mod12 = false) {
  std::printf("game=%s n0=%llu p=%llu certified=%s window=[%llu,%llu] "
              "max_n=%llu",
              desc.c_str(),
              static_cast<unsigned long long>(report.preperiod),
              static_cast<unsigned long long>(report.period),
              report.certified ? "true" : "false",
              static_cast<unsigned long long>(report.window_lo),
              static_cast<unsigned long long>(report.window_hi),
              static_cast<unsigned long long>(report.max_n));
  if (with_mod12) {
    const bool multiple = report.period != 0 && report.period % 12 == 0;
    std::printf(" p_multiple_of_12=%s", multiple ? "true" : "false");
  }
  std::printf("\n");
}

std::string join_csv(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

// ---- subcommand payloads ---------------------------------------------------

struct NimberArgs {
  std::uint64_t aux = 0;
  std::vector<std::uint64_t> piles;
};

int run_nimber(auxnim_engine* engine, void* ctx) {
  const auto& args = *static_cast<const NimberArgs*>(ctx);
  std::uint64_t value = 0;
  if (auto rc = auxnim_sg(engine, args.aux, args.piles.data(),
                          args.piles.size(), &value)) {
    return report_error(rc);
  }
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  auxnim_sg_bounds(args.aux, args.piles.data(), args.piles.size(), &lower,
                   &upper);
  std::printf("N=%llu\n", static_cast<unsigned long long>(value));
  std::printf("bounds=[%llu,%llu]\n", static_cast<unsigned long long>(lower),
              static_cast<unsigned long long>(upper));
  return 0;
}

struct GridArgs {
  std::uint64_t aux = 0;
  std::uint64_t max_coord = 0;
  std::string format = "csv";
  std::string out;
};

int run_grid(auxnim_engine* engine, void* ctx) {
  const auto& args = *static_cast<const GridArgs*>(ctx);
  if (auto rc = auxnim_grid_write(engine, args.aux, args.max_coord,
                                  args.format.c_str(), args.out.c_str())) {
    return report_error(rc);
  }
  std::printf("grid written to %s\n", args.out.c_str());
  return 0;
}

struct AfunArgs {
  std::vector<std::uint64_t> piles;
};

int run_afun(auxnim_engine* engine, void* ctx) {
  const auto& args = *static_cast<const AfunArgs*>(ctx);
  std::uint64_t a = 0;
  std::uint64_t bound = 0;
  if (auto rc = auxnim_afunction(engine, args.piles.data(), args.piles.size(),
                                 &a, &bound)) {
    return report_error(rc);
  }
  std::printf("A=%llu bound=%llu\n", static_cast<unsigned long long>(a),
              static_cast<unsigned long long>(bound));
  return 0;
}

struct VerifyArgs {
  std::string suite;
  std::uint64_t max = 0;
};

int run_verify(auxnim_engine* engine, void* ctx) {
  const auto& args = *static_cast<const VerifyArgs*>(ctx);
  int passed = 0;
  std::uint64_t checked = 0;
  const auto rc = auxnim_verify_suite(
      engine, args.suite.c_str(), args.max,
      [](const char* line, void*) { std::printf("%s\n", line); }, nullptr,
      &passed, &checked);
  if (rc) return report_error(rc);
  return passed ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sprague-Grundy toolkit for selective compound Nim games"};
  app.require_subcommand(1);

  std::uint64_t cap = 0;  // 0 = library default
  app.add_option("--cap", cap, "engine cap on pile sizes (default 2^20)");

  // nimber
  NimberArgs nimber;
  std::string nimber_piles;
  auto* cmd_nimber =
      app.add_subcommand("nimber", "Sprague-Grundy value of one position");
  cmd_nimber->fallthrough();  // accept trailing --cap
  cmd_nimber->add_option("--a", nimber.aux, "auxiliary pile size")
      ->required();
  cmd_nimber->add_option("--piles", nimber_piles,
                         "comma-separated component piles")
      ->required();

  // grid
  GridArgs grid;
  auto* cmd_grid =
      app.add_subcommand("grid", "export the nimber heat-map of (aux,[x,y])");
  cmd_grid->fallthrough();
  cmd_grid->add_option("--aux", grid.aux, "auxiliary pile size")->required();
  cmd_grid->add_option("--max", grid.max_coord, "grid covers [0,max)^2")
      ->required();
  cmd_grid->add_option("--format", grid.format, "csv or pgm")
      ->check(CLI::IsMember({"csv", "pgm"}));
  cmd_grid->add_option("--out", grid.out, "output path")->required();

  // afun
  AfunArgs afun;
  std::string afun_piles;
  auto* cmd_afun = app.add_subcommand(
      "afun", "least auxiliary size whose value reaches the depth");
  cmd_afun->fallthrough();
  cmd_afun->add_option("--piles", afun_piles, "comma-separated piles")
      ->required();

  // verify
  VerifyArgs verify;
  auto* cmd_verify =
      app.add_subcommand("verify", "run one exhaustive verification suite");
  cmd_verify->fallthrough();
  cmd_verify
      ->add_option("--suite", verify.suite,
                   std::string("one of: ") + auxnim_suite_names())
      ->required();
  cmd_verify->add_option("--max", verify.max,
                         "range bound (0 = suite default)");

  // period
  auto* cmd_period =
      app.add_subcommand("period", "periodicity searches on game families");
  cmd_period->require_subcommand(1);
  std::uint64_t period_max = 200;
  bool dump = false;
  cmd_period->add_option("--max", period_max, "compute values for n<=max");
  cmd_period->add_flag("--dump", dump, "print the full value sequence");

  std::string sub_amounts;
  std::uint64_t sub_k = 0;
  auto* cmd_sub = cmd_period->add_subcommand(
      "subtraction", "fixed subtraction set compounded with a heap");
  cmd_sub->fallthrough();  // --max/--dump may follow the game subcommand
  cmd_sub->add_option("--amounts", sub_amounts, "removal amounts, e.g. 1,2")
      ->required();
  cmd_sub->add_option("--k", sub_k, "auxiliary heap size");

  std::string octal_code;
  auto* cmd_octal = cmd_period->add_subcommand("octal", "octal heap game");
  cmd_octal->fallthrough();
  cmd_octal->add_option("--code", octal_code, "e.g. 0.77")->required();

  std::uint64_t star_k = 0;
  std::uint64_t star_pendants = 0;
  auto* cmd_star = cmd_period->add_subcommand(
      "starkayles", "edge-removal game on a star with a growing tail");
  cmd_star->fallthrough();
  auto* star_k_opt =
      cmd_star->add_option("--k", star_k, "star vertex count (k-1 pendants)");
  auto* star_s_opt = cmd_star->add_option("--pendants", star_pendants,
                                          "pendant edge count, directly");
  star_k_opt->excludes(star_s_opt);

  // kayles-aux
  std::uint64_t ka_k = 1;
  std::uint64_t ka_max = 30;
  std::uint64_t ka_cap = 0;
  bool ka_dump = false;
  auto* cmd_ka = app.add_subcommand(
      "kayles-aux", "selective compound of a heap with a Kayles row");
  cmd_ka->add_option("--k", ka_k, "auxiliary heap size")->required();
  cmd_ka->add_option("--max", ka_max, "compute values for n<=max");
  cmd_ka->add_option("--cap", ka_cap, "state cap on n (default 30)");
  cmd_ka->add_flag("--dump", ka_dump, "print the full value sequence");

  try {
    app.parse(argc, argv);
    if (cmd_nimber->parsed()) nimber.piles = parse_csv(nimber_piles);
    if (cmd_afun->parsed()) afun.piles = parse_csv(afun_piles);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (cmd_nimber->parsed()) return with_engine(cap, run_nimber, &nimber);
  if (cmd_grid->parsed()) return with_engine(cap, run_grid, &grid);
  if (cmd_afun->parsed()) return with_engine(cap, run_afun, &afun);
  if (cmd_verify->parsed()) return with_engine(cap, run_verify, &verify);

  if (cmd_sub->parsed()) {
    std::vector<std::uint64_t> amounts;
    try {
      amounts = parse_csv(sub_amounts);
    } catch (const CLI::ParseError& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return kExitUsage;
    }
    auxnim_period_report report{};
    if (auto rc = auxnim_subtraction_period(amounts.data(), amounts.size(),
                                            sub_k, period_max, &report)) {
      return report_error(rc);
    }
    print_period_line("sub{" + join_csv(amounts) + "}+*" +
                          std::to_string(sub_k),
                      report);
    if (dump) {
      std::vector<std::uint64_t> values(period_max + 1);
      if (auto rc = auxnim_subtraction_sequence(
              amounts.data(), amounts.size(), sub_k, period_max,
              values.data())) {
        return report_error(rc);
      }
      print_sequence(values);
    }
    return 0;
  }

  if (cmd_octal->parsed()) {
    auxnim_period_report report{};
    if (auto rc =
            auxnim_octal_period(octal_code.c_str(), period_max, &report)) {
      return report_error(rc);
    }
    print_period_line("octal:" + octal_code, report);
    if (dump) {
      std::vector<std::uint64_t> values(period_max + 1);
      if (auto rc = auxnim_octal_sequence(octal_code.c_str(), period_max,
                                          values.data())) {
        return report_error(rc);
      }
      print_sequence(values);
    }
    return 0;
  }

  if (cmd_star->parsed()) {
    if (star_k_opt->count() == 0 && star_s_opt->count() == 0) {
      std::fprintf(stderr, "error: need --k or --pendants\n");
      return kExitUsage;
    }
    if (star_k_opt->count() && star_k == 0) {
      std::fprintf(stderr, "error: --k must be >= 1\n");
      return kExitUsage;
    }
    const std::uint64_t pendants =
        star_k_opt->count() ? star_k - 1 : star_pendants;
    auxnim_period_report report{};
    if (auto rc = auxnim_starkayles_period(pendants, period_max, &report)) {
      return report_error(rc);
    }
    const std::string desc =
        star_k_opt->count() ? "starkayles:k=" + std::to_string(star_k)
                            : "starkayles:s=" + std::to_string(pendants);
    print_period_line(desc, report, /*with_mod12=*/true);
    if (dump) {
      std::vector<std::uint64_t> values(period_max + 1);
      if (auto rc = auxnim_starkayles_sequence(pendants, period_max,
                                               values.data())) {
        return report_error(rc);
      }
      print_sequence(values);
    }
    return 0;
  }

  if (cmd_ka->parsed()) {
    auxnim_period_report report{};
    if (auto rc = auxnim_kayles_aux_period(ka_k, ka_max, ka_cap, &report)) {
      return report_error(rc);
    }
    print_period_line("kayles+*" + std::to_string(ka_k), report);
    if (ka_dump) {
      std::vector<std::uint64_t> values(ka_max + 1);
      if (auto rc =
              auxnim_kayles_aux_sequence(ka_k, ka_max, ka_cap, values.data())) {
        return report_error(rc);
      }
      print_sequence(values);
    }
    return 0;
  }

  return kExitUsage;
}
