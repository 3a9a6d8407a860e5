#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "auxnim/periodicity.hpp"

using namespace auxnim;

namespace {

// Independent plain subtraction-game DP used as the row-0 oracle.
std::vector<Nimber> plain_subtraction(const std::vector<std::uint64_t>& s,
                                      std::uint64_t max_n) {
  std::vector<Nimber> g(max_n + 1, 0);
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    std::vector<bool> seen(s.size() + 1, false);
    for (std::uint64_t amount : s) {
      if (amount > n) continue;
      const Nimber v = g[n - amount];
      if (v < seen.size()) seen[v] = true;
    }
    Nimber v = 0;
    while (seen[v]) ++v;
    g[n] = v;
  }
  return g;
}

}  // namespace

TEST_CASE("subtraction set validation") {
  CHECK_THROWS_AS(SubtractionSet::make({}), std::invalid_argument);
  CHECK_THROWS_AS(SubtractionSet::make({0, 1}), std::invalid_argument);
  const auto s = SubtractionSet::make({2, 1, 2});
  CHECK(s.amounts == std::vector<std::uint64_t>{1, 2});
  CHECK(s.max_amount() == 2);
}

TEST_CASE("classic subtraction rows") {
  const auto t12 = subtraction_aux_table(SubtractionSet::make({1, 2}), 0, 50);
  for (std::uint64_t n = 0; n <= 50; ++n) CHECK(t12[n][0] == n % 3);

  const auto t1 = subtraction_aux_table(SubtractionSet::make({1}), 0, 50);
  for (std::uint64_t n = 0; n <= 50; ++n) CHECK(t1[n][0] == n % 2);
}

TEST_CASE("row 0 equals the plain subtraction sequence") {
  for (const auto& s : {std::vector<std::uint64_t>{1, 2},
                        std::vector<std::uint64_t>{2, 5},
                        std::vector<std::uint64_t>{1, 3, 4},
                        std::vector<std::uint64_t>{3}}) {
    const auto expected = plain_subtraction(s, 120);
    const auto table = subtraction_aux_table(SubtractionSet::make(s), 2, 120);
    for (std::uint64_t n = 0; n <= 120; ++n) {
      CAPTURE(n);
      CHECK(table[n][0] == expected[n]);
    }
  }
}

TEST_CASE("compound values respect the move-count ceiling") {
  const auto s = SubtractionSet::make({1, 2, 5});
  const std::uint64_t m = s.max_amount();
  for (std::uint64_t k = 0; k <= 3; ++k) {
    const auto table = subtraction_aux_table(s, k, 80);
    for (const auto& column : table) {
      for (Nimber v : column) CHECK(v <= (k + 1) * (m + 1) - 1);
    }
  }
}

TEST_CASE("column detection certifies the classic games") {
  const auto t12 = subtraction_aux_table(SubtractionSet::make({1, 2}), 0, 60);
  const auto r12 = detect_period_columns(t12, 2);
  CHECK(r12.certified);
  CHECK(r12.preperiod == 0);
  CHECK(r12.period == 3);

  const auto t1 = subtraction_aux_table(SubtractionSet::make({1}), 0, 60);
  const auto r1 = detect_period_columns(t1, 1);
  CHECK(r1.certified);
  CHECK(r1.preperiod == 0);
  CHECK(r1.period == 2);
}

TEST_CASE("compound detection and explicit determination check") {
  const auto s = SubtractionSet::make({1, 2});
  const auto table = subtraction_aux_table(s, 1, 100);
  const auto report = detect_period_columns(table, s.max_amount());
  CHECK(report.certified);
  CHECK(report.period >= 1);
  for (std::uint64_t n = report.preperiod; n + report.period <= 100; ++n) {
    CHECK(table[n] == table[n + report.period]);
  }
}

TEST_CASE("octal code parsing") {
  CHECK(OctalCode::parse("0.77").digits ==
        std::vector<std::uint8_t>{7, 7});
  CHECK(OctalCode::parse(".137").digits ==
        std::vector<std::uint8_t>{1, 3, 7});
  CHECK(OctalCode::parse("0.77").to_string() == "0.77");
  CHECK(OctalCode::parse("0.77").bound() == 2);
  CHECK_THROWS_AS(OctalCode::parse("077"), std::invalid_argument);
  CHECK_THROWS_AS(OctalCode::parse("0."), std::invalid_argument);
  CHECK_THROWS_AS(OctalCode::parse("0.78"), std::invalid_argument);
  CHECK_THROWS_AS(OctalCode::parse("0.70"), std::invalid_argument);
}

TEST_CASE("octal games start at zero") {
  for (const char* code : {"0.77", "0.33", "0.137"}) {
    CHECK(octal_sg(OctalCode::parse(code), 5)[0] == 0);
  }
}

TEST_CASE("a subtraction set encoded octally gives the same sequence") {
  struct Case {
    const char* code;
    std::vector<std::uint64_t> amounts;
  };
  for (const auto& c : {Case{"0.33", {1, 2}}, Case{"0.303", {1, 3}},
                        Case{"0.03303", {2, 3, 5}}}) {
    const auto octal = octal_sg(OctalCode::parse(c.code), 150);
    const auto table =
        subtraction_aux_table(SubtractionSet::make(c.amounts), 0, 150);
    for (std::uint64_t n = 0; n <= 150; ++n) {
      CAPTURE(c.code);
      CAPTURE(n);
      CHECK(octal[n] == table[n][0]);
    }
  }
}

TEST_CASE("certification windows") {
  const auto code33 = OctalCode::parse("0.33");
  const auto r33 = certify_octal_period(code33, octal_sg(code33, 100));
  CHECK(r33.certified);
  CHECK(r33.preperiod == 0);
  CHECK(r33.period == 3);

  const auto code77 = OctalCode::parse("0.77");
  const auto r77 = certify_octal_period(code77, octal_sg(code77, 200));
  CHECK(r77.certified);
  CHECK(r77.period == 12);
  CHECK(r77.window_hi == 2 * r77.preperiod + r77.period + 2);
  CHECK(r77.window_hi + r77.period <= 200);

  // A constant sequence certifies immediately with period 1.
  const std::vector<Nimber> zeros(50, 0);
  const auto rz = certify_octal_period(code77, zeros);
  CHECK(rz.certified);
  CHECK(rz.preperiod == 0);
  CHECK(rz.period == 1);
}

TEST_CASE("an uncertifiable prefix falls back to an empirical candidate") {
  // Strictly increasing values can never match a window.
  std::vector<Nimber> ramp(40);
  for (std::size_t i = 0; i < ramp.size(); ++i) ramp[i] = i;
  const auto r = certify_octal_period(OctalCode::parse("0.77"), ramp);
  CHECK(!r.certified);
  CHECK(r.period == 0);  // no empirical candidate either
}

TEST_CASE("empirical detection policy") {
  // 0,1,0,1,... with one early exception.
  std::vector<Nimber> values(40, 0);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = i % 2;
  values[3] = 7;
  const auto r = empirical_period(values, 1);
  CHECK(!r.certified);
  CHECK(r.preperiod == 4);
  CHECK(r.period == 2);
  CHECK(r.window_lo == 4);
  CHECK(r.window_hi == 37);
  CHECK(empirical_period(std::vector<Nimber>(20, 5), 0).period == 1);
}

TEST_CASE("period line rendering") {
  PeriodReport r;
  r.preperiod = 2;
  r.period = 3;
  r.certified = true;
  r.window_lo = 2;
  r.window_hi = 57;
  r.max_n = 60;
  CHECK(render_period_line("sub{1,2}+*0", r) ==
        "game=sub{1,2}+*0 n0=2 p=3 certified=true window=[2,57] max_n=60");
}
