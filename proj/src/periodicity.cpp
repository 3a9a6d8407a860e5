#include "auxnim/periodicity.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace auxnim {

SubtractionSet SubtractionSet::make(std::vector<std::uint64_t> amounts) {
  if (amounts.empty()) {
    throw std::invalid_argument("subtraction set must be non-empty");
  }
  std::sort(amounts.begin(), amounts.end());
  amounts.erase(std::unique(amounts.begin(), amounts.end()), amounts.end());
  if (amounts.front() < 1) {
    throw std::invalid_argument("subtraction amounts must be >= 1");
  }
  return SubtractionSet{std::move(amounts)};
}

AuxTable subtraction_aux_table(const SubtractionSet& s, std::uint64_t k,
                               std::uint64_t max_n) {
  AuxTable table(max_n + 1, std::vector<Nimber>(k + 1, 0));
  std::vector<Nimber> succ;
  for (std::uint64_t n = 0; n <= max_n; ++n) {
    for (std::uint64_t y = 0; y <= k; ++y) {
      succ.clear();
      for (std::uint64_t amount : s.amounts) {
        if (amount > n) break;  // amounts sorted ascending
        succ.push_back(table[n - amount][y]);
      }
      for (std::uint64_t y2 = 0; y2 < y; ++y2) {
        succ.push_back(table[n][y2]);
        for (std::uint64_t amount : s.amounts) {
          if (amount > n) break;
          succ.push_back(table[n - amount][y2]);
        }
      }
      table[n][y] = mex(succ);
    }
  }
  return table;
}

PeriodReport detect_period_columns(const AuxTable& table, std::uint64_t m) {
  if (table.empty() || m == 0) {
    throw std::invalid_argument("need a non-empty table and m >= 1");
  }
  const std::uint64_t max_n = table.size() - 1;

  for (std::uint64_t n0 = 0; n0 <= max_n; ++n0) {
    for (std::uint64_t p = 1; n0 + p + m - 1 <= max_n; ++p) {
      bool match = true;
      for (std::uint64_t w = 0; w < m && match; ++w) {
        match = table[n0 + w] == table[n0 + p + w];
      }
      if (!match) continue;
      // Every column is determined by the previous m columns, so the match
      // propagates to the whole computed table.
      for (std::uint64_t n = n0; n + p <= max_n; ++n) {
        assert(table[n] == table[n + p]);
      }
      PeriodReport report;
      report.preperiod = n0;
      report.period = p;
      report.certified = true;
      report.window_lo = n0;
      report.window_hi = max_n - p;
      report.max_n = max_n;
      return report;
    }
  }

  // Nothing certifiable in range; fall back to an empirical candidate over
  // per-column digests.
  std::vector<Nimber> digest;
  digest.reserve(table.size());
  for (const auto& column : table) {
    // Columns compare equal iff their digests do (values are small).
    Nimber h = 0;
    for (Nimber v : column) h = h * 1315423911ull + v + 1;
    digest.push_back(h);
  }
  PeriodReport report = empirical_period(digest, m);
  report.max_n = max_n;
  return report;
}

OctalCode OctalCode::parse(std::string_view text) {
  std::string_view rest = text;
  if (!rest.empty() && rest.front() == '0') rest.remove_prefix(1);
  if (rest.empty() || rest.front() != '.') {
    throw std::invalid_argument("octal code must look like 0.77");
  }
  rest.remove_prefix(1);
  if (rest.empty()) {
    throw std::invalid_argument("octal code needs at least one digit");
  }
  OctalCode code;
  for (char ch : rest) {
    if (ch < '0' || ch > '7') {
      throw std::invalid_argument(std::string("bad octal digit '") + ch + "'");
    }
    code.digits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  if (code.digits.back() == 0) {
    throw std::invalid_argument("octal code must not end in 0");
  }
  return code;
}

std::string OctalCode::to_string() const {
  std::string out = "0.";
  for (std::uint8_t d : digits) out += static_cast<char>('0' + d);
  return out;
}

std::vector<Nimber> octal_sg(const OctalCode& code, std::uint64_t max_n) {
  std::vector<Nimber> values(max_n + 1, 0);
  std::vector<Nimber> succ;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    succ.clear();
    for (std::uint64_t t = 1; t <= code.digits.size() && t <= n; ++t) {
      const std::uint8_t d = code.digits[t - 1];
      if (!d) continue;
      if ((d & 1) && n == t) succ.push_back(0);
      if ((d & 2) && n - t >= 1) succ.push_back(values[n - t]);
      if ((d & 4) && n - t >= 2) {
        for (std::uint64_t a = 1; a <= (n - t) / 2; ++a) {
          succ.push_back(values[a] ^ values[n - t - a]);
        }
      }
    }
    values[n] = mex(succ);
  }
  return values;
}

PeriodReport certify_octal_period(const OctalCode& code,
                                  std::span<const Nimber> values) {
  if (values.empty()) throw std::invalid_argument("need computed values");
  const std::uint64_t k = code.bound();
  const std::uint64_t max_n = values.size() - 1;

  for (std::uint64_t n0 = 0; n0 <= max_n; ++n0) {
    for (std::uint64_t p = 1;; ++p) {
      const std::uint64_t window_hi = 2 * n0 + p + k;
      if (window_hi + p > max_n) break;
      bool match = true;
      for (std::uint64_t n = n0; n <= window_hi && match; ++n) {
        match = values[n] == values[n + p];
      }
      if (!match) continue;
      PeriodReport report;
      report.preperiod = n0;
      report.period = p;
      report.certified = true;
      report.window_lo = n0;
      report.window_hi = window_hi;
      report.max_n = max_n;
      return report;
    }
  }

  PeriodReport report = empirical_period(values, k);
  report.max_n = max_n;
  return report;
}

PeriodReport empirical_period(std::span<const Nimber> values,
                              std::uint64_t slack) {
  PeriodReport best;
  if (values.empty()) return best;
  const std::uint64_t max_n = values.size() - 1;
  best.max_n = max_n;

  bool found = false;
  for (std::uint64_t p = 1; p <= max_n; ++p) {
    // Least n0 from which the suffix matches with period p.
    std::uint64_t n0 = 0;
    for (std::uint64_t n = max_n - p + 1; n-- > 0;) {
      if (values[n] != values[n + p]) {
        n0 = n + 1;
        break;
      }
    }
    if (n0 + p > max_n) continue;  // no verified span at all
    const std::uint64_t span = max_n - p - n0 + 1;
    if (span < 3 * p + slack) continue;
    if (!found || n0 < best.preperiod ||
        (n0 == best.preperiod && p < best.period)) {
      found = true;
      best.preperiod = n0;
      best.period = p;
      best.window_lo = n0;
      best.window_hi = max_n - p;
    }
  }
  best.certified = false;
  return best;
}

std::string render_period_line(std::string_view game_desc,
                               const PeriodReport& report) {
  std::ostringstream out;
  out << "game=" << game_desc << " n0=" << report.preperiod
      << " p=" << report.period
      << " certified=" << (report.certified ? "true" : "false")
      << " window=[" << report.window_lo << ',' << report.window_hi << ']'
      << " max_n=" << report.max_n;
  return out.str();
}

}  // namespace auxnim
