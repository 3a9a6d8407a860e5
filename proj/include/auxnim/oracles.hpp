#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "auxnim/engine.hpp"
#include "auxnim/nimber.hpp"

namespace auxnim {

enum class PredictionKind { Exact, LowerBound, NotApplicable };

/// A closed-form predictor's answer for one position: an exact nimber, a
/// lower bound on it, or not-applicable when the hypotheses fail. Predictors
/// never extrapolate outside their proven domain.
struct Prediction {
  PredictionKind kind = PredictionKind::NotApplicable;
  Nimber value = 0;  // meaningful unless NotApplicable
  const char* source = "";

  static Prediction exact(Nimber v, const char* src) {
    return {PredictionKind::Exact, v, src};
  }
  static Prediction lower_bound(Nimber v, const char* src) {
    return {PredictionKind::LowerBound, v, src};
  }
  static Prediction not_applicable(const char* src = "") {
    return {PredictionKind::NotApplicable, 0, src};
  }
  bool applicable() const { return kind != PredictionKind::NotApplicable; }
};

/// Result of an A-function search: the least auxiliary size from which the
/// nimber hits the position's depth, plus the proven cap that certified the
/// ascending scan's termination.
struct AFunctionRecord {
  std::vector<std::uint64_t> piles;
  std::uint64_t a_value = 0;
  std::uint64_t certified_bound = 0;
};

/// min(complement(b), complement(c)) + 1 — the proven linear cap on A(b,c).
std::uint64_t bound_lemma7(std::uint64_t b, std::uint64_t c);

/// Recursive cap on A(piles): rec(piles) = rec(piles with one largest
/// non-zero pile decremented) + sum(piles), rec(all zero) = 0.
std::uint64_t recursive_bound(std::vector<std::uint64_t> piles);

/// Least a with N(a,b,c) = a+b+c, by ascending scan. Throws std::logic_error
/// if the scan exceeds the proven cap or the three following auxiliary sizes
/// fail to stay at the depth (both would signal an engine bug).
AFunctionRecord compute_a2(Engine& engine, std::uint64_t b, std::uint64_t c);

/// n-pile analogue, capped by recursive_bound(piles).
AFunctionRecord compute_an(Engine& engine, std::vector<std::uint64_t> piles);

/// True iff the nimber of (aux, piles) equals aux: the piles xor to zero and
/// 2^(floor(log2 aux)+1) divides every pile. At aux = 0 the divisor
/// degenerates to 1 and the condition reduces to xor = 0.
bool predict_theorem1(std::uint64_t aux, std::span<const std::uint64_t> piles);

/// Piecewise characterization when b and c share the same power-of-two
/// block: b = 2^i + k, c = 2^i + l with k < l < 2^i after sorting. Equal
/// offsets (k == l) fall outside this predictor and yield NotApplicable;
/// piles from different blocks violate the precondition.
Prediction predict_same_char(Engine& engine, std::uint64_t a, std::uint64_t b,
                             std::uint64_t c);

/// Exact gap-indexed value when one pile is a power of two 2^i, the other is
/// (2k+1)*2^i + r with r < 2^i, and a < 2^i - r: the (a+1)-st gap in b^c.
Prediction predict_power_block(std::uint64_t a, std::uint64_t b,
                               std::uint64_t c);

/// For b odd and c at or above the threshold, N(1,[b,c]) = 1 + b + c.
Prediction predict_oddb(std::uint64_t b, std::uint64_t c);

/// 2^(2*floor(log2 b)+1) - 2^(floor(log2 b)+2) - 1, clamped at 0.
std::uint64_t theorem4_threshold(std::uint64_t b);

/// Gap-count upper bound on A(b,c) when b = 2^i + k, c = 2^j + l with j > i
/// and every set bit of b also set in c. The Exact value carried is a bound
/// on A, not a nimber.
Prediction bound_lemma8(std::uint64_t b, std::uint64_t c);

/// A(2^i+x, 2^i+y) = 2^i - max(x,y) when both piles sit in the same block.
/// The Exact value carried is the A-function value.
Prediction predict_lemma9(std::uint64_t b, std::uint64_t c);

/// Whether the engine satisfies the add-2^i shift law at (a,b,c):
/// N(a,b,c) < 2^i implies N(a,b+2^i,c+2^i) = N(a,b,c), and otherwise
/// N(a,b+2^i,c+2^i) >= N(a,b,c). Requires b,c < 2^i.
bool check_lemma10(Engine& engine, std::uint64_t a, std::uint64_t b,
                   std::uint64_t c, std::uint32_t i);

/// A(b,c) <= 1 when b = (2^i - 1) + n*2^i with n > 0, i > 0, and
/// (n*2^i) ^ c == n*2^i + c. The Exact value carried is the bound 1.
Prediction check_lemma11(std::uint64_t b, std::uint64_t c);

/// For b, c both even (>= 2): returns whether A(b,c) != 1, which must always
/// hold.
bool check_lemma12(Engine& engine, std::uint64_t b, std::uint64_t c);

/// A(piles) >= min over single-pile decrements of A. All piles must be >= 1.
bool check_recursive_lower_bound(Engine& engine,
                                 std::span<const std::uint64_t> piles);

struct Counterexample {
  std::string input;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t checked = 0;  // tuples actually verified (skips not counted)
  std::vector<Counterexample> counterexamples;
  bool pass() const { return counterexamples.empty(); }
};

struct VerifyOptions {
  /// Primary range bound of the suite; 0 selects the suite's default.
  std::uint64_t max_value = 0;
};

std::vector<std::string> suite_names();

/// Exhaustively confronts one named predictor/property with the engine over
/// its range. Unknown names raise std::invalid_argument. Checks run in
/// lexicographic input order, so reports are deterministic.
VerificationReport verify_suite(Engine& engine, std::string_view suite,
                                const VerifyOptions& options = {});

/// One line per counterexample, `SUITE FAIL input=<tuple> expected=<v>
/// got=<v>`, then the summary line `SUITE <name> <pass|fail>
/// checked=<count>`.
std::string render_report(const VerificationReport& report);

}  // namespace auxnim
