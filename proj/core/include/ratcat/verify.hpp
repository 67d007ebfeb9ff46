#pragma once

#include "ratcat/exactmath.hpp"
#include "ratcat/necklaces.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ratcat {

enum class CheckId {
  kTheorem1,   // sum of anchored weights over Dyck paths == c_gen
  kTheorem2,   // sum of necklace weights == c_gen
  kTheorem3,   // marked necklace count == c_gen, and |distinguishable| == w_N
  kLemma,      // Dyck rotations of each path == a(p)
  kOrbit,      // sum of orbit sizes == binom(m+n, n), each checked by explicit rotation
  kQCatalan,   // normalized q-Catalan divides exactly and evaluates to c_gen at q = 1
};

inline constexpr std::array<CheckId, 6> kAllChecks = {
    CheckId::kTheorem1, CheckId::kTheorem2, CheckId::kTheorem3,
    CheckId::kLemma,    CheckId::kOrbit,    CheckId::kQCatalan,
};

std::string_view to_string(CheckId check);

/// Accepts "1", "2", "3", "theorem1".."theorem3", "lemma", "orbit", "qcat".
CheckId parse_check(std::string_view name);

/// Comma-separated list of check names, or "all".
std::vector<CheckId> parse_checks(std::string_view list);

struct TheoremReport {
  GridShape shape;
  CheckId check;
  BigRational expected;
  BigRational observed;
  bool pass = false;
  std::uint64_t enumerated_count = 0;
  std::chrono::nanoseconds elapsed{0};
  /// First offending object (word, necklace, or error text) on failure.
  std::optional<std::string> counterexample;

  /// Equality on everything except timing.
  bool same_result(const TheoremReport& other) const;
};

TheoremReport check_theorem1(const GridShape& shape);
TheoremReport check_theorem2(const GridShape& shape,
                             NecklaceAlgorithm algorithm = NecklaceAlgorithm::kFilterCanonical);
TheoremReport check_theorem3(const GridShape& shape,
                             NecklaceAlgorithm algorithm = NecklaceAlgorithm::kFilterCanonical);
TheoremReport check_lemma(const GridShape& shape);
TheoremReport check_orbits(const GridShape& shape,
                           NecklaceAlgorithm algorithm = NecklaceAlgorithm::kFilterCanonical);
TheoremReport check_qcatalan(const GridShape& shape);

TheoremReport run_check(CheckId check, const GridShape& shape,
                        NecklaceAlgorithm algorithm = NecklaceAlgorithm::kFilterCanonical);

/// Every shape with m, n >= 1 and m+n <= max_sum, ordered by (m+n, m).
std::vector<GridShape> shapes_up_to(std::size_t max_sum);

struct RunOptions {
  std::size_t max_sum = 14;
  std::vector<CheckId> checks{kAllChecks.begin(), kAllChecks.end()};
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 0;
  /// Workers stop picking up new shapes once this much time has passed.
  std::optional<std::chrono::milliseconds> time_budget;
  NecklaceAlgorithm algorithm = NecklaceAlgorithm::kFilterCanonical;
};

struct VerificationRun {
  std::size_t max_sum = 0;
  std::vector<CheckId> checks;
  /// Sorted by (m+n, m), then by position of the check in `checks`.
  std::vector<TheoremReport> reports;

  bool pass() const;
};

/// Raised by run_all when not every report could be produced. `completed`
/// holds the longest fully finished prefix of the report order.
class PartialRunError : public std::runtime_error {
 public:
  PartialRunError(const std::string& what, VerificationRun completed)
      : std::runtime_error(what), completed_(std::move(completed)) {}

  const VerificationRun& completed() const noexcept { return completed_; }

 private:
  VerificationRun completed_;
};

/// Runs the selected checks over shapes_up_to(max_sum). Shapes are spread
/// across worker threads; the report order does not depend on scheduling.
/// Throws DomainError if max_sum < 2.
VerificationRun run_all(const RunOptions& options);

/// One JSON object on a single line. Numbers are emitted as decimal strings,
/// rationals as "p/q". elapsed_ms is written only when include_timing is set,
/// so that the default output is reproducible byte for byte.
std::string to_json(const TheoremReport& report, bool include_timing = false);

}  // namespace ratcat
