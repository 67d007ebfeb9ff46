#include "ratcat/verify.hpp"

#include "ratcat/errors.hpp"
#include "ratcat/paths.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace ratcat {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  std::chrono::nanoseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start_);
  }

 private:
  Clock::time_point start_ = Clock::now();
};

TheoremReport make_report(const GridShape& shape, CheckId check, BigRational expected,
                          BigRational observed, std::uint64_t count, const Stopwatch& watch,
                          std::optional<std::string> counterexample) {
  const bool pass = expected == observed && !counterexample;
  return TheoremReport{shape,     check, std::move(expected), std::move(observed), pass, count,
                       watch.elapsed(), std::move(counterexample)};
}

}  // namespace

std::string_view to_string(CheckId check) {
  switch (check) {
    case CheckId::kTheorem1: return "theorem1";
    case CheckId::kTheorem2: return "theorem2";
    case CheckId::kTheorem3: return "theorem3";
    case CheckId::kLemma: return "lemma";
    case CheckId::kOrbit: return "orbit";
    case CheckId::kQCatalan: return "qcat";
  }
  return "unknown";
}

CheckId parse_check(std::string_view name) {
  if (name == "1" || name == "theorem1") return CheckId::kTheorem1;
  if (name == "2" || name == "theorem2") return CheckId::kTheorem2;
  if (name == "3" || name == "theorem3") return CheckId::kTheorem3;
  if (name == "lemma") return CheckId::kLemma;
  if (name == "orbit" || name == "orbits") return CheckId::kOrbit;
  if (name == "qcat") return CheckId::kQCatalan;
  throw DomainError("unknown check \"" + std::string(name) +
                    "\" (expected 1, 2, 3, lemma, orbit, qcat or all)");
}

std::vector<CheckId> parse_checks(std::string_view list) {
  if (list == "all") return {kAllChecks.begin(), kAllChecks.end()};
  std::vector<CheckId> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = std::min(list.find(',', start), list.size());
    const std::string_view item = list.substr(start, comma - start);
    if (!item.empty()) {
      const CheckId id = parse_check(item);
      if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    }
    start = comma + 1;
  }
  if (out.empty()) throw DomainError("empty check selection");
  return out;
}

bool TheoremReport::same_result(const TheoremReport& other) const {
  return shape == other.shape && check == other.check && expected == other.expected &&
         observed == other.observed && pass == other.pass &&
         enumerated_count == other.enumerated_count && counterexample == other.counterexample;
}

// --- individual checks -----------------------------------------------------

TheoremReport check_theorem1(const GridShape& shape) {
  Stopwatch watch;
  BigRational total;
  std::uint64_t count = 0;
  std::optional<std::string> bad;
  for (const DyckPath& path : enumerate_dyck(shape)) {
    ++count;
    if (!bad && path.anchor_count() > shape.gcd()) {
      bad = path.word().str() + ": a(p) = " + std::to_string(path.anchor_count()) +
            " exceeds gcd " + std::to_string(shape.gcd());
    }
    total += anchored_weight(path);
  }
  return make_report(shape, CheckId::kTheorem1, c_gen(shape), std::move(total), count, watch,
                     std::move(bad));
}

TheoremReport check_theorem2(const GridShape& shape, NecklaceAlgorithm algorithm) {
  Stopwatch watch;
  BigInt total = 0;
  std::uint64_t count = 0;
  for (const Necklace& neck : enumerate_necklaces(shape, algorithm)) {
    ++count;
    total += necklace_weight(neck);
  }
  return make_report(shape, CheckId::kTheorem2, c_gen(shape), std::move(total), count, watch,
                     std::nullopt);
}

TheoremReport check_theorem3(const GridShape& shape, NecklaceAlgorithm algorithm) {
  Stopwatch watch;
  std::uint64_t marked = 0;
  std::optional<std::string> bad;
  for (const Necklace& neck : enumerate_necklaces(shape, algorithm)) {
    const auto reps = distinguishable_blocks(neck);
    marked += reps.size();
    if (!bad && BigInt(reps.size()) != necklace_weight(neck)) {
      bad = neck.canonical().str() + ": " + std::to_string(reps.size()) +
            " distinguishable blocks but w_N = " + necklace_weight(neck).str();
    }
  }
  return make_report(shape, CheckId::kTheorem3, c_gen(shape), BigInt(marked), marked, watch,
                     std::move(bad));
}

TheoremReport check_lemma(const GridShape& shape) {
  Stopwatch watch;
  std::uint64_t count = 0;
  std::uint64_t agreeing = 0;
  std::optional<std::string> bad;
  for (const DyckPath& path : enumerate_dyck(shape)) {
    ++count;
    const std::size_t shifts = dyck_rotation_shifts(path.word(), shape).size();
    if (shifts == path.anchor_count()) {
      ++agreeing;
    } else if (!bad) {
      bad = path.word().str() + ": " + std::to_string(shifts) + " Dyck rotations but a(p) = " +
            std::to_string(path.anchor_count());
    }
  }
  return make_report(shape, CheckId::kLemma, BigInt(count), BigInt(agreeing), count, watch,
                     std::move(bad));
}

TheoremReport check_orbits(const GridShape& shape, NecklaceAlgorithm algorithm) {
  Stopwatch watch;
  BigInt total = 0;
  std::uint64_t count = 0;
  std::optional<std::string> bad;
  for (const Necklace& neck : enumerate_necklaces(shape, algorithm)) {
    ++count;
    const std::size_t claimed = orbit_size(neck);
    total += claimed;
    std::set<BinaryWord> distinct;
    for (std::size_t d = 0; d < shape.length(); ++d) {
      distinct.insert(rotate(neck.canonical(), static_cast<std::ptrdiff_t>(d)));
    }
    const std::size_t from_symmetry = shape.length() / neck.symmetry_order();
    if (!bad && (distinct.size() != claimed || distinct.size() != from_symmetry)) {
      bad = neck.canonical().str() + ": " + std::to_string(distinct.size()) +
            " distinct rotations, orbit_size " + std::to_string(claimed) + ", (m+n)/r " +
            std::to_string(from_symmetry);
    }
  }
  return make_report(shape, CheckId::kOrbit, binomial(shape.length(), shape.n()), std::move(total),
                     count, watch, std::move(bad));
}

TheoremReport check_qcatalan(const GridShape& shape) {
  Stopwatch watch;
  try {
    const IntPolynomial poly = q_catalan_normalized(shape);
    return make_report(shape, CheckId::kQCatalan, c_gen(shape), poly_eval_at_one(poly),
                       poly.coefficients().size(), watch, std::nullopt);
  } catch (const DivisibilityError& e) {
    return make_report(shape, CheckId::kQCatalan, c_gen(shape), BigInt(0), 0, watch,
                       std::string(e.what()));
  }
}

TheoremReport run_check(CheckId check, const GridShape& shape, NecklaceAlgorithm algorithm) {
  switch (check) {
    case CheckId::kTheorem1: return check_theorem1(shape);
    case CheckId::kTheorem2: return check_theorem2(shape, algorithm);
    case CheckId::kTheorem3: return check_theorem3(shape, algorithm);
    case CheckId::kLemma: return check_lemma(shape);
    case CheckId::kOrbit: return check_orbits(shape, algorithm);
    case CheckId::kQCatalan: return check_qcatalan(shape);
  }
  throw DomainError("unknown check id");
}

// --- harness ---------------------------------------------------------------

std::vector<GridShape> shapes_up_to(std::size_t max_sum) {
  std::vector<GridShape> out;
  for (std::size_t total = 2; total <= max_sum; ++total) {
    for (std::size_t m = 1; m < total; ++m) out.emplace_back(m, total - m);
  }
  return out;
}

bool VerificationRun::pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

VerificationRun run_all(const RunOptions& options) {
  if (options.max_sum < 2) {
    throw DomainError("run_all needs max_sum >= 2, got " + std::to_string(options.max_sum));
  }
  if (options.checks.empty()) throw DomainError("run_all needs at least one check");

  const std::vector<GridShape> shapes = shapes_up_to(options.max_sum);
  const std::size_t per_shape = options.checks.size();
  const std::size_t task_count = shapes.size() * per_shape;

  std::vector<std::optional<TheoremReport>> slots(task_count);
  std::atomic<std::size_t> next_task{0};
  std::atomic<bool> stop{false};
  std::mutex error_mutex;
  std::string first_error;
  const auto deadline = options.time_budget
                            ? std::optional<Clock::time_point>(Clock::now() + *options.time_budget)
                            : std::nullopt;

  auto worker = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      if (deadline && Clock::now() >= *deadline) {
        stop = true;
        std::lock_guard lock(error_mutex);
        if (first_error.empty()) first_error = "time budget exhausted";
        return;
      }
      const std::size_t task = next_task.fetch_add(1);
      if (task >= task_count) return;
      try {
        slots[task] = run_check(options.checks[task % per_shape], shapes[task / per_shape],
                                options.algorithm);
      } catch (const std::exception& e) {
        stop = true;
        std::lock_guard lock(error_mutex);
        if (first_error.empty()) first_error = e.what();
      }
    }
  };

  std::size_t threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, shapes.size()));
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  VerificationRun run{options.max_sum, options.checks, {}};
  run.reports.reserve(task_count);
  for (auto& slot : slots) {
    if (!slot) break;
    run.reports.push_back(std::move(*slot));
  }
  if (run.reports.size() != task_count) {
    const std::size_t done_shapes = run.reports.size() / per_shape;
    run.reports.erase(run.reports.begin() + static_cast<std::ptrdiff_t>(done_shapes * per_shape),
                      run.reports.end());
    throw PartialRunError("verification stopped after " + std::to_string(done_shapes) + " of " +
                              std::to_string(shapes.size()) + " shapes: " + first_error,
                          std::move(run));
  }
  return run;
}

std::string to_json(const TheoremReport& report, bool include_timing) {
  nlohmann::ordered_json j;
  j["m"] = std::to_string(report.shape.m());
  j["n"] = std::to_string(report.shape.n());
  j["check"] = std::string(to_string(report.check));
  j["expected"] = report.expected.str();
  j["observed"] = report.observed.str();
  j["pass"] = report.pass;
  j["count"] = std::to_string(report.enumerated_count);
  if (include_timing) {
    const auto micros =
        std::chrono::duration_cast<std::chrono::microseconds>(report.elapsed).count();
    std::ostringstream ms;
    ms << micros / 1000 << '.' << std::to_string(1000 + micros % 1000).substr(1);
    j["elapsed_ms"] = ms.str();
  }
  if (report.counterexample) j["counterexample"] = *report.counterexample;
  return j.dump();
}

}  // namespace ratcat
