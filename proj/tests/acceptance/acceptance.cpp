// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "cli.hpp"
#include "oracles.hpp"

#include "ratcat/exactmath.hpp"
#include "ratcat/necklaces.hpp"
#include "ratcat/paths.hpp"
#include "ratcat/render.hpp"
#include "ratcat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace ratcat;
using Clock = std::chrono::steady_clock;

namespace {

// Every constant below is a pinned threshold.
constexpr std::size_t kTheoremMaxSum = 18;
constexpr std::size_t kLemmaMaxSum = 14;
constexpr std::size_t kOrbitMaxSum = 16;
constexpr std::size_t kCoprimeMaxSum = 16;
constexpr std::size_t kQCatalanMaxSum = 16;
constexpr std::size_t kBoothMaxLength = 14;
constexpr std::size_t kFastNecklaceMaxSum = 14;
constexpr double kFigureSeconds = 1.0;
constexpr double kTheoremSweepSeconds = 120.0;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

// Runs the checks over every shape up to max_sum and reports the first failure.
Outcome sweep(std::size_t max_sum, std::vector<CheckId> checks) {
  RunOptions opts;
  opts.max_sum = max_sum;
  opts.checks = std::move(checks);
  const VerificationRun run = run_all(opts);
  Outcome out;
  out.require(run.reports.size() == shapes_up_to(max_sum).size() * opts.checks.size(),
              "missing reports");
  for (const auto& r : run.reports) {
    out.require(r.pass, to_json(r));
  }
  if (out.pass) out.detail = std::to_string(run.reports.size()) + " reports";
  return out;
}

std::string run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ratcat");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return std::to_string(code) + "\n" + out.str();
}

Outcome figure_example() {
  Outcome out;
  const GridShape shape(3, 3);
  out.require(c_gen(shape) == 10, "c_gen(3,3) != 10");

  std::vector<std::string> wn;
  std::map<std::string, std::size_t> marks_per_class;
  for (const Necklace& neck : enumerate_necklaces(shape)) {
    wn.push_back(necklace_weight(neck).str());
    marks_per_class[neck.canonical().str()] = 0;
  }
  std::sort(wn.begin(), wn.end());
  out.require(wn == std::vector<std::string>{"1", "3", "3", "3"}, "w_N multiset");

  std::vector<BigRational> wp;
  for (const DyckPath& p : enumerate_dyck(shape)) wp.push_back(anchored_weight(p));
  std::sort(wp.begin(), wp.end());
  const BigRational three_halves(BigInt(3), BigInt(2));
  out.require(wp == std::vector<BigRational>{1, three_halves, three_halves, 3, 3}, "w_P multiset");

  std::size_t marked = 0;
  for (const MarkedNecklace& mk : enumerate_marked(shape)) {
    ++marked;
    ++marks_per_class[mk.necklace.canonical().str()];
  }
  out.require(marked == 10, "marked count");
  for (const auto& [word, count] : marks_per_class) {
    out.require(count == (word == "URURUR" ? 1u : 3u), "marks on " + word);
  }
  return out;
}

Outcome coprime_counts() {
  Outcome out;
  std::size_t shapes = 0;
  for (const GridShape& s : shapes_up_to(kCoprimeMaxSum)) {
    if (s.gcd() != 1) continue;
    ++shapes;
    std::uint64_t count = 0;
    for (auto it = enumerate_dyck(s); it.next();) ++count;
    out.require(BigInt(count) * s.length() == binomial(s.length(), s.n()),
                "Dyck count on (" + std::to_string(s.m()) + "," + std::to_string(s.n()) + ")");
  }
  if (out.pass) out.detail = std::to_string(shapes) + " coprime shapes";
  return out;
}

Outcome q_catalan() {
  Outcome out = sweep(kQCatalanMaxSum, {CheckId::kQCatalan});
  const auto numerator =
      oracle::mul(oracle::q_int(2), oracle::q_binomial_by_inversions(4, 2));
  const auto [quot, rem] = oracle::long_divide(numerator, oracle::q_int(4));
  out.require(rem.empty() && quot == oracle::Poly{1, 1, 1}, "oracle (2,2) quotient");
  out.require(q_catalan_normalized(GridShape(2, 2)) == IntPolynomial{1, 1, 1},
              "library (2,2) coefficients");
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  std::uint64_t words = 0;
  for (std::size_t len = 1; len <= kBoothMaxLength; ++len) {
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      std::vector<Letter> letters(len);
      std::string plain(len, 'U');
      for (std::size_t i = 0; i < len; ++i) {
        if ((bits >> i) & 1u) {
          letters[i] = Letter::R;
          plain[i] = 'R';
        }
      }
      ++words;
      out.require(canonical_rotation(BinaryWord(letters)).str() == oracle::min_rotation(plain),
                  "Booth vs naive on " + plain);
    }
  }
  for (const GridShape& s : shapes_up_to(kFastNecklaceMaxSum)) {
    auto base = enumerate_necklaces(s, NecklaceAlgorithm::kFilterCanonical);
    auto fast = enumerate_necklaces(s, NecklaceAlgorithm::kFixedContent);
    while (true) {
      auto a = base.next();
      auto b = fast.next();
      if (!a && !b) break;
      out.require(a && b && *a == *b, "fixed-content generator diverges");
      if (!(a && b)) break;
    }
  }
  if (out.pass) out.detail = std::to_string(words) + " words";
  return out;
}

Outcome determinism() {
  Outcome out;
  const std::vector<std::vector<std::string>> commands = {
      {"verify", "--max-sum", "12"},
      {"verify", "--max-sum", "10", "--threads", "3", "--format", "text"},
      {"render", "gallery", "3", "3"},
      {"render", "gallery", "4", "4"},
      {"render", "path", "URUURR"},
      {"render", "path", "UURURRR", "3", "4"},
      {"render", "necklace", "UURRUR", "--mark", "2"},
      {"render", "necklace", "UR"},
  };
  for (const auto& cmd : commands) {
    const std::string first = run_cli(cmd);
    out.require(first.rfind("0\n", 0) == 0, "command failed: " + cmd[0] + " " + cmd[1]);
    out.require(run_cli(cmd) == first, "output differs between runs: " + cmd[0] + " " + cmd[1]);
  }
  // thread count must not change verify output
  out.require(run_cli({"verify", "--max-sum", "11", "--threads", "1"}) ==
                  run_cli({"verify", "--max-sum", "11", "--threads", "4"}),
              "verify output depends on thread count");
  return out;
}

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> body;
  double max_seconds = 0;  // 0: no runtime bound
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Figure-5 reproduction on (3,3)", figure_example, kFigureSeconds},
      {2, "Theorem 1 (anchored weights), m+n <= 18",
       [] { return sweep(kTheoremMaxSum, {CheckId::kTheorem1}); }, kTheoremSweepSeconds},
      {3, "Theorem 2 (necklace weights), m+n <= 18",
       [] { return sweep(kTheoremMaxSum, {CheckId::kTheorem2}); }},
      {4, "Theorem 3 (marked necklaces, |distinguishable| = w_N), m+n <= 18",
       [] { return sweep(kTheoremMaxSum, {CheckId::kTheorem3}); }},
      {5, "Dyck rotations equal a(p), m+n <= 14",
       [] { return sweep(kLemmaMaxSum, {CheckId::kLemma}); }},
      {6, "orbit identity with explicit rotation counts, m+n <= 16",
       [] { return sweep(kOrbitMaxSum, {CheckId::kOrbit}); }},
      {7, "coprime Dyck count binom(m+n,n)/(m+n), m+n <= 16", coprime_counts},
      {8, "normalized q-Catalan exact division and value c_gen, m+n <= 16", q_catalan},
      {9, "Booth vs naive (len <= 14), fixed-content vs filter (m+n <= 14)", oracle_equivalence},
      {10, "byte-identical verify and render output", determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.max_seconds > 0 && seconds >= c.max_seconds) {
      outcome.require(false, "took " + std::to_string(seconds) + " s, bound " +
                                 std::to_string(c.max_seconds) + " s");
    }
    if (!outcome.pass) ++failures;
    std::printf("%s [%2d] %s (%.3f s)%s%s\n", outcome.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                seconds, outcome.detail.empty() ? "" : ": ", outcome.detail.c_str());
  }
  std::printf("%s: %zu criteria, %d failed\n", failures ? "FAILED" : "ALL PASS", criteria.size(),
              failures);
  return failures ? 1 : 0;
}
