#include "ratcat/necklaces.hpp"

#include "ratcat/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ratcat {

std::size_t least_rotation(const BinaryWord& word) {
  if (word.empty()) throw DomainError("least_rotation of an empty word");
  const std::size_t len = word.size();
  auto at = [&](std::size_t i) { return word[i % len]; };

  // Booth: failure function over the doubled word, k = best start so far.
  std::vector<std::ptrdiff_t> fail(2 * len, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * len; ++j) {
    const Letter sj = at(j);
    std::ptrdiff_t i = fail[j - k - 1];
    while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
      i = fail[static_cast<std::size_t>(i)];
    }
    if (sj != at(k + static_cast<std::size_t>(i + 1))) {
      // i == -1 here
      if (sj < at(k)) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k % len;
}

BinaryWord canonical_rotation(const BinaryWord& word) {
  if (word.empty()) throw DomainError("canonical_rotation of an empty word");
  return rotate(word, static_cast<std::ptrdiff_t>(least_rotation(word)));
}

std::size_t minimal_period(const BinaryWord& word) {
  if (word.empty()) throw DomainError("minimal_period of an empty word");
  // Prefix function: the shortest border-free period q = len - border is a
  // rotation period exactly when it divides the length.
  const std::size_t len = word.size();
  std::vector<std::size_t> border(len, 0);
  for (std::size_t i = 1; i < len; ++i) {
    std::size_t b = border[i - 1];
    while (b > 0 && word[i] != word[b]) b = border[b - 1];
    if (word[i] == word[b]) ++b;
    border[i] = b;
  }
  const std::size_t q = len - border[len - 1];
  return len % q == 0 ? q : len;
}

// --- Necklace --------------------------------------------------------------

Necklace Necklace::of(const BinaryWord& word) {
  const std::size_t us = word.count(Letter::U);
  return Necklace(word, GridShape(us, word.size() - us));
}

Necklace::Necklace(const BinaryWord& word, const GridShape& shape)
    : canonical_(), shape_(shape), period_(0) {
  const std::size_t us = word.count(Letter::U);
  if (us != shape.m() || word.size() - us != shape.n()) {
    std::ostringstream os;
    os << "word " << word << " does not have type " << shape;
    throw ShapeMismatch(os.str());
  }
  canonical_ = canonical_rotation(word);
  period_ = minimal_period(canonical_);
  if (period_ % shape_.block_length() != 0) {
    std::ostringstream os;
    os << "necklace " << canonical_ << ": period " << period_ << " is not a multiple of "
       << shape_.block_length();
    throw InvariantViolation(os.str());
  }
}

BigInt necklace_weight(const Necklace& neck) {
  const std::size_t g = neck.shape().gcd();
  const std::size_t r = neck.symmetry_order();
  if (g % r != 0) {
    std::ostringstream os;
    os << "necklace " << neck.canonical() << ": gcd " << g << " not divisible by r = " << r;
    throw InvariantViolation(os.str());
  }
  return BigInt(g / r);
}

std::size_t orbit_size(const Necklace& neck) { return neck.period(); }

BlockDecomposition blocks(const Necklace& neck) {
  const std::size_t g = neck.shape().block_length();
  const auto letters = neck.canonical().letters();
  BlockDecomposition out{g, {}};
  out.blocks.reserve(neck.shape().gcd());
  for (std::size_t start = 0; start < letters.size(); start += g) {
    out.blocks.emplace_back(std::vector<Letter>(letters.begin() + static_cast<std::ptrdiff_t>(start),
                                                letters.begin() + static_cast<std::ptrdiff_t>(start + g)));
  }
  return out;
}

std::vector<std::size_t> distinguishable_blocks(const Necklace& neck) {
  const std::size_t count = neck.shape().gcd();
  const std::size_t step = neck.period() / neck.shape().block_length();
  std::vector<bool> seen(count, false);
  std::vector<std::size_t> reps;
  for (std::size_t j = 0; j < count; ++j) {
    if (seen[j]) continue;
    reps.push_back(j);
    for (std::size_t k = j; !seen[k]; k = (k + step) % count) seen[k] = true;
  }
  return reps;
}

// --- enumeration -----------------------------------------------------------

namespace {

Stream<Necklace> filter_canonical(const GridShape& shape) {
  return Stream<Necklace>([shape, words = enumerate_words(shape)]() mutable -> std::optional<Necklace> {
    while (auto word = words.next()) {
      if (canonical_rotation(*word) == *word) {
        return Necklace(*word, shape);
      }
    }
    return std::nullopt;
  });
}

// Fruskey-Kasami-Miller prenecklace generation for the binary alphabet, run as
// an explicit depth-first search so it can be pulled lazily. Position t (1-based)
// either copies a[t-p] (keeping the Lyndon period p) or, when a[t-p] is U,
// takes R and resets p = t. Branches that would exceed m U's or n R's are cut.
// Prenecklaces come out in lexicographic order; the full-length ones with
// length % p == 0 are exactly the necklaces.
class FixedContentNecklaces {
 public:
  explicit FixedContentNecklaces(const GridShape& shape)
      : shape_(shape),
        len_(shape.length()),
        a_(len_ + 1, Letter::U),
        p_(len_ + 1, 1),
        choice_(len_ + 1, -1) {}

  std::optional<Necklace> operator()() {
    if (done_) return std::nullopt;
    if (!started_) {
      started_ = true;
      if (descend()) {
        if (auto n = emit_if_necklace()) return n;
      }
    }
    while (backtrack()) {
      if (!descend()) continue;
      if (auto n = emit_if_necklace()) return n;
    }
    done_ = true;
    return std::nullopt;
  }

 private:
  // Places choice c at position t on top of positions 1..t-1.
  bool place(std::size_t t, int c) {
    const std::size_t parent_p = p_[t - 1];
    const Letter copied = a_[t - parent_p];
    Letter letter;
    std::size_t p;
    if (c == 0) {
      letter = copied;
      p = parent_p;
    } else {
      if (copied != Letter::U) return false;
      letter = Letter::R;
      p = t;
    }
    if (letter == Letter::U ? us_ == shape_.m() : rs_ == shape_.n()) return false;
    (letter == Letter::U ? us_ : rs_) += 1;
    a_[t] = letter;
    p_[t] = p;
    choice_[t] = c;
    return true;
  }

  void unplace(std::size_t t) {
    (a_[t] == Letter::U ? us_ : rs_) -= 1;
    choice_[t] = -1;
  }

  // Fills positions depth_+1.. with the first feasible choices. On a dead end,
  // backtracks and retries; false once the search space is exhausted.
  bool descend() {
    while (depth_ < len_) {
      const std::size_t t = depth_ + 1;
      if (place(t, 0) || place(t, 1)) {
        depth_ = t;
        continue;
      }
      if (!backtrack()) return false;
    }
    return true;
  }

  // Moves to the next sibling of the deepest position that has one, leaving
  // depth_ at that position. False when no sibling remains anywhere.
  bool backtrack() {
    while (depth_ > 0) {
      const std::size_t t = depth_;
      const int c = choice_[t];
      unplace(t);
      if (c == 0 && place(t, 1)) return true;
      --depth_;
    }
    done_ = true;
    return false;
  }

  std::optional<Necklace> emit_if_necklace() const {
    if (len_ % p_[len_] != 0) return std::nullopt;
    return Necklace(BinaryWord(std::vector<Letter>(a_.begin() + 1, a_.end())), shape_);
  }

  GridShape shape_;
  std::size_t len_;
  std::vector<Letter> a_;  // a_[0] is a U sentinel
  std::vector<std::size_t> p_;
  std::vector<int> choice_;
  std::size_t depth_ = 0;
  std::size_t us_ = 0;
  std::size_t rs_ = 0;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace

Stream<Necklace> enumerate_necklaces(const GridShape& shape, NecklaceAlgorithm algorithm) {
  if (algorithm == NecklaceAlgorithm::kFixedContent) {
    return Stream<Necklace>(FixedContentNecklaces(shape));
  }
  return filter_canonical(shape);
}

Stream<MarkedNecklace> enumerate_marked(const GridShape& shape, NecklaceAlgorithm algorithm) {
  struct State {
    Stream<Necklace> necklaces;
    std::optional<Necklace> current;
    std::vector<std::size_t> marks;
    std::size_t next_mark = 0;
  };
  return Stream<MarkedNecklace>(
      [state = State{enumerate_necklaces(shape, algorithm), std::nullopt, {}, 0}]() mutable
      -> std::optional<MarkedNecklace> {
        while (!state.current || state.next_mark == state.marks.size()) {
          state.current = state.necklaces.next();
          if (!state.current) return std::nullopt;
          state.marks = distinguishable_blocks(*state.current);
          state.next_mark = 0;
        }
        return MarkedNecklace{*state.current, state.marks[state.next_mark++]};
      });
}

}  // namespace ratcat
