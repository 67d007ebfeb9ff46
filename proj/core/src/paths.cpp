#include "ratcat/paths.hpp"

#include "ratcat/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace ratcat {

namespace {

constexpr std::string_view kWhiteBead = "∘";
constexpr std::string_view kBlackBead = "•";

void require_shape(const BinaryWord& word, const GridShape& shape) {
  const std::size_t us = word.count(Letter::U);
  const std::size_t rs = word.size() - us;
  if (us != shape.m() || rs != shape.n()) {
    std::ostringstream os;
    os << "word " << word << " has " << us << " U and " << rs << " R, shape " << shape
       << " needs " << shape.m() << " U and " << shape.n() << " R";
    throw ShapeMismatch(os.str());
  }
}

// Assumes matching letter counts.
bool stays_above(std::span<const Letter> letters, const GridShape& shape) {
  std::size_t x = 0;
  std::size_t y = 0;
  for (Letter l : letters) {
    if (l == Letter::U) {
      ++y;
    } else {
      ++x;
      if (shape.n() * y < shape.m() * x) return false;
    }
  }
  return true;
}

}  // namespace

// --- BinaryWord ------------------------------------------------------------

BinaryWord BinaryWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    const std::string_view rest = text.substr(i);
    if (rest.starts_with(kWhiteBead)) {
      letters.push_back(Letter::U);
      i += kWhiteBead.size();
      continue;
    }
    if (rest.starts_with(kBlackBead)) {
      letters.push_back(Letter::R);
      i += kBlackBead.size();
      continue;
    }
    switch (text[i]) {
      case 'U':
      case 'u':
      case '(':
        letters.push_back(Letter::U);
        break;
      case 'R':
      case 'r':
      case ')':
        letters.push_back(Letter::R);
        break;
      case ' ':
      case '\t':
      case '\n':
      case '\r':
        break;
      default:
        throw DomainError("unexpected character '" + std::string(1, text[i]) + "' in word \"" +
                          std::string(text) + "\"");
    }
    ++i;
  }
  return BinaryWord(std::move(letters));
}

std::string BinaryWord::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(l == Letter::U ? 'U' : 'R');
  return out;
}

std::size_t BinaryWord::count(Letter letter) const noexcept {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

std::ostream& operator<<(std::ostream& os, const BinaryWord& word) { return os << word.str(); }

// --- Dyck paths ------------------------------------------------------------

bool is_dyck(const BinaryWord& word, const GridShape& shape) {
  require_shape(word, shape);
  return stays_above(word.letters(), shape);
}

DyckPath::DyckPath(BinaryWord word, GridShape shape) : word_(std::move(word)), shape_(shape) {
  if (!is_dyck(word_, shape_)) {
    std::ostringstream os;
    os << "word " << word_ << " is not a Dyck word on " << shape_;
    throw DomainError(os.str());
  }
  std::size_t x = 0;
  std::size_t y = 0;
  for (Letter l : word_.letters()) {
    (l == Letter::U ? y : x) += 1;
    if (shape_.m() * x == shape_.n() * y) anchors_.push_back({x, y});
  }
}

std::vector<Vertex> anchors(const DyckPath& path) { return path.anchors(); }

BigRational anchored_weight(const DyckPath& path) {
  return BigRational(BigInt(path.shape().gcd()), BigInt(path.anchor_count()));
}

BinaryWord rotate(const BinaryWord& word, std::ptrdiff_t d) {
  if (word.empty()) throw DomainError("cannot rotate an empty word");
  const auto len = static_cast<std::ptrdiff_t>(word.size());
  const std::ptrdiff_t shift = ((d % len) + len) % len;
  std::vector<Letter> out(word.letters().begin(), word.letters().end());
  std::rotate(out.begin(), out.begin() + shift, out.end());
  return BinaryWord(std::move(out));
}

std::vector<std::size_t> dyck_rotation_shifts(const BinaryWord& word, const GridShape& shape) {
  if (!is_dyck(word, shape)) {
    std::ostringstream os;
    os << "dyck_rotation_shifts: " << word << " is not a Dyck word on " << shape;
    throw DomainError(os.str());
  }
  std::vector<std::size_t> shifts;
  for (std::size_t d = 0; d < word.size(); ++d) {
    if (stays_above(rotate(word, static_cast<std::ptrdiff_t>(d)).letters(), shape)) {
      shifts.push_back(d);
    }
  }
  return shifts;
}

// --- enumeration -----------------------------------------------------------

Stream<BinaryWord> enumerate_words(const GridShape& shape) {
  std::vector<Letter> first(shape.m(), Letter::U);
  first.resize(shape.length(), Letter::R);
  return Stream<BinaryWord>([current = std::move(first), started = false,
                             done = false]() mutable -> std::optional<BinaryWord> {
    if (done) return std::nullopt;
    if (started && !std::next_permutation(current.begin(), current.end())) {
      done = true;
      return std::nullopt;
    }
    started = true;
    return BinaryWord(current);
  });
}

namespace {

// Advances `word` to the next Dyck word in lexicographic order. The next word
// keeps the longest possible prefix, turns the following U into an R (which
// must leave the vertex weakly above the diagonal), and completes the suffix
// minimally with all remaining U's then all remaining R's. That completion is
// always valid: once every U is placed the path sits on the top row.
bool next_dyck(std::vector<Letter>& word, const GridShape& shape) {
  const std::size_t m = shape.m();
  const std::size_t n = shape.n();
  std::vector<std::size_t> xs(word.size());
  std::vector<std::size_t> ys(word.size());
  std::size_t x = 0;
  std::size_t y = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    xs[i] = x;
    ys[i] = y;
    (word[i] == Letter::U ? y : x) += 1;
  }
  for (std::size_t i = word.size(); i-- > 0;) {
    if (word[i] != Letter::U) continue;
    const std::size_t nx = xs[i] + 1;
    if (nx > n || n * ys[i] < m * nx) continue;
    word[i] = Letter::R;
    const std::size_t us_left = m - ys[i];
    auto tail = word.begin() + static_cast<std::ptrdiff_t>(i) + 1;
    std::fill(tail, tail + static_cast<std::ptrdiff_t>(us_left), Letter::U);
    std::fill(tail + static_cast<std::ptrdiff_t>(us_left), word.end(), Letter::R);
    return true;
  }
  return false;
}

}  // namespace

Stream<DyckPath> enumerate_dyck(const GridShape& shape) {
  std::vector<Letter> first(shape.m(), Letter::U);
  first.resize(shape.length(), Letter::R);
  return Stream<DyckPath>([shape, current = std::move(first), started = false,
                           done = false]() mutable -> std::optional<DyckPath> {
    if (done) return std::nullopt;
    if (started && !next_dyck(current, shape)) {
      done = true;
      return std::nullopt;
    }
    started = true;
    return DyckPath(BinaryWord(current), shape);
  });
}

}  // namespace ratcat
