#pragma once

#include "ratcat/exactmath.hpp"
#include "ratcat/stream.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ratcat {

/// Path step / necklace bead. The enumerator values fix the order U < R
/// used by every lexicographic comparison in the library.
enum class Letter : std::uint8_t { U = 0, R = 1 };

class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Accepts U/R, "(" / ")" and the bead glyphs "∘" / "•" (first symbol of
  /// each pair is U). ASCII letters are case-insensitive. Whitespace is
  /// skipped. Throws DomainError on any other character.
  static BinaryWord parse(std::string_view text);

  std::string str() const;

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t count(Letter letter) const noexcept;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const BinaryWord& word);

/// Lattice point reached after a prefix: x counts R steps (column),
/// y counts U steps (row). The diagonal of an (m,n) grid runs from (0,0) to
/// (n,m); a point lies on it when m*x == n*y and weakly above it when
/// n*y >= m*x.
struct Vertex {
  std::size_t x = 0;
  std::size_t y = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Throws ShapeMismatch unless the word has exactly m U's and n R's.
bool is_dyck(const BinaryWord& word, const GridShape& shape);

/// A rational Dyck path together with its anchors (diagonal vertices other
/// than the origin, in path order).
class DyckPath {
 public:
  /// Throws ShapeMismatch on wrong letter counts and DomainError when the
  /// word dips below the diagonal.
  DyckPath(BinaryWord word, GridShape shape);

  const BinaryWord& word() const noexcept { return word_; }
  const GridShape& shape() const noexcept { return shape_; }
  const std::vector<Vertex>& anchors() const noexcept { return anchors_; }
  /// a(p); at least 1 since the end point is always an anchor.
  std::size_t anchor_count() const noexcept { return anchors_.size(); }

  friend bool operator==(const DyckPath& a, const DyckPath& b) {
    return a.shape_ == b.shape_ && a.word_ == b.word_;
  }

 private:
  BinaryWord word_;
  GridShape shape_;
  std::vector<Vertex> anchors_;
};

std::vector<Vertex> anchors(const DyckPath& path);

/// gcd(m,n) / a(p).
BigRational anchored_weight(const DyckPath& path);

/// Left rotation by d (mod length); negative d rotates right.
/// Throws DomainError on an empty word.
BinaryWord rotate(const BinaryWord& word, std::ptrdiff_t d);

/// Every shift d in [0, m+n) for which rotate(word, d) is a Dyck word.
/// Throws DomainError if the word itself is not Dyck.
std::vector<std::size_t> dyck_rotation_shifts(const BinaryWord& word, const GridShape& shape);

/// All binom(m+n, n) words with m U's and n R's, in increasing
/// lexicographic order.
Stream<BinaryWord> enumerate_words(const GridShape& shape);

/// Dyck words of the shape in increasing lexicographic order. Generated by
/// successor search over prefixes, so no non-Dyck word is ever built.
Stream<DyckPath> enumerate_dyck(const GridShape& shape);

}  // namespace ratcat
