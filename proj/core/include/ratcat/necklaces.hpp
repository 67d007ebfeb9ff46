#pragma once

#include "ratcat/exactmath.hpp"
#include "ratcat/paths.hpp"
#include "ratcat/stream.hpp"

#include <cstddef>
#include <vector>

namespace ratcat {

/// Start index of the lexicographically least rotation (Booth's algorithm,
/// linear time). Ties resolve to the smallest index.
std::size_t least_rotation(const BinaryWord& word);

/// The lexicographically least rotation. Throws DomainError on an empty word.
BinaryWord canonical_rotation(const BinaryWord& word);

/// Smallest p >= 1 with rotate(word, p) == word; always divides the length.
std::size_t minimal_period(const BinaryWord& word);

/// Rotation class of a binary word of type (m,n), stored by its least
/// rotation. The period is a multiple of shape.block_length().
class Necklace {
 public:
  /// Canonicalizes `word`. The shape is read off the letter counts, so the
  /// word needs at least one U and one R.
  static Necklace of(const BinaryWord& word);
  /// Throws ShapeMismatch when the counts disagree with `shape`.
  Necklace(const BinaryWord& word, const GridShape& shape);

  const BinaryWord& canonical() const noexcept { return canonical_; }
  const GridShape& shape() const noexcept { return shape_; }
  std::size_t period() const noexcept { return period_; }
  /// r = (m+n)/period, the order of the rotation group fixing the necklace.
  std::size_t symmetry_order() const noexcept { return shape_.length() / period_; }

  friend bool operator==(const Necklace& a, const Necklace& b) {
    return a.shape_ == b.shape_ && a.canonical_ == b.canonical_;
  }

 private:
  BinaryWord canonical_;
  GridShape shape_;
  std::size_t period_;
};

/// gcd(m,n)/r, i.e. the number of distinguishable blocks.
BigInt necklace_weight(const Necklace& neck);

/// Number of distinct words in the rotation class; equals (m+n)/r.
std::size_t orbit_size(const Necklace& neck);

struct BlockDecomposition {
  std::size_t block_length = 0;
  /// gcd(m,n) words; block j covers letters [j*g, (j+1)*g) of the canonical word.
  std::vector<BinaryWord> blocks;
};

BlockDecomposition blocks(const Necklace& neck);

/// Least block index of each orbit of blocks under the necklace's rotation
/// group (generated by the shift of `period` letters, i.e. j -> j + period/g
/// on block indices), ascending. Orbits are counted by position, not by block
/// content: two blocks with equal letters can still lie in different orbits.
std::vector<std::size_t> distinguishable_blocks(const Necklace& neck);

struct MarkedNecklace {
  Necklace necklace;
  std::size_t mark;  // a distinguishable block index

  friend bool operator==(const MarkedNecklace&, const MarkedNecklace&) = default;
};

enum class NecklaceAlgorithm {
  kFilterCanonical,  // all words, keep those equal to their least rotation
  kFixedContent,     // FKM prenecklace recursion pruned by letter counts
};

/// One necklace per rotation class, ordered by canonical word.
/// Both algorithms emit the same sequence.
Stream<Necklace> enumerate_necklaces(const GridShape& shape,
                                     NecklaceAlgorithm algorithm = NecklaceAlgorithm::kFilterCanonical);

/// Every (necklace, distinguishable block) pair, necklaces in canonical order
/// and marks ascending.
Stream<MarkedNecklace> enumerate_marked(const GridShape& shape,
                                        NecklaceAlgorithm algorithm = NecklaceAlgorithm::kFilterCanonical);

}  // namespace ratcat
