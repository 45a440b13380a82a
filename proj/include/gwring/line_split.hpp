#pragma once

// Split Grothendieck ring in rank one. Indecomposable weight modules are
// labelled by connected directed subsets of R: open intervals with half-integer
// or infinite endpoints whose interior roots carry a direction mark recording
// whether X+ or X- acts nontrivially across that wall.

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gwring/line_ring.hpp"
#include "gwring/numbers.hpp"
#include "gwring/ring_element.hpp"

namespace gwring::split {

using line::RootMultiset;

/// Value of a directed subset at a point: absent, plain member, or member
/// with a rightward / leftward direction.
enum class Mark : std::uint8_t { Absent, Plain, Right, Left };

Mark mark_mul(Mark a, Mark b);
char mark_char(Mark m);

/// One connected open piece (lo, hi) with directed interior points.
struct Piece {
  ExtHalfInt lo;
  ExtHalfInt hi;
  std::map<HalfInt, Mark> marks;  ///< only Right / Left values

  /// Value of the piece at a half-integer point.
  Mark at(HalfInt x) const;
  bool contains(HalfInt x) const;
  bool contains_integer(std::int64_t k) const;

  auto operator<=>(const Piece&) const = default;
};

std::string to_string(const Piece& p);

/// Finite disjoint union of pieces, stored in increasing order.
class DirectedSubset {
 public:
  DirectedSubset() = default;
  /// Validates and sorts; throws std::invalid_argument on overlapping
  /// pieces, empty pieces, misplaced or non-directional marks.
  explicit DirectedSubset(std::vector<Piece> pieces);

  static DirectedSubset full_line();
  static DirectedSubset interval(ExtHalfInt lo, ExtHalfInt hi,
                                 std::map<HalfInt, Mark> marks = {});

  const std::vector<Piece>& pieces() const { return pieces_; }
  bool is_empty() const { return pieces_.empty(); }
  bool is_connected() const { return pieces_.size() == 1; }
  Mark at(HalfInt x) const;

  auto operator<=>(const DirectedSubset&) const = default;

 private:
  std::vector<Piece> pieces_;
};

std::string to_string(const DirectedSubset& s);
std::ostream& operator<<(std::ostream& os, const DirectedSubset& s);

/// Pointwise mark product; points where Right meets Left are removed and
/// split their piece.
DirectedSubset ds_intersect(const DirectedSubset& s, const DirectedSubset& t);

/// Union of strongly disjoint subsets; throws std::invalid_argument if the
/// underlying sets overlap.
DirectedSubset ds_union(const DirectedSubset& s, const DirectedSubset& t);

/// Every piece has endpoints in Z(t) or at infinity, and its directed points
/// are exactly the roots of t strictly inside it.
bool is_admissible(const DirectedSubset& s, const RootMultiset& t);

/// Indecomposable M^t_S.
class SplitClass {
 public:
  /// Throws std::invalid_argument unless `piece` is t-admissible.
  SplitClass(RootMultiset t, Piece piece);

  static SplitClass unit();

  const RootMultiset& t() const { return t_; }
  const Piece& piece() const { return piece_; }
  const RootMultiset& grade() const { return t_; }
  DirectedSubset subset() const { return DirectedSubset({piece_}); }
  bool is_simple() const { return piece_.marks.empty(); }

  auto operator<=>(const SplitClass&) const = default;

 private:
  RootMultiset t_;
  Piece piece_;
};

std::string to_string(const SplitClass& c);
std::ostream& operator<<(std::ostream& os, const SplitClass& c);

using SplitElement = RingElement<SplitClass>;

/// Class of a semi-indecomposable M^t_S: one indecomposable per piece.
SplitElement class_of(const RootMultiset& t, const DirectedSubset& s);

SplitElement split_mul(const SplitClass& a, const SplitClass& b);
SplitElement split_mul(const SplitElement& a, const SplitElement& b);

/// Factors of a connected admissible subset, one per distinct root k:
/// (k, inf) for roots at or left of the left end, R_k^+/- for interior roots,
/// (-inf, k) for roots at or right of the right end.
std::vector<std::pair<HalfInt, DirectedSubset>> connected_decompose(const SplitClass& c);

/// Weyl-algebra indecomposables over t = z - k with multiplicities whose
/// tensor product is the given class.
std::vector<std::pair<SplitClass, int>> tensor_factorization(const SplitClass& c);

/// All connected t-admissible subsets.
std::vector<SplitClass> enumerate_indecomposables(const RootMultiset& t);

enum class GenKind : std::uint8_t { X, Y };

struct SplitGenerator {
  GenKind kind;
  line::Sign sign;
  HalfInt root;
  auto operator<=>(const SplitGenerator&) const = default;
};

using SplitMonomial = std::map<SplitGenerator, int>;

/// x+_k -> (k,inf), x-_k -> (-inf,k), y+_k -> R_k^+, y-_k -> R_k^-.
SplitClass generator_class(const SplitGenerator& g);

/// Evaluates a monomial to its canonical basis expansion.
SplitElement split_normal_form(const SplitMonomial& word);

/// The normal-form word X+ Y^eps X- of a class.
SplitMonomial word_from_class(const SplitClass& c);
std::string to_string(const SplitMonomial& word);

/// Canonical map to the non-split ring: each indecomposable goes to the sum
/// of its composition factors.
line::LineElement split_to_nonsplit(const SplitClass& c);
line::LineElement split_to_nonsplit(const SplitElement& e);

/// Simple (unmarked) split class <-> interval class.
SplitClass from_interval(const line::IntervalClass& c);

}  // namespace gwring::split
