#pragma once

// Rank-one Grothendieck ring of weight modules over A(t) = C[z](sigma, t),
// sigma(z) = z - 1, on the integral orbit. Parameters t are monic
// polynomials with roots in Z + 1/2, carried as root multisets; simple
// modules are labelled by consecutive pairs of extended zeros of t.

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gwring/numbers.hpp"
#include "gwring/ring_element.hpp"

namespace gwring::line {

/// Monic polynomial with roots in Z + 1/2, as root -> multiplicity.
/// The empty multiset is t = 1.
class RootMultiset {
 public:
  RootMultiset() = default;
  /// Throws std::invalid_argument on integral roots or non-positive
  /// multiplicities.
  explicit RootMultiset(std::map<HalfInt, int> roots);

  static RootMultiset single(HalfInt root, int multiplicity = 1);

  const std::map<HalfInt, int>& roots() const { return roots_; }
  bool is_one() const { return roots_.empty(); }
  /// Number of distinct roots.
  int length() const { return static_cast<int>(roots_.size()); }
  int degree() const;
  int multiplicity(HalfInt root) const;
  std::vector<HalfInt> distinct_roots() const;

  /// Evaluates t at a half-integer point; used for explicit module actions.
  Rational evaluate(HalfInt x) const;

  /// Product of polynomials = multiset sum.
  RootMultiset operator*(const RootMultiset& other) const;

  auto operator<=>(const RootMultiset&) const = default;

 private:
  std::map<HalfInt, int> roots_;
};

std::string to_string(const RootMultiset& t);
std::ostream& operator<<(std::ostream& os, const RootMultiset& t);
/// Parses "{1/2:1,5/2:2}" (whitespace tolerated, "{}" is t = 1).
RootMultiset parse_root_multiset(const std::string& text);

/// Simple module M^t_{lo,hi}.
class IntervalClass {
 public:
  /// Throws std::invalid_argument unless lo < hi are consecutive in
  /// zeros_hat(t).
  IntervalClass(RootMultiset t, ExtHalfInt lo, ExtHalfInt hi);

  /// The unique simple over t = 1, the ring unit.
  static IntervalClass unit();

  const RootMultiset& t() const { return t_; }
  const ExtHalfInt& lo() const { return lo_; }
  const ExtHalfInt& hi() const { return hi_; }
  const RootMultiset& grade() const { return t_; }

  auto operator<=>(const IntervalClass&) const = default;

 private:
  RootMultiset t_;
  ExtHalfInt lo_;
  ExtHalfInt hi_;
};

std::string to_string(const IntervalClass& c);
std::ostream& operator<<(std::ostream& os, const IntervalClass& c);

using LineElement = RingElement<IntervalClass>;

/// -inf, the distinct roots in increasing order, +inf.
std::vector<ExtHalfInt> zeros_hat(const RootMultiset& t);

/// The length(t) + 1 simple classes of A(t).
std::vector<IntervalClass> enumerate_simples(const RootMultiset& t);

/// Integers k in [window_lo, window_hi] with lo < k < hi.
std::vector<std::int64_t> simple_support(const IntervalClass& c, std::int64_t window_lo,
                                         std::int64_t window_hi);

/// Tensor product of two simples: the interval (max lo, min hi) over the
/// product parameter, or zero when that interval is empty.
LineElement mul_interval(const IntervalClass& a, const IntervalClass& b);

LineElement line_mul(const LineElement& a, const LineElement& b);

enum class Sign : std::uint8_t { Plus, Minus };

struct LineGenerator {
  Sign sign;
  HalfInt root;
  auto operator<=>(const LineGenerator&) const = default;
};

/// Commutative monomial: generator -> positive exponent.
using LineMonomial = std::map<LineGenerator, int>;

/// The class of a generator: x+_s -> M^{z-s}_{s,inf}, x-_s -> M^{z-s}_{-inf,s}.
IntervalClass generator_class(const LineGenerator& g);

/// Product of generator classes.
LineElement class_from_word(const LineMonomial& word);

/// Normal-form monomial of a simple: x+ over the roots <= lo and x- over the
/// roots >= hi, each with full multiplicity.
LineMonomial word_from_class(const IntervalClass& c);

/// True when every x+ index is strictly below every x- index.
bool is_normal_form(const LineMonomial& word);

std::string to_string(const LineMonomial& word);

// ---------------------------------------------------------------------------
// General rational roots and the invertible/half-integral factorization.

/// Monic polynomial with arbitrary rational roots.
using RationalRoots = std::map<Rational, int>;

std::string to_string(const RationalRoots& roots);
RationalRoots roots_union(const RationalRoots& a, const RationalRoots& b);

struct OmegaFactors {
  RationalRoots invertible;  ///< roots outside Z + 1/2
  RootMultiset half_integral;
};

/// Splits t into its part invertible on the integral orbit and its part with
/// roots in Z + 1/2.
OmegaFactors factor_omega(const RationalRoots& t);

/// Basis class of the full ring: an invertible parameter tensored with a
/// simple of the half-integral part.
class FullClass {
 public:
  /// Throws std::invalid_argument if `invertible` has a root in Z + 1/2.
  FullClass(RationalRoots invertible, IntervalClass simple);

  const RationalRoots& invertible() const { return invertible_; }
  const IntervalClass& simple() const { return simple_; }
  std::pair<RationalRoots, RootMultiset> grade() const { return {invertible_, simple_.t()}; }

  bool operator==(const FullClass&) const = default;
  bool operator<(const FullClass& o) const {
    if (invertible_ != o.invertible_) return invertible_ < o.invertible_;
    return simple_ < o.simple_;
  }

 private:
  RationalRoots invertible_;
  IntervalClass simple_;
};

std::string to_string(const FullClass& c);

using FullElement = RingElement<FullClass>;

FullElement full_mul(const FullClass& a, const FullClass& b);

}  // namespace gwring::line
