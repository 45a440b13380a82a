#pragma once

// Surface syntax for ring elements:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := uint | 'x+(' h ')' | 'x-(' h ')' | 'y+(' h ')' | 'y-(' h ')'
//           | 'g(' rational ')' | 'xp+[' h (',' h)* ']' | 'xp-[' h (',' h)* ']'
//           | 'M[' t ';' interval ']' | 'S[' t ';' interval (';' marks)? ']'
//           | '(' expr ')'
//   t      := '{' (h ':' uint (',')?)* '}'
//   interval := '('? ('-inf' | h) ',' ('inf' | h) ')'?
//   marks  := h ':' ('R'|'L') (',' h ':' ('R'|'L'))*

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwring/cylinder.hpp"
#include "gwring/line_ring.hpp"
#include "gwring/line_split.hpp"
#include "gwring/numbers.hpp"

namespace gwring::expr {

struct Expr {
  enum class Kind : std::uint8_t {
    Int,
    XGen,      ///< x+(h), x-(h)
    YGen,      ///< y+(h), y-(h)
    Gamma,     ///< g(xi)
    PathGen,   ///< xp+[...], xp-[...]
    Interval,  ///< M[t;(lo,hi)]
    Split,     ///< S[t;(lo,hi);marks]
    Add,
    Sub,
    Mul,
    Pow,
  };

  Kind kind = Kind::Int;
  std::int64_t value = 0;  ///< Int literal or Pow exponent
  line::Sign sign = line::Sign::Plus;
  HalfInt root{};
  Rational xi{1};
  std::vector<HalfInt> profile;
  line::RootMultiset t;
  ExtHalfInt lo;
  ExtHalfInt hi;
  std::map<HalfInt, split::Mark> marks;
  std::vector<Expr> children;

  bool operator==(const Expr&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Throws ParseError with the byte offset of the first problem.
Expr parse_expr(const std::string& text);

/// Canonical text; parse_expr(print_expr(e)) == e.
std::string print_expr(const Expr& e);

enum class Ring : std::uint8_t { Line, Split, Cylinder };

class TypeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ring inferred from the generator kinds; throws TypeError on mixtures.
Ring infer_ring(const Expr& e);

line::LineElement eval_line(const Expr& e);
split::SplitElement eval_split(const Expr& e);
cyl::CylElement eval_cylinder(const Expr& e, const cyl::CylGeometry& g);

/// Geometry for a cylinder expression: m defaults to the profile length.
cyl::CylGeometry cylinder_geometry(const Expr& e, std::optional<std::int64_t> m,
                                   std::optional<std::int64_t> n);

std::string format(const line::LineElement& a);
std::string format(const split::SplitElement& a);
std::string format(const cyl::CylElement& a);

/// Evaluates and prints the canonical basis expansion.
std::string evaluate(const std::string& text, std::optional<std::int64_t> m = std::nullopt,
                     std::optional<std::int64_t> n = std::nullopt);

/// Like evaluate, but rank-one terms are printed as normal-form monomials.
std::string normalize(const std::string& text, std::optional<std::int64_t> m = std::nullopt,
                      std::optional<std::int64_t> n = std::nullopt);

}  // namespace gwring::expr
