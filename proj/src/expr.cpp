#include "gwring/expr.hpp"

#include <cctype>
#include <sstream>

namespace gwring::expr {

ParseError::ParseError(std::size_t offset, const std::string& message)
    : std::runtime_error("offset " + std::to_string(offset) + ": " + message), offset_(offset) {}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }

  bool peek(const std::string& lit) {
    skip_ws();
    return s_.compare(pos_, lit.size(), lit) == 0;
  }

  bool accept(const std::string& lit) {
    if (!peek(lit)) return false;
    pos_ += lit.size();
    return true;
  }

  void expect(const std::string& lit) {
    if (!accept(lit)) fail("expected '" + lit + "'");
  }

  static Expr binary(Expr::Kind kind, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = kind;
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (true) {
      if (accept("+")) {
        lhs = binary(Expr::Kind::Add, std::move(lhs), term());
      } else if (accept("-")) {
        lhs = binary(Expr::Kind::Sub, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    while (accept("*")) lhs = binary(Expr::Kind::Mul, std::move(lhs), factor());
    return lhs;
  }

  Expr factor() {
    Expr base = atom();
    if (!accept("^")) return base;
    Expr e;
    e.kind = Expr::Kind::Pow;
    e.value = uint_literal();
    e.children.push_back(std::move(base));
    return e;
  }

  std::int64_t uint_literal() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an unsigned integer");
    try {
      return std::stoll(s_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      pos_ = start;
      fail("integer out of range");
    }
  }

  // [-]digits[/digits]
  std::string number_text() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("expected a number");
    }
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::size_t den = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (den == pos_) fail("expected a denominator");
    }
    return s_.substr(start, pos_ - start);
  }

  HalfInt half_int() {
    skip_ws();
    std::size_t start = pos_;
    std::string text = number_text();
    try {
      return parse_half_int(text);
    } catch (const std::invalid_argument& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  Rational rational() {
    skip_ws();
    std::size_t start = pos_;
    std::string text = number_text();
    try {
      return parse_rational(text);
    } catch (const std::exception& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  ExtHalfInt endpoint() {
    if (accept("-inf")) return ExtHalfInt::neg_inf();
    if (accept("+inf") || accept("inf")) return ExtHalfInt::pos_inf();
    return half_int();
  }

  line::RootMultiset root_multiset() {
    std::size_t start = (skip_ws(), pos_);
    expect("{");
    std::map<HalfInt, int> roots;
    while (!accept("}")) {
      if (at_end()) fail("unterminated '{'");
      HalfInt r = half_int();
      expect(":");
      roots[r] += static_cast<int>(uint_literal());
      accept(",");
    }
    try {
      return line::RootMultiset(std::move(roots));
    } catch (const std::invalid_argument& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  void interval(Expr& e) {
    bool paren = accept("(");
    e.lo = endpoint();
    expect(",");
    e.hi = endpoint();
    if (paren) expect(")");
  }

  void signed_generator(Expr& e, Expr::Kind kind, const std::string& open,
                        const std::string& close) {
    e.kind = kind;
    e.sign = s_[pos_] == '+' ? line::Sign::Plus : line::Sign::Minus;
    ++pos_;
    if (s_.compare(pos_, open.size(), open) != 0) fail("expected '" + open + "'");
    pos_ += open.size();
    if (kind == Expr::Kind::PathGen) {
      e.profile.push_back(half_int());
      while (accept(",")) e.profile.push_back(half_int());
    } else {
      e.root = half_int();
    }
    expect(close);
  }

  Expr atom() {
    skip_ws();
    Expr e;
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    auto next_is_sign = [&](std::size_t at) {
      return at < s_.size() && (s_[at] == '+' || s_[at] == '-');
    };
    if (std::isdigit(static_cast<unsigned char>(c))) {
      e.kind = Expr::Kind::Int;
      e.value = uint_literal();
      return e;
    }
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      expect(")");
      return inner;
    }
    if (s_.compare(pos_, 2, "xp") == 0 && next_is_sign(pos_ + 2)) {
      pos_ += 2;
      signed_generator(e, Expr::Kind::PathGen, "[", "]");
      return e;
    }
    if (c == 'x' && next_is_sign(pos_ + 1)) {
      ++pos_;
      signed_generator(e, Expr::Kind::XGen, "(", ")");
      return e;
    }
    if (c == 'y' && next_is_sign(pos_ + 1)) {
      ++pos_;
      signed_generator(e, Expr::Kind::YGen, "(", ")");
      return e;
    }
    if (s_.compare(pos_, 2, "g(") == 0) {
      pos_ += 2;
      e.kind = Expr::Kind::Gamma;
      std::size_t start = (skip_ws(), pos_);
      e.xi = rational();
      if (e.xi == Rational(0)) {
        pos_ = start;
        fail("gamma needs a nonzero scalar");
      }
      expect(")");
      return e;
    }
    if (s_.compare(pos_, 2, "M[") == 0 || s_.compare(pos_, 2, "S[") == 0) {
      e.kind = c == 'M' ? Expr::Kind::Interval : Expr::Kind::Split;
      pos_ += 2;
      e.t = root_multiset();
      expect(";");
      interval(e);
      if (e.kind == Expr::Kind::Split && accept(";")) {
        do {
          HalfInt at = half_int();
          expect(":");
          if (accept("R")) {
            e.marks[at] = split::Mark::Right;
          } else if (accept("L")) {
            e.marks[at] = split::Mark::Left;
          } else {
            fail("expected R or L");
          }
        } while (accept(","));
      }
      expect("]");
      return e;
    }
    fail("expected a generator, class, integer or '('");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul: return 2;
    case Expr::Kind::Pow: return 3;
    default: return 4;
  }
}

std::string sign_char(line::Sign s) { return s == line::Sign::Plus ? "+" : "-"; }

std::string print_at(const Expr& e, int min_prec) {
  std::string out;
  switch (e.kind) {
    case Expr::Kind::Int: out = std::to_string(e.value); break;
    case Expr::Kind::XGen: out = "x" + sign_char(e.sign) + "(" + to_string(e.root) + ")"; break;
    case Expr::Kind::YGen: out = "y" + sign_char(e.sign) + "(" + to_string(e.root) + ")"; break;
    case Expr::Kind::Gamma: out = "g(" + to_string(e.xi) + ")"; break;
    case Expr::Kind::PathGen: {
      out = "xp" + sign_char(e.sign) + "[";
      for (std::size_t i = 0; i < e.profile.size(); ++i) {
        out += (i > 0 ? "," : "") + to_string(e.profile[i]);
      }
      out += "]";
      break;
    }
    case Expr::Kind::Interval:
    case Expr::Kind::Split: {
      out = std::string(e.kind == Expr::Kind::Interval ? "M[" : "S[") + to_string(e.t) + ";(" +
            to_string(e.lo) + "," + to_string(e.hi) + ")";
      if (!e.marks.empty()) {
        out += ";";
        bool first = true;
        for (const auto& [x, m] : e.marks) {
          out += (first ? "" : ",") + to_string(x) + ":" + split::mark_char(m);
          first = false;
        }
      }
      out += "]";
      break;
    }
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      out = print_at(e.children[0], 1) + (e.kind == Expr::Kind::Add ? " + " : " - ") +
            print_at(e.children[1], 2);
      break;
    case Expr::Kind::Mul:
      out = print_at(e.children[0], 2) + "*" + print_at(e.children[1], 3);
      break;
    case Expr::Kind::Pow:
      out = print_at(e.children[0], 4) + "^" + std::to_string(e.value);
      break;
  }
  return precedence(e) < min_prec ? "(" + out + ")" : out;
}

struct Usage {
  bool x = false;
  bool line_only = false;
  bool split_only = false;
  bool cylinder = false;
  std::size_t profile_len = 0;
};

void collect(const Expr& e, Usage& u) {
  switch (e.kind) {
    case Expr::Kind::XGen: u.x = true; break;
    case Expr::Kind::YGen:
    case Expr::Kind::Split: u.split_only = true; break;
    case Expr::Kind::Interval: u.line_only = true; break;
    case Expr::Kind::Gamma: u.cylinder = true; break;
    case Expr::Kind::PathGen:
      u.cylinder = true;
      if (u.profile_len != 0 && u.profile_len != e.profile.size()) {
        throw TypeError("path generators have different lengths");
      }
      u.profile_len = e.profile.size();
      break;
    default: break;
  }
  for (const auto& c : e.children) collect(c, u);
}

template <class Element, class Atom, class Mul>
Element eval_generic(const Expr& e, const Element& unit, Atom&& atom, Mul&& mul) {
  switch (e.kind) {
    case Expr::Kind::Int: return unit.scaled(e.value);
    case Expr::Kind::Add:
      return eval_generic(e.children[0], unit, atom, mul) +
             eval_generic(e.children[1], unit, atom, mul);
    case Expr::Kind::Sub:
      return eval_generic(e.children[0], unit, atom, mul) -
             eval_generic(e.children[1], unit, atom, mul);
    case Expr::Kind::Mul:
      return mul(eval_generic(e.children[0], unit, atom, mul),
                 eval_generic(e.children[1], unit, atom, mul));
    case Expr::Kind::Pow: {
      Element base = eval_generic(e.children[0], unit, atom, mul);
      Element acc = unit;
      for (std::int64_t i = 0; i < e.value; ++i) acc = mul(acc, base);
      return acc;
    }
    default: return atom(e);
  }
}

template <class Element>
std::string format_terms(const Element& a) {
  return format_element(a, [](std::ostream& os, const auto& label) { os << to_string(label); });
}

std::string format_words(const line::LineElement& a) {
  return format_element(a, [](std::ostream& os, const line::IntervalClass& c) {
    os << to_string(line::word_from_class(c));
  });
}

std::string format_words(const split::SplitElement& a) {
  return format_element(a, [](std::ostream& os, const split::SplitClass& c) {
    os << to_string(split::word_from_class(c));
  });
}

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) { return print_at(e, 0); }

Ring infer_ring(const Expr& e) {
  Usage u;
  collect(e, u);
  if (u.cylinder && (u.x || u.line_only || u.split_only)) {
    throw TypeError("cannot mix cylinder generators with rank-one generators");
  }
  if (u.line_only && u.split_only) {
    throw TypeError("cannot mix non-split classes M[...] with split generators");
  }
  if (u.cylinder) return Ring::Cylinder;
  if (u.split_only) return Ring::Split;
  return Ring::Line;
}

line::LineElement eval_line(const Expr& e) {
  using line::LineElement;
  return eval_generic(
      e, LineElement::basis(line::IntervalClass::unit()),
      [](const Expr& a) -> LineElement {
        if (a.kind == Expr::Kind::XGen) {
          return LineElement::basis(line::generator_class({a.sign, a.root}));
        }
        if (a.kind == Expr::Kind::Interval) {
          return LineElement::basis(line::IntervalClass(a.t, a.lo, a.hi));
        }
        throw TypeError("atom " + print_expr(a) + " is not in the non-split ring");
      },
      [](const LineElement& x, const LineElement& y) { return line::line_mul(x, y); });
}

split::SplitElement eval_split(const Expr& e) {
  using split::SplitElement;
  return eval_generic(
      e, SplitElement::basis(split::SplitClass::unit()),
      [](const Expr& a) -> SplitElement {
        if (a.kind == Expr::Kind::XGen || a.kind == Expr::Kind::YGen) {
          split::SplitGenerator g{a.kind == Expr::Kind::XGen ? split::GenKind::X : split::GenKind::Y,
                                  a.sign, a.root};
          return SplitElement::basis(split::generator_class(g));
        }
        if (a.kind == Expr::Kind::Split) {
          return SplitElement::basis(split::SplitClass(a.t, split::Piece{a.lo, a.hi, a.marks}));
        }
        throw TypeError("atom " + print_expr(a) + " is not in the split ring");
      },
      [](const SplitElement& x, const SplitElement& y) { return split::split_mul(x, y); });
}

cyl::CylElement eval_cylinder(const Expr& e, const cyl::CylGeometry& g) {
  using cyl::CylElement;
  return eval_generic(
      e, cyl::cyl_unit(g),
      [&g](const Expr& a) -> CylElement {
        if (a.kind == Expr::Kind::Gamma) return CylElement::basis(cyl::gamma_class(g, a.xi));
        if (a.kind == Expr::Kind::PathGen) {
          return CylElement::basis(cyl::path_class(cyl::PathProfile(g, a.profile), a.sign));
        }
        throw TypeError("atom " + print_expr(a) + " is not in the cylinder ring");
      },
      [](const CylElement& x, const CylElement& y) { return cyl::cyl_mul(x, y); });
}

cyl::CylGeometry cylinder_geometry(const Expr& e, std::optional<std::int64_t> m,
                                   std::optional<std::int64_t> n) {
  Usage u;
  collect(e, u);
  if (u.profile_len != 0) {
    auto len = static_cast<std::int64_t>(u.profile_len);
    if (m && *m != len) {
      throw TypeError("profiles have length " + std::to_string(len) + " but m=" +
                      std::to_string(*m));
    }
    m = len;
  }
  if (!m || !n) throw std::invalid_argument("cylinder expressions need --n (and --m without paths)");
  return cyl::CylGeometry::make(*m, *n);
}

std::string format(const line::LineElement& a) { return format_terms(a); }
std::string format(const split::SplitElement& a) { return format_terms(a); }
std::string format(const cyl::CylElement& a) { return format_terms(a); }

std::string evaluate(const std::string& text, std::optional<std::int64_t> m,
                     std::optional<std::int64_t> n) {
  Expr e = parse_expr(text);
  switch (infer_ring(e)) {
    case Ring::Line: return format(eval_line(e));
    case Ring::Split: return format(eval_split(e));
    case Ring::Cylinder: return format(eval_cylinder(e, cylinder_geometry(e, m, n)));
  }
  return {};
}

std::string normalize(const std::string& text, std::optional<std::int64_t> m,
                      std::optional<std::int64_t> n) {
  Expr e = parse_expr(text);
  switch (infer_ring(e)) {
    case Ring::Line: return format_words(eval_line(e));
    case Ring::Split: return format_words(eval_split(e));
    case Ring::Cylinder: return format(eval_cylinder(e, cylinder_geometry(e, m, n)));
  }
  return {};
}

}  // namespace gwring::expr
