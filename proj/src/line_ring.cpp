#include "gwring/line_ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gwring::line {

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

bool is_half_integral(const Rational& q) { return q.denominator() == 2; }

}  // namespace

RootMultiset::RootMultiset(std::map<HalfInt, int> roots) : roots_(std::move(roots)) {
  for (const auto& [root, mult] : roots_) {
    if (!root.is_proper()) {
      throw std::invalid_argument("root " + to_string(root) + " is not in Z+1/2");
    }
    if (mult <= 0) {
      throw std::invalid_argument("root " + to_string(root) + " has multiplicity " +
                                  std::to_string(mult));
    }
  }
}

RootMultiset RootMultiset::single(HalfInt root, int multiplicity) {
  return RootMultiset({{root, multiplicity}});
}

int RootMultiset::degree() const {
  int d = 0;
  for (const auto& [root, mult] : roots_) d += mult;
  return d;
}

int RootMultiset::multiplicity(HalfInt root) const {
  auto it = roots_.find(root);
  return it == roots_.end() ? 0 : it->second;
}

std::vector<HalfInt> RootMultiset::distinct_roots() const {
  std::vector<HalfInt> out;
  out.reserve(roots_.size());
  for (const auto& [root, mult] : roots_) out.push_back(root);
  return out;
}

Rational RootMultiset::evaluate(HalfInt x) const {
  Rational value(1);
  for (const auto& [root, mult] : roots_) {
    Rational factor = (x - root).to_rational();
    for (int i = 0; i < mult; ++i) value *= factor;
  }
  return value;
}

RootMultiset RootMultiset::operator*(const RootMultiset& other) const {
  RootMultiset out = *this;
  for (const auto& [root, mult] : other.roots_) out.roots_[root] += mult;
  return out;
}

std::string to_string(const RootMultiset& t) {
  std::string s = "{";
  bool first = true;
  for (const auto& [root, mult] : t.roots()) {
    if (!first) s += ",";
    s += to_string(root) + ":" + std::to_string(mult);
    first = false;
  }
  return s + "}";
}

std::ostream& operator<<(std::ostream& os, const RootMultiset& t) { return os << to_string(t); }

RootMultiset parse_root_multiset(const std::string& text) {
  std::string s = strip_spaces(text);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') {
    throw std::invalid_argument("root multiset must look like {1/2:1,5/2:2}: '" + text + "'");
  }
  s = s.substr(1, s.size() - 2);
  std::map<HalfInt, int> roots;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    HalfInt root = parse_half_int(item.substr(0, colon));
    int mult = 1;
    if (colon != std::string::npos) mult = std::stoi(item.substr(colon + 1));
    roots[root] += mult;
  }
  return RootMultiset(std::move(roots));
}

IntervalClass::IntervalClass(RootMultiset t, ExtHalfInt lo, ExtHalfInt hi)
    : t_(std::move(t)), lo_(lo), hi_(hi) {
  auto zh = zeros_hat(t_);
  auto it = std::find(zh.begin(), zh.end(), lo_);
  if (it == zh.end() || it + 1 == zh.end() || *(it + 1) != hi_) {
    throw std::invalid_argument("(" + to_string(lo_) + "," + to_string(hi_) +
                                ") is not a pair of consecutive zeros of " + to_string(t_));
  }
}

IntervalClass IntervalClass::unit() {
  return IntervalClass(RootMultiset{}, ExtHalfInt::neg_inf(), ExtHalfInt::pos_inf());
}

std::string to_string(const IntervalClass& c) {
  return "M[" + to_string(c.t()) + ";(" + to_string(c.lo()) + "," + to_string(c.hi()) + ")]";
}

std::ostream& operator<<(std::ostream& os, const IntervalClass& c) { return os << to_string(c); }

std::vector<ExtHalfInt> zeros_hat(const RootMultiset& t) {
  std::vector<ExtHalfInt> out;
  out.reserve(t.roots().size() + 2);
  out.push_back(ExtHalfInt::neg_inf());
  for (const auto& [root, mult] : t.roots()) out.emplace_back(root);
  out.push_back(ExtHalfInt::pos_inf());
  return out;
}

std::vector<IntervalClass> enumerate_simples(const RootMultiset& t) {
  auto zh = zeros_hat(t);
  std::vector<IntervalClass> out;
  out.reserve(zh.size() - 1);
  for (std::size_t i = 0; i + 1 < zh.size(); ++i) out.emplace_back(t, zh[i], zh[i + 1]);
  return out;
}

std::vector<std::int64_t> simple_support(const IntervalClass& c, std::int64_t window_lo,
                                         std::int64_t window_hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = window_lo; k <= window_hi; ++k) {
    if (c.lo().below(k) && c.hi().above(k)) out.push_back(k);
  }
  return out;
}

LineElement mul_interval(const IntervalClass& a, const IntervalClass& b) {
  ExtHalfInt lo = std::max(a.lo(), b.lo());
  ExtHalfInt hi = std::min(a.hi(), b.hi());
  if (!(lo < hi)) return {};
  return LineElement::basis(IntervalClass(a.t() * b.t(), lo, hi));
}

LineElement line_mul(const LineElement& a, const LineElement& b) {
  return multiply(a, b, mul_interval);
}

IntervalClass generator_class(const LineGenerator& g) {
  auto t = RootMultiset::single(g.root);
  if (g.sign == Sign::Plus) return IntervalClass(t, g.root, ExtHalfInt::pos_inf());
  return IntervalClass(t, ExtHalfInt::neg_inf(), g.root);
}

LineElement class_from_word(const LineMonomial& word) {
  LineElement acc = LineElement::basis(IntervalClass::unit());
  for (const auto& [gen, exponent] : word) {
    if (exponent < 0) throw std::invalid_argument("negative exponent in monomial");
    auto g = LineElement::basis(generator_class(gen));
    for (int i = 0; i < exponent; ++i) acc = line_mul(acc, g);
  }
  return acc;
}

LineMonomial word_from_class(const IntervalClass& c) {
  LineMonomial word;
  for (const auto& [root, mult] : c.t().roots()) {
    ExtHalfInt r(root);
    if (r <= c.lo()) {
      word[{Sign::Plus, root}] = mult;
    } else {
      // Consecutive zeros: every root not <= lo is >= hi.
      word[{Sign::Minus, root}] = mult;
    }
  }
  return word;
}

bool is_normal_form(const LineMonomial& word) {
  bool seen_plus = false;
  bool seen_minus = false;
  HalfInt max_plus{};
  HalfInt min_minus{};
  for (const auto& [gen, exponent] : word) {
    if (exponent <= 0) return false;
    if (gen.sign == Sign::Plus) {
      max_plus = seen_plus ? std::max(max_plus, gen.root) : gen.root;
      seen_plus = true;
    } else {
      min_minus = seen_minus ? std::min(min_minus, gen.root) : gen.root;
      seen_minus = true;
    }
  }
  return !(seen_plus && seen_minus) || max_plus < min_minus;
}

std::string to_string(const LineMonomial& word) {
  if (word.empty()) return "1";
  std::string s;
  // Plus generators first (ascending), then minus generators (ascending).
  for (Sign sign : {Sign::Plus, Sign::Minus}) {
    for (const auto& [gen, exponent] : word) {
      if (gen.sign != sign) continue;
      if (!s.empty()) s += "*";
      s += (sign == Sign::Plus ? "x+(" : "x-(") + to_string(gen.root) + ")";
      if (exponent != 1) s += "^" + std::to_string(exponent);
    }
  }
  return s;
}

std::string to_string(const RationalRoots& roots) {
  std::string s = "{";
  bool first = true;
  for (const auto& [root, mult] : roots) {
    if (!first) s += ",";
    s += gwring::to_string(root) + ":" + std::to_string(mult);
    first = false;
  }
  return s + "}";
}

RationalRoots roots_union(const RationalRoots& a, const RationalRoots& b) {
  RationalRoots out = a;
  for (const auto& [root, mult] : b) out[root] += mult;
  return out;
}

OmegaFactors factor_omega(const RationalRoots& t) {
  OmegaFactors out;
  std::map<HalfInt, int> half;
  for (const auto& [root, mult] : t) {
    if (mult <= 0) throw std::invalid_argument("non-positive multiplicity");
    if (is_half_integral(root)) {
      half[HalfInt::from_twice(root.numerator())] += mult;
    } else {
      out.invertible[root] += mult;
    }
  }
  out.half_integral = RootMultiset(std::move(half));
  return out;
}

FullClass::FullClass(RationalRoots invertible, IntervalClass simple)
    : invertible_(std::move(invertible)), simple_(std::move(simple)) {
  for (const auto& [root, mult] : invertible_) {
    if (is_half_integral(root)) {
      throw std::invalid_argument("invertible part contains the root " +
                                  gwring::to_string(root) + " in Z+1/2; factor first");
    }
    if (mult <= 0) throw std::invalid_argument("non-positive multiplicity");
  }
}

std::string to_string(const FullClass& c) {
  return "U" + to_string(c.invertible()) + "*" + to_string(c.simple());
}

FullElement full_mul(const FullClass& a, const FullClass& b) {
  FullElement out;
  LineElement interval = mul_interval(a.simple(), b.simple());
  for (const auto& [label, coeff] : interval.terms()) {
    out = out + FullElement::basis(
                    FullClass(roots_union(a.invertible(), b.invertible()), label), coeff);
  }
  return out;
}

}  // namespace gwring::line
