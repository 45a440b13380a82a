#include "gwring/line_split.hpp"

#include <algorithm>
#include <stdexcept>

namespace gwring::split {

Mark mark_mul(Mark a, Mark b) {
  if (a == Mark::Absent || b == Mark::Absent) return Mark::Absent;
  if (a == Mark::Plain) return b;
  if (b == Mark::Plain) return a;
  if (a == b) return a;
  return Mark::Absent;  // Right * Left
}

char mark_char(Mark m) {
  switch (m) {
    case Mark::Absent: return '0';
    case Mark::Plain: return '1';
    case Mark::Right: return 'R';
    case Mark::Left: return 'L';
  }
  return '?';
}

bool Piece::contains(HalfInt x) const {
  ExtHalfInt e(x);
  return lo < e && e < hi;
}

bool Piece::contains_integer(std::int64_t k) const { return lo.below(k) && hi.above(k); }

Mark Piece::at(HalfInt x) const {
  if (!contains(x)) return Mark::Absent;
  auto it = marks.find(x);
  return it == marks.end() ? Mark::Plain : it->second;
}

std::string to_string(const Piece& p) {
  std::string s = "(" + to_string(p.lo) + "," + to_string(p.hi) + ")";
  if (!p.marks.empty()) {
    s += "{";
    bool first = true;
    for (const auto& [x, m] : p.marks) {
      if (!first) s += ",";
      s += to_string(x) + ":" + mark_char(m);
      first = false;
    }
    s += "}";
  }
  return s;
}

DirectedSubset::DirectedSubset(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  for (const auto& p : pieces_) {
    if (!(p.lo < p.hi)) throw std::invalid_argument("empty piece " + to_string(p));
    for (const auto& [x, m] : p.marks) {
      if (!x.is_proper()) {
        throw std::invalid_argument("directed point " + to_string(x) + " is not in Z+1/2");
      }
      if (m != Mark::Right && m != Mark::Left) {
        throw std::invalid_argument("piece marks must be directional");
      }
      if (!p.contains(x)) {
        throw std::invalid_argument("directed point " + to_string(x) + " outside piece " +
                                    to_string(p));
      }
    }
  }
  std::sort(pieces_.begin(), pieces_.end(),
            [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    if (pieces_[i].lo < pieces_[i - 1].hi) {
      throw std::invalid_argument("pieces " + to_string(pieces_[i - 1]) + " and " +
                                  to_string(pieces_[i]) + " overlap");
    }
  }
}

DirectedSubset DirectedSubset::full_line() {
  return DirectedSubset({Piece{ExtHalfInt::neg_inf(), ExtHalfInt::pos_inf(), {}}});
}

DirectedSubset DirectedSubset::interval(ExtHalfInt lo, ExtHalfInt hi,
                                        std::map<HalfInt, Mark> marks) {
  return DirectedSubset({Piece{lo, hi, std::move(marks)}});
}

Mark DirectedSubset::at(HalfInt x) const {
  for (const auto& p : pieces_) {
    Mark m = p.at(x);
    if (m != Mark::Absent) return m;
  }
  return Mark::Absent;
}

std::string to_string(const DirectedSubset& s) {
  if (s.is_empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < s.pieces().size(); ++i) {
    if (i > 0) out += " u ";
    out += to_string(s.pieces()[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const DirectedSubset& s) { return os << to_string(s); }

DirectedSubset ds_intersect(const DirectedSubset& s, const DirectedSubset& t) {
  std::vector<Piece> out;
  for (const auto& p : s.pieces()) {
    for (const auto& q : t.pieces()) {
      ExtHalfInt lo = std::max(p.lo, q.lo);
      ExtHalfInt hi = std::min(p.hi, q.hi);
      if (!(lo < hi)) continue;
      std::map<HalfInt, Mark> marks;
      std::vector<HalfInt> punctures;
      auto visit = [&](HalfInt x) {
        ExtHalfInt e(x);
        if (!(lo < e && e < hi) || marks.count(x) != 0) return;
        Mark m = mark_mul(p.at(x), q.at(x));
        if (m == Mark::Absent) {
          punctures.push_back(x);
        } else if (m != Mark::Plain) {
          marks.emplace(x, m);
        }
      };
      for (const auto& [x, m] : p.marks) visit(x);
      for (const auto& [x, m] : q.marks) visit(x);
      std::sort(punctures.begin(), punctures.end());
      punctures.erase(std::unique(punctures.begin(), punctures.end()), punctures.end());

      ExtHalfInt cur = lo;
      auto emit = [&](ExtHalfInt end) {
        Piece piece{cur, end, {}};
        for (const auto& [x, m] : marks) {
          if (piece.contains(x)) piece.marks.emplace(x, m);
        }
        out.push_back(std::move(piece));
      };
      for (HalfInt x : punctures) {
        emit(ExtHalfInt(x));
        cur = ExtHalfInt(x);
      }
      emit(hi);
    }
  }
  return DirectedSubset(std::move(out));
}

DirectedSubset ds_union(const DirectedSubset& s, const DirectedSubset& t) {
  for (const auto& p : s.pieces()) {
    for (const auto& q : t.pieces()) {
      if (std::max(p.lo, q.lo) < std::min(p.hi, q.hi)) {
        throw std::invalid_argument("union of subsets that are not strongly disjoint: " +
                                    to_string(p) + " meets " + to_string(q));
      }
    }
  }
  std::vector<Piece> all = s.pieces();
  all.insert(all.end(), t.pieces().begin(), t.pieces().end());
  return DirectedSubset(std::move(all));
}

namespace {

bool endpoint_ok(const ExtHalfInt& e, const RootMultiset& t) {
  return !e.is_finite() || t.multiplicity(e.value()) > 0;
}

bool piece_admissible(const Piece& p, const RootMultiset& t) {
  if (!endpoint_ok(p.lo, t) || !endpoint_ok(p.hi, t)) return false;
  std::size_t inside = 0;
  for (const auto& [root, mult] : t.roots()) {
    if (!p.contains(root)) continue;
    ++inside;
    if (p.marks.count(root) == 0) return false;
  }
  return inside == p.marks.size();
}

}  // namespace

bool is_admissible(const DirectedSubset& s, const RootMultiset& t) {
  return std::all_of(s.pieces().begin(), s.pieces().end(),
                     [&](const Piece& p) { return piece_admissible(p, t); });
}

SplitClass::SplitClass(RootMultiset t, Piece piece) : t_(std::move(t)), piece_(std::move(piece)) {
  DirectedSubset check({piece_});  // validates the piece itself
  if (!piece_admissible(piece_, t_)) {
    throw std::invalid_argument("piece " + to_string(piece_) + " is not admissible for " +
                                to_string(t_));
  }
}

SplitClass SplitClass::unit() {
  return SplitClass(RootMultiset{}, Piece{ExtHalfInt::neg_inf(), ExtHalfInt::pos_inf(), {}});
}

std::string to_string(const SplitClass& c) {
  std::string s = "S[" + to_string(c.t()) + ";(" + to_string(c.piece().lo) + "," +
                  to_string(c.piece().hi) + ")";
  if (!c.piece().marks.empty()) {
    s += ";";
    bool first = true;
    for (const auto& [x, m] : c.piece().marks) {
      if (!first) s += ",";
      s += to_string(x) + ":" + mark_char(m);
      first = false;
    }
  }
  return s + "]";
}

std::ostream& operator<<(std::ostream& os, const SplitClass& c) { return os << to_string(c); }

SplitElement class_of(const RootMultiset& t, const DirectedSubset& s) {
  SplitElement out;
  for (const auto& p : s.pieces()) out = out + SplitElement::basis(SplitClass(t, p));
  return out;
}

SplitElement split_mul(const SplitClass& a, const SplitClass& b) {
  return class_of(a.t() * b.t(), ds_intersect(a.subset(), b.subset()));
}

SplitElement split_mul(const SplitElement& a, const SplitElement& b) {
  return multiply(a, b, [](const SplitClass& x, const SplitClass& y) { return split_mul(x, y); });
}

std::vector<std::pair<HalfInt, DirectedSubset>> connected_decompose(const SplitClass& c) {
  std::vector<std::pair<HalfInt, DirectedSubset>> out;
  const Piece& p = c.piece();
  for (const auto& [root, mult] : c.t().roots()) {
    ExtHalfInt r(root);
    if (r <= p.lo) {
      out.emplace_back(root, DirectedSubset::interval(r, ExtHalfInt::pos_inf()));
    } else if (r >= p.hi) {
      out.emplace_back(root, DirectedSubset::interval(ExtHalfInt::neg_inf(), r));
    } else {
      out.emplace_back(root, DirectedSubset::interval(ExtHalfInt::neg_inf(), ExtHalfInt::pos_inf(),
                                                      {{root, p.marks.at(root)}}));
    }
  }
  return out;
}

std::vector<std::pair<SplitClass, int>> tensor_factorization(const SplitClass& c) {
  std::vector<std::pair<SplitClass, int>> out;
  for (const auto& [root, subset] : connected_decompose(c)) {
    out.emplace_back(SplitClass(RootMultiset::single(root), subset.pieces().front()),
                     c.t().multiplicity(root));
  }
  return out;
}

std::vector<SplitClass> enumerate_indecomposables(const RootMultiset& t) {
  auto zh = line::zeros_hat(t);
  std::vector<SplitClass> out;
  for (std::size_t i = 0; i < zh.size(); ++i) {
    for (std::size_t j = i + 1; j < zh.size(); ++j) {
      std::size_t interior = j - i - 1;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << interior); ++bits) {
        Piece p{zh[i], zh[j], {}};
        for (std::size_t a = 0; a < interior; ++a) {
          p.marks.emplace(zh[i + 1 + a].value(), ((bits >> a) & 1) ? Mark::Left : Mark::Right);
        }
        out.emplace_back(t, std::move(p));
      }
    }
  }
  return out;
}

SplitClass generator_class(const SplitGenerator& g) {
  auto t = RootMultiset::single(g.root);
  ExtHalfInt r(g.root);
  if (g.kind == GenKind::X) {
    if (g.sign == line::Sign::Plus) return SplitClass(t, Piece{r, ExtHalfInt::pos_inf(), {}});
    return SplitClass(t, Piece{ExtHalfInt::neg_inf(), r, {}});
  }
  Mark m = g.sign == line::Sign::Plus ? Mark::Right : Mark::Left;
  return SplitClass(t, Piece{ExtHalfInt::neg_inf(), ExtHalfInt::pos_inf(), {{g.root, m}}});
}

SplitElement split_normal_form(const SplitMonomial& word) {
  SplitElement acc = SplitElement::basis(SplitClass::unit());
  for (const auto& [gen, exponent] : word) {
    if (exponent < 0) throw std::invalid_argument("negative exponent in monomial");
    auto g = SplitElement::basis(generator_class(gen));
    for (int i = 0; i < exponent; ++i) acc = split_mul(acc, g);
  }
  return acc;
}

SplitMonomial word_from_class(const SplitClass& c) {
  SplitMonomial word;
  for (const auto& [factor, mult] : tensor_factorization(c)) {
    const Piece& p = factor.piece();
    HalfInt root = factor.t().roots().begin()->first;
    SplitGenerator g{GenKind::X, line::Sign::Plus, root};
    if (!p.lo.is_finite() && !p.hi.is_finite()) {
      g.kind = GenKind::Y;
      g.sign = p.marks.at(root) == Mark::Right ? line::Sign::Plus : line::Sign::Minus;
    } else if (p.lo.is_finite()) {
      g.sign = line::Sign::Plus;
    } else {
      g.sign = line::Sign::Minus;
    }
    word[g] = mult;
  }
  return word;
}

std::string to_string(const SplitMonomial& word) {
  if (word.empty()) return "1";
  std::string s;
  auto emit = [&](GenKind kind, line::Sign sign) {
    for (const auto& [gen, exponent] : word) {
      if (gen.kind != kind || gen.sign != sign) continue;
      if (!s.empty()) s += "*";
      s += kind == GenKind::X ? "x" : "y";
      s += sign == line::Sign::Plus ? "+(" : "-(";
      s += to_string(gen.root) + ")";
      if (exponent != 1) s += "^" + std::to_string(exponent);
    }
  };
  // X+ Y X- order; y's of either sign are interleaved by root below.
  emit(GenKind::X, line::Sign::Plus);
  for (const auto& [gen, exponent] : word) {
    if (gen.kind != GenKind::Y) continue;
    if (!s.empty()) s += "*";
    s += gen.sign == line::Sign::Plus ? "y+(" : "y-(";
    s += to_string(gen.root) + ")";
    if (exponent != 1) s += "^" + std::to_string(exponent);
  }
  emit(GenKind::X, line::Sign::Minus);
  return s;
}

line::LineElement split_to_nonsplit(const SplitClass& c) {
  auto zh = line::zeros_hat(c.t());
  line::LineElement out;
  for (std::size_t i = 0; i + 1 < zh.size(); ++i) {
    if (zh[i] >= c.piece().lo && zh[i + 1] <= c.piece().hi) {
      out = out + line::LineElement::basis(line::IntervalClass(c.t(), zh[i], zh[i + 1]));
    }
  }
  return out;
}

line::LineElement split_to_nonsplit(const SplitElement& e) {
  line::LineElement out;
  for (const auto& [label, coeff] : e.terms()) out = out + split_to_nonsplit(label).scaled(coeff);
  return out;
}

SplitClass from_interval(const line::IntervalClass& c) {
  return SplitClass(c.t(), Piece{c.lo(), c.hi(), {}});
}

}  // namespace gwring::split
