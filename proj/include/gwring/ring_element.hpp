#pragma once

// Graded formal Z-linear combinations of basis labels.
//
// A Label is any totally ordered value type exposing `grade()`; the order on
// labels is the canonical term order, so two elements are equal as ring
// elements exactly when their term maps are equal. Multiplication is supplied
// per ring as a rule on pairs of basis labels and extended bilinearly.

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gwring {

using Coefficient = std::int64_t;

template <class Label>
class RingElement {
 public:
  using Terms = std::map<Label, Coefficient>;

  RingElement() = default;

  static RingElement basis(Label label, Coefficient c = 1) {
    RingElement r;
    if (c != 0) r.terms_.emplace(std::move(label), c);
    return r;
  }

  /// Builds an element from an arbitrary term list: merges repeated labels
  /// and drops zero coefficients.
  static RingElement from_terms(const std::vector<std::pair<Label, Coefficient>>& raw) {
    RingElement r;
    for (const auto& [label, c] : raw) r.accumulate(label, c);
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coefficient coefficient(const Label& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? 0 : it->second;
  }

  RingElement operator+(const RingElement& other) const {
    RingElement r = *this;
    for (const auto& [label, c] : other.terms_) r.accumulate(label, c);
    return r;
  }

  RingElement operator-() const {
    RingElement r = *this;
    for (auto& [label, c] : r.terms_) c = -c;
    return r;
  }

  RingElement operator-(const RingElement& other) const { return *this + (-other); }

  RingElement scaled(Coefficient k) const {
    if (k == 0) return {};
    RingElement r = *this;
    for (auto& [label, c] : r.terms_) c *= k;
    return r;
  }

  bool operator==(const RingElement&) const = default;

 private:
  void accumulate(const Label& label, Coefficient c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(label, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

/// Canonical form of an element. Storage is already canonical, so this is
/// the identity; it exists so callers can state intent.
template <class Label>
RingElement<Label> canonicalize(const RingElement<Label>& a) {
  return RingElement<Label>::from_terms({a.terms().begin(), a.terms().end()});
}

/// Bilinear extension of a basis multiplication rule
/// `rule(const Label&, const Label&) -> RingElement<Label>`.
template <class Label, class Rule>
RingElement<Label> multiply(const RingElement<Label>& a, const RingElement<Label>& b,
                            Rule&& rule) {
  RingElement<Label> out;
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) {
      out = out + rule(la, lb).scaled(ca * cb);
    }
  }
  return out;
}

/// Prints `c*label` terms joined by " + " / " - "; zero prints as "0".
/// `print_label(std::ostream&, const Label&)` renders one basis label.
template <class Label, class Printer>
std::string format_element(const RingElement<Label>& a, Printer&& print_label) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [label, c] : a.terms()) {
    Coefficient shown = c;
    if (first) {
      if (c < 0) {
        os << "-";
        shown = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      shown = c < 0 ? -c : c;
    }
    os << shown << "*";
    print_label(os, label);
    first = false;
  }
  return os.str();
}

}  // namespace gwring
