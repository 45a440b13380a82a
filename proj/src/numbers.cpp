#include "gwring/numbers.hpp"

#include <charconv>
#include <stdexcept>

namespace gwring {

namespace {

std::int64_t parse_int(std::string_view text, const std::string& whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("not an integer: '" + whole + "'");
  }
  return value;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::int64_t HalfInt::floor() const { return floor_div(twice, 2); }
std::int64_t HalfInt::ceil() const { return -floor_div(-twice, 2); }

HalfInt parse_half_int(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    return HalfInt::from_int(parse_int(text, text));
  }
  std::string_view sv(text);
  if (parse_int(sv.substr(slash + 1), text) != 2) {
    throw std::invalid_argument("half-integer denominator must be 2: '" + text + "'");
  }
  return HalfInt::from_twice(parse_int(sv.substr(0, slash), text));
}

std::string to_string(HalfInt h) {
  if (h.is_integer()) return std::to_string(h.twice / 2);
  return std::to_string(h.twice) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << to_string(h); }

bool ExtHalfInt::below(std::int64_t k) const {
  switch (kind_) {
    case Kind::NegInf: return true;
    case Kind::PosInf: return false;
    case Kind::Finite: break;
  }
  return value_ < k;
}

bool ExtHalfInt::above(std::int64_t k) const {
  switch (kind_) {
    case Kind::NegInf: return false;
    case Kind::PosInf: return true;
    case Kind::Finite: break;
  }
  return k < value_;
}

std::string to_string(const ExtHalfInt& e) {
  switch (e.kind()) {
    case ExtHalfInt::Kind::NegInf: return "-inf";
    case ExtHalfInt::Kind::PosInf: return "inf";
    case ExtHalfInt::Kind::Finite: break;
  }
  return to_string(e.value());
}

std::ostream& operator<<(std::ostream& os, const ExtHalfInt& e) { return os << to_string(e); }

ExtHalfInt parse_ext_half_int(const std::string& text) {
  if (text == "-inf") return ExtHalfInt::neg_inf();
  if (text == "inf" || text == "+inf") return ExtHalfInt::pos_inf();
  return ExtHalfInt(parse_half_int(text));
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text, text));
  std::string_view sv(text);
  std::int64_t den = parse_int(sv.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return Rational(parse_int(sv.substr(0, slash), text), den);
}

}  // namespace gwring
