#include <ffprog/error.hpp>
#include <ffprog/intpoly.hpp>

#include <algorithm>
#include <cctype>

namespace ffprog {

IntPoly::IntPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  strip();
}

IntPoly IntPoly::monomial(const Rational& c, int k) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::from_ints(const std::vector<long>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.push_back(make_rational(c));
  return IntPoly(std::move(v));
}

void IntPoly::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& IntPoly::leading() const {
  if (coeffs_.empty()) throw Error(Errc::ZeroPolynomial, "leading coefficient of 0");
  return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < a.coeffs_.size()) v[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) v[i] += b.coeffs_[i];
  }
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const Rational& c, const IntPoly& p) {
  std::vector<Rational> v = p.coeffs_;
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "y";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : original_(text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  IntPoly parse() {
    if (s_.empty()) fail("empty polynomial");
    if (s_.front() == '[') return parse_dense();
    std::vector<Rational> coeffs;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [c, k] = parse_term();
      if (coeffs.size() <= static_cast<std::size_t>(k)) coeffs.resize(static_cast<std::size_t>(k) + 1);
      coeffs[static_cast<std::size_t>(k)] += sign * c;
    }
    return IntPoly(std::move(coeffs));
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::Parse, why + " in polynomial '" + original_ + "'");
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  std::string take_digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::pair<Rational, int> parse_term() {
    Rational c(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = take_digits();
      if (peek() == '/') {
        ++pos_;
        std::string den = take_digits();
        if (den.empty()) fail("missing denominator");
        num += "/" + den;
      }
      c = parse_rational(num);
      have_coeff = true;
      if (peek() == '*') {
        ++pos_;
        if (peek() != 'y') fail("expected 'y' after '*'");
      }
    }
    if (peek() != 'y') {
      if (!have_coeff) fail("expected coefficient or 'y'");
      return {c, 0};
    }
    ++pos_;
    int k = 1;
    if (peek() == '^') {
      ++pos_;
      const std::string digits = take_digits();
      if (digits.empty() || digits.size() > 4) fail("bad exponent");
      k = std::stoi(digits);
    }
    return {c, k};
  }

  IntPoly parse_dense() {
    if (s_.back() != ']') fail("unterminated coefficient list");
    const std::string body = s_.substr(1, s_.size() - 2);
    std::vector<Rational> coeffs;
    std::size_t start = 0;
    while (start <= body.size()) {
      const std::size_t comma = body.find(',', start);
      const std::string item = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (item.empty()) fail("empty coefficient");
      coeffs.push_back(parse_rational(item));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return IntPoly(std::move(coeffs));
  }

  std::string original_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(const std::string& text) { return PolyParser(text).parse(); }

std::pair<IntPoly, IntPoly> parse_pair(const std::string& text) {
  int depth = 0;
  std::size_t split = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if ((ch == ',' || ch == ';') && depth == 0) {
      if (split != std::string::npos) throw Error(Errc::Parse, "pair '" + text + "' has more than two parts");
      split = i;
    }
  }
  if (split == std::string::npos) throw Error(Errc::Parse, "pair '" + text + "' needs two polynomials");
  return {parse_poly(text.substr(0, split)), parse_poly(text.substr(split + 1))};
}

}  // namespace ffprog
