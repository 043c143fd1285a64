#include <ffprog/error.hpp>
#include <ffprog/multipoly.hpp>

#include <numeric>

namespace ffprog {

Monomial Monomial::var(std::size_t var, std::uint16_t power) {
  if (var >= kNumVars) throw Error(Errc::OutOfRange, "variable index " + std::to_string(var));
  Monomial m;
  m.exponents[var] = power;
  return m;
}

unsigned Monomial::total_degree() const noexcept {
  return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kNumVars; ++i)
    m.exponents[i] = static_cast<std::uint16_t>(exponents[i] + other.exponents[i]);
  return m;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "y" + std::to_string(i + 1);
    if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
  }
  return out.empty() ? "1" : out;
}

MultiPoly MultiPoly::constant(const Rational& c) { return term(c, Monomial::unit()); }

MultiPoly MultiPoly::variable(std::size_t var) { return term(Rational(1), Monomial::var(var)); }

MultiPoly MultiPoly::term(const Rational& c, const Monomial& m) {
  MultiPoly p;
  p.add_term(m, c);
  return p;
}

MultiPoly MultiPoly::substitute(const IntPoly& poly, std::size_t var) {
  MultiPoly p;
  for (int k = 0; k <= poly.degree(); ++k)
    p.add_term(Monomial::var(var, static_cast<std::uint16_t>(k)), poly.coeff(k));
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::total_degree() const {
  if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "degree of the zero polynomial");
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& a) {
  MultiPoly r;
  if (c == 0) return r;
  r.terms_ = a.terms_;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

Residue MultiPoly::evaluate_mod(std::span<const Residue, kNumVars> point, const PrimeField& field) const {
  Residue acc = 0;
  for (const auto& [m, c] : terms_) {
    Residue t = field.from_rational(c).value();
    for (std::size_t i = 0; i < kNumVars; ++i)
      for (unsigned e = 0; e < m.exponents[i]; ++e) t = field.mul(t, point[i]);
    acc = field.add(acc, t);
  }
  return acc;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Reverse storage order: higher powers of y1 first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (m == Monomial::unit()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += m.to_string();
    }
  }
  return out;
}

}  // namespace ffprog
