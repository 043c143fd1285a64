#include <ffprog/error.hpp>
#include <ffprog/field.hpp>

#include <array>

namespace ffprog {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

void check_same_field(FieldElem a, FieldElem b) {
  if (a.modulus() != b.modulus())
    throw Error(Errc::Mismatch, "operands from different fields");
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : kBases) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::int64_t p) {
  if (p < 3 || p >= kMaxModulus)
    throw Error(Errc::OutOfRange, "modulus " + std::to_string(p) + " outside [3, 2^31)");
  if (!is_prime(static_cast<std::uint64_t>(p)))
    throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  p_ = static_cast<std::uint32_t>(p);
}

FieldElem PrimeField::elem(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return FieldElem(static_cast<Residue>(r), p_);
}

FieldElem PrimeField::from_rational(const Rational& q) const {
  const Residue den = static_cast<Residue>(mpz_fdiv_ui(q.get_den_mpz_t(), p_));
  if (den == 0)
    throw Error(Errc::BadCharacteristic,
                "p = " + std::to_string(p_) + " divides the denominator of " + to_string(q));
  const Residue num = static_cast<Residue>(mpz_fdiv_ui(q.get_num_mpz_t(), p_));
  return FieldElem(num, p_) * inv(FieldElem(den, p_));
}

FieldElem operator+(FieldElem a, FieldElem b) {
  check_same_field(a, b);
  const std::uint64_t s = std::uint64_t{a.value_} + b.value_;
  return FieldElem(static_cast<Residue>(s % a.modulus_), a.modulus_);
}

FieldElem operator-(FieldElem a, FieldElem b) {
  check_same_field(a, b);
  return FieldElem(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + a.modulus_ - b.value_,
                   a.modulus_);
}

FieldElem operator*(FieldElem a, FieldElem b) {
  check_same_field(a, b);
  return FieldElem(static_cast<Residue>(std::uint64_t{a.value_} * b.value_ % a.modulus_),
                   a.modulus_);
}

FieldElem FieldElem::operator-() const {
  return FieldElem(value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

FieldElem pow(FieldElem a, std::uint64_t e) {
  return FieldElem(static_cast<Residue>(powmod64(a.value_, e, a.modulus_)), a.modulus_);
}

FieldElem inv(FieldElem a) {
  if (a.value() == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  // Fermat: a^(p-2).
  return pow(a, a.modulus() - 2);
}

std::vector<Residue> reduce_coeffs(const IntPoly& poly, const PrimeField& field) {
  std::vector<Residue> out;
  out.reserve(poly.coeffs().size());
  for (const auto& c : poly.coeffs()) out.push_back(field.from_rational(c).value());
  return out;
}

FieldElem eval_poly(const IntPoly& poly, FieldElem x) {
  const PrimeField field(x.modulus());
  const auto coeffs = reduce_coeffs(poly, field);
  Residue acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = field.add(field.mul(acc, x.value()), *it);
  return field.elem(acc);
}

std::vector<Residue> value_table(const IntPoly& poly, const PrimeField& field) {
  const auto coeffs = reduce_coeffs(poly, field);
  const std::uint32_t p = field.modulus();
  std::vector<Residue> table(p);
  for (Residue y = 0; y < p; ++y) {
    Residue acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
      acc = field.add(field.mul(acc, y), *it);
    table[y] = acc;
  }
  return table;
}

}  // namespace ffprog
