#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <utility>

namespace ffprog::oracle {

namespace {
bool member(const SubsetSpec& s, Residue x) {
  for (Residue m : s.members())
    if (m == x) return true;
  return false;
}
}  // namespace

std::uint64_t count_progressions(const SubsetSpec& a, const SubsetSpec& b, const SubsetSpec& c,
                                 const IntPoly& p1, const IntPoly& p2, const PrimeField& field) {
  std::uint64_t n = 0;
  for (Residue x = 0; x < field.modulus(); ++x) {
    if (!member(a, x)) continue;
    for (Residue y = 0; y < field.modulus(); ++y) {
      const FieldElem fx = field.elem(x);
      const FieldElem fy = field.elem(y);
      if (member(b, (fx + eval_poly(p1, fy)).value()) && member(c, (fx + eval_poly(p2, fy)).value())) ++n;
    }
  }
  return n;
}

double lambda3(const GridFunction& f0, const GridFunction& f1, const GridFunction& f2,
               const IntPoly& p1, const IntPoly& p2, const PrimeField& field) {
  long double acc = 0;
  for (Residue x = 0; x < field.modulus(); ++x)
    for (Residue y = 0; y < field.modulus(); ++y) {
      const FieldElem fx = field.elem(x), fy = field.elem(y);
      acc += static_cast<long double>(f0[x]) * f1[(fx + eval_poly(p1, fy)).value()] *
             f2[(fx + eval_poly(p2, fy)).value()];
    }
  return static_cast<double>(acc / (static_cast<long double>(field.modulus()) * field.modulus()));
}

double lambda2(const GridFunction& f0, const GridFunction& f1, const IntPoly& p1, const PrimeField& field) {
  long double acc = 0;
  for (Residue x = 0; x < field.modulus(); ++x)
    for (Residue y = 0; y < field.modulus(); ++y)
      acc += static_cast<long double>(f0[x]) * f1[(field.elem(x) + eval_poly(p1, field.elem(y))).value()];
  return static_cast<double>(acc / (static_cast<long double>(field.modulus()) * field.modulus()));
}

namespace {
// Terms reduced to residues once, so the p^8 scan avoids rational arithmetic.
struct CompiledPoly {
  std::vector<std::pair<Residue, Monomial>> terms;

  CompiledPoly(const MultiPoly& g, const PrimeField& field) {
    for (const auto& [m, coeff] : g.terms()) terms.emplace_back(field.from_rational(coeff).value(), m);
  }

  Residue eval(const Point& y, const std::vector<std::vector<Residue>>& powers, const PrimeField& field) const {
    Residue acc = 0;
    for (const auto& [coeff, m] : terms) {
      Residue t = coeff;
      for (std::size_t i = 0; i < kNumVars; ++i)
        if (m.exponents[i] != 0) t = field.mul(t, powers[y[i]][m.exponents[i]]);
      acc = field.add(acc, t);
    }
    return acc;
  }
};
}  // namespace

VarietyPoints variety_points(const NormalizedPair& np, const PrimeField& field) {
  const AuxSystem aux = build_aux_system(np);
  const Residue p = field.modulus();
  const CompiledPoly r1(aux.r1, field), r2(aux.r2, field), r3(aux.r3, field), r4(aux.r4, field), q(aux.q, field);
  const int max_exp = std::max(np.r1, np.r2);
  std::vector<std::vector<Residue>> powers(p, std::vector<Residue>(max_exp + 1, 1));
  for (Residue v = 0; v < p; ++v)
    for (int e = 1; e <= max_exp; ++e) powers[v][e] = field.mul(powers[v][e - 1], v);
  VarietyPoints out;
  Point y{};
  while (true) {
    if (r1.eval(y, powers, field) == 0 && r2.eval(y, powers, field) == 0 && r3.eval(y, powers, field) == 0 &&
        r4.eval(y, powers, field) == 0) {
      out.points.push_back(y);
      out.q_values.push_back(q.eval(y, powers, field));
    }
    std::size_t i = 0;
    while (i < 8 && ++y[i] == p) y[i++] = 0;
    if (i == 8) break;
  }
  return out;
}

std::vector<std::uint64_t> fiber_histogram(const VarietyPoints& v, std::uint32_t p) {
  std::vector<std::uint64_t> c(p, 0);
  for (Residue q : v.q_values) ++c[q];
  return c;
}

std::uint64_t w_pair_count(const VarietyPoints& v) {
  std::uint64_t n = 0;
  for (Residue a : v.q_values)
    for (Residue b : v.q_values) n += (a == b);
  return n;
}

double lambda_prime(const GridFunction& f0, const GridFunction& f1, const VarietyPoints& v) {
  const std::uint32_t p = static_cast<std::uint32_t>(f0.size());
  long double acc = 0;
  for (Residue q : v.q_values)
    for (Residue x = 0; x < p; ++x) acc += static_cast<long double>(f0[x]) * f1[(x + q) % p];
  return static_cast<double>(acc / (static_cast<long double>(p) * v.q_values.size()));
}

std::complex<double> char_sum(const VarietyPoints& v, std::uint32_t p, std::uint32_t t) {
  std::complex<long double> acc = 0;
  for (Residue q : v.q_values) {
    const long double angle = 2.0L * std::numbers::pi_v<long double> * ((std::uint64_t{t} * q) % p) / p;
    acc += std::complex<long double>(std::cos(angle), std::sin(angle));
  }
  acc /= static_cast<long double>(v.q_values.size());
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::uint64_t expander_image(const SubsetSpec& a, const SubsetSpec& b, const IntPoly& poly,
                             const PrimeField& field) {
  std::set<Residue> image;
  for (Residue x : a.members())
    for (Residue y : b.members()) {
      const FieldElem fx = field.elem(x);
      image.insert((fx + eval_poly(poly, field.elem(y) - fx)).value());
    }
  return image.size();
}

}  // namespace ffprog::oracle
