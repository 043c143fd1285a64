#include <ffprog/error.hpp>
#include <ffprog/fourier.hpp>
#include <ffprog/numeric.hpp>

#include <cmath>
#include <numbers>

namespace ffprog {

std::vector<Complex> unit_roots(std::uint32_t p) {
  std::vector<Complex> roots(p);
  for (std::uint32_t k = 0; k < p; ++k)
    roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / p);
  return roots;
}

namespace {

void check_field(const PrimeField& a, const PrimeField& b) {
  if (a != b) throw Error(Errc::Mismatch, "inputs live over different fields");
}

// (1/norm) sum_a weight[a] psi_t(a) for every t.
template <typename Weight>
std::vector<Complex> character_transform(const std::vector<Weight>& weight, double norm) {
  const std::uint32_t p = static_cast<std::uint32_t>(weight.size());
  const auto roots = unit_roots(p);
  std::vector<Complex> out(p);
  std::vector<Complex> terms(p);
  for (std::uint32_t t = 0; t < p; ++t) {
    std::uint32_t idx = 0;
    for (std::uint32_t a = 0; a < p; ++a) {
      terms[a] = static_cast<double>(weight[a]) * roots[idx];
      idx += t;
      if (idx >= p) idx -= p;
    }
    out[t] = pairwise_sum(std::span<const Complex>(terms)) / norm;
  }
  return out;
}

}  // namespace

Spectrum dft(const GridFunction& f) {
  const std::uint32_t p = f.field().modulus();
  const auto roots = unit_roots(p);
  Spectrum s{f.field(), std::vector<Complex>(p)};
  std::vector<Complex> terms(p);
  for (std::uint32_t t = 0; t < p; ++t) {
    std::uint32_t idx = 0;
    for (std::uint32_t x = 0; x < p; ++x) {
      terms[x] = f[x] * std::conj(roots[idx]);
      idx += t;
      if (idx >= p) idx -= p;
    }
    s.coeffs[t] = pairwise_sum(std::span<const Complex>(terms)) / static_cast<double>(p);
  }
  return s;
}

GridFunction inverse_dft(const Spectrum& s) {
  const std::uint32_t p = s.field.modulus();
  const auto roots = unit_roots(p);
  std::vector<double> values(p);
  std::vector<Complex> terms(p);
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint32_t idx = 0;
    for (std::uint32_t t = 0; t < p; ++t) {
      terms[t] = s.coeffs[t] * roots[idx];
      idx += x;
      if (idx >= p) idx -= p;
    }
    values[x] = pairwise_sum(std::span<const Complex>(terms)).real();
  }
  return GridFunction(s.field, std::move(values));
}

double spectral_energy(const Spectrum& s) {
  std::vector<double> sq(s.coeffs.size());
  for (std::size_t t = 0; t < sq.size(); ++t) sq[t] = std::norm(s.coeffs[t]);
  return pairwise_sum(std::span<const double>(sq));
}

double weil_ratio(const IntPoly& poly, const PrimeField& field) {
  const int d = poly.degree();
  if (d < 1) throw Error(Errc::DegreeTooSmall, "Weil ratio needs deg P >= 1");
  const std::uint32_t p = field.modulus();
  if (p <= static_cast<std::uint32_t>(d))
    throw Error(Errc::CharTooSmall, "p = " + std::to_string(p) + " <= deg P = " + std::to_string(d));
  std::vector<std::uint64_t> hist(p, 0);
  for (Residue v : value_table(poly, field)) ++hist[v];
  const auto sums = character_transform(hist, static_cast<double>(p));
  double worst = 0.0;
  for (std::uint32_t t = 1; t < p; ++t) worst = std::max(worst, std::abs(sums[t]));
  return worst / (d / std::sqrt(static_cast<double>(p)));
}

std::vector<Complex> char_sums_over_fibers(const FiberDistribution& fibers) {
  if (fibers.v_size == 0) throw Error(Errc::EmptyVariety, "no points on V");
  auto sums = character_transform(fibers.c, static_cast<double>(fibers.v_size));
  sums[0] = Complex(1.0, 0.0);
  return sums;
}

double max_nontrivial_char_sum(const FiberDistribution& fibers) {
  const auto sums = char_sums_over_fibers(fibers);
  double worst = 0.0;
  for (std::size_t t = 1; t < sums.size(); ++t) worst = std::max(worst, std::abs(sums[t]));
  return worst;
}

Complex lambda_prime_spectral_complex(const GridFunction& f2, const FiberDistribution& fibers) {
  check_field(f2.field(), fibers.field);
  const Spectrum s = dft(f2);
  const auto sums = char_sums_over_fibers(fibers);
  std::vector<Complex> terms(sums.size());
  for (std::size_t t = 0; t < terms.size(); ++t) terms[t] = std::norm(s.coeffs[t]) * sums[t];
  return pairwise_sum(std::span<const Complex>(terms));
}

double lambda_prime_spectral(const GridFunction& f2, const FiberDistribution& fibers) {
  return lambda_prime_spectral_complex(f2, fibers).real();
}

}  // namespace ffprog
