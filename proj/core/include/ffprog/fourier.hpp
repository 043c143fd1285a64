#pragma once

#include <ffprog/field.hpp>
#include <ffprog/setfun.hpp>
#include <ffprog/variety.hpp>

#include <complex>
#include <vector>

namespace ffprog {

using Complex = std::complex<double>;

// Additive characters are indexed by t in [0, p): psi_t(x) = e^{2 pi i t x / p}.
// t = 0 is the trivial character.
std::vector<Complex> unit_roots(std::uint32_t p);

// coeffs[t] = E_x f(x) conj(psi_t(x)).
struct Spectrum {
  PrimeField field;
  std::vector<Complex> coeffs;
};

// Naive O(p^2) transform.
Spectrum dft(const GridFunction& f);

// f(x) = sum_t coeffs[t] psi_t(x); returns the real part.
GridFunction inverse_dft(const Spectrum& s);

// sum_t |coeffs[t]|^2, which equals ||f||^2 by Parseval.
double spectral_energy(const Spectrum& s);

// max_{t != 0} |E_y psi_t(P(y))| / (deg P * p^{-1/2}). The bound in use
// asserts this is at most 1. Throws Error(DegreeTooSmall) for deg P < 1 and
// Error(CharTooSmall) for p <= deg P.
double weil_ratio(const IntPoly& poly, const PrimeField& field);

// entry t = (1/|V|) sum_a c(a) psi_t(a); entry 0 is exactly 1.
// Throws Error(EmptyVariety) if |V| = 0.
std::vector<Complex> char_sums_over_fibers(const FiberDistribution& fibers);

// max_{t != 0} |char_sums_over_fibers(fibers)[t]|
double max_nontrivial_char_sum(const FiberDistribution& fibers);

// sum_t |f2^(t)|^2 E_{y in V} psi_t(Q(y)). The imaginary part vanishes up to
// rounding for real f2.
Complex lambda_prime_spectral_complex(const GridFunction& f2, const FiberDistribution& fibers);
double lambda_prime_spectral(const GridFunction& f2, const FiberDistribution& fibers);

}  // namespace ffprog
