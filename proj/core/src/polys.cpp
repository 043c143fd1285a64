#include <ffprog/error.hpp>
#include <ffprog/polys.hpp>

#include <algorithm>
#include <limits>

namespace ffprog {

std::string_view to_string(Diagnosis d) noexcept {
  switch (d) {
    case Diagnosis::Ok: return "Ok";
    case Diagnosis::ZeroConstantViolated: return "ZeroConstantViolated";
    case Diagnosis::LinearlyDependent: return "LinearlyDependent";
    case Diagnosis::ZeroPolynomial: return "ZeroPolynomial";
  }
  return "Unknown";
}

Admissibility check_admissible(const IntPoly& p1, const IntPoly& p2) {
  if (p1.is_zero() || p2.is_zero()) return {false, Diagnosis::ZeroPolynomial};
  if (p1.coeff(0) != 0 || p2.coeff(0) != 0) return {false, Diagnosis::ZeroConstantViolated};
  // Two nonzero polynomials have rank 1 iff every 2x2 minor vanishes.
  const int n = std::max(p1.degree(), p2.degree());
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p1.coeff(i) * p2.coeff(j) != p1.coeff(j) * p2.coeff(i)) return {true, Diagnosis::Ok};
  return {false, Diagnosis::LinearlyDependent};
}

namespace {

std::int64_t compute_min_char(const NormalizedPair& np) {
  std::int64_t m = np.r2;
  const auto absorb = [&m](const IntPoly& poly) {
    for (const auto& c : poly.coeffs()) {
      m = std::max({m, abs_numerator_clamped(c), denominator_clamped(c)});
    }
  };
  absorb(np.p1);
  absorb(np.p2);
  absorb(np.p2prime);
  if (np.p3) absorb(*np.p3);
  for (const Rational* lead : {&np.lead_a, &np.lead_b, &np.lead_c})
    m = std::max(m, abs_numerator_clamped(*lead));
  return m == std::numeric_limits<std::int64_t>::max() ? m : m + 1;
}

}  // namespace

std::string NormalizedPair::id() const { return p1.to_string() + ";" + p2.to_string(); }

bool operator==(const NormalizedPair& a, const NormalizedPair& b) {
  // Provenance flags (swapped/replaced) are deliberately not compared.
  return a.p1 == b.p1 && a.p2 == b.p2 && a.p2prime == b.p2prime && a.p3 == b.p3 &&
         a.r1 == b.r1 && a.r2 == b.r2 && a.r3 == b.r3 && a.min_char == b.min_char;
}

NormalizedPair normalize_pair(const IntPoly& p1_in, const IntPoly& p2_in) {
  const auto adm = check_admissible(p1_in, p2_in);
  if (!adm.ok)
    throw Error(Errc::Inadmissible, "(" + p1_in.to_string() + ", " + p2_in.to_string() +
                                        "): " + std::string(to_string(adm.diagnosis)));
  if (std::max(p1_in.degree(), p2_in.degree()) > kMaxPairDegree)
    throw Error(Errc::Inadmissible, "degree above " + std::to_string(kMaxPairDegree));

  NormalizedPair np;
  np.p1 = p1_in;
  np.p2 = p2_in;
  if (np.p1.degree() > np.p2.degree()) {
    std::swap(np.p1, np.p2);
    np.swapped = true;
  }
  if (np.p1.degree() == np.p2.degree() && np.p1.leading() == np.p2.leading()) {
    np.p1 = np.p1 - np.p2;
    np.p2 = -np.p2;
    np.replaced = true;
  }

  np.r1 = np.p1.degree();
  np.r2 = np.p2.degree();
  np.lead_a = np.p1.leading();
  np.lead_b = np.p2.leading();
  np.p2prime = np.p2 - np.p1;
  np.lead_c = np.p2prime.leading();
  if (np.p2prime.degree() != np.r2) throw Error(Errc::Inadmissible, "deg(P2 - P1) < deg P2");

  if (np.r1 == np.r2) {
    Rational ratio = np.lead_b / np.lead_a;
    ratio.canonicalize();
    IntPoly p3 = np.p2 - ratio * np.p1;
    if (p3.is_zero() || p3.degree() >= np.r1)
      throw Error(Errc::Inadmissible, "P3 degree outside (0, r1)");
    np.r3 = p3.degree();
    np.lead_d = p3.leading();
    np.p3 = std::move(p3);
  }
  np.min_char = compute_min_char(np);
  return np;
}

MultiPoly alternating_sum(const IntPoly& poly, int plus1, int minus1, int minus2, int plus2) {
  const auto at = [&poly](int var) {
    return MultiPoly::substitute(poly, static_cast<std::size_t>(var - 1));
  };
  return at(plus1) - at(minus1) - at(minus2) + at(plus2);
}

AuxSystem build_aux_system(const NormalizedPair& np) {
  AuxSystem aux;
  aux.r1 = alternating_sum(np.p1, 4, 3, 2, 1);
  aux.r2 = alternating_sum(np.p1, 8, 7, 6, 5);
  aux.r3 = alternating_sum(np.p2, 6, 5, 2, 1);
  aux.r4 = alternating_sum(np.p2prime, 7, 5, 3, 1);
  aux.q = alternating_sum(np.p2, 8, 7, 4, 3);
  if (np.p3) {
    // P3 with the sign pattern of R1 on y1..y4 and of -R2 on y5..y8.
    aux.qprime = alternating_sum(*np.p3, 4, 3, 2, 1) - alternating_sum(*np.p3, 8, 7, 6, 5);
  }
  return aux;
}

}  // namespace ffprog
