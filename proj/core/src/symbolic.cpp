#include <ffprog/error.hpp>
#include <ffprog/symbolic.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

namespace ffprog {

using cplx = std::complex<double>;

VarOrder::VarOrder(std::array<std::size_t, kNumVars> precedence) : precedence_(precedence) {
  std::array<std::size_t, kNumVars> sorted = precedence;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (sorted[i] != i) throw Error(Errc::OutOfRange, "variable order is not a permutation of y1..y8");
}

VarOrder VarOrder::parse(const std::string& text) {
  std::array<std::size_t, kNumVars> prec{};
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '>')) ++pos;
    if (pos >= text.size()) break;
    if (text[pos] != 'y' || pos + 1 >= text.size())
      throw Error(Errc::Parse, "bad variable order '" + text + "'");
    const char digit = text[pos + 1];
    if (digit < '1' || digit > '8' || n >= kNumVars)
      throw Error(Errc::Parse, "bad variable order '" + text + "'");
    prec[n++] = static_cast<std::size_t>(digit - '1');
    pos += 2;
  }
  if (n != kNumVars) throw Error(Errc::Parse, "variable order must name all of y1..y8");
  return VarOrder(prec);
}

VarOrder VarOrder::natural() { return VarOrder({0, 1, 2, 3, 4, 5, 6, 7}); }
VarOrder VarOrder::leading_term_order() { return VarOrder({7, 3, 6, 2, 5, 1, 4, 0}); }
VarOrder VarOrder::equal_degree_order() { return VarOrder({7, 3, 6, 2, 5, 4, 1, 0}); }

std::string VarOrder::to_string() const {
  std::string out;
  for (std::size_t v : precedence_) {
    if (!out.empty()) out += ">";
    out += "y" + std::to_string(v + 1);
  }
  return out;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b, const VarOrder& order) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  for (std::size_t v : order.precedence())
    if (auto c = a.exponents[v] <=> b.exponents[v]; c != 0) return c;
  return std::strong_ordering::equal;
}

Monomial leading_monomial(const MultiPoly& g, const VarOrder& order) {
  if (g.is_zero()) throw Error(Errc::ZeroPolynomial, "leading monomial of 0");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : g.terms())
    if (best == nullptr || grlex_compare(m, *best, order) > 0) best = &m;
  return *best;
}

bool LmReport::pass() const noexcept {
  return std::all_of(claims.begin(), claims.end(), [](const LmClaim& c) { return c.holds(); });
}

std::string LmReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["order"] = VarOrder::leading_term_order().to_string();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : claims)
    arr.push_back({{"poly", c.name},
                   {"expected", c.expected.to_string()},
                   {"actual", c.actual.to_string()},
                   {"pass", c.holds()}});
  j["claims"] = std::move(arr);
  j["pass"] = pass();
  return j.dump();
}

LmReport check_lm_claims(const AuxSystem& aux, const NormalizedPair& np) {
  const VarOrder order = VarOrder::leading_term_order();
  const auto r1 = static_cast<std::uint16_t>(np.r1);
  const auto r2 = static_cast<std::uint16_t>(np.r2);
  LmReport report;
  report.claims = {
      {"R1", Monomial::var(3, r1), leading_monomial(aux.r1, order)},
      {"R2", Monomial::var(7, r1), leading_monomial(aux.r2, order)},
      {"R3", Monomial::var(5, r2), leading_monomial(aux.r3, order)},
      {"R4", Monomial::var(6, r2), leading_monomial(aux.r4, order)},
  };
  return report;
}

bool verify_lm_claims(const AuxSystem& aux, const NormalizedPair& np) {
  return check_lm_claims(aux, np).pass();
}

MultiPoly qprime_identity_residual(const AuxSystem& aux, const NormalizedPair& np) {
  if (!aux.qprime || !np.equal_degrees())
    throw Error(Errc::Mismatch, "Q' exists only for equal-degree pairs");
  Rational ratio = np.lead_b / np.lead_a;
  ratio.canonicalize();
  return aux.r3 - aux.q - ratio * (aux.r1 - aux.r2) - *aux.qprime;
}

std::string_view to_string(CertificateCase c) noexcept {
  return c == CertificateCase::R1LessR2 ? "R1LessR2" : "R1EqualsR2";
}

namespace {

// e_n(a) = exp(2 pi i a / n)
cplx unit_root(double a, double n) { return std::polar(1.0, 2.0 * std::numbers::pi * a / n); }

cplx ipow(cplx z, int k) {
  cplx r(1.0, 0.0);
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

}  // namespace

Certificate certify_separation_unequal(int r1, int r2, double threshold) {
  if (r1 < 1 || r2 > kMaxPairDegree || r1 >= r2)
    throw Error(Errc::BadDegrees, "need 1 <= r1 < r2 <= 12, got (" + std::to_string(r1) + ", " +
                                      std::to_string(r2) + ")");
  const int g = std::gcd(r1, r2);
  const int r1p = r1 / g;
  const int r2p = r2 / g;
  // (e_{r2'}(1) - 1)^{r2'}
  const cplx shift = ipow(unit_root(1, r2p) - 1.0, r2p);
  const double sign = (r1p % 2 == 0) ? 1.0 : -1.0;  // (-1)^{r1'}

  Certificate cert;
  cert.case_tag = CertificateCase::R1LessR2;
  cert.params = {r1, r2};
  cert.threshold = threshold;
  cert.min_modulus = std::numeric_limits<double>::infinity();
  const double lhs = std::abs(shift);
  // Roots of (z^{r1} - 1)^{r2'}: the r1-th roots of unity.
  for (int a = 0; a < r1; ++a) {
    const cplx omega = unit_root(a, r1);
    const cplx value = ipow(ipow(omega, r2) - 1.0, r1p) - sign * shift;
    cert.min_modulus = std::min(cert.min_modulus, std::abs(value));

    const cplx z = unit_root(static_cast<double>(a) * r2p, r1p);
    if (std::abs(z - 1.0) > 1e-12 && !(lhs < std::pow(std::abs(z - 1.0), r1p)))
      cert.strict_inequality_holds = false;
  }
  cert.pass = cert.min_modulus > threshold;
  return cert;
}

Certificate certify_separation_equal(int r1, int r3, double threshold) {
  if (r3 < 1 || r1 > kMaxPairDegree || r3 >= r1)
    throw Error(Errc::BadDegrees, "need 1 <= r3 < r1 <= 12, got (" + std::to_string(r1) + ", " +
                                      std::to_string(r3) + ")");
  Certificate cert;
  cert.case_tag = CertificateCase::R1EqualsR2;
  cert.params = {r1, r3};
  cert.threshold = threshold;
  cert.min_modulus = std::numeric_limits<double>::infinity();

  const double x = static_cast<double>(r3) / r1;
  cert.positivity_value = std::pow(2.0, x + 1.0) - std::pow(3.0, x) - 1.0;
  cert.positivity_holds = cert.positivity_value > 1e-6;
  const double scale = std::pow(2.0, 1.0 / r1);
  const double floor_bound = std::pow(std::pow(2.0, x + 1.0) - 1.0, r1);

  // Roots of z^{r1} + 2: 2^{1/r1} e_{r1}(a/2) for odd a.
  for (int k = 0; k < r1; ++k) {
    const int a = 2 * k + 1;
    const cplx omega = scale * unit_root(a / 2.0, r1);
    const cplx value = ipow(2.0 * ipow(omega, r3) + 1.0, r1) - ipow(ipow(omega, r1) - 1.0, r3);
    cert.min_modulus = std::min(cert.min_modulus, std::abs(value));
    const cplx inner = std::pow(2.0, x + 1.0) * unit_root(a * r3 / 2.0, r1) + 1.0;
    cert.root_lower_bounds.push_back({std::abs(ipow(inner, r1)), floor_bound});
  }
  cert.pass = cert.min_modulus > threshold;
  return cert;
}

std::string Certificate::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["case"] = std::string(to_string(case_tag));
  j["params"] = params;
  j["min_modulus"] = min_modulus;
  j["threshold"] = threshold;
  j["pass"] = pass;
  if (case_tag == CertificateCase::R1LessR2) {
    j["strict_inequality_holds"] = strict_inequality_holds;
  } else {
    j["positivity_value"] = positivity_value;
    j["positivity_holds"] = positivity_holds;
    j["root_lower_bounds"] = root_lower_bounds;
  }
  return j.dump();
}

}  // namespace ffprog
