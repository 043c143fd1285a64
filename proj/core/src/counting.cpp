#include <ffprog/counting.hpp>
#include <ffprog/error.hpp>
#include <ffprog/numeric.hpp>

#include <json.hpp>

#include <cinttypes>
#include <cmath>
#include <cstdio>

namespace ffprog {

namespace {

void check_field(const PrimeField& expected, const PrimeField& actual) {
  if (expected != actual) throw Error(Errc::Mismatch, "inputs live over different fields");
}

void check_pair(const NormalizedPair& np, const FiberDistribution& fibers) {
  if (!(np == fibers.pair))
    throw Error(Errc::Mismatch, "fibers were computed for " + fibers.pair.id() + ", not " + np.id());
}

double sum(const std::vector<double>& xs) { return pairwise_sum(std::span<const double>(xs)); }

std::string fixed9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

}  // namespace

std::string CountReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["p"] = p;
  j["pair"] = pair;
  j["size_a"] = size_a;
  j["size_b"] = size_b;
  j["size_c"] = size_c;
  j["exact_count"] = exact_count;
  j["expected"] = expected.get_str();
  j["error"] = error;
  j["bound"] = bound;
  j["constant_used"] = constant_used;
  j["ratio"] = ratio;
  return j.dump();
}

std::string count_csv_header() { return "p,pair,size_a,size_b,size_c,exact_count,expected,error,ratio"; }

std::string count_csv_row(const CountReport& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",", r.size_a, r.size_b,
                r.size_c, r.exact_count);
  return std::to_string(r.p) + ",\"" + r.pair + "\"," + buf + fixed9(r.expected.get_d()) + "," +
         fixed9(r.error) + "," + fixed9(r.ratio);
}

namespace {

std::uint64_t raw_count(const SubsetSpec& a, const SubsetSpec& b, const SubsetSpec& c,
                        const IntPoly& p1, const IntPoly& p2, const PrimeField& field) {
  check_field(field, a.field());
  check_field(field, b.field());
  check_field(field, c.field());
  const NormalizedPair np = normalize_pair(p1, p2);
  if (field.modulus() < np.min_char)
    throw Error(Errc::CharTooSmall, "p = " + std::to_string(field.modulus()) + " below min_char " +
                                        std::to_string(np.min_char));
  const auto v1 = value_table(p1, field);
  const auto v2 = value_table(p2, field);
  const auto in_b = b.mask();
  const auto in_c = c.mask();
  std::uint64_t n = 0;
  for (Residue y = 0; y < field.modulus(); ++y) {
    for (Residue x : a.members()) n += in_b[field.add(x, v1[y])] & in_c[field.add(x, v2[y])];
  }
  return n;
}

}  // namespace

CountReport count_progressions(const SubsetSpec& a, const SubsetSpec& b, const SubsetSpec& c,
                               const IntPoly& p1, const IntPoly& p2, const PrimeField& field,
                               double constant) {
  CountReport r;
  r.p = field.modulus();
  r.pair = p1.to_string() + ";" + p2.to_string();
  r.size_a = a.size();
  r.size_b = b.size();
  r.size_c = c.size();
  r.exact_count = raw_count(a, b, c, p1, p2, field);

  const BigInt product = BigInt(std::to_string(r.size_a)) * BigInt(std::to_string(r.size_b)) *
                         BigInt(std::to_string(r.size_c));
  r.expected = Rational(product, BigInt(r.p));
  r.expected.canonicalize();
  const Rational diff = abs(Rational(BigInt(std::to_string(r.exact_count))) - r.expected);
  r.error = diff.get_d();

  const double scale = std::sqrt(product.get_d()) * std::pow(static_cast<double>(r.p), kErrorExponent);
  r.constant_used = constant;
  r.bound = constant * scale;
  r.ratio = scale > 0.0 ? r.error / scale : 0.0;
  return r;
}

Rational lambda3_indicators(const SubsetSpec& a, const SubsetSpec& b, const SubsetSpec& c,
                            const IntPoly& p1, const IntPoly& p2, const PrimeField& field) {
  const std::uint64_t p = field.modulus();
  Rational q(BigInt(std::to_string(raw_count(a, b, c, p1, p2, field))), BigInt(std::to_string(p * p)));
  q.canonicalize();
  return q;
}

double lambda3(const GridFunction& f0, const GridFunction& f1, const GridFunction& f2,
               const IntPoly& p1, const IntPoly& p2, const PrimeField& field) {
  check_field(field, f0.field());
  check_field(field, f1.field());
  check_field(field, f2.field());
  const Residue p = field.modulus();
  const auto v1 = value_table(p1, field);
  const auto v2 = value_table(p2, field);
  std::vector<double> inner(p), outer(p);
  for (Residue y = 0; y < p; ++y) {
    for (Residue x = 0; x < p; ++x) inner[x] = f0[x] * f1[field.add(x, v1[y])] * f2[field.add(x, v2[y])];
    outer[y] = sum(inner);
  }
  return sum(outer) / (static_cast<double>(p) * p);
}

double lambda2(const GridFunction& f0, const GridFunction& f1, const IntPoly& p1, const PrimeField& field) {
  check_field(field, f0.field());
  check_field(field, f1.field());
  const Residue p = field.modulus();
  const auto v1 = value_table(p1, field);
  std::vector<double> inner(p), outer(p);
  for (Residue y = 0; y < p; ++y) {
    for (Residue x = 0; x < p; ++x) inner[x] = f0[x] * f1[field.add(x, v1[y])];
    outer[y] = sum(inner);
  }
  return sum(outer) / (static_cast<double>(p) * p);
}

double decomposition_residual(const SubsetSpec& a, const SubsetSpec& b, const SubsetSpec& c,
                              const IntPoly& p1, const IntPoly& p2, const PrimeField& field) {
  const auto one_a = GridFunction::indicator(a);
  const auto one_b = GridFunction::indicator(b);
  const auto one_c = GridFunction::indicator(c);
  const double lhs = lambda3(one_a, one_b, one_c, p1, p2, field);
  const double rhs = lambda3(one_a, one_b, balance(c), p1, p2, field) +
                     c.density() * lambda2(one_a, balance(b), p1, field) +
                     a.density() * b.density() * c.density();
  return std::abs(lhs - rhs);
}

double lambda_prime(const GridFunction& f0, const GridFunction& f1, const FiberDistribution& fibers) {
  check_field(fibers.field, f0.field());
  check_field(fibers.field, f1.field());
  if (fibers.v_size == 0) throw Error(Errc::EmptyVariety, "no points on V");
  const PrimeField& field = fibers.field;
  const Residue p = field.modulus();
  std::vector<double> inner(p), weighted(p, 0.0);
  for (Residue a = 0; a < p; ++a) {
    if (fibers.c[a] == 0) continue;
    for (Residue x = 0; x < p; ++x) inner[x] = f0[x] * f1[field.add(x, a)];
    weighted[a] = static_cast<double>(fibers.c[a]) * sum(inner);
  }
  return sum(weighted) / (static_cast<double>(p) * static_cast<double>(fibers.v_size));
}

CauchySchwarzSides cauchy_schwarz_sides(const GridFunction& f0, const GridFunction& f1, const GridFunction& f2,
                         const NormalizedPair& np, const FiberDistribution& fibers) {
  check_pair(np, fibers);
  const double p = fibers.field.modulus();
  CauchySchwarzSides s;
  s.lhs = lambda3(f0, f1, f2, np.p1, np.p2, fibers.field);
  s.rhs = static_cast<double>(fibers.v_size) / std::pow(p, 4) * l2_norm(f0) * l2_norm(f1) *
          std::pow(l2_norm(f2), 0.75) * std::pow(std::abs(lambda_prime(f2, f2, fibers)), 0.125);
  return s;
}

double main_theorem_ratio(const GridFunction& f0, const GridFunction& f1, const GridFunction& f2,
                          const NormalizedPair& np, const FiberDistribution& fibers) {
  check_pair(np, fibers);
  if (std::abs(f2.mean()) > kTolerance)
    throw Error(Errc::NotMeanZero, "E f2 = " + std::to_string(f2.mean()));
  const double norms = l2_norm(f0) * l2_norm(f1) * l2_norm(f2);
  if (norms == 0.0) return 0.0;
  const double p = fibers.field.modulus();
  const double value = lambda3(f0, f1, f2, np.p1, np.p2, fibers.field);
  return std::abs(value) / (norms * std::pow(p, -1.0 / 16.0));
}

std::uint64_t expander_image(const SubsetSpec& a, const SubsetSpec& b, const IntPoly& poly,
                             const PrimeField& field) {
  check_field(field, a.field());
  check_field(field, b.field());
  if (poly.degree() < 2) throw Error(Errc::DegreeTooSmall, "expander needs deg P >= 2");
  const auto values = value_table(poly, field);
  std::vector<std::uint8_t> hit(field.modulus(), 0);
  for (Residue x : a.members())
    for (Residue y : b.members()) hit[field.add(x, values[field.sub(y, x)])] = 1;
  std::uint64_t n = 0;
  for (auto h : hit) n += h;
  return n;
}

}  // namespace ffprog
