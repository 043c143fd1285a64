#include <ffprog/error.hpp>
#include <ffprog/numeric.hpp>
#include <ffprog/setfun.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>

namespace ffprog {

SubsetSpec::SubsetSpec(const PrimeField& field, std::vector<std::int64_t> members) : field_(field) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_.reserve(members.size());
  for (auto m : members) {
    if (m < 0 || m >= static_cast<std::int64_t>(field.modulus()))
      throw Error(Errc::OutOfRange, "residue " + std::to_string(m) + " not in [0, " +
                                        std::to_string(field.modulus()) + ")");
    members_.push_back(static_cast<Residue>(m));
  }
}

SubsetSpec SubsetSpec::empty(const PrimeField& field) { return SubsetSpec(field, {}); }

SubsetSpec SubsetSpec::full(const PrimeField& field) {
  std::vector<std::int64_t> all(field.modulus());
  std::iota(all.begin(), all.end(), 0);
  return SubsetSpec(field, std::move(all));
}

std::vector<std::uint8_t> SubsetSpec::mask() const {
  std::vector<std::uint8_t> m(field_.modulus(), 0);
  for (Residue x : members_) m[x] = 1;
  return m;
}

GridFunction::GridFunction(const PrimeField& field, std::vector<double> values)
    : field_(field), values_(std::move(values)) {
  if (values_.size() != field.modulus())
    throw Error(Errc::Mismatch, "grid function needs exactly p values");
}

GridFunction GridFunction::constant(const PrimeField& field, double c) {
  return GridFunction(field, std::vector<double>(field.modulus(), c));
}

GridFunction GridFunction::indicator(const SubsetSpec& s) {
  std::vector<double> v(s.field().modulus(), 0.0);
  for (Residue x : s.members()) v[x] = 1.0;
  return GridFunction(s.field(), std::move(v));
}

double GridFunction::mean() const {
  return pairwise_sum(std::span<const double>(values_)) / static_cast<double>(values_.size());
}

GridFunction GridFunction::centered() const {
  const double m = mean();
  std::vector<double> v = values_;
  for (auto& x : v) x -= m;
  return GridFunction(field_, std::move(v));
}

GridFunction balance(const SubsetSpec& s) {
  const double density = s.density();
  std::vector<double> v(s.field().modulus(), -density);
  for (Residue x : s.members()) v[x] = 1.0 - density;
  return GridFunction(s.field(), std::move(v));
}

double l2_norm(const GridFunction& f) {
  std::vector<double> sq(f.size());
  for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = f.values()[i] * f.values()[i];
  return std::sqrt(pairwise_sum(std::span<const double>(sq)) / static_cast<double>(sq.size()));
}

namespace {
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
}  // namespace

SubsetSpec random_subset(const PrimeField& field, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0))
    throw Error(Errc::BadDensity, "density " + std::to_string(density) + " not in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> members;
  for (Residue x = 0; x < field.modulus(); ++x)
    if (unit_draw(rng) < density) members.push_back(x);
  return SubsetSpec(field, std::move(members));
}

GridFunction random_function(const PrimeField& field, std::uint64_t seed, double lo, double hi) {
  std::mt19937_64 rng(seed);
  std::vector<double> v(field.modulus());
  for (auto& x : v) x = lo + (hi - lo) * unit_draw(rng);
  return GridFunction(field, std::move(v));
}

SubsetSpec load_subset(const std::string& source, const PrimeField& field) {
  constexpr std::string_view kRandom = "random:";
  if (source.starts_with(kRandom)) {
    const std::string rest = source.substr(kRandom.size());
    const auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw Error(Errc::Parse, "expected random:<density>:<seed>, got '" + source + "'");
    double density = 0.0;
    std::uint64_t seed = 0;
    try {
      std::size_t used = 0;
      density = std::stod(rest.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("trailing");
      const std::string seed_text = rest.substr(colon + 1);
      seed = std::stoull(seed_text, &used);
      if (used != seed_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(Errc::Parse, "expected random:<density>:<seed>, got '" + source + "'");
    }
    return random_subset(field, density, seed);
  }

  std::ifstream in(source);
  if (!in) throw Error(Errc::Io, "cannot open subset file '" + source + "'");
  std::vector<std::int64_t> members;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    try {
      std::size_t used = 0;
      members.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(Errc::Parse, source + ":" + std::to_string(line_no) + ": bad residue '" + token + "'");
    }
  }
  return SubsetSpec(field, std::move(members));
}

}  // namespace ffprog
