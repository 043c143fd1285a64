#pragma once

#include <ffprog/field.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ffprog {

// A subset of F_p, members strictly increasing.
class SubsetSpec {
 public:
  // Sorts and deduplicates; throws Error(OutOfRange) for residues >= p.
  SubsetSpec(const PrimeField& field, std::vector<std::int64_t> members);
  static SubsetSpec empty(const PrimeField& field);
  static SubsetSpec full(const PrimeField& field);

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<Residue>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  double density() const noexcept {
    return static_cast<double>(members_.size()) / field_.modulus();
  }
  // mask()[x] == 1 iff x is a member.
  std::vector<std::uint8_t> mask() const;

  friend bool operator==(const SubsetSpec&, const SubsetSpec&) = default;

 private:
  PrimeField field_;
  std::vector<Residue> members_;
};

// A real-valued function on F_p, values indexed by residue.
class GridFunction {
 public:
  // Throws Error(Mismatch) unless values.size() == p.
  GridFunction(const PrimeField& field, std::vector<double> values);
  static GridFunction constant(const PrimeField& field, double c);
  static GridFunction indicator(const SubsetSpec& s);

  const PrimeField& field() const noexcept { return field_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](Residue x) const noexcept { return values_[x]; }
  std::size_t size() const noexcept { return values_.size(); }

  double mean() const;
  // f - mean(f)
  GridFunction centered() const;

 private:
  PrimeField field_;
  std::vector<double> values_;
};

// 1_A - |A|/p
GridFunction balance(const SubsetSpec& s);

// (E_x |f(x)|^2)^{1/2}
double l2_norm(const GridFunction& f);

// Each residue is kept independently with probability `density`, visiting
// residues in increasing order and drawing one std::mt19937_64 output per
// residue: keep x iff (draw >> 11) * 2^-53 < density. Throws Error(BadDensity)
// outside [0, 1].
SubsetSpec random_subset(const PrimeField& field, double density, std::uint64_t seed);

// Values drawn uniformly from [lo, hi) with the same generator, one draw per
// residue in increasing order.
GridFunction random_function(const PrimeField& field, std::uint64_t seed, double lo = -1.0,
                             double hi = 1.0);

// Either "random:<density>:<seed>" or a path to a file with one residue per
// line ('#' starts a comment). Throws Error(Parse) / Error(Io).
SubsetSpec load_subset(const std::string& source, const PrimeField& field);

}  // namespace ffprog
