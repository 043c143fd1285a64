#pragma once

#include <ffprog/field.hpp>
#include <ffprog/polys.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ffprog {

// For each v in F_p, the sorted list of y with P(y) = v, stored CSR-style.
class PreimageTable {
 public:
  // Unchecked: builds from a precomputed value table (values[y] = P(y)).
  static PreimageTable from_values(std::span<const Residue> values);

  std::span<const Residue> roots(Residue v) const noexcept {
    return {roots_.data() + offsets_[v], roots_.data() + offsets_[v + 1]};
  }
  std::size_t modulus() const noexcept { return offsets_.size() - 1; }

 private:
  std::vector<std::uint32_t> offsets_;  // size p + 1
  std::vector<Residue> roots_;          // size p
};

// Throws Error(CharTooSmall) when p <= deg P or the leading coefficient
// vanishes mod p (so a fiber could exceed deg P points).
PreimageTable build_preimage_table(const IntPoly& poly, const PrimeField& field);

// c[a] = #{y in V(F_p) : Q(y) = a}.
struct FiberDistribution {
  PrimeField field;
  NormalizedPair pair;
  std::vector<std::uint64_t> c;
  std::uint64_t v_size = 0;     // sum c[a]
  std::uint64_t w_size = 0;     // sum c[a]^2
  std::uint64_t max_fiber = 0;  // max c[a]

  // Fills v_size, w_size, max_fiber from c.
  void recompute_totals();
};

struct EnumerationOptions {
  // Upper limit on the p^4 * r2^2 work estimate.
  double budget = 2e9;
  unsigned workers = 1;
  // When false, primes below pair.min_char are enumerated anyway (the
  // algorithm itself is valid for every p; only the degree bounds are not).
  bool enforce_min_char = true;
};

// Estimated elementary steps for the fast path: p^4 * r2^2.
double enumeration_work(const NormalizedPair& np, const PrimeField& field);

// Enumerates V over (y1, y2, y3, y5) and resolves y4, y6, y7, y8 through
// preimage tables of P1, P2, P2' and P1. Deterministic for any worker count.
// Throws Error(CharTooSmall), Error(WorkBudgetExceeded).
FiberDistribution enumerate_fibers(const NormalizedPair& np, const PrimeField& field,
                                   const EnumerationOptions& options = {});

// Direct scan of all p^8 points (budget compared against p^8).
FiberDistribution enumerate_fibers_naive(const NormalizedPair& np, const PrimeField& field,
                                         const EnumerationOptions& options = {});

struct GrowthRow {
  std::uint32_t p = 0;
  std::uint64_t v_size = 0;
  double v_ratio = 0.0;  // |V| / p^4
  std::uint64_t w_size = 0;
  double w_ratio = 0.0;  // |W| / p^7
  std::uint64_t max_fiber = 0;
  double fiber_ratio = 0.0;     // max_fiber / p^3
  double charsum_scaled = 0.0;  // max_{t != 0} |E_{y in V} psi_t(Q(y))| * p^{1/2}
};

GrowthRow growth_row(const FiberDistribution& fibers);

// One row per prime, in the given order. Errors propagate from enumerate_fibers.
std::vector<GrowthRow> growth_report(const NormalizedPair& np, std::span<const std::uint32_t> primes,
                                     const EnumerationOptions& options = {});

std::string growth_csv_header();
std::string growth_csv_row(const std::string& pair_id, const GrowthRow& row);

// 16 hex digits of FNV-1a over the pair id.
std::string pair_hash(const NormalizedPair& np);

// {"schema":1,"p":..,"pair":..,"pair_hash":..,"v_size":..,"w_size":..,"max_fiber":..,"c":[..]}
std::string fibers_to_json(const FiberDistribution& fibers);
// Throws Error(Parse) on malformed input and Error(Mismatch) when the stored
// totals disagree with c.
FiberDistribution fibers_from_json(const std::string& text);

void save_fibers(const FiberDistribution& fibers, const std::string& path);
FiberDistribution load_fibers(const std::string& path);

}  // namespace ffprog
