#include <ffprog/error.hpp>
#include <ffprog/fourier.hpp>
#include <ffprog/variety.hpp>

#include <json.hpp>

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace ffprog {

PreimageTable PreimageTable::from_values(std::span<const Residue> values) {
  const std::size_t p = values.size();
  PreimageTable t;
  t.offsets_.assign(p + 1, 0);
  for (Residue v : values) ++t.offsets_[v + 1];
  for (std::size_t v = 0; v < p; ++v) t.offsets_[v + 1] += t.offsets_[v];
  t.roots_.resize(p);
  std::vector<std::uint32_t> cursor(t.offsets_.begin(), t.offsets_.end() - 1);
  // Increasing y keeps every list sorted.
  for (std::size_t y = 0; y < p; ++y) t.roots_[cursor[values[y]]++] = static_cast<Residue>(y);
  return t;
}

PreimageTable build_preimage_table(const IntPoly& poly, const PrimeField& field) {
  const std::uint32_t p = field.modulus();
  if (poly.degree() >= static_cast<int>(p))
    throw Error(Errc::CharTooSmall, "p = " + std::to_string(p) + " <= deg P = " + std::to_string(poly.degree()));
  if (!poly.is_zero() && field.from_rational(poly.leading()).value() == 0)
    throw Error(Errc::CharTooSmall, "leading coefficient of " + poly.to_string() + " vanishes mod " + std::to_string(p));
  const auto values = value_table(poly, field);
  return PreimageTable::from_values(values);
}

void FiberDistribution::recompute_totals() {
  v_size = 0;
  w_size = 0;
  max_fiber = 0;
  for (auto x : c) {
    v_size += x;
    w_size += x * x;
    max_fiber = std::max(max_fiber, x);
  }
}

double enumeration_work(const NormalizedPair& np, const PrimeField& field) {
  const double p = field.modulus();
  return p * p * p * p * np.r2 * np.r2;
}

namespace {

void check_char(const NormalizedPair& np, const PrimeField& field, const EnumerationOptions& options) {
  if (options.enforce_min_char && field.modulus() < np.min_char)
    throw Error(Errc::CharTooSmall, "p = " + std::to_string(field.modulus()) + " below min_char " +
                                        std::to_string(np.min_char) + " of " + np.id());
}

void check_budget(double work, const EnumerationOptions& options) {
  if (work > options.budget) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "estimated work %.3g exceeds budget %.3g", work, options.budget);
    throw Error(Errc::WorkBudgetExceeded, buf);
  }
}

struct Tables {
  std::vector<Residue> v1, v2, v2p;
  PreimageTable t1, t2, t2p;
};

Tables make_tables(const NormalizedPair& np, const PrimeField& field) {
  Tables t;
  t.v1 = value_table(np.p1, field);
  t.v2 = value_table(np.p2, field);
  t.v2p = value_table(np.p2prime, field);
  t.t1 = PreimageTable::from_values(t.v1);
  t.t2 = PreimageTable::from_values(t.v2);
  t.t2p = PreimageTable::from_values(t.v2p);
  return t;
}

// Histogram contribution of all points with y1 in [lo, hi).
void enumerate_shard(const Tables& t, const PrimeField& f, Residue lo, Residue hi,
                     std::vector<std::uint64_t>& c) {
  const Residue p = f.modulus();
  std::vector<Residue> q_head;  // P2(y3) - P2(y4) for each admissible y4
  for (Residue y1 = lo; y1 < hi; ++y1) {
    for (Residue y2 = 0; y2 < p; ++y2) {
      const Residue shift4 = f.sub(t.v1[y2], t.v1[y1]);   // R1: P1(y4) = P1(y3) + shift4
      const Residue shift6 = f.sub(t.v2[y2], t.v2[y1]);   // R3: P2(y6) = P2(y5) + shift6
      for (Residue y3 = 0; y3 < p; ++y3) {
        const auto y4s = t.t1.roots(f.add(t.v1[y3], shift4));
        if (y4s.empty()) continue;
        q_head.clear();
        for (Residue y4 : y4s) q_head.push_back(f.sub(t.v2[y3], t.v2[y4]));
        const Residue shift7 = f.sub(t.v2p[y3], t.v2p[y1]);  // R4: P2'(y7) = P2'(y5) + shift7
        for (Residue y5 = 0; y5 < p; ++y5) {
          const auto y6s = t.t2.roots(f.add(t.v2[y5], shift6));
          if (y6s.empty()) continue;
          const auto y7s = t.t2p.roots(f.add(t.v2p[y5], shift7));
          if (y7s.empty()) continue;
          for (Residue y6 : y6s) {
            const Residue shift8 = f.sub(t.v1[y6], t.v1[y5]);  // R2: P1(y8) = P1(y7) + shift8
            for (Residue y7 : y7s) {
              for (Residue y8 : t.t1.roots(f.add(t.v1[y7], shift8))) {
                const Residue tail = f.sub(t.v2[y8], t.v2[y7]);
                for (Residue head : q_head) ++c[f.add(tail, head)];
              }
            }
          }
        }
      }
    }
  }
}

}  // namespace

FiberDistribution enumerate_fibers(const NormalizedPair& np, const PrimeField& field,
                                   const EnumerationOptions& options) {
  check_char(np, field, options);
  check_budget(enumeration_work(np, field), options);

  const Tables tables = make_tables(np, field);
  const Residue p = field.modulus();
  const unsigned workers = std::clamp<unsigned>(options.workers, 1, p);

  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(p, 0));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const Residue lo = static_cast<Residue>(std::uint64_t{p} * w / workers);
      const Residue hi = static_cast<Residue>(std::uint64_t{p} * (w + 1) / workers);
      if (w + 1 == workers) {
        enumerate_shard(tables, field, lo, hi, partial[w]);
      } else {
        pool.emplace_back([&, lo, hi, w] { enumerate_shard(tables, field, lo, hi, partial[w]); });
      }
    }
  }

  FiberDistribution fd{field, np, std::vector<std::uint64_t>(p, 0)};
  for (const auto& part : partial)
    for (Residue a = 0; a < p; ++a) fd.c[a] += part[a];
  fd.recompute_totals();
  return fd;
}

FiberDistribution enumerate_fibers_naive(const NormalizedPair& np, const PrimeField& field,
                                         const EnumerationOptions& options) {
  check_char(np, field, options);
  const double p8 = std::pow(static_cast<double>(field.modulus()), 8);
  check_budget(p8, options);

  const Residue p = field.modulus();
  const auto v1 = value_table(np.p1, field);
  const auto v2 = value_table(np.p2, field);
  const auto v2p = value_table(np.p2prime, field);
  const auto alt = [&field](const std::vector<Residue>& v, Residue plus1, Residue minus1,
                            Residue minus2, Residue plus2) {
    return field.add(field.sub(field.sub(v[plus1], v[minus1]), v[minus2]), v[plus2]);
  };

  FiberDistribution fd{field, np, std::vector<std::uint64_t>(p, 0)};
  std::array<Residue, 8> y{};
  while (true) {
    if (alt(v1, y[3], y[2], y[1], y[0]) == 0 && alt(v1, y[7], y[6], y[5], y[4]) == 0 &&
        alt(v2, y[5], y[4], y[1], y[0]) == 0 && alt(v2p, y[6], y[4], y[2], y[0]) == 0) {
      ++fd.c[alt(v2, y[7], y[6], y[3], y[2])];
    }
    std::size_t i = 0;
    while (i < 8 && ++y[i] == p) y[i++] = 0;
    if (i == 8) break;
  }
  fd.recompute_totals();
  return fd;
}

GrowthRow growth_row(const FiberDistribution& fibers) {
  const double p = fibers.field.modulus();
  GrowthRow row;
  row.p = fibers.field.modulus();
  row.v_size = fibers.v_size;
  row.v_ratio = static_cast<double>(fibers.v_size) / std::pow(p, 4);
  row.w_size = fibers.w_size;
  row.w_ratio = static_cast<double>(fibers.w_size) / std::pow(p, 7);
  row.max_fiber = fibers.max_fiber;
  row.fiber_ratio = static_cast<double>(fibers.max_fiber) / std::pow(p, 3);
  row.charsum_scaled = max_nontrivial_char_sum(fibers) * std::sqrt(p);
  return row;
}

std::vector<GrowthRow> growth_report(const NormalizedPair& np, std::span<const std::uint32_t> primes,
                                     const EnumerationOptions& options) {
  std::vector<GrowthRow> rows;
  rows.reserve(primes.size());
  for (auto p : primes) rows.push_back(growth_row(enumerate_fibers(np, PrimeField(p), options)));
  return rows;
}

std::string growth_csv_header() {
  return "pair,p,v_size,v_over_p4,w_size,w_over_p7,max_fiber,max_fiber_over_p3,charsum_sqrt_p";
}

std::string growth_csv_row(const std::string& pair_id, const GrowthRow& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%" PRIu32 ",%" PRIu64 ",%.9f,%" PRIu64 ",%.9f,%" PRIu64 ",%.9f,%.9f",
                r.p, r.v_size, r.v_ratio, r.w_size, r.w_ratio, r.max_fiber, r.fiber_ratio,
                r.charsum_scaled);
  return "\"" + pair_id + "\"," + buf;
}

std::string pair_hash(const NormalizedPair& np) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : np.id()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

std::string fibers_to_json(const FiberDistribution& fd) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["p"] = fd.field.modulus();
  j["pair"] = fd.pair.id();
  j["pair_hash"] = pair_hash(fd.pair);
  j["v_size"] = fd.v_size;
  j["w_size"] = fd.w_size;
  j["max_fiber"] = fd.max_fiber;
  j["c"] = fd.c;
  return j.dump();
}

FiberDistribution fibers_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Parse, std::string("fiber file: ") + e.what());
  }
  try {
    if (j.at("schema").get<int>() != 1) throw Error(Errc::Parse, "fiber file: unsupported schema");
    const PrimeField field(j.at("p").get<std::int64_t>());
    const auto [p1, p2] = parse_pair(j.at("pair").get<std::string>());
    FiberDistribution fd{field, normalize_pair(p1, p2), j.at("c").get<std::vector<std::uint64_t>>()};
    if (fd.c.size() != field.modulus()) throw Error(Errc::Parse, "fiber file: c must have p entries");
    fd.recompute_totals();
    if (fd.v_size != j.at("v_size").get<std::uint64_t>() || fd.w_size != j.at("w_size").get<std::uint64_t>() ||
        fd.max_fiber != j.at("max_fiber").get<std::uint64_t>())
      throw Error(Errc::Mismatch, "fiber file totals disagree with its histogram");
    return fd;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Parse, std::string("fiber file: ") + e.what());
  }
}

void save_fibers(const FiberDistribution& fibers, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Io, "cannot write '" + path + "'");
  out << fibers_to_json(fibers) << '\n';
  if (!out) throw Error(Errc::Io, "write failed for '" + path + "'");
}

FiberDistribution load_fibers(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return fibers_from_json(ss.str());
}

}  // namespace ffprog
