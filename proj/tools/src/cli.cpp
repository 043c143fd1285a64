#include <ffprog_cli/cli.hpp>

#include <ffprog/counting.hpp>
#include <ffprog/error.hpp>
#include <ffprog/fourier.hpp>
#include <ffprog/polys.hpp>
#include <ffprog/setfun.hpp>
#include <ffprog/symbolic.hpp>
#include <ffprog/variety.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace ffprog::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

const std::vector<std::string> kDefaultPairs = {"y,y^2", "y^2,y^3", "y,y^3", "2*y^2,y^2+y"};
const std::vector<std::string> kChecks = {"decomposition", "cauchy-schwarz", "spectral-identity", "weil",
                                          "sandwich",      "lm-claims", "certificates"};

struct Options {
  std::vector<std::string> pairs;
  std::string primes;
  std::vector<std::string> sets;
  std::uint64_t seed = 1;
  double budget = 2e9;
  unsigned workers = 1;
  std::string out;
  std::string format;
  std::string cache = ".ffprog_cache";
  bool no_cache = false;
  std::string oracle;
  std::string only;
  int rmax = 12;
  double threshold = 1e-6;
  unsigned trials = 0;
  double constant = 1.0;
  std::string poly;
};

int exit_code_for(Errc e) {
  switch (e) {
    case Errc::CharTooSmall: return kExitCharTooSmall;
    case Errc::WorkBudgetExceeded: return kExitBudget;
    case Errc::Io:
    case Errc::Mismatch: return kExitIo;
    case Errc::EmptyVariety:
    case Errc::NotMeanZero:
    case Errc::DivisionByZero: return kExitInternal;
    default: return kExitConfig;
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::int64_t parse_int(const std::string& text) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw Error(Errc::Parse, "not an integer: '" + text + "'");
  return v;
}

// "31..101", "7,11,13" or a mix; non-primes and 2 are dropped.
std::vector<std::uint32_t> parse_primes(const std::string& text) {
  std::vector<std::uint32_t> primes;
  for (const auto& raw : split(text, ',')) {
    const std::string token = trim(raw);
    const auto dots = token.find("..");
    const std::int64_t lo = parse_int(dots == std::string::npos ? token : token.substr(0, dots));
    const std::int64_t hi = dots == std::string::npos ? lo : parse_int(token.substr(dots + 2));
    if (lo < 0 || hi < lo || hi >= (std::int64_t{1} << 31) || hi - lo > 10'000'000)
      throw Error(Errc::Parse, "bad prime range '" + token + "'");
    for (std::int64_t v = std::max<std::int64_t>(lo, 3); v <= hi; ++v)
      if (is_prime(v)) primes.push_back(static_cast<std::uint32_t>(v));
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  if (primes.empty()) throw Error(Errc::OutOfRange, "no odd primes in '" + text + "'");
  return primes;
}

struct RandomSpec {
  std::string density;
  std::uint64_t seed = 0;
};

std::optional<RandomSpec> as_random(const std::string& spec) {
  if (spec.rfind("random:", 0) != 0) return std::nullopt;
  const auto parts = split(spec, ':');
  if (parts.size() != 3) throw Error(Errc::Parse, "expected random:density:seed, got '" + spec + "'");
  const std::int64_t seed = parse_int(parts[2]);
  if (seed < 0) throw Error(Errc::Parse, "negative seed in '" + spec + "'");
  return RandomSpec{parts[1], static_cast<std::uint64_t>(seed)};
}

std::string with_seed(const RandomSpec& r, std::uint64_t seed) {
  return "random:" + r.density + ":" + std::to_string(seed);
}

// k sets for trial `trial`. A single random spec expands to seeds s, s+1, ...;
// explicit random specs advance by k per trial; file specs never change.
std::vector<SubsetSpec> resolve_sets(const Options& o, const PrimeField& f, std::size_t k, unsigned trial) {
  std::vector<std::string> specs = o.sets;
  if (specs.empty()) specs.push_back("random:0.5:" + std::to_string(o.seed));
  std::vector<SubsetSpec> sets;
  if (specs.size() == 1) {
    const auto r = as_random(specs[0]);
    for (std::size_t i = 0; i < k; ++i)
      sets.push_back(load_subset(r ? with_seed(*r, r->seed + k * trial + i) : specs[0], f));
  } else if (specs.size() == k) {
    for (const auto& s : specs) {
      const auto r = as_random(s);
      sets.push_back(load_subset(r ? with_seed(*r, r->seed + k * trial) : s, f));
    }
  } else {
    throw Error(Errc::Parse, "--sets takes 1 or " + std::to_string(k) + " specs");
  }
  return sets;
}

struct PairInput {
  std::string text;
  IntPoly p1, p2;
  NormalizedPair np;
};

std::vector<PairInput> resolve_pairs(const Options& o, bool allow_default) {
  std::vector<std::string> texts = o.pairs;
  if (texts.empty()) {
    if (!allow_default) throw Error(Errc::Parse, "--pair is required");
    texts = kDefaultPairs;
  }
  std::vector<PairInput> out;
  for (const auto& t : texts) {
    auto [p1, p2] = parse_pair(t);
    auto np = normalize_pair(p1, p2);
    out.push_back({t, std::move(p1), std::move(p2), std::move(np)});
  }
  return out;
}

std::vector<std::uint32_t> require_primes(const Options& o, const char* fallback = nullptr) {
  if (o.primes.empty()) {
    if (fallback == nullptr) throw Error(Errc::Parse, "--primes is required");
    return parse_primes(fallback);
  }
  return parse_primes(o.primes);
}

void require_char(const NormalizedPair& np, std::uint32_t p) {
  if (p < np.min_char)
    throw Error(Errc::CharTooSmall, "p = " + std::to_string(p) + " is below min_char " +
                                        std::to_string(np.min_char) + " for " + np.id());
}

// Fiber distributions keyed by (pair hash, p) on disk.
class FiberStore {
 public:
  explicit FiberStore(const Options& o) : o_(o) {
    opts_.budget = o.budget;
    opts_.workers = std::max(1u, o.workers);
  }

  // Cached copy when present, otherwise enumerated and stored.
  FiberDistribution get(const NormalizedPair& np, const PrimeField& f, bool* hit = nullptr) {
    require_char(np, f.modulus());
    const std::string path = path_for(np, f);
    if (!o_.no_cache && o_.oracle.empty() && fs::exists(path)) {
      auto fd = load_cached(path);
      if (!(fd.pair == np) || fd.field.modulus() != f.modulus())
        throw Error(Errc::Mismatch, path + " holds a different pair or prime");
      if (hit) *hit = true;
      return fd;
    }
    if (hit) *hit = false;
    auto fd = fresh(np, f);
    store(fd, path);
    return fd;
  }

  FiberDistribution fresh(const NormalizedPair& np, const PrimeField& f) const {
    require_char(np, f.modulus());
    return o_.oracle == "naive8" ? enumerate_fibers_naive(np, f, opts_) : enumerate_fibers(np, f, opts_);
  }

 private:
  // A cache file that does not parse is corruption, not a config error.
  static FiberDistribution load_cached(const std::string& path) {
    try {
      return load_fibers(path);
    } catch (const Error& e) {
      if (e.code() != Errc::Parse) throw;
      throw Error(Errc::Io, "corrupt fiber file " + path + ": " + e.what());
    }
  }

  std::string path_for(const NormalizedPair& np, const PrimeField& f) const {
    return (fs::path(o_.cache) / ("fibers_" + pair_hash(np) + "_p" + std::to_string(f.modulus()) + ".json"))
        .string();
  }

  void store(const FiberDistribution& fd, const std::string& path) const {
    if (o_.no_cache) return;
    std::error_code ec;
    fs::create_directories(o_.cache, ec);
    if (ec) throw Error(Errc::Io, "cannot create cache directory " + o_.cache + ": " + ec.message());
    save_fibers(fd, path);
  }

  const Options& o_;
  EnumerationOptions opts_;
};

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

struct Report {
  std::string text;
  int status = kExitOk;
};

Json envelope(const char* command) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

Report cmd_count(const Options& o) {
  const auto pairs = resolve_pairs(o, false);
  const auto primes = require_primes(o);
  const unsigned trials = std::max(1u, o.trials);
  std::string csv = count_csv_header() + "\n";
  Json j = envelope("count");
  j["rows"] = Json::array();
  for (const auto& pi : pairs)
    for (std::uint32_t p : primes) {
      const PrimeField f(p);
      for (unsigned t = 0; t < trials; ++t) {
        const auto s = resolve_sets(o, f, 3, t);
        const auto r = count_progressions(s[0], s[1], s[2], pi.p1, pi.p2, f, o.constant);
        csv += count_csv_row(r) + "\n";
        j["rows"].push_back(Json::parse(r.to_json()));
      }
    }
  return {o.format == "json" ? j.dump(2) + "\n" : csv};
}

Report cmd_variety(const Options& o) {
  const auto pairs = resolve_pairs(o, false);
  const auto primes = require_primes(o);
  FiberStore store(o);
  std::string csv = growth_csv_header() + "\n";
  Json j = envelope("variety");
  j["rows"] = Json::array();
  for (const auto& pi : pairs)
    for (std::uint32_t p : primes) {
      const auto fd = store.get(pi.np, PrimeField(p));
      const GrowthRow row = growth_row(fd);
      csv += growth_csv_row(pi.np.id(), row) + "\n";
      Json r;
      r["pair"] = pi.np.id();
      r["p"] = row.p;
      r["v_size"] = row.v_size;
      r["v_over_p4"] = row.v_ratio;
      r["w_size"] = row.w_size;
      r["w_over_p7"] = row.w_ratio;
      r["max_fiber"] = row.max_fiber;
      r["max_fiber_over_p3"] = row.fiber_ratio;
      r["charsum_sqrt_p"] = row.charsum_scaled;
      j["rows"].push_back(r);
    }
  return {o.format == "json" ? j.dump(2) + "\n" : csv};
}

Report cmd_charsum(const Options& o) {
  const auto pairs = resolve_pairs(o, false);
  const auto primes = require_primes(o);
  FiberStore store(o);
  std::string csv = "pair,p,t,re,im,abs\n";
  Json j = envelope("charsum");
  j["rows"] = Json::array();
  for (const auto& pi : pairs)
    for (std::uint32_t p : primes) {
      const auto fd = store.get(pi.np, PrimeField(p));
      const auto sums = char_sums_over_fibers(fd);
      Json r;
      r["pair"] = pi.np.id();
      r["p"] = p;
      r["max_nontrivial"] = max_nontrivial_char_sum(fd);
      r["max_nontrivial_sqrt_p"] = max_nontrivial_char_sum(fd) * std::sqrt(static_cast<double>(p));
      Json values = Json::array();
      for (std::uint32_t t = 0; t < p; ++t) {
        csv += quoted(pi.np.id()) + "," + std::to_string(p) + "," + std::to_string(t) + "," +
               fmt("%.12e", sums[t].real()) + "," + fmt("%.12e", sums[t].imag()) + "," +
               fmt("%.12e", std::abs(sums[t])) + "\n";
        values.push_back({sums[t].real(), sums[t].imag()});
      }
      r["sums"] = values;
      j["rows"].push_back(r);
    }
  return {o.format == "json" ? j.dump(2) + "\n" : csv};
}

Report cmd_expander(const Options& o) {
  if (o.poly.empty()) throw Error(Errc::Parse, "--poly is required");
  const IntPoly poly = parse_poly(o.poly);
  const auto primes = require_primes(o);
  const unsigned trials = std::max(1u, o.trials);
  std::string csv = "poly,p,size_a,size_b,image,image_over_p\n";
  Json j = envelope("expander");
  j["rows"] = Json::array();
  for (std::uint32_t p : primes) {
    const PrimeField f(p);
    for (unsigned t = 0; t < trials; ++t) {
      const auto s = resolve_sets(o, f, 2, t);
      const std::uint64_t image = expander_image(s[0], s[1], poly, f);
      const double ratio = static_cast<double>(image) / p;
      csv += quoted(poly.to_string()) + "," + std::to_string(p) + "," + std::to_string(s[0].size()) + "," +
             std::to_string(s[1].size()) + "," + std::to_string(image) + "," + fmt("%.9f", ratio) + "\n";
      Json r;
      r["poly"] = poly.to_string();
      r["p"] = p;
      r["size_a"] = s[0].size();
      r["size_b"] = s[1].size();
      r["image"] = image;
      r["image_over_p"] = ratio;
      j["rows"].push_back(r);
    }
  }
  return {o.format == "json" ? j.dump(2) + "\n" : csv};
}

Json normalized_json(const PairInput& pi) {
  const auto& np = pi.np;
  Json j;
  j["input"] = pi.text;
  j["id"] = np.id();
  j["pair_hash"] = pair_hash(np);
  j["p1"] = np.p1.to_string();
  j["p2"] = np.p2.to_string();
  j["p2prime"] = np.p2prime.to_string();
  j["p3"] = np.p3 ? Json(np.p3->to_string()) : Json();
  j["r1"] = np.r1;
  j["r2"] = np.r2;
  j["r3"] = np.r3 ? Json(*np.r3) : Json();
  j["lead_a"] = np.lead_a.get_str();
  j["lead_b"] = np.lead_b.get_str();
  j["lead_c"] = np.lead_c.get_str();
  j["lead_d"] = np.lead_d ? Json(np.lead_d->get_str()) : Json();
  j["min_char"] = np.min_char;
  j["swapped"] = np.swapped;
  j["replaced"] = np.replaced;
  return j;
}

Report cmd_normalize(const Options& o) {
  const auto pairs = resolve_pairs(o, false);
  Json j = envelope("normalize");
  j["pairs"] = Json::array();
  std::string csv = "input,id,p1,p2,p2prime,p3,r1,r2,r3,min_char,swapped,replaced\n";
  for (const auto& pi : pairs) {
    const Json n = normalized_json(pi);
    j["pairs"].push_back(n);
    const auto& np = pi.np;
    csv += quoted(pi.text) + "," + quoted(np.id()) + "," + quoted(np.p1.to_string()) + "," +
           quoted(np.p2.to_string()) + "," + quoted(np.p2prime.to_string()) + "," +
           quoted(np.p3 ? np.p3->to_string() : "") + "," + std::to_string(np.r1) + "," + std::to_string(np.r2) +
           "," + (np.r3 ? std::to_string(*np.r3) : "") + "," + std::to_string(np.min_char) + "," +
           (np.swapped ? "true" : "false") + "," + (np.replaced ? "true" : "false") + "\n";
  }
  return {o.format == "csv" ? csv : j.dump(2) + "\n"};
}

std::vector<Certificate> certificate_sweep(int rmax, double threshold) {
  if (rmax < 2 || rmax > kMaxPairDegree)
    throw Error(Errc::BadDegrees, "--rmax must lie in [2, " + std::to_string(kMaxPairDegree) + "]");
  std::vector<Certificate> certs;
  for (int a = 1; a <= rmax; ++a)
    for (int b = a + 1; b <= rmax; ++b) certs.push_back(certify_separation_unequal(a, b, threshold));
  for (int a = 2; a <= rmax; ++a)
    for (int b = 1; b < a; ++b) certs.push_back(certify_separation_equal(a, b, threshold));
  return certs;
}

Report cmd_certify(const Options& o) {
  const auto certs = certificate_sweep(o.rmax, o.threshold);
  std::string csv = "case,r1,r2_or_r3,min_modulus,threshold,pass,strict_inequality_holds,positivity_value\n";
  Json j = envelope("certify");
  j["certificates"] = Json::array();
  Report rep;
  for (const auto& c : certs) {
    csv += std::string(to_string(c.case_tag)) + "," + std::to_string(c.params[0]) + "," +
           std::to_string(c.params[1]) + "," + fmt("%.12e", c.min_modulus) + "," + fmt("%.3e", c.threshold) + "," +
           (c.pass ? "true" : "false") + "," +
           (c.case_tag == CertificateCase::R1LessR2 ? (c.strict_inequality_holds ? "true" : "false") : "") + "," +
           (c.case_tag == CertificateCase::R1EqualsR2 ? fmt("%.12e", c.positivity_value) : "") + "\n";
    j["certificates"].push_back(Json::parse(c.to_json()));
    if (!c.pass || !c.positivity_holds) rep.status = kExitCheckFailed;
  }
  rep.text = o.format == "json" ? j.dump(2) + "\n" : csv;
  return rep;
}

struct CheckRow {
  std::string check;
  std::string pair;
  std::uint32_t p = 0;
  std::size_t instances = 0;
  double worst = 0.0;
  double limit = 0.0;
  bool pass = true;
};

// Each check accumulates a worst value; larger is worse except for
// certificates, where the minimum modulus is tracked.
Report cmd_verify(const Options& o, std::ostream& err) {
  std::vector<std::string> selected = kChecks;
  if (!o.only.empty()) {
    selected.clear();
    for (const auto& raw : split(o.only, ',')) {
      const std::string name = trim(raw);
      if (std::find(kChecks.begin(), kChecks.end(), name) == kChecks.end())
        throw Error(Errc::Parse, "unknown check '" + name + "'");
      selected.push_back(name);
    }
  }
  auto wanted = [&](const char* name) { return std::find(selected.begin(), selected.end(), name) != selected.end(); };
  const bool per_prime = wanted("decomposition") || wanted("cauchy-schwarz") || wanted("spectral-identity") ||
                         wanted("weil") || wanted("sandwich");
  const bool need_fibers = wanted("cauchy-schwarz") || wanted("spectral-identity") || wanted("sandwich");
  const unsigned trials = o.trials == 0 ? 20 : o.trials;

  std::vector<CheckRow> rows;
  if (per_prime || wanted("lm-claims")) {
    const auto pairs = resolve_pairs(o, true);
    const auto primes = per_prime ? require_primes(o, "31,41,53") : std::vector<std::uint32_t>{};
    FiberStore store(o);
    for (const auto& pi : pairs) {
      const auto& np = pi.np;
      if (wanted("lm-claims")) {
        const auto aux = build_aux_system(np);
        const auto report = check_lm_claims(aux, np);
        std::size_t failed = 0;
        for (const auto& c : report.claims) failed += !c.holds();
        if (np.equal_degrees() && !qprime_identity_residual(aux, np).is_zero()) ++failed;
        rows.push_back({"lm-claims", np.id(), 0, report.claims.size() + np.equal_degrees(),
                        static_cast<double>(failed), 0.0, failed == 0});
      }
      for (std::uint32_t p : primes) {
        const PrimeField f(p);
        require_char(np, p);
        std::optional<FiberDistribution> cached, fresh;
        if (need_fibers) {
          bool hit = false;
          cached = store.get(np, f, &hit);
          if (wanted("spectral-identity")) fresh = hit ? store.fresh(np, f) : *cached;
        }
        CheckRow decomp{"decomposition", np.id(), p, 0, 0.0, 1e-10};
        CheckRow prop{"cauchy-schwarz", np.id(), p, 0, -INFINITY, kTolerance};
        CheckRow spec{"spectral-identity", np.id(), p, 0, 0.0, 1e-8};
        for (unsigned t = 0; t < trials; ++t) {
          const std::uint64_t s = o.seed + 3ull * t;
          if (wanted("decomposition")) {
            const auto a = random_subset(f, 0.5, s), b = random_subset(f, 0.5, s + 1), c = random_subset(f, 0.5, s + 2);
            decomp.worst = std::max(decomp.worst, decomposition_residual(a, b, c, pi.p1, pi.p2, f));
            ++decomp.instances;
          }
          const auto f0 = random_function(f, s), f1 = random_function(f, s + 1);
          const auto f2 = random_function(f, s + 2).centered();
          if (wanted("cauchy-schwarz")) {
            const auto sides = cauchy_schwarz_sides(f0, f1, f2, np, *cached);
            prop.worst = std::max(prop.worst, std::abs(sides.lhs) - sides.rhs);
            ++prop.instances;
          }
          if (wanted("spectral-identity")) {
            const double direct = lambda_prime(f2, f2, *fresh);
            const double spectral = lambda_prime_spectral(f2, *cached);
            spec.worst = std::max(spec.worst, std::abs(direct - spectral) / std::max(std::abs(direct), 1e-12));
            ++spec.instances;
          }
        }
        for (CheckRow* row : {&decomp, &prop, &spec})
          if (row->instances > 0) {
            row->pass = row->worst < row->limit || (row == &prop && row->worst <= row->limit);
            rows.push_back(*row);
          }
        if (wanted("weil")) {
          CheckRow weil{"weil", np.id(), p, 0, 0.0, 1.0 + kTolerance};
          for (const IntPoly* poly : {&np.p1, &np.p2})
            if (static_cast<int>(p) > poly->degree()) {
              weil.worst = std::max(weil.worst, weil_ratio(*poly, f));
              ++weil.instances;
            }
          weil.pass = weil.worst <= weil.limit;
          rows.push_back(weil);
        }
        if (wanted("sandwich")) {
          const double p4 = std::pow(static_cast<double>(p), 4);
          const double r = static_cast<double>(np.r1) * np.r2;
          const std::uint64_t lo = static_cast<std::uint64_t>(p4);
          const std::uint64_t hi = static_cast<std::uint64_t>(r * r) * lo;
          rows.push_back({"sandwich", np.id(), p, 1, cached->v_size / p4, r * r,
                          cached->v_size >= lo && cached->v_size <= hi});
        }
      }
    }
  }
  if (wanted("certificates")) {
    const auto certs = certificate_sweep(o.rmax, o.threshold);
    CheckRow row{"certificates", "", 0, certs.size(), INFINITY, o.threshold};
    for (const auto& c : certs) {
      row.worst = std::min(row.worst, c.min_modulus);
      row.pass = row.pass && c.pass && c.positivity_holds;
    }
    rows.push_back(row);
  }

  Report rep;
  std::string csv = "check,pair,p,instances,worst,limit,pass\n";
  Json j = envelope("verify");
  j["checks"] = Json::array();
  std::size_t failures = 0;
  for (const auto& r : rows) {
    const std::string p = r.p == 0 ? "" : std::to_string(r.p);
    csv += r.check + "," + quoted(r.pair) + "," + p + "," + std::to_string(r.instances) + "," +
           fmt("%.6e", r.worst) + "," + fmt("%.6e", r.limit) + "," + (r.pass ? "pass" : "FAIL") + "\n";
    Json c;
    c["check"] = r.check;
    c["pair"] = r.pair;
    c["p"] = r.p == 0 ? Json() : Json(r.p);
    c["instances"] = r.instances;
    c["worst"] = r.worst;
    c["limit"] = r.limit;
    c["pass"] = r.pass;
    j["checks"].push_back(c);
    if (!r.pass) {
      ++failures;
      err << "FAIL " << r.check << (r.pair.empty() ? "" : " pair=" + r.pair) << (p.empty() ? "" : " p=" + p)
          << " worst=" << fmt("%.6e", r.worst) << "\n";
    }
  }
  j["pass"] = failures == 0;
  err << "verify: " << rows.size() - failures << "/" << rows.size() << " checks passed\n";
  rep.text = o.format == "json" ? j.dump(2) + "\n" : csv;
  rep.status = failures == 0 ? kExitOk : kExitCheckFailed;
  return rep;
}

void emit(const Report& rep, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    out << rep.text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  file << rep.text;
  file.close();
  if (!file) throw Error(Errc::Io, "cannot write " + o.out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial progressions over prime fields", "ffprog"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_config("--config", "", "flat key=value file; flags override it");
  // Values such as "y,y^2" must reach the option whole; repeat a key for lists.
  app.get_config_formatter_base()->arrayDelimiter('\x1f');

  Options o;
  app.add_option("--pair", o.pairs, "\"P1,P2\"; repeat for several pairs")->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_option("--primes", o.primes, "list and ranges, e.g. 7,11,31..101");
  app.add_option("--sets", o.sets, "subset spec (random:density:seed or a file); repeatable")->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_option("--seed", o.seed, "base seed for default sets and random functions");
  app.add_option("--budget", o.budget, "enumeration work cap")->check(CLI::Range(1.0, 1e18));
  app.add_option("--workers", o.workers, "enumeration threads")->check(CLI::Range(1u, 256u));
  app.add_option("--out", o.out, "output path (default stdout)");
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cache", o.cache, "fiber cache directory");
  app.add_flag("--no-cache", o.no_cache, "neither read nor write fiber files");
  app.add_option("--oracle", o.oracle, "naive8: enumerate all of F_p^8")->check(CLI::IsMember({"naive8"}));
  app.add_option("--only", o.only, "comma-separated verify checks");
  app.add_option("--rmax", o.rmax, "largest degree for certificate sweeps");
  app.add_option("--threshold", o.threshold, "certificate threshold");
  app.add_option("--trials", o.trials, "set triples or function triples per prime");
  app.add_option("--constant", o.constant, "constant multiplying the error bound in count reports");
  app.add_option("--poly", o.poly, "polynomial for expander");

  auto* count = app.add_subcommand("count", "count progressions in random or given sets");
  auto* variety = app.add_subcommand("variety", "enumerate V and report growth");
  auto* charsum = app.add_subcommand("charsum", "character sums of Q over V");
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  auto* expander = app.add_subcommand("expander", "image size of a + P(b - a)");
  auto* normalize = app.add_subcommand("normalize", "normal form of a pair");
  auto* certify = app.add_subcommand("certify", "root-separation certificates");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    Report rep;
    if (count->parsed()) rep = cmd_count(o);
    else if (variety->parsed()) rep = cmd_variety(o);
    else if (charsum->parsed()) rep = cmd_charsum(o);
    else if (verify->parsed()) rep = cmd_verify(o, err);
    else if (expander->parsed()) rep = cmd_expander(o);
    else if (normalize->parsed()) rep = cmd_normalize(o);
    else if (certify->parsed()) rep = cmd_certify(o);
    emit(rep, o, out);
    return rep.status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace ffprog::cli
