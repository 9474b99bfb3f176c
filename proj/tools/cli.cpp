#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "radgen/radgen.hpp"

namespace radgen::cli {
namespace {

using Json = nlohmann::ordered_json;

// Raised for bad user input after parsing; maps to kExitInvalidInput.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

Json tail_json(const TruncatedSum& sum) {
  return sum.tail_bound ? Json(*sum.tail_bound) : Json(nullptr);
}

Json truncated_json(const TruncatedSum& sum) {
  Json j;
  j["value"] = sum.value;
  j["tail_bound"] = tail_json(sum);
  j["terms_used"] = sum.terms_used;
  return j;
}

Json wide_json(Wide v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return to_string(v);
}

Json record_json(const AbcRecord& r) {
  Json j;
  j["a"] = r.a;
  j["b"] = r.b;
  j["c"] = r.c;
  j["rad_abc"] = wide_json(r.rad_abc);
  j["c_class"] = std::string(to_string(r.c_class));
  j["hypothesis"] = r.hypothesis_holds;
  j["conclusion"] = r.conclusion_holds;
  j["quality"] = r.quality;
  return j;
}

void emit(std::ostream& out, Json j) {
  j["schema_version"] = kSchemaVersion;
  out << j.dump() << '\n';
}

struct Global {
  std::string config_path;
  std::optional<unsigned> threads;
  std::optional<std::uint64_t> sieve_limit;
  std::optional<double> tolerance_multiplier;
  std::string sieve_file;
  bool progress = false;
};

struct Context {
  Config config;
  Global global;

  [[nodiscard]] ExecutionPolicy policy() const { return {config.threads}; }

  [[nodiscard]] FactorSieve sieve(std::uint64_t needed) const {
    if (!global.sieve_file.empty()) {
      FactorSieve s = FactorSieve::load_file(global.sieve_file);
      if (s.limit() < needed)
        throw InputError("sieve file covers n <= " + std::to_string(s.limit()) +
                         " but " + std::to_string(needed) + " is required");
      return s;
    }
    return FactorSieve(std::max<std::uint64_t>(needed, 1), config.cache_radicals);
  }

  [[nodiscard]] PrimeTable primes(std::uint64_t prime_limit) const {
    return sieve_primes(std::max<std::uint64_t>(prime_limit, 2));
  }
};

MultiplicativeSpec spec_by_name(const std::string& name) {
  auto spec = MultiplicativeSpec::builtin(name);
  if (!spec) throw InputError("unknown spec '" + name + "' (radical, identity, unit)");
  return *spec;
}

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

Range parse_range(const std::string& text, const char* what) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw InputError(std::string(what) + " must look like LO:HI");
  Range r;
  try {
    std::size_t used = 0;
    r.lo = std::stod(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("trailing text");
    const std::string hi = text.substr(colon + 1);
    r.hi = std::stod(hi, &used);
    if (used != hi.size()) throw std::invalid_argument("trailing text");
  } catch (const std::logic_error&) {
    throw InputError(std::string(what) + ": cannot parse '" + text + "'");
  }
  if (!(r.lo <= r.hi)) throw InputError(std::string(what) + ": LO must not exceed HI");
  return r;
}

std::vector<double> linspace(double lo, double hi, unsigned steps) {
  std::vector<double> v;
  if (steps == 1) return {lo};
  for (unsigned i = 0; i < steps; ++i)
    v.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1));
  return v;
}

// ---------------------------------------------------------------- commands

struct RadicalArgs {
  std::uint64_t n = 0;
};

int cmd_radical(const Context& ctx, const RadicalArgs& a, std::ostream& out) {
  // A sieve file sets its own range.
  std::optional<FactorSieve> loaded;
  if (!ctx.global.sieve_file.empty()) loaded = FactorSieve::load_file(ctx.global.sieve_file);
  const std::uint64_t limit = loaded ? loaded->limit() : ctx.config.sieve_limit;
  if (a.n == 0 || a.n > limit)
    throw InputError("n must lie in [1, " + std::to_string(limit) + "] (the " +
                     (loaded ? "sieve file" : "configured sieve limit") + ")");
  const FactorSieve sieve = loaded ? std::move(*loaded) : ctx.sieve(a.n);
  Json j;
  j["n"] = a.n;
  j["radical"] = sieve.radical(a.n);
  j["phi"] = sieve.euler_phi(a.n);
  j["squarefree"] = sieve.is_squarefree(a.n);
  emit(out, j);
  return kExitOk;
}

struct SieveArgs {
  std::optional<std::uint64_t> limit;
  std::string out_path;
  std::string load_path;
  bool no_radicals = false;
};

int cmd_sieve(const Context& ctx, const SieveArgs& a, std::ostream& out) {
  std::optional<FactorSieve> sieve;
  if (!a.load_path.empty()) {
    sieve.emplace(FactorSieve::load_file(a.load_path));
  } else {
    const std::uint64_t limit = a.limit.value_or(ctx.config.sieve_limit);
    if (limit < 2 || limit > kMaxSieveLimit)
      throw InputError("sieve limit must lie in [2, 2^32 - 1]");
    sieve.emplace(limit, ctx.config.cache_radicals && !a.no_radicals);
  }
  std::uint64_t prime_count = 0;
  for (std::uint64_t n = 2; n <= sieve->limit(); ++n) prime_count += sieve->is_prime(n);
  if (!a.out_path.empty()) sieve->save_file(a.out_path);
  Json j;
  j["limit"] = sieve->limit();
  j["prime_count"] = prime_count;
  j["radicals_cached"] = sieve->caches_radicals();
  j["file"] = a.out_path.empty() ? (a.load_path.empty() ? Json(nullptr) : Json(a.load_path))
                                 : Json(a.out_path);
  emit(out, j);
  return kExitOk;
}

struct SeriesArgs {
  double s = 0.0;
  double t = 0.0;
  std::optional<std::uint64_t> limit;
  std::optional<std::uint64_t> prime_limit;
  std::string spec = "radical";
  bool compare = false;
};

int cmd_series_or_product(const Context& ctx, const SeriesArgs& a, bool product_first,
                          std::ostream& out) {
  const Params params = Params::make(a.s, a.t);
  const MultiplicativeSpec spec = spec_by_name(a.spec);
  const std::uint64_t limit = a.limit.value_or(ctx.config.sieve_limit);
  const std::uint64_t prime_limit = a.prime_limit.value_or(ctx.config.prime_limit);

  std::optional<TruncatedSum> series;
  std::optional<TruncatedSum> product;
  if (!product_first || a.compare) {
    if (limit == 0 || limit > kMaxSieveLimit) throw InputError("--limit must lie in [1, 2^32 - 1]");
    series = series_d(spec, ctx.sieve(limit), params, limit, ctx.policy());
  }
  if (product_first || a.compare) {
    if (prime_limit < 2) throw InputError("--prime-limit must be at least 2");
    product = product_d(spec, ctx.primes(prime_limit), params, prime_limit, ctx.policy());
  }

  Json j;
  j["command"] = product_first ? "product" : "series";
  j["spec"] = spec.name();
  j["s"] = a.s;
  j["t"] = a.t;
  const TruncatedSum& primary = product_first ? *product : *series;
  j["value"] = primary.value;
  j["tail_bound"] = tail_json(primary);
  j["terms_used"] = primary.terms_used;
  int code = kExitOk;
  if (a.compare) {
    j["series"] = truncated_json(*series);
    j["product"] = truncated_json(*product);
    const double gap = std::fabs(series->value - product->value);
    j["gap"] = gap;
    if (series->tail_bound && product->tail_bound) {
      const double tol = agreement_tolerance(*series, *product) * ctx.config.tolerance_multiplier;
      j["tolerance"] = tol;
      j["agree"] = gap <= tol;
      if (gap > tol) code = kExitVerificationFailed;
    } else {
      j["tolerance"] = nullptr;
      j["agree"] = nullptr;
    }
  }
  emit(out, j);
  return code;
}

struct StArgs {
  double s = 0.0;
  double t = 0.0;
  std::optional<std::uint64_t> prime_limit;
  std::string spec = "radical";
  bool check_bounds = false;
};

int cmd_st(const Context& ctx, const StArgs& a, std::ostream& out) {
  const Params params = Params::make(a.s, a.t);
  const std::uint64_t prime_limit = a.prime_limit.value_or(ctx.config.prime_limit);
  if (prime_limit < 2) throw InputError("--prime-limit must be at least 2");
  const PrimeTable primes = ctx.primes(prime_limit);
  Json j;
  j["spec"] = a.spec;
  j["s"] = a.s;
  j["t"] = a.t;
  j["prime_limit"] = prime_limit;
  int code = kExitOk;
  if (a.spec == "radical") {
    const StResult r = st_ratio(primes, params, prime_limit, ctx.policy());
    j["S"] = truncated_json(r.s_value);
    j["T"] = truncated_json(r.t_value);
    j["ratio"] = r.ratio;
    j["ratio_low"] = r.ratio_interval.low;
    j["ratio_high"] = r.ratio_interval.high;
    j["bounds_hold"] = r.bounds_hold();
    if (a.check_bounds && !r.bounds_hold()) code = kExitVerificationFailed;
  } else {
    const MultiplicativeSpec spec = spec_by_name(a.spec);
    const TruncatedSum S = s_general(spec, primes, params, prime_limit, ctx.policy());
    const TruncatedSum T = t_general(spec, primes, params, prime_limit, ctx.policy());
    j["S"] = truncated_json(S);
    j["T"] = truncated_json(T);
    j["ratio"] = T.value != 0.0 ? Json(S.value / T.value) : Json(nullptr);
  }
  emit(out, j);
  return code;
}

struct GridArgs {
  std::string s_range;
  std::string t_range;
  unsigned steps = 10;
  std::optional<double> t_below_s;
  std::optional<std::uint64_t> prime_limit;
  bool check_bounds = false;
};

int cmd_ratio_grid(const Context& ctx, const GridArgs& a, std::ostream& out) {
  const Range sr = parse_range(a.s_range, "--s-range");
  const Range tr = parse_range(a.t_range, "--t-range");
  if (a.steps == 0) throw InputError("--steps must be at least 1");
  const std::uint64_t prime_limit = a.prime_limit.value_or(ctx.config.prime_limit);
  if (prime_limit < 2) throw InputError("--prime-limit must be at least 2");

  struct Point {
    double s, t;
  };
  std::vector<Point> points;
  std::size_t in_region = 0;
  for (double s : linspace(sr.lo, sr.hi, a.steps)) {
    const double t_hi = a.t_below_s ? std::min(tr.hi, s - *a.t_below_s) : tr.hi;
    for (double t : linspace(tr.lo, std::max(tr.lo, t_hi), a.steps)) {
      points.push_back({s, t});
      in_region += Params::in_region(s, t);
    }
  }
  if (in_region == 0) throw InputError("grid has no point inside the region of convergence");

  const PrimeTable primes = ctx.primes(prime_limit);
  out << "s,t,S,T,ratio,ratio_low,ratio_high,in_rc,schema_version\n";
  bool all_inside = true;
  for (const auto& p : points) {
    out << fmt17(p.s) << ',' << fmt17(p.t) << ',';
    if (!Params::in_region(p.s, p.t)) {
      out << ",,,,,0," << kSchemaVersion << '\n';
      continue;
    }
    const StResult r = st_ratio(primes, Params::make(p.s, p.t), prime_limit, ctx.policy());
    all_inside = all_inside && r.bounds_hold();
    out << fmt17(r.s_value.value) << ',' << fmt17(r.t_value.value) << ',' << fmt17(r.ratio)
        << ',' << fmt17(r.ratio_interval.low) << ',' << fmt17(r.ratio_interval.high) << ",1,"
        << kSchemaVersion << '\n';
  }
  return a.check_bounds && !all_inside ? kExitVerificationFailed : kExitOk;
}

struct IdentityArgs {
  double s = 0.0;
  double t = 0.0;
  std::optional<std::uint64_t> limit;
  std::optional<std::uint64_t> prime_limit;
  bool verify = false;
};

int cmd_identity(const Context& ctx, const IdentityArgs& a, std::ostream& out) {
  const Params params = Params::make(a.s, a.t);
  const std::uint64_t limit = a.limit.value_or(ctx.config.sieve_limit);
  const std::uint64_t prime_limit = a.prime_limit.value_or(ctx.config.prime_limit);
  if (limit == 0 || limit > kMaxSieveLimit) throw InputError("--limit must lie in [1, 2^32 - 1]");
  if (prime_limit < 2) throw InputError("--prime-limit must be at least 2");
  const FactorSieve sieve = ctx.sieve(limit);
  const PrimeTable primes = ctx.primes(prime_limit);
  const SplitSums split = split_identity(sieve, primes, params, limit, prime_limit, ctx.policy());
  const double mult = ctx.config.tolerance_multiplier;

  Json j;
  j["s"] = a.s;
  j["t"] = a.t;
  j["limit"] = limit;
  j["prime_limit"] = prime_limit;
  j["S"] = split.residual.s_value;
  j["T"] = split.residual.t_value;
  j["residual"] = split.residual.residual;
  j["tolerance"] = split.residual.tolerance * mult;
  const bool residual_ok = std::fabs(split.residual.residual) <= split.residual.tolerance * mult;
  j["within_tolerance"] = residual_ok;
  Json sj;
  sj["below"] = split.below;
  sj["equal"] = split.equal;
  sj["above"] = split.above;
  sj["ambiguous"] = split.ambiguous;
  sj["counts"] = {{"below", split.count(NClass::below)},
                  {"equal", split.count(NClass::equal)},
                  {"above", split.count(NClass::above)},
                  {"ambiguous", split.count(NClass::ambiguous)}};
  sj["equal_members"] = split.equal_members;
  sj["ambiguous_members"] = split.ambiguous_members;
  sj["balance_gap"] = split.balance_gap();
  sj["balance_tolerance"] = split.balance_tolerance() * mult;
  const bool balanced = split.balance_gap() <= split.balance_tolerance() * mult;
  sj["balanced"] = balanced;
  j["split"] = sj;
  emit(out, j);
  return a.verify && !(residual_ok && balanced) ? kExitVerificationFailed : kExitOk;
}

struct AbcArgs {
  std::uint64_t c_max = 0;
  double s = 4.0;
  double t = 1.0;
  std::optional<std::uint64_t> prime_limit;
  bool verify = false;
  bool no_rows = false;
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 0x5eed;
  std::string output;
};

Json report_json(const AbcImplicationReport& rep) {
  Json j;
  j["records"] = rep.records;
  j["hypothesis_true"] = rep.hypothesis_true;
  j["hypothesis_false"] = rep.hypothesis_false;
  j["conclusion_true"] = rep.conclusion_true;
  j["class_counts"] = {{"below", rep.class_counts[0]},
                       {"equal", rep.class_counts[1]},
                       {"above", rep.class_counts[2]},
                       {"ambiguous", rep.class_counts[3]}};
  j["counterexamples"] = Json::array();
  for (const auto& r : rep.counterexamples) j["counterexamples"].push_back(record_json(r));
  j["best_hypothesis_record"] =
      rep.best_hypothesis_record ? record_json(*rep.best_hypothesis_record) : Json(nullptr);
  j["top_quality"] = Json::array();
  for (const auto& r : rep.top_quality) j["top_quality"].push_back(record_json(r));
  j["ok"] = rep.ok();
  return j;
}

int cmd_abc(const Context& ctx, const AbcArgs& a, std::ostream& out, std::ostream& err) {
  const Params params = Params::make(a.s, a.t);
  if (a.c_max < 3 || a.c_max > kMaxSieveLimit) throw InputError("--cmax must lie in [3, 2^32 - 1]");
  const std::uint64_t prime_limit = a.prime_limit.value_or(ctx.config.prime_limit);
  if (prime_limit < 2) throw InputError("--prime-limit must be at least 2");
  const FactorSieve sieve = ctx.sieve(a.c_max);
  const PrimeTable primes = ctx.primes(prime_limit);

  std::unique_ptr<std::ofstream> file;
  std::ostream* rows = &out;
  if (!a.output.empty()) {
    file = std::make_unique<std::ofstream>(a.output);
    if (!*file) throw InputError("cannot open " + a.output);
    rows = file.get();
  }
  const bool write_rows = !a.no_rows;
  if (write_rows)
    *rows << "a,b,c,rad_abc,c_class,hypothesis,conclusion,quality,schema_version\n";

  AbcImplicationVerifier verifier;
  ScanOptions options;
  options.sample = a.sample;
  options.seed = a.seed;
  options.policy = ctx.policy();
  if (ctx.global.progress)
    options.progress = [&err](std::uint64_t done, std::uint64_t total) {
      if (done == total || done % 4096 == 0) err << "abc: " << done << "/" << total << " c values\n";
    };
  scan(sieve, primes, params, a.c_max, prime_limit,
       [&](const AbcRecord& r) {
         if (a.verify) verifier.add(r);
         if (!write_rows) return;
         *rows << r.a << ',' << r.b << ',' << r.c << ',' << to_string(r.rad_abc) << ','
               << to_string(r.c_class) << ',' << (r.hypothesis_holds ? 1 : 0) << ','
               << (r.conclusion_holds ? 1 : 0) << ',' << fmt6(r.quality) << ','
               << kSchemaVersion << '\n';
       },
       options);

  if (!a.verify) return kExitOk;
  const AbcImplicationReport& rep = verifier.report();
  // Keep standard output parseable: the report shares it only when no CSV
  // rows are written there.
  std::ostream& report_stream = (write_rows && a.output.empty()) ? err : out;
  emit(report_stream, report_json(rep));
  return rep.ok() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numeric verification of the generating function sum R(n)^t / n^s", "radgen"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Global global;
  app.add_option("--config", global.config_path,
                 std::string("key=value config file (default: $") + kConfigEnvVar + " or ./" +
                     kDefaultConfigFile + ")");
  app.add_option("--threads", global.threads, "Worker threads (default 1)")->check(CLI::PositiveNumber);
  app.add_option("--sieve-limit", global.sieve_limit, "Default series limit and radical range");
  app.add_option("--tolerance-multiplier", global.tolerance_multiplier,
                 "Scale applied to computed tolerances")
      ->check(CLI::PositiveNumber);
  app.add_option("--sieve-file", global.sieve_file, "Load the factor sieve from a dump");
  app.add_flag("--progress", global.progress, "Report progress of long scans on stderr");

  RadicalArgs radical_args;
  auto* radical_cmd = app.add_subcommand("radical", "R(n), phi(n) and squarefreeness of n");
  radical_cmd->add_option("n", radical_args.n, "Positive integer")->required();

  SieveArgs sieve_args;
  auto* sieve_cmd = app.add_subcommand("sieve", "Build, dump or inspect a factor sieve");
  sieve_cmd->add_option("--limit", sieve_args.limit, "Largest sieved value");
  sieve_cmd->add_option("--out", sieve_args.out_path, "Write a binary dump here");
  sieve_cmd->add_option("--load", sieve_args.load_path, "Read a binary dump instead of sieving");
  sieve_cmd->add_flag("--no-radicals", sieve_args.no_radicals, "Skip the radical cache");

  SeriesArgs series_args;
  auto* series_cmd = app.add_subcommand("series", "Truncated sum of M(n)^t / n^s");
  SeriesArgs product_args;
  auto* product_cmd = app.add_subcommand("product", "Truncated Euler product");
  for (auto [cmd, sa] : {std::pair{series_cmd, &series_args}, std::pair{product_cmd, &product_args}}) {
    cmd->add_option("--s", sa->s, "Exponent s")->required();
    cmd->add_option("--t", sa->t, "Exponent t")->required();
    cmd->add_option("--limit", sa->limit, "Series truncation N");
    cmd->add_option("--prime-limit", sa->prime_limit, "Product truncation P");
    cmd->add_option("--spec", sa->spec, "Multiplicative function: radical, identity, unit");
    cmd->add_flag("--compare", sa->compare, "Evaluate both and compare against the tail bounds");
  }

  StArgs st_args;
  auto* st_cmd = app.add_subcommand("st", "Prime sums S(s,t), T(s,t) and their ratio");
  st_cmd->add_option("--s", st_args.s, "Exponent s")->required();
  st_cmd->add_option("--t", st_args.t, "Exponent t")->required();
  st_cmd->add_option("--prime-limit", st_args.prime_limit, "Prime truncation P");
  st_cmd->add_option("--spec", st_args.spec, "Multiplicative function (ratio interval: radical only)");
  st_cmd->add_flag("--check-bounds", st_args.check_bounds, "Exit 3 unless 1 < S/T < 2 is enclosed");

  GridArgs grid_args;
  auto* grid_cmd = app.add_subcommand("ratio-grid", "CSV grid of S/T over (s, t)");
  grid_cmd->add_option("--s-range", grid_args.s_range, "LO:HI")->required();
  grid_cmd->add_option("--t-range", grid_args.t_range, "LO:HI")->required();
  grid_cmd->add_option("--steps", grid_args.steps, "Points per axis");
  grid_cmd->add_option("--t-below-s", grid_args.t_below_s, "Cap t at s - GAP on every row");
  grid_cmd->add_option("--prime-limit", grid_args.prime_limit, "Prime truncation P");
  grid_cmd->add_flag("--check-bounds", grid_args.check_bounds,
                     "Exit 3 if any ratio interval leaves (1, 2)");

  IdentityArgs identity_args;
  auto* identity_cmd = app.add_subcommand("identity", "Zero-identity residual and its three-way split");
  identity_cmd->add_option("--s", identity_args.s, "Exponent s")->required();
  identity_cmd->add_option("--t", identity_args.t, "Exponent t")->required();
  identity_cmd->add_option("--limit", identity_args.limit, "Series truncation N");
  identity_cmd->add_option("--prime-limit", identity_args.prime_limit, "Prime truncation P");
  identity_cmd->add_flag("--verify", identity_args.verify,
                         "Exit 3 if the residual or the split balance exceeds its tolerance");

  AbcArgs abc_args;
  auto* abc_cmd = app.add_subcommand("abc", "Scan coprime triples a + b = c");
  abc_cmd->add_option("--cmax", abc_args.c_max, "Largest c")->required();
  abc_cmd->add_option("--s", abc_args.s, "Exponent s (default 4)");
  abc_cmd->add_option("--t", abc_args.t, "Exponent t (default 1)");
  abc_cmd->add_option("--prime-limit", abc_args.prime_limit, "Prime truncation for S/T");
  abc_cmd->add_flag("--verify", abc_args.verify, "Check hypothesis => conclusion; exit 3 on failure");
  abc_cmd->add_flag("--no-rows", abc_args.no_rows, "Suppress the CSV rows");
  abc_cmd->add_option("--sample", abc_args.sample, "Scan this many random c values");
  abc_cmd->add_option("--seed", abc_args.seed, "Seed for --sample");
  abc_cmd->add_option("--output", abc_args.output, "Write CSV rows to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    Context ctx;
    ctx.global = global;
    ctx.config = global.config_path.empty() ? load_default_config()
                                            : load_config_file(global.config_path);
    if (global.threads) ctx.config.threads = *global.threads;
    if (global.sieve_limit) ctx.config.sieve_limit = *global.sieve_limit;
    if (global.tolerance_multiplier) ctx.config.tolerance_multiplier = *global.tolerance_multiplier;

    if (*radical_cmd) return cmd_radical(ctx, radical_args, out);
    if (*sieve_cmd) return cmd_sieve(ctx, sieve_args, out);
    if (*series_cmd) return cmd_series_or_product(ctx, series_args, false, out);
    if (*product_cmd) return cmd_series_or_product(ctx, product_args, true, out);
    if (*st_cmd) return cmd_st(ctx, st_args, out);
    if (*grid_cmd) return cmd_ratio_grid(ctx, grid_args, out);
    if (*identity_cmd) return cmd_identity(ctx, identity_args, out);
    if (*abc_cmd) return cmd_abc(ctx, abc_args, out, err);
  } catch (const std::exception& e) {
    // Every failure reaching here stems from arguments, config or input files.
    err << "radgen: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace radgen::cli
