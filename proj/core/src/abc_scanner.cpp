#include "radgen/abc_scanner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace radgen {
namespace {

constexpr std::size_t kChunk = 64;  // c values per work unit

bool below_square(std::uint64_t c, Wide rad) {
  if (rad > std::numeric_limits<std::uint64_t>::max()) return true;
  return static_cast<Wide>(c) < rad * rad;
}

std::vector<std::uint64_t> choose_c_values(std::uint64_t c_max, const ScanOptions& options) {
  const std::uint64_t population = c_max - 2;  // [3, c_max]
  std::vector<std::uint64_t> cs;
  if (!options.sample || *options.sample >= population) {
    cs.reserve(population);
    for (std::uint64_t c = 3; c <= c_max; ++c) cs.push_back(c);
    return cs;
  }
  // Floyd's sampling of k distinct values.
  const std::uint64_t k = *options.sample;
  std::mt19937_64 rng(options.seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(k * 2);
  for (std::uint64_t j = population - k; j < population; ++j) {
    const std::uint64_t v = std::uniform_int_distribution<std::uint64_t>(0, j)(rng);
    if (!chosen.insert(v).second) chosen.insert(j);
  }
  cs.reserve(k);
  for (std::uint64_t v : chosen) cs.push_back(v + 3);
  std::sort(cs.begin(), cs.end());
  return cs;
}

void records_for(const FactorSieve& sieve, const RatioInterval& ratio, std::uint64_t c,
                 std::vector<AbcRecord>& out) {
  const NClass c_class = classify(sieve, c, ratio);
  const std::uint64_t rad_c = sieve.radical(c);
  const double ln_c = std::log(static_cast<double>(c));
  const double ln_rad_c = std::log(static_cast<double>(rad_c));
  for (const auto& [a, b] : decompositions(sieve, c)) {
    const std::uint64_t rad_a = sieve.radical(a);
    const std::uint64_t rad_b = sieve.radical(b);
    AbcRecord r;
    r.a = a;
    r.b = b;
    r.c = c;
    r.rad_abc = static_cast<Wide>(rad_a) * rad_b * rad_c;
    r.c_class = c_class;
    r.hypothesis_holds = c_class == NClass::below;
    r.conclusion_holds = below_square(c, r.rad_abc);
    r.quality = ln_c / (std::log(static_cast<double>(rad_a)) +
                        std::log(static_cast<double>(rad_b)) + ln_rad_c);
    out.push_back(r);
  }
}

}  // namespace

std::string to_string(Wide v) {
  if (v == 0) return "0";
  std::string digits;
  while (v > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> decompositions(const FactorSieve& sieve,
                                                                    std::uint64_t c) {
  if (c < 3 || c > sieve.limit())
    throw std::out_of_range("decompositions: c = " + std::to_string(c) +
                            " outside [3, " + std::to_string(sieve.limit()) + "]");
  // gcd(a, c - a) = gcd(a, c): strike multiples of every prime dividing c.
  const std::uint64_t half = c / 2;
  std::vector<bool> shares_factor(half + 1, false);
  sieve.for_each_prime_power(c, [&](std::uint64_t p, unsigned) {
    for (std::uint64_t m = p; m <= half; m += p) shares_factor[m] = true;
  });
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t a = 1; a <= half; ++a)
    if (!shares_factor[a]) out.emplace_back(a, c - a);
  return out;
}

void scan(const FactorSieve& sieve, const PrimeTable& primes, const Params& params,
          std::uint64_t c_max, std::uint64_t prime_limit,
          const std::function<void(const AbcRecord&)>& sink, const ScanOptions& options) {
  if (c_max < 3 || c_max > sieve.limit())
    throw std::out_of_range("scan: c_max = " + std::to_string(c_max) + " outside [3, " +
                            std::to_string(sieve.limit()) + "]");
  const StResult st = st_ratio(primes, params, prime_limit, options.policy);
  const std::vector<std::uint64_t> cs = choose_c_values(c_max, options);
  const std::size_t chunks = (cs.size() + kChunk - 1) / kChunk;
  std::uint64_t done = 0;

  ordered_parallel<std::vector<AbcRecord>>(
      chunks, options.policy.threads,
      [&](std::size_t i) {
        std::vector<AbcRecord> records;
        const std::size_t end = std::min(cs.size(), (i + 1) * kChunk);
        for (std::size_t j = i * kChunk; j < end; ++j)
          records_for(sieve, st.ratio_interval, cs[j], records);
        return records;
      },
      [&](std::vector<AbcRecord>&& records) {
        for (const auto& r : records) sink(r);
        done = std::min<std::uint64_t>(cs.size(), done + kChunk);
        if (options.progress) options.progress(done, cs.size());
      });
}

std::vector<AbcRecord> scan(const FactorSieve& sieve, const PrimeTable& primes,
                            const Params& params, std::uint64_t c_max,
                            std::uint64_t prime_limit, const ScanOptions& options) {
  std::vector<AbcRecord> out;
  scan(sieve, primes, params, c_max, prime_limit,
       [&](const AbcRecord& r) { out.push_back(r); }, options);
  return out;
}

void AbcImplicationVerifier::add(const AbcRecord& record) {
  AbcImplicationReport& rep = report_;
  ++rep.records;
  ++rep.class_counts[static_cast<std::size_t>(record.c_class)];
  if (record.conclusion_holds) ++rep.conclusion_true;
  if (record.hypothesis_holds) {
    ++rep.hypothesis_true;
    if (!record.conclusion_holds) rep.counterexamples.push_back(record);
    if (!rep.best_hypothesis_record || record.quality > rep.best_hypothesis_record->quality)
      rep.best_hypothesis_record = record;
  } else {
    ++rep.hypothesis_false;
  }
  if (top_k_ == 0) return;
  auto& top = rep.top_quality;
  if (top.size() == top_k_ && record.quality <= top.back().quality) return;
  const auto pos = std::upper_bound(top.begin(), top.end(), record.quality,
                                    [](double q, const AbcRecord& r) { return q > r.quality; });
  top.insert(pos, record);
  if (top.size() > top_k_) top.pop_back();
}

AbcImplicationReport verify_abc_implication(std::span<const AbcRecord> records) {
  AbcImplicationVerifier verifier;
  for (const auto& r : records) verifier.add(r);
  return verifier.report();
}

}  // namespace radgen
