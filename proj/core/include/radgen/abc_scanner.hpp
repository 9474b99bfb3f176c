#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "radgen/identity_checks.hpp"
#include "radgen/parallel.hpp"
#include "radgen/params.hpp"
#include "radgen/primes.hpp"
#include "radgen/radical.hpp"

namespace radgen {

__extension__ using Wide = unsigned __int128;

std::string to_string(Wide v);

// A coprime triple a + b = c with a <= b.
struct AbcRecord {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  Wide rad_abc = 0;                 // R(a) R(b) R(c)
  NClass c_class = NClass::ambiguous;
  bool hypothesis_holds = false;    // c < R(c)^{S/T}, committed over the S/T enclosure
  bool conclusion_holds = false;    // c < R(abc)^2, exact integer comparison
  double quality = 0.0;             // ln c / ln R(abc)
};

// All {a, b} with a <= b, a + b = c, gcd(a, b) = 1, in ascending a. There are
// phi(c)/2 of them. Throws std::out_of_range unless 3 <= c <= sieve.limit().
std::vector<std::pair<std::uint64_t, std::uint64_t>> decompositions(const FactorSieve& sieve,
                                                                    std::uint64_t c);

struct ScanOptions {
  // When set, scan this many distinct c drawn uniformly from [3, c_max]
  // instead of every c.
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 0x5eed;
  ExecutionPolicy policy;
  // Called with the number of c values finished so far (from the consuming
  // thread).
  std::function<void(std::uint64_t done, std::uint64_t total)> progress;
};

// Visits every record for 3 <= c <= c_max in ascending (c, a) order,
// regardless of the thread count.
void scan(const FactorSieve& sieve, const PrimeTable& primes, const Params& params,
          std::uint64_t c_max, std::uint64_t prime_limit,
          const std::function<void(const AbcRecord&)>& sink, const ScanOptions& options = {});

std::vector<AbcRecord> scan(const FactorSieve& sieve, const PrimeTable& primes,
                            const Params& params, std::uint64_t c_max,
                            std::uint64_t prime_limit, const ScanOptions& options = {});

struct AbcImplicationReport {
  std::uint64_t records = 0;
  std::uint64_t hypothesis_true = 0;
  std::uint64_t hypothesis_false = 0;
  std::uint64_t conclusion_true = 0;
  // Records per class of c (indexed by NClass).
  std::array<std::uint64_t, 4> class_counts{};
  std::vector<AbcRecord> counterexamples;
  std::optional<AbcRecord> best_hypothesis_record;  // max quality with hypothesis true
  std::vector<AbcRecord> top_quality;                // highest quality overall, descending

  [[nodiscard]] bool ok() const { return counterexamples.empty(); }
};

// Streaming accumulator for the implication hypothesis => conclusion.
class AbcImplicationVerifier {
 public:
  explicit AbcImplicationVerifier(std::size_t top_k = 10) : top_k_(top_k) {}
  void add(const AbcRecord& record);
  [[nodiscard]] const AbcImplicationReport& report() const { return report_; }

 private:
  std::size_t top_k_;
  AbcImplicationReport report_;
};

AbcImplicationReport verify_abc_implication(std::span<const AbcRecord> records);

}  // namespace radgen
