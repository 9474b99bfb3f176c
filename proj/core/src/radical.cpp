#include "radgen/radical.hpp"

#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace radgen {
namespace {

constexpr char kMagic[8] = {'R', 'A', 'D', 'G', 'S', 'P', 'F', '1'};
constexpr std::uint32_t kFormatVersion = 1;
constexpr std::uint32_t kFlagRadicals = 1u << 0;

template <class T>
void write_pod(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T read_pod(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw std::runtime_error("sieve dump: truncated header");
  return v;
}

void read_array(std::istream& in, std::vector<std::uint32_t>& dst, std::size_t count) {
  dst.resize(count);
  in.read(reinterpret_cast<char*>(dst.data()),
          static_cast<std::streamsize>(count * sizeof(std::uint32_t)));
  if (!in) throw std::runtime_error("sieve dump: truncated payload");
}

}  // namespace

FactorSieve::FactorSieve(std::uint64_t limit, bool cache_radicals) : limit_(limit) {
  if (limit == 0) throw std::invalid_argument("FactorSieve: limit must be positive");
  if (limit > kMaxSieveLimit)
    throw std::invalid_argument("FactorSieve: limit exceeds 2^32 - 1");
  spf_.assign(limit + 1, 0);
  if (limit >= 1) spf_[1] = 1;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    if (i > limit / i) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i)
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
  }
  if (cache_radicals) build_radicals();
}

void FactorSieve::build_radicals() {
  rad_.assign(limit_ + 1, 1);
  for (std::uint64_t n = 2; n <= limit_; ++n) {
    const std::uint32_t p = spf_[n];
    const std::uint64_t m = n / p;
    rad_[n] = (m % p == 0) ? rad_[m] : rad_[m] * p;
  }
}

void FactorSieve::check(std::uint64_t n) const {
  if (n == 0 || n > limit_)
    throw std::out_of_range("n = " + std::to_string(n) + " outside sieve range [1, " +
                            std::to_string(limit_) + "]");
}

std::uint64_t FactorSieve::smallest_prime_factor(std::uint64_t n) const {
  check(n);
  return spf_[n];
}

std::uint64_t FactorSieve::radical(std::uint64_t n) const {
  check(n);
  if (!rad_.empty()) return rad_[n];
  std::uint64_t r = 1;
  for_each_prime_power(n, [&](std::uint64_t p, unsigned) { r *= p; });
  return r;
}

std::uint64_t FactorSieve::euler_phi(std::uint64_t n) const {
  std::uint64_t phi = 1;
  for_each_prime_power(n, [&](std::uint64_t p, unsigned k) {
    phi *= p - 1;
    for (unsigned i = 1; i < k; ++i) phi *= p;
  });
  return phi;
}

bool FactorSieve::is_squarefree(std::uint64_t n) const {
  bool squarefree = true;
  for_each_prime_power(n, [&](std::uint64_t, unsigned k) {
    if (k > 1) squarefree = false;
  });
  return squarefree;
}

bool FactorSieve::is_prime(std::uint64_t n) const {
  check(n);
  return n >= 2 && spf_[n] == n;
}

std::vector<PrimePower> FactorSieve::factorize(std::uint64_t n) const {
  std::vector<PrimePower> out;
  for_each_prime_power(n, [&](std::uint64_t p, unsigned k) { out.push_back({p, k}); });
  return out;
}

void FactorSieve::save(std::ostream& out) const {
  out.write(kMagic, sizeof kMagic);
  write_pod(out, kFormatVersion);
  write_pod(out, rad_.empty() ? std::uint32_t{0} : kFlagRadicals);
  write_pod(out, limit_);
  out.write(reinterpret_cast<const char*>(spf_.data()),
            static_cast<std::streamsize>(spf_.size() * sizeof(std::uint32_t)));
  if (!rad_.empty())
    out.write(reinterpret_cast<const char*>(rad_.data()),
              static_cast<std::streamsize>(rad_.size() * sizeof(std::uint32_t)));
  if (!out) throw std::runtime_error("sieve dump: write failed");
}

FactorSieve FactorSieve::load(std::istream& in) {
  char magic[sizeof kMagic];
  in.read(magic, sizeof magic);
  if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0)
    throw std::runtime_error("sieve dump: bad magic bytes");
  const auto version = read_pod<std::uint32_t>(in);
  if (version != kFormatVersion)
    throw std::runtime_error("sieve dump: unsupported version " + std::to_string(version));
  const auto flags = read_pod<std::uint32_t>(in);
  const auto limit = read_pod<std::uint64_t>(in);
  if (limit == 0 || limit > kMaxSieveLimit)
    throw std::runtime_error("sieve dump: invalid limit " + std::to_string(limit));

  FactorSieve sieve;
  sieve.limit_ = limit;
  read_array(in, sieve.spf_, limit + 1);
  if (flags & kFlagRadicals) read_array(in, sieve.rad_, limit + 1);

  // Reject corrupted payloads: spf[n] must be a prime factor of n.
  if (sieve.spf_[1] != 1) throw std::runtime_error("sieve dump: corrupt payload");
  for (std::uint64_t n = 2; n <= limit; ++n) {
    const std::uint64_t p = sieve.spf_[n];
    if (p < 2 || n % p != 0 || sieve.spf_[p] != p)
      throw std::runtime_error("sieve dump: corrupt payload at n = " + std::to_string(n));
  }
  return sieve;
}

void FactorSieve::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  save(out);
}

FactorSieve FactorSieve::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load(in);
}

}  // namespace radgen
