#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "radgen/compensated_sum.hpp"
#include "radgen/parallel.hpp"

using namespace radgen;

TEST_CASE("compensated summation recovers cancelled terms") {
  CompensatedSum acc;
  acc += 1.0;
  acc += 1e100;
  acc += 1.0;
  acc += -1e100;
  CHECK(acc.value() == 2.0);

  CompensatedSum a, b;
  for (int i = 0; i < 1000; ++i) a += 0.1;
  for (int i = 0; i < 1000; ++i) b += 0.1;
  a.merge(b);
  CHECK(a.value() == doctest::Approx(200.0).epsilon(1e-15));
}

TEST_CASE("deterministic sums are bit-identical across thread counts") {
  auto term = [](std::uint64_t i) { return 1.0 / (double(i) * double(i)); };
  const double one = deterministic_sum(1, 300'000, ExecutionPolicy{1}, term);
  for (unsigned threads : {2u, 3u, 8u})
    CHECK(deterministic_sum(1, 300'000, ExecutionPolicy{threads}, term) == one);
  CHECK(one == doctest::Approx(M_PI * M_PI / 6 - 1.0 / 300'000).epsilon(1e-10));
  CHECK(deterministic_sum(5, 4, ExecutionPolicy{}, term) == 0.0);

  auto visit = [](std::uint64_t i, std::array<CompensatedSum, 2>& acc) {
    acc[0] += double(i);
    acc[1] += 1.0;
  };
  const auto sums = deterministic_sums<2>(1, 100'000, ExecutionPolicy{4}, visit);
  CHECK(sums[0] == 5'000'050'000.0);
  CHECK(sums[1] == 100'000.0);
}

TEST_CASE("worker exceptions propagate") {
  auto body = [](std::size_t b) {
    if (b == 3) throw std::runtime_error("block 3");
  };
  CHECK_THROWS_WITH(for_each_block(10, 4, body), "block 3");
  CHECK_THROWS_WITH(for_each_block(10, 1, body), "block 3");
}

TEST_CASE("ordered_parallel consumes in order") {
  for (unsigned threads : {1u, 2u, 5u}) {
    std::vector<std::size_t> seen;
    ordered_parallel<std::size_t>(
        200, threads, [](std::size_t i) { return i * i; },
        [&](std::size_t&& v) { seen.push_back(v); });
    REQUIRE(seen.size() == 200);
    for (std::size_t i = 0; i < 200; ++i) REQUIRE(seen[i] == i * i);
  }
  CHECK_THROWS_WITH(ordered_parallel<int>(
                        50, 3,
                        [](std::size_t i) -> int {
                          if (i == 17) throw std::runtime_error("chunk 17");
                          return int(i);
                        },
                        [](int&&) {}),
                    "chunk 17");
  CHECK_THROWS_WITH(ordered_parallel<int>(
                        50, 3, [](std::size_t i) { return int(i); },
                        [](int&& v) {
                          if (v == 9) throw std::runtime_error("consumer");
                        }),
                    "consumer");
}
