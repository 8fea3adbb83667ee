#include "geobench/querygen/scenario.hpp"

#include <random>

namespace geobench {

std::size_t sample_row_index(std::size_t pool_size, std::uint64_t seed, std::uint64_t iteration) {
  if (pool_size == 0) throw CatalogError("cannot sample from an empty parameter pool");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(iteration), static_cast<std::uint32_t>(iteration >> 32)};
  std::mt19937_64 rng(seq);
  // Rejection below (2^64 mod m) keeps the draw exactly uniform; the
  // distribution classes are not portable across standard libraries.
  const std::uint64_t m = pool_size;
  const std::uint64_t threshold = (0 - m) % m;
  std::uint64_t x;
  do {
    x = rng();
  } while (x < threshold);
  return static_cast<std::size_t>(x % m);
}

Bindings sample_scenario_params(const Scenario& scenario, std::uint64_t seed, std::uint64_t iteration) {
  if (scenario.pool.size() == 0) throw CatalogError("scenario " + scenario.id + " has an empty parameter pool");
  return scenario.pool.row(sample_row_index(scenario.pool.size(), seed, iteration));
}

}  // namespace geobench
