#pragma once

#include <cstdint>

#include "geobench/querygen/catalog.hpp"

namespace geobench {

/// One row of the scenario's pool, chosen uniformly with replacement.
/// (seed, iteration) determines the row; throws CatalogError on an empty pool.
Bindings sample_scenario_params(const Scenario& scenario, std::uint64_t seed, std::uint64_t iteration);

/// Row index behind sample_scenario_params, exposed for frequency checks.
std::size_t sample_row_index(std::size_t pool_size, std::uint64_t seed, std::uint64_t iteration);

}  // namespace geobench
