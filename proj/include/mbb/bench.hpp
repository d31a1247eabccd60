#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "json.hpp"

namespace mbb {

struct DenseBenchOptions {
  std::vector<std::uint32_t> sizes{32, 64, 128};
  std::vector<double> densities{0.70, 0.75, 0.80, 0.85, 0.90, 0.95};
  std::size_t instances = 5;
  std::uint64_t base_seed = 1;  // instance i uses base_seed + i at every density
  std::optional<double> timeout_secs;
};

/// Grid over sizes x densities, solved with the dense solver. The same seeds
/// are reused across densities, so each instance column is a nested family.
nlohmann::ordered_json bench_dense(const DenseBenchOptions& opts);

struct SparseBenchOptions {
  std::filesystem::path cache_dir;
  bool offline = false;
  std::optional<double> timeout_secs;
  unsigned threads = 1;
};

/// Every registered dataset through hbv; missing ones are recorded as
/// "skipped: not cached" (offline) or with the fetch error.
nlohmann::ordered_json bench_sparse(const SparseBenchOptions& opts);

/// Which reading of a published optimum matches a per-side size:
/// "per_side", "total", or "none".
const char* optimum_interpretation(std::size_t per_side, std::size_t published);

}  // namespace mbb
