#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mbb/graph.hpp"

namespace mbb {

struct DatasetInfo {
  std::string name;       // registry key, e.g. "moreno-crime"
  std::string konect_id;  // archive / directory name on KONECT
  std::string url;
  // 0-based columns holding the left and right labels in out.<id>
  int left_column = 0;
  int right_column = 1;
  std::size_t reported_optimum = 0;  // the published "Optimum" value
  // pinned SHA-256 of the extracted edge file; empty = trust on first use
  std::string sha256;
};

const std::vector<DatasetInfo>& dataset_registry();
const DatasetInfo& find_dataset(const std::string& name);  // UnknownDataset

/// $MBB_CACHE_DIR, else $XDG_CACHE_HOME/mbb, else ~/.cache/mbb.
std::filesystem::path default_cache_dir();
/// True when $MBB_OFFLINE is set to anything but "" or "0".
bool offline_from_env();

/// Returns the cached edge file of `name`, downloading and extracting the
/// KONECT archive first unless `offline`. The file's SHA-256 is compared with
/// the pinned value, or with the sidecar written on first download; on a
/// mismatch the entry is moved under <cache>/quarantine and ChecksumMismatch
/// is thrown. Offline with no cache entry throws NotCached.
std::filesystem::path fetch_dataset(const std::string& name, const std::filesystem::path& cache_dir, bool offline);

BipartiteGraph load_dataset(const std::string& name, const std::filesystem::path& cache_dir, bool offline);

std::string sha256_file(const std::filesystem::path& p);

}  // namespace mbb
