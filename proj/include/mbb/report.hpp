#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mbb/decomposition.hpp"
#include "mbb/graph.hpp"
#include "mbb/sparse_solver.hpp"

namespace mbb {

inline constexpr int kSchemaVersion = 1;

enum class Algo { Hbv, Dense, Basic, Oracle };

const char* to_string(Algo a);
Algo parse_algo(const std::string& s);  // InvalidSpec

struct SolveOptions {
  Algo algo = Algo::Hbv;
  std::optional<double> timeout_secs;
  unsigned threads = 1;
  std::optional<std::uint64_t> seed;  // recorded only, for generated inputs
};

struct SolveReport {
  Algo algo = Algo::Hbv;
  Biclique biclique;
  std::optional<Stage> stage;  // hbv only
  bool certified = false;
  bool timeout_hit = false;
  std::optional<std::uint64_t> seed;
  nlohmann::ordered_json stats;
};

/// Runs the selected solver and checks the answer with validate_biclique;
/// a result that is not a balanced biclique raises Error.
SolveReport solve(const BipartiteGraph& g, const SolveOptions& opts);

nlohmann::ordered_json to_json(const SolveReport& r);
/// Schema problems in a serialized report; empty when valid.
std::vector<std::string> check_report_schema(const nlohmann::ordered_json& j);
/// Copy with every "wall_ms" member removed, for comparing runs.
nlohmann::ordered_json without_wall_times(nlohmann::ordered_json j);

nlohmann::ordered_json decomposition_json(const BipartiteGraph& g, const DecompositionResult& d);
nlohmann::ordered_json error_json(const std::string& kind, const std::string& message,
                                  std::optional<std::size_t> line = std::nullopt);

}  // namespace mbb
