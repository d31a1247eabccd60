#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "mbb/decomposition.hpp"
#include "mbb/dense_solver.hpp"
#include "mbb/graph.hpp"
#include "mbb/heuristic.hpp"
#include "mbb/incumbent.hpp"

namespace mbb {

/// Earliest step of the pipeline at which the result was certified optimal:
/// S1 heuristic + core bound, S2 every centred subgraph pruned, S3 after
/// exhaustive verification.
enum class Stage { S1, S2, S3 };

const char* to_string(Stage s);

struct PipelineOptions {
  unsigned top_r = 1;
  unsigned threads = 1;
  std::optional<double> timeout_secs;
  CenterScope scope = CenterScope::Suffix;
};

struct PipelineStats {
  std::uint64_t pruned_step1 = 0;  // vertices removed by core reduction in step 1
  std::uint64_t reduced_vertices = 0;
  std::uint32_t degeneracy = 0;    // of the input graph
  std::uint32_t bidegeneracy = 0;  // of the step-1 residual graph
  std::uint64_t subgraphs_total = 0;
  std::uint64_t subgraphs_pruned = 0;
  std::uint64_t subgraphs_searched = 0;
  std::uint64_t subgraphs_emptied = 0;  // center removed by the core reduction in step 3
  std::uint64_t centered_size_total = 0;
  std::uint64_t heuristic_improvements = 0;
  DenseStats dense;
  double wall_ms[3] = {0, 0, 0};
};

struct PipelineReport {
  Biclique result;
  Stage stage = Stage::S1;
  bool certified = false;
  bool timeout_hit = false;
  PipelineStats stats;
};

struct HeuristicReduction {
  Biclique best;
  VertexSubset reduced;  // the (per_side + 1)-core that may still hold a better biclique
  bool certified = false;
  std::uint32_t degeneracy = 0;
};

/// Step 1: greedy by degree, core reduction, early termination when the
/// degeneracy equals the incumbent per-side size, then greedy by core number
/// on the residual graph.
HeuristicReduction h_mbb(const BipartiteGraph& g, unsigned top_r = 1);

/// Step 2 on the residual graph `reduced` (an induced subgraph of the input).
/// Raises `inc` (input coordinates) and returns the centred subgraphs of
/// reduced.graph that survive pruning, in bidegeneracy order.
std::vector<CenteredSubgraph> bridge_mbb(Incumbent& inc, const InducedSubgraph& reduced,
                                         const PipelineOptions& opts = {}, PipelineStats* stats = nullptr);

/// Step 3: exhaustive search of each surviving subgraph, anchored at its
/// center.
void verify_mbb(Incumbent& inc, const InducedSubgraph& reduced, const std::vector<CenteredSubgraph>& subgraphs,
                const PipelineOptions& opts = {}, PipelineStats* stats = nullptr,
                std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

PipelineReport hbv_mbb(const BipartiteGraph& g, const PipelineOptions& opts = {});

}  // namespace mbb
