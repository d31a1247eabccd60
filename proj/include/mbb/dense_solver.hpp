#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "mbb/bitset.hpp"
#include "mbb/complement.hpp"
#include "mbb/graph.hpp"
#include "mbb/incumbent.hpp"

namespace mbb {

/// Partial biclique (A, B) plus candidates (C_A, C_B). A and C_A live on
/// side `a_side`; B and C_B on the opposite side. Recursion swaps the roles
/// so that A and B are enlarged in turn.
struct SearchState {
  std::vector<std::uint32_t> a;
  std::vector<std::uint32_t> b;
  std::vector<std::uint32_t> cand_a;
  std::vector<std::uint32_t> cand_b;
  Side a_side = Side::Left;

  /// Empty partial biclique, every vertex a candidate.
  static SearchState root(const BipartiteGraph& g);
};

/// Counters exposed through the CLI stats.
struct DenseStats {
  std::uint64_t recursions = 0;
  std::uint64_t bound_prunes = 0;
  std::uint64_t matching_prunes = 0;
  std::uint64_t moved_all_connected = 0;  // vertices moved into the partial biclique
  std::uint64_t removed_low_degree = 0;   // candidates deleted for low degree
  std::uint64_t dp_calls = 0;
  std::uint64_t dp_improvements = 0;
  std::uint64_t branch_nodes = 0;
  /// Smallest candidate-count reduction seen on an include / exclude child.
  std::uint64_t min_include_removed = UINT64_MAX;
  std::uint64_t min_exclude_removed = UINT64_MAX;
  std::uint32_t max_depth = 0;
  std::uint64_t invariant_violations = 0;  // only counted with check_invariants

  DenseStats& operator+=(const DenseStats& o);
};

struct DenseOptions {
  std::uint32_t max_depth = 100000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Re-verify the SearchState invariant at every recursion entry.
  bool check_invariants = false;
  /// Extra bound in dense_mbb: a biclique is an independent set of the
  /// candidates' bipartite complement, so |A|+|B|+|C| minus a maximum
  /// complement matching caps its total size.
  bool matching_bound = true;
};

/// Complement-isolated candidates plus the path/cycle components of the
/// complement restricted to C_A ∪ C_B. All vertex refs use graph sides.
struct ComplementDecomposition {
  VertexSubset trivial;
  std::vector<ComplementComponent> components;
};

/// Bit-row view of a graph plus the search routines that run on it.
/// Construction costs O(|L|·|R| / 64); intended for dense or small graphs.
class DenseSolver {
 public:
  explicit DenseSolver(const BipartiteGraph& g, DenseOptions opts = {});

  /// Exact search: reductions, the polynomial DP, and branching on a vertex
  /// that misses at least three opposite candidates.
  void dense_mbb(const SearchState& s, Incumbent& inc);
  /// Plain include/exclude enumeration with the simple bound.
  void basic_bb(const SearchState& s, Incumbent& inc);

  bool bounding_check(const SearchState& s, const Incumbent& inc) const;
  SearchState reduce(const SearchState& s, const Incumbent& inc);
  bool poly_case_check(const SearchState& s) const;
  std::optional<VertexRef> select_branch_vertex(const SearchState& s) const;
  /// Throws PreconditionViolated when some candidate misses > 2 opposite candidates.
  ComplementDecomposition complement_components(const SearchState& s) const;
  /// Returns a balanced biclique strictly larger than the incumbent, or
  /// nothing. Does not modify the incumbent.
  std::optional<Biclique> dynamic_mbb(const SearchState& s, const Incumbent& inc);

  const DenseStats& stats() const { return stats_; }
  void reset_stats() { stats_ = {}; }

 private:
  struct State {
    Bitset a, b, ca, cb;
    std::size_t na = 0, nb = 0;  // |a|, |b|
    Side a_side = Side::Left;
  };

  State to_bits(const SearchState& s) const;
  SearchState from_bits(const State& s) const;
  const Bitset& row(Side side, std::size_t v) const { return rows_[side_index(side)][v]; }

  bool invariant_holds(const State& s) const;
  bool bound(const State& s, std::size_t best) const;
  // no strictly larger balanced biclique below this node
  bool hopeless(const State& s, std::size_t best) const;
  // stops early once the matching reaches `enough`
  std::size_t complement_matching(const State& s, std::size_t enough = SIZE_MAX) const;
  bool matching_hopeless(const State& s, std::size_t best) const;
  void reduce_bits(State& s, const Incumbent& inc);
  std::size_t missing(const State& s, Side side, std::size_t v) const;
  bool poly_bits(const State& s) const;
  std::optional<VertexRef> branch_vertex_bits(const State& s) const;
  ComplementDecomposition components_bits(const State& s) const;
  std::optional<Biclique> dynamic_bits(const State& s, const Incumbent& inc);

  void dense_rec(State s, Incumbent& inc, std::uint32_t depth);
  void basic_rec(State s, Incumbent& inc, std::uint32_t depth);
  void tick(std::uint32_t depth);
  Biclique to_biclique(const Bitset& a, const Bitset& b, Side a_side) const;

  std::array<std::uint32_t, 2> counts_{0, 0};
  std::array<std::vector<Bitset>, 2> rows_;
  DenseOptions opts_;
  DenseStats stats_;
};

/// Seeds a state for a search anchored at `center`: A = {center}, C_A the
/// other members on the center's side, C_B the members adjacent to center.
SearchState anchored_state(const BipartiteGraph& g, VertexRef center);

}  // namespace mbb
