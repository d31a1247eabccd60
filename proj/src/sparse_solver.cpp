#include "mbb/sparse_solver.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace mbb {

const char* to_string(Stage s) {
  switch (s) {
    case Stage::S1: return "S1";
    case Stage::S2: return "S2";
    case Stage::S3: return "S3";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

void check_deadline(const std::optional<Clock::time_point>& deadline) {
  if (deadline && Clock::now() > *deadline) throw Timeout("wall-clock budget exhausted");
}

}  // namespace

HeuristicReduction h_mbb(const BipartiteGraph& g, unsigned top_r) {
  HeuristicReduction out;
  const auto all = full_subset(g);
  out.best = greedy_balanced_biclique(g, all, HeuristicStrategy::MaxDegree, top_r);
  out.degeneracy = core_decompose(g).degeneracy;

  // The degeneracy bounds every balanced biclique's per-side size; when the
  // (k+1)-core is empty the degeneracy equals k and nothing larger exists.
  auto k = static_cast<std::uint32_t>(out.best.per_side());
  out.reduced = k_core_reduce(g, all, k + 1);
  if (out.reduced.empty()) {
    out.certified = true;
    return out;
  }

  auto by_core = greedy_balanced_biclique(g, out.reduced, HeuristicStrategy::MaxCore, top_r);
  if (by_core.per_side() > k) {
    out.best = std::move(by_core);
    k = static_cast<std::uint32_t>(out.best.per_side());
    out.reduced = k_core_reduce(g, out.reduced, k + 1);
    out.certified = out.reduced.empty();
  }
  return out;
}

std::vector<CenteredSubgraph> bridge_mbb(Incumbent& inc, const InducedSubgraph& reduced, const PipelineOptions& opts,
                                         PipelineStats* stats) {
  std::vector<CenteredSubgraph> survivors;
  const auto& g = reduced.graph;
  if (g.vertex_count() == 0) return survivors;

  const auto order = bicore_decompose(g);
  if (stats) stats->bidegeneracy = order.degeneracy;
  const auto pos = order_positions(g, order.peel_order);
  std::optional<Clock::time_point> deadline;
  if (opts.timeout_secs) deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*opts.timeout_secs));

  for (std::size_t i = 0; i < order.peel_order.size(); ++i) {
    if ((i & 63) == 0) check_deadline(deadline);
    auto h = centered_subgraph(g, order.peel_order, pos, i, opts.scope);
    if (stats) {
      ++stats->subgraphs_total;
      stats->centered_size_total += h.members.size();
    }
    auto k = inc.per_side();
    if (std::min(h.members.left.size(), h.members.right.size()) <= k) {
      if (stats) ++stats->subgraphs_pruned;
      continue;
    }
    const auto local_degeneracy = core_decompose(h.sub.graph).degeneracy;
    if (local_degeneracy <= k) {
      if (stats) ++stats->subgraphs_pruned;
      continue;
    }
    auto found = greedy_balanced_biclique(h.sub.graph, full_subset(h.sub.graph), HeuristicStrategy::MaxLocalCore,
                                          opts.top_r);
    if (found.per_side() > k && inc.offer(reduced.to_parent(h.sub.to_parent(found)))) {
      if (stats) ++stats->heuristic_improvements;
      if (local_degeneracy <= inc.per_side()) {
        if (stats) ++stats->subgraphs_pruned;
        continue;
      }
    }
    survivors.push_back(std::move(h));
  }
  return survivors;
}

void verify_mbb(Incumbent& inc, const InducedSubgraph& reduced, const std::vector<CenteredSubgraph>& subgraphs,
                const PipelineOptions& opts, PipelineStats* stats, std::optional<Clock::time_point> deadline) {
  std::mutex stats_mu;
  auto search_one = [&](const CenteredSubgraph& h) {
    const auto& hg = h.sub.graph;
    const auto center = h.local_center();
    const auto kept = k_core_reduce(hg, full_subset(hg), static_cast<std::uint32_t>(inc.per_side() + 1));
    if (!kept.contains(center)) {
      std::lock_guard lock(stats_mu);
      if (stats) ++stats->subgraphs_emptied;
      return;
    }
    const auto core = induced_subgraph(hg, kept);
    VertexRef local{center.side, 0};
    const auto& o = core.origin(center.side);
    local.index = static_cast<std::uint32_t>(std::lower_bound(o.begin(), o.end(), center.index) - o.begin());

    Incumbent view(inc, [&](const Biclique& b) { return reduced.to_parent(h.sub.to_parent(core.to_parent(b))); });
    DenseSolver solver(core.graph, DenseOptions{.deadline = deadline});
    solver.dense_mbb(anchored_state(core.graph, local), view);

    std::lock_guard lock(stats_mu);
    if (stats) {
      ++stats->subgraphs_searched;
      stats->dense += solver.stats();
    }
  };

  const unsigned threads = std::max(1U, opts.threads);
  if (threads == 1 || subgraphs.size() < 2) {
    for (const auto& h : subgraphs) search_one(h);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      while (!stop.load()) {
        const auto i = next.fetch_add(1);
        if (i >= subgraphs.size()) return;
        try {
          search_one(subgraphs[i]);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
          stop = true;
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
}

PipelineReport hbv_mbb(const BipartiteGraph& g, const PipelineOptions& opts) {
  PipelineReport report;
  auto& stats = report.stats;
  Incumbent inc;
  std::optional<Clock::time_point> deadline;
  if (opts.timeout_secs) deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*opts.timeout_secs));

  auto finish = [&](Stage stage) {
    report.stage = stage;
    report.certified = true;
  };
  try {
    auto t = Clock::now();
    auto step1 = h_mbb(g, opts.top_r);
    inc.offer(step1.best);
    stats.degeneracy = step1.degeneracy;
    stats.reduced_vertices = step1.reduced.size();
    stats.pruned_step1 = g.vertex_count() - step1.reduced.size();
    stats.wall_ms[0] = ms_since(t);
    if (step1.certified) {
      finish(Stage::S1);
    } else {
      check_deadline(deadline);
      t = Clock::now();
      const auto reduced = induced_subgraph(g, step1.reduced);
      PipelineOptions bridge_opts = opts;
      if (deadline) bridge_opts.timeout_secs = std::chrono::duration<double>(*deadline - Clock::now()).count();
      const auto survivors = bridge_mbb(inc, reduced, bridge_opts, &stats);
      stats.wall_ms[1] = ms_since(t);
      if (survivors.empty()) {
        finish(Stage::S2);
      } else {
        t = Clock::now();
        verify_mbb(inc, reduced, survivors, opts, &stats, deadline);
        stats.wall_ms[2] = ms_since(t);
        finish(Stage::S3);
      }
    }
  } catch (const Timeout&) {
    report.timeout_hit = true;
    report.certified = false;
  }
  report.result = inc.best();
  return report;
}

}  // namespace mbb
