#include "mbb/bench.hpp"

#include <chrono>

#include "mbb/datasets.hpp"
#include "mbb/errors.hpp"
#include "mbb/generator.hpp"
#include "mbb/heuristic.hpp"
#include "mbb/report.hpp"

namespace mbb {

using json = nlohmann::ordered_json;

const char* optimum_interpretation(std::size_t per_side, std::size_t published) {
  if (per_side == published) return "per_side";
  if (2 * per_side == published) return "total";
  return "none";
}

json bench_dense(const DenseBenchOptions& opts) {
  json rows = json::array();
  for (auto n : opts.sizes) {
    for (double d : opts.densities) {
      json inst = json::array();
      double total_ms = 0;
      std::size_t solved = 0;
      for (std::size_t i = 0; i < opts.instances; ++i) {
        const GenSpec spec{n, n, d, opts.base_seed + i};
        const auto g = generate_random(spec);
        const auto lower = greedy_balanced_biclique(g, full_subset(g), HeuristicStrategy::MaxDegree).per_side();
        SolveOptions so;
        so.algo = Algo::Dense;
        so.timeout_secs = opts.timeout_secs;
        so.seed = spec.seed;
        json entry{{"seed", spec.seed}};
        try {
          const auto t = std::chrono::steady_clock::now();
          const auto r = solve(g, so);
          const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count();
          entry["per_side_size"] = r.biclique.per_side();
          entry["heuristic_lower_bound"] = lower;
          entry["valid"] = true;
          entry["timeout_hit"] = r.timeout_hit;
          entry["recursions"] = r.stats["recursions"];
          entry["wall_ms"] = ms;
          total_ms += ms;
          solved += r.timeout_hit ? 0 : 1;
        } catch (const std::exception& e) {
          entry["error"] = e.what();
        }
        inst.push_back(entry);
      }
      rows.push_back(json{{"left", n},
                          {"right", n},
                          {"density", d},
                          {"instances", inst},
                          {"solved", solved},
                          {"mean_wall_ms", opts.instances ? total_ms / double(opts.instances) : 0.0}});
    }
  }
  return json{{"schema_version", kSchemaVersion}, {"suite", "dense"}, {"algo", "dense"}, {"rows", rows}};
}

json bench_sparse(const SparseBenchOptions& opts) {
  json rows = json::array();
  for (const auto& d : dataset_registry()) {
    json row{{"name", d.name}, {"konect_id", d.konect_id}, {"published_optimum", d.reported_optimum}};
    try {
      const auto g = load_dataset(d.name, opts.cache_dir, opts.offline);
      SolveOptions so;
      so.algo = Algo::Hbv;
      so.timeout_secs = opts.timeout_secs;
      so.threads = opts.threads;
      const auto r = solve(g, so);
      const auto k = r.biclique.per_side();
      row["status"] = r.timeout_hit ? "timeout" : "solved";
      row["left_count"] = g.left_count();
      row["right_count"] = g.right_count();
      row["edge_count"] = g.edge_count();
      row["per_side_size"] = k;
      row["total_size"] = 2 * k;
      row["stage"] = r.stage ? json(to_string(*r.stage)) : json(nullptr);
      row["interpretation"] = optimum_interpretation(k, d.reported_optimum);
      row["stats"] = r.stats;
    } catch (const NotCached&) {
      row["status"] = "skipped: not cached";
    } catch (const std::exception& e) {
      row["status"] = std::string("error: ") + e.what();
    }
    rows.push_back(row);
  }
  return json{{"schema_version", kSchemaVersion}, {"suite", "sparse"}, {"algo", "hbv"}, {"rows", rows}};
}

}  // namespace mbb
