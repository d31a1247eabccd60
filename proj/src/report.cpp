#include "mbb/report.hpp"

#include <chrono>

#include "mbb/dense_solver.hpp"
#include "mbb/errors.hpp"
#include "mbb/heuristic.hpp"
#include "mbb/oracle.hpp"

namespace mbb {

using json = nlohmann::ordered_json;

const char* to_string(Algo a) {
  switch (a) {
    case Algo::Hbv: return "hbv";
    case Algo::Dense: return "dense";
    case Algo::Basic: return "basic";
    case Algo::Oracle: return "oracle";
  }
  return "?";
}

Algo parse_algo(const std::string& s) {
  for (Algo a : {Algo::Hbv, Algo::Dense, Algo::Basic, Algo::Oracle}) {
    if (s == to_string(a)) return a;
  }
  throw InvalidSpec("unknown algorithm '" + s + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

json dense_stats_json(const DenseStats& s) {
  auto min_or_null = [](std::uint64_t v) { return v == UINT64_MAX ? json(nullptr) : json(v); };
  return json{{"recursions", s.recursions},
              {"bound_prunes", s.bound_prunes},
              {"moved_all_connected", s.moved_all_connected},
              {"removed_low_degree", s.removed_low_degree},
              {"dp_calls", s.dp_calls},
              {"dp_improvements", s.dp_improvements},
              {"branch_nodes", s.branch_nodes},
              {"min_include_removed", min_or_null(s.min_include_removed)},
              {"min_exclude_removed", min_or_null(s.min_exclude_removed)},
              {"max_depth", s.max_depth}};
}

std::optional<Clock::time_point> deadline_of(const SolveOptions& o) {
  if (!o.timeout_secs) return std::nullopt;
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*o.timeout_secs));
}

}  // namespace

SolveReport solve(const BipartiteGraph& g, const SolveOptions& opts) {
  SolveReport r;
  r.algo = opts.algo;
  r.seed = opts.seed;
  const auto t0 = Clock::now();
  auto elapsed = [&] { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); };

  switch (opts.algo) {
    case Algo::Hbv: {
      PipelineOptions po;
      po.threads = opts.threads;
      po.timeout_secs = opts.timeout_secs;
      auto rep = hbv_mbb(g, po);
      r.biclique = rep.result;
      r.certified = rep.certified;
      r.timeout_hit = rep.timeout_hit;
      if (!rep.timeout_hit) r.stage = rep.stage;
      const auto& s = rep.stats;
      auto ds = dense_stats_json(s.dense);
      r.stats = json{{"recursions", s.dense.recursions},
                     {"degeneracy", s.degeneracy},
                     {"bidegeneracy", s.bidegeneracy},
                     {"pruned_step1", s.pruned_step1},
                     {"reduced_vertices", s.reduced_vertices},
                     {"subgraphs_total", s.subgraphs_total},
                     {"subgraphs_pruned", s.subgraphs_pruned},
                     {"subgraphs_searched", s.subgraphs_searched},
                     {"subgraphs_emptied", s.subgraphs_emptied},
                     {"centered_size_total", s.centered_size_total},
                     {"heuristic_improvements", s.heuristic_improvements},
                     {"reductions", s.dense.moved_all_connected + s.dense.removed_low_degree},
                     {"dense", ds},
                     {"wall_ms", json{{"S1", s.wall_ms[0]}, {"S2", s.wall_ms[1]}, {"S3", s.wall_ms[2]},
                                      {"total", elapsed()}}}};
      break;
    }
    case Algo::Dense:
    case Algo::Basic: {
      Incumbent inc(greedy_balanced_biclique(g, full_subset(g), HeuristicStrategy::MaxDegree));
      DenseOptions dopt;
      dopt.deadline = deadline_of(opts);
      DenseSolver solver(g, dopt);
      try {
        if (opts.algo == Algo::Dense) {
          solver.dense_mbb(SearchState::root(g), inc);
        } else {
          solver.basic_bb(SearchState::root(g), inc);
        }
        r.certified = true;
      } catch (const Timeout&) {
        r.timeout_hit = true;
      }
      r.biclique = inc.best();
      const auto& s = solver.stats();
      r.stats = dense_stats_json(s);
      r.stats["reductions"] = s.moved_all_connected + s.removed_low_degree;
      r.stats["wall_ms"] = json{{"total", elapsed()}};
      break;
    }
    case Algo::Oracle:
      r.biclique = brute_force_mbb(g);
      r.certified = true;
      r.stats = json{{"recursions", 0}, {"wall_ms", json{{"total", elapsed()}}}};
      break;
  }

  r.biclique.make_balanced();
  const auto check = validate_biclique(g, r.biclique);
  if (!check.is_biclique || !check.is_balanced) {
    throw Error(std::string("solver '") + to_string(opts.algo) + "' returned an invalid biclique");
  }
  return r;
}

json to_json(const SolveReport& r) {
  json left = json::array(), right = json::array();
  for (auto v : r.biclique.a_side) left.push_back(v + 1);
  for (auto v : r.biclique.b_side) right.push_back(v + 1);
  return json{{"schema_version", kSchemaVersion},
              {"per_side_size", r.biclique.per_side()},
              {"total_size", 2 * r.biclique.per_side()},
              {"left", left},
              {"right", right},
              {"algo", to_string(r.algo)},
              {"stage", r.stage ? json(to_string(*r.stage)) : json(nullptr)},
              {"certified", r.certified},
              {"stats", r.stats},
              {"seed", r.seed ? json(*r.seed) : json(nullptr)},
              {"timeout_hit", r.timeout_hit}};
}

std::vector<std::string> check_report_schema(const json& j) {
  std::vector<std::string> errs;
  if (!j.is_object()) return {"report is not an object"};
  auto need = [&](const char* key, auto pred, const char* what) {
    if (!j.contains(key)) {
      errs.push_back(std::string("missing ") + key);
    } else if (!pred(j.at(key))) {
      errs.push_back(std::string(key) + " must be " + what);
    }
  };
  auto is_uint = [](const json& v) { return v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0); };
  need("schema_version", [&](const json& v) { return v.is_number_integer() && v.get<int>() == kSchemaVersion; },
       "the current schema version");
  need("per_side_size", is_uint, "a non-negative integer");
  need("total_size", is_uint, "a non-negative integer");
  auto labels = [&](const json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v) {
      if (!is_uint(x) || x.get<long long>() < 1) return false;
    }
    return true;
  };
  need("left", labels, "an array of 1-based labels");
  need("right", labels, "an array of 1-based labels");
  need("algo", [](const json& v) { return v.is_string() && (v == "hbv" || v == "dense" || v == "basic" || v == "oracle"); },
       "one of hbv|dense|basic|oracle");
  need("stage", [](const json& v) { return v.is_null() || (v.is_string() && (v == "S1" || v == "S2" || v == "S3")); },
       "S1|S2|S3|null");
  need("certified", [](const json& v) { return v.is_boolean(); }, "a boolean");
  need("stats", [](const json& v) { return v.is_object() && v.contains("recursions") && v.contains("wall_ms"); },
       "an object with recursions and wall_ms");
  need("seed", [&](const json& v) { return v.is_null() || is_uint(v); }, "null or a non-negative integer");
  need("timeout_hit", [](const json& v) { return v.is_boolean(); }, "a boolean");
  if (errs.empty()) {
    const auto k = j["per_side_size"].get<std::size_t>();
    if (j["total_size"].get<std::size_t>() != 2 * k) errs.push_back("total_size != 2 * per_side_size");
    if (j["left"].size() != k || j["right"].size() != k) errs.push_back("left/right sizes differ from per_side_size");
  }
  return errs;
}

json without_wall_times(json j) {
  if (j.is_object()) {
    j.erase("wall_ms");
    for (auto& [k, v] : j.items()) v = without_wall_times(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = without_wall_times(v);
  }
  return j;
}

json decomposition_json(const BipartiteGraph& g, const DecompositionResult& d) {
  json left = json::array(), right = json::array(), order = json::array();
  for (std::uint32_t i = 0; i < g.left_count(); ++i) left.push_back(d.number_of({Side::Left, i}));
  for (std::uint32_t i = 0; i < g.right_count(); ++i) right.push_back(d.number_of({Side::Right, i}));
  for (auto v : d.peel_order) order.push_back(json{(v.side == Side::Left ? "L" : "R"), v.index + 1});
  return json{{"schema_version", kSchemaVersion},
              {"mode", d.kind == DecompositionKind::Core ? "core" : "bicore"},
              {"degeneracy", d.degeneracy},
              {"left", left},
              {"right", right},
              {"peel_order", order}};
}

json error_json(const std::string& kind, const std::string& message, std::optional<std::size_t> line) {
  json e{{"kind", kind}, {"message", message}};
  if (line) e["line"] = *line;
  return json{{"schema_version", kSchemaVersion}, {"error", e}};
}

}  // namespace mbb
