// mbb command-line front end: solve, gen, decompose, fetch, bench.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "mbb/bench.hpp"
#include "mbb/datasets.hpp"
#include "mbb/decomposition.hpp"
#include "mbb/edge_list.hpp"
#include "mbb/errors.hpp"
#include "mbb/generator.hpp"
#include "mbb/report.hpp"

namespace {

enum Exit { kOk = 0, kError = 1, kUsage = 2, kParse = 3, kTimeout = 4, kDataset = 5 };

using json = nlohmann::ordered_json;

struct Failure {
  int code;
  json body;
};

// map library errors to (exit code, JSON error object)
Failure classify(const std::exception& e) {
  if (auto* p = dynamic_cast<const mbb::ParseError*>(&e)) return {kParse, mbb::error_json("parse", p->what(), p->line())};
  if (dynamic_cast<const mbb::DuplicateEdge*>(&e)) return {kParse, mbb::error_json("duplicate_edge", e.what())};
  if (dynamic_cast<const mbb::IndexOutOfBounds*>(&e)) return {kParse, mbb::error_json("index_out_of_bounds", e.what())};
  if (dynamic_cast<const mbb::Timeout*>(&e)) return {kTimeout, mbb::error_json("timeout", e.what())};
  if (dynamic_cast<const mbb::UnknownDataset*>(&e)) return {kDataset, mbb::error_json("unknown_dataset", e.what())};
  if (dynamic_cast<const mbb::NotCached*>(&e)) return {kDataset, mbb::error_json("not_cached", e.what())};
  if (dynamic_cast<const mbb::NetworkError*>(&e)) return {kDataset, mbb::error_json("network", e.what())};
  if (dynamic_cast<const mbb::ChecksumMismatch*>(&e)) return {kDataset, mbb::error_json("checksum_mismatch", e.what())};
  if (dynamic_cast<const mbb::TooLarge*>(&e)) return {kError, mbb::error_json("too_large", e.what())};
  if (dynamic_cast<const mbb::InvalidSpec*>(&e)) return {kUsage, mbb::error_json("invalid_spec", e.what())};
  return {kError, mbb::error_json("error", e.what())};
}

void print_human(const mbb::SolveReport& r) {
  auto list = [](const std::vector<std::uint32_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x + 1);
    return s;
  };
  std::cout << "per_side_size " << r.biclique.per_side() << "\n"
            << "total_size " << 2 * r.biclique.per_side() << "\n"
            << "left " << list(r.biclique.a_side) << "\n"
            << "right " << list(r.biclique.b_side) << "\n"
            << "algo " << mbb::to_string(r.algo) << "\n"
            << "stage " << (r.stage ? mbb::to_string(*r.stage) : "-") << "\n"
            << "certified " << (r.certified ? "yes" : "no") << "\n";
  if (r.timeout_hit) std::cout << "timeout_hit yes\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum balanced biclique solver"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Find a maximum balanced biclique");
  std::string solve_path, algo = "hbv";
  bool solve_json = false;
  std::optional<double> timeout;
  unsigned threads = 1;
  std::optional<std::uint64_t> solve_seed;
  solve->add_option("path", solve_path, "Edge-list file")->required();
  solve->add_option("--algo", algo, "hbv|dense|basic|oracle")
      ->check(CLI::IsMember({"hbv", "dense", "basic", "oracle"}));
  solve->add_flag("--json", solve_json, "Print the JSON report");
  solve->add_option("--timeout-secs", timeout, "Wall-clock budget")->check(CLI::PositiveNumber);
  solve->add_option("--threads", threads, "Worker threads for verification")->check(CLI::Range(1U, 1024U));
  solve->add_option("--seed", solve_seed, "Generator seed of the input, recorded in the report");

  // gen
  auto* gen = app.add_subcommand("gen", "Write a random bipartite graph");
  mbb::GenSpec spec;
  std::string gen_out;
  gen->add_option("--left", spec.left)->required();
  gen->add_option("--right", spec.right)->required();
  gen->add_option("--density", spec.density)->required();
  gen->add_option("--seed", spec.seed)->required();
  gen->add_option("--out", gen_out, "Output path")->required();

  // decompose
  auto* dec = app.add_subcommand("decompose", "Core or bicore numbers");
  std::string dec_path, mode = "core";
  bool dec_json = false;
  dec->add_option("path", dec_path)->required();
  dec->add_option("--mode", mode)->check(CLI::IsMember({"core", "bicore"}));
  dec->add_flag("--json", dec_json);

  // fetch
  auto* fetch = app.add_subcommand("fetch", "Download a registered KONECT dataset into the cache");
  std::string dataset, cache_dir;
  bool offline = false;
  fetch->add_option("dataset", dataset)->required();
  fetch->add_option("--cache-dir", cache_dir);
  fetch->add_flag("--offline", offline);

  // bench
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  std::string suite = "dense", bench_out;
  mbb::DenseBenchOptions dense_opts;
  std::optional<double> bench_timeout;
  bench->add_option("--suite", suite)->check(CLI::IsMember({"dense", "sparse"}));
  bench->add_option("--sizes", dense_opts.sizes, "Per-side sizes of the dense grid")->delimiter(',');
  bench->add_option("--instances", dense_opts.instances, "Instances per grid cell");
  bench->add_option("--seed", dense_opts.base_seed, "Seed of the first instance");
  bench->add_option("--timeout-secs", bench_timeout, "Per-instance budget");
  bench->add_option("--cache-dir", cache_dir);
  bench->add_flag("--offline", offline);
  bench->add_option("--out", bench_out, "Report path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  const bool want_json = (solve->parsed() && solve_json) || (dec->parsed() && dec_json);
  try {
    if (solve->parsed()) {
      const auto g = mbb::read_edge_list(solve_path);
      mbb::SolveOptions so;
      so.algo = mbb::parse_algo(algo);
      so.timeout_secs = timeout;
      so.threads = threads;
      so.seed = solve_seed;
      const auto r = mbb::solve(g, so);
      if (solve_json) {
        std::cout << mbb::to_json(r).dump(2) << "\n";
      } else {
        print_human(r);
      }
      return r.timeout_hit ? kTimeout : kOk;
    }
    if (gen->parsed()) {
      mbb::write_edge_list(gen_out, mbb::generate_random(spec));
      return kOk;
    }
    if (dec->parsed()) {
      const auto g = mbb::read_edge_list(dec_path);
      const auto d = mode == "core" ? mbb::core_decompose(g) : mbb::bicore_decompose(g);
      if (dec_json) {
        std::cout << mbb::decomposition_json(g, d).dump(2) << "\n";
      } else {
        std::cout << (mode == "core" ? "degeneracy " : "bidegeneracy ") << d.degeneracy << "\n";
        for (const auto& v : d.peel_order) std::cout << mbb::to_string(v) << ' ' << d.number_of(v) << "\n";
      }
      return kOk;
    }
    const auto cache = cache_dir.empty() ? mbb::default_cache_dir() : std::filesystem::path(cache_dir);
    offline = offline || mbb::offline_from_env();
    if (fetch->parsed()) {
      std::cout << mbb::fetch_dataset(dataset, cache, offline).string() << "\n";
      return kOk;
    }
    if (bench->parsed()) {
      json report;
      if (suite == "dense") {
        dense_opts.timeout_secs = bench_timeout;
        report = mbb::bench_dense(dense_opts);
      } else {
        report = mbb::bench_sparse({cache, offline, bench_timeout, 1});
      }
      if (bench_out.empty()) {
        std::cout << report.dump(2) << "\n";
      } else {
        std::ofstream(bench_out) << report.dump(2) << "\n";
      }
      return kOk;
    }
  } catch (const std::exception& e) {
    const auto f = classify(e);
    if (want_json) {
      std::cout << f.body.dump(2) << "\n";
    } else {
      std::cerr << "mbb: " << e.what() << "\n";
    }
    return f.code;
  }
  return kError;
}
