#include "mbb/generator.hpp"

#include <cmath>
#include <random>

#include "mbb/errors.hpp"

namespace mbb {

BipartiteGraph generate_random(const GenSpec& spec) {
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) throw InvalidSpec("density must lie in [0, 1]");
  if (static_cast<std::uint64_t>(spec.left) * spec.right > (std::uint64_t{1} << 34)) {
    throw InvalidSpec("too many vertex pairs");
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(std::ceil(double(spec.left) * spec.right * spec.density)));
  for (std::uint32_t l = 0; l < spec.left; ++l) {
    for (std::uint32_t r = 0; r < spec.right; ++r) {
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < spec.density) edges.push_back({l, r});
    }
  }
  return BipartiteGraph::from_edges(spec.left, spec.right, edges);
}

}  // namespace mbb
